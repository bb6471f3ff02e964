"""
보정 기법별 처리량 벤치마크

- 모든 기법이 동일한, 미리 디코딩된 이미지 리스트를 처리 (디코딩 시간 제외)
- 기법마다 warm-up 1회 후 repeats 회 측정, total_seconds 는 측정값의 중앙값
- 기법은 순차 실행하며 한 기법의 실패가 나머지 기법을 중단시키지 않음
"""
import logging
import statistics
import time
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from src.dataset.image_io import load_image
from src.enhancement.affine import convert_domain
from src.enhancement.errors import EnhancementError, InvalidParams
from src.models.bench import BenchResult
from src.models.dataset import DatasetManifest
from src.models.enhance import EnhanceConfig
from src.models.image import Image
from src.pipeline.enhance_pipeline import enhance_image

logger = logging.getLogger(__name__)

MIN_REPEATS = 3


def synthetic_images(count: int, size: int = 256, seed: int = 0) -> List[Image]:
    """seed 로 재현 가능한 grayscale Byte255 이미지 생성"""
    rng = np.random.default_rng(seed)
    return [
        Image.from_array(rng.integers(0, 256, size=(size, size), dtype=np.uint8))
        for _ in range(count)
    ]


def run_bench(
    manifest: DatasetManifest,
    configs: Sequence[EnhanceConfig],
    repeats: int,
    root: Union[str, Path],
) -> List[BenchResult]:
    """manifest 이미지를 한 번만 디코딩한 뒤 bench_images 로 측정"""
    if len(manifest) == 0:
        raise InvalidParams("benchmark requires a non-empty manifest")

    root = Path(root)
    images = []
    for record in manifest.records:
        try:
            images.append(load_image(root / record.path))
        except EnhancementError as e:
            logger.warning(f"Skipping {record.path} (excluded from every mode): {e}")

    logger.info(f"Decoded {len(images)}/{len(manifest)} images for benchmarking")
    return bench_images(images, configs, repeats)


def bench_images(images: Sequence[Image], configs: Sequence[EnhanceConfig], repeats: int) -> List[BenchResult]:
    """
    Args:
        images: 미리 디코딩된 Byte255 이미지
        configs: 측정할 기법별 설정 (각각 한 번씩, 순차 실행)
        repeats: 측정 반복 횟수 (>= 3)

    Returns:
        성공한 기법의 BenchResult 리스트 (입력 순서 유지)
    """
    if not images:
        raise InvalidParams("benchmark requires at least one image")
    if repeats < MIN_REPEATS:
        raise InvalidParams(f"repeats must be >= {MIN_REPEATS}, got {repeats}")

    results = []
    for config in configs:
        try:
            # 도메인 변환은 측정에서 제외
            workload = [convert_domain(img, config.domain) for img in images]
            results.append(_time_mode(workload, config, repeats))
        except Exception as e:
            logger.error(f"Benchmark for mode '{config.mode.value}' failed: {e}")
    return results


def _time_mode(images: Sequence[Image], config: EnhanceConfig, repeats: int) -> BenchResult:
    _run_pass(images, config)

    pass_seconds = []
    per_image_ns: List[int] = []
    for _ in range(repeats):
        started = time.perf_counter()
        per_image_ns.extend(_run_pass(images, config))
        pass_seconds.append(time.perf_counter() - started)

    total = statistics.median(pass_seconds)
    micros = np.asarray(per_image_ns, dtype=np.float64) / 1000.0
    p50, p95 = np.percentile(micros, [50, 95])

    result = BenchResult(
        method=config.mode.value,
        images=len(images),
        total_seconds=total,
        images_per_second=len(images) / total if total > 0 else float("inf"),
        per_image_micros=(float(p50), float(p95), float(micros.max())),
    )
    logger.info(
        f"[bench] {result.method}: {result.images_per_second:.1f} img/s "
        f"(p50={p50:.1f}us, p95={p95:.1f}us)"
    )
    return result


def _run_pass(images: Sequence[Image], config: EnhanceConfig) -> List[int]:
    timings = []
    for index, image in enumerate(images):
        started = time.perf_counter_ns()
        enhance_image(image, config, index)
        timings.append(time.perf_counter_ns() - started)
    return timings

"""
배치 / 데이터셋 단위 보정 오케스트레이션

- 이미지 i 의 (α, β) 는 derive_stream(master_seed, i) 로만 결정되므로
  worker 수, 배치 크기, 실행 순서와 무관하게 결과가 동일합니다.
- 결과는 입력 순서대로 수집하고, 실패는 기록만 하고 다음 이미지를 계속 처리합니다.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import repeat
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.config.settings import get_settings
from src.dataset.image_io import ImageFormat, load_image, save_image
from src.enhancement.affine import apply_affine, convert_domain
from src.enhancement.baselines import (
    adaptive_gamma_cdf,
    gamma_correct,
    histogram_equalize,
    linear_stretch,
)
from src.enhancement.errors import DomainMismatch, InvalidParams, IoError
from src.metrics.image_stats import compare
from src.models.dataset import DatasetManifest, ManifestRecord
from src.models.enhance import (
    EnhanceConfig,
    EnhanceMode,
    EnhanceReport,
    FailureRecord,
    ImageParamRecord,
)
from src.models.image import AffineParams, Image, PixelDomain
from src.models.metrics import SweepCell
from src.pipeline.report_writer import ReportRow, write_sidecar
from src.sampling.param_sampler import derive_stream, draw_params

logger = logging.getLogger(__name__)
settings = get_settings()

# 파라미터가 필요 없는 기준 기법
_PARAMETERLESS: Dict[EnhanceMode, Callable[[Image], Image]] = {
    EnhanceMode.HIST_EQ: histogram_equalize,
    EnhanceMode.ADAPTIVE_GAMMA: adaptive_gamma_cdf,
    EnhanceMode.STRETCH: linear_stretch,
}

# (출력 이미지, 사용된 affine 파라미터, 에러 메시지)
_Outcome = Tuple[Optional[Image], Optional[AffineParams], Optional[str]]


def enhance_image(image: Image, config: EnhanceConfig, image_index: int) -> Tuple[Image, Optional[AffineParams]]:
    """
    이미지 한 장 보정

    Args:
        image: config.domain 과 같은 도메인의 이미지
        config: 보정 설정
        image_index: 전역 이미지 인덱스 (random 모드의 스트림 인덱스)

    Returns:
        (보정된 이미지, random/fixed 모드에서 사용한 AffineParams 또는 None)
    """
    if image.domain is not config.domain:
        raise DomainMismatch(
            f"image domain '{image.domain.value}' does not match config domain '{config.domain.value}'"
        )

    if config.mode is EnhanceMode.RANDOM_AFFINE:
        params = draw_params(config.param_set, derive_stream(config.master_seed, image_index))
        return apply_affine(image, params), params

    if config.mode is EnhanceMode.FIXED_AFFINE:
        return apply_affine(image, config.affine), config.affine

    if config.mode is EnhanceMode.GAMMA:
        return gamma_correct(image, config.gamma), None

    return _PARAMETERLESS[config.mode](image), None


def enhance_batch(
    images: Sequence[Image],
    config: EnhanceConfig,
    start_index: int = 0,
) -> Tuple[List[Optional[Image]], EnhanceReport]:
    """
    Returns:
        (입력과 위치가 정렬된 출력 리스트 - 실패한 자리는 None, EnhanceReport)
    """
    started = time.perf_counter()
    outputs: List[Optional[Image]] = [None] * len(images)
    report = EnhanceReport()

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        for batch in _batches(len(images), config.batch_size):
            outcomes = pool.map(
                _enhance_safely,
                [images[i] for i in batch],
                repeat(config),
                [start_index + i for i in batch],
            )
            for i, (out, params, error) in zip(batch, outcomes):
                if error is not None:
                    report.failures.append(FailureRecord(path=f"#{start_index + i}", error=error))
                    continue
                outputs[i] = out
                _record_success(report, config, start_index + i, params)

    report.finalize(time.perf_counter() - started)
    logger.info(f"Batch enhancement done ({config.mode.value}): {report.get_summary()}")
    return outputs, report


def enhance_dataset(
    manifest: DatasetManifest,
    config: EnhanceConfig,
    out_dir: Union[str, Path],
    root: Union[str, Path],
    fmt: Optional[ImageFormat] = None,
) -> EnhanceReport:
    """
    manifest 의 이미지를 보정하여 out_dir 아래에 같은 디렉토리 구조로 저장

    Args:
        manifest: 처리할 레코드 (레코드 위치 = 스트림 인덱스)
        config: 보정 설정
        out_dir: 출력 루트 (없으면 생성)
        root: manifest 상대 경로의 기준 디렉토리
        fmt: 출력 포맷 (기본값 settings.OUTPUT_FORMAT)

    Raises:
        IoError: out_dir 를 만들 수 없을 때 (그 외 파일 단위 에러는 report.failures 에 기록)
    """
    out_dir = Path(out_dir)
    root = Path(root)
    fmt = fmt or ImageFormat(settings.OUTPUT_FORMAT)

    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise IoError(f"Cannot create output directory {out_dir}: {e}") from e

    records = manifest.records
    targets = output_paths(records, fmt)
    report = EnhanceReport()
    rows: List[ReportRow] = []
    started = time.perf_counter()

    logger.info(
        f"Enhancing {len(records)} images -> {out_dir} "
        f"(mode={config.mode.value}, domain={config.domain.value}, workers={config.workers})"
    )

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        batches = _batches(len(records), config.batch_size)
        for batch_no, batch in enumerate(batches, 1):
            outcomes = pool.map(
                _process_record,
                batch,
                [records[i] for i in batch],
                [out_dir / targets[i] for i in batch],
                repeat(root),
                repeat(config),
                repeat(fmt),
            )
            failed = 0
            for i, (params, error) in zip(batch, outcomes):
                record = records[i]
                if error is not None:
                    failed += 1
                    logger.error(f"Failed to enhance {record.path}: {error}")
                    report.failures.append(FailureRecord(path=record.path, error=error))
                    rows.append(ReportRow(index=i, relative_path=record.path, status="failed"))
                    continue
                _record_success(report, config, i, params)
                rows.append(ReportRow(
                    index=i,
                    relative_path=record.path,
                    alpha=params.alpha if params else None,
                    beta=params.beta if params else None,
                    status="ok",
                ))
            logger.info(f"Batch {batch_no}/{len(batches)}: {len(batch) - failed} ok, {failed} failed")

    if rows:
        write_sidecar(rows, out_dir / settings.REPORT_FILENAME)
    report.finalize(time.perf_counter() - started)
    logger.info(f"Dataset enhancement complete: {report.get_summary()}")
    return report


def sweep_grid(image: Image, alphas: Sequence[float], betas: Sequence[float]) -> List[List[Image]]:
    """alpha 우선(row-major) |alphas| x |betas| 격자. grid[i][j] = apply_affine(image, alphas[i], betas[j])"""
    params = _grid_params(alphas, betas)
    return [[apply_affine(image, p) for p in row] for row in params]


def sweep_metrics(image: Image, alphas: Sequence[float], betas: Sequence[float]) -> List[SweepCell]:
    """격자 각 칸의 보정 전/후 지표 (alpha 우선 순서)"""
    cells = []
    for row in _grid_params(alphas, betas):
        for p in row:
            delta = compare(image, apply_affine(image, p))
            cells.append(SweepCell(alpha=p.alpha, beta=p.beta, delta=delta))
    return cells


def output_paths(records: Sequence[ManifestRecord], fmt: ImageFormat) -> List[Path]:
    """
    레코드별 출력 상대 경로

    확장자만 바꾸면 a.png / a.jpg 처럼 충돌하는 경우 원래 파일명 뒤에 확장자를 덧붙입니다.
    덧붙인 이름이 다른 레코드와 다시 충돌하면 그 레코드도 같은 방식으로 바꾸며,
    모든 경로가 서로 다를 때까지 반복합니다.
    """
    targets = [Path(r.path).with_suffix(fmt.suffix) for r in records]
    appended = [False] * len(records)

    while True:
        counts: Dict[Path, int] = {}
        for t in targets:
            counts[t] = counts.get(t, 0) + 1

        changed = False
        for i, r in enumerate(records):
            if counts[targets[i]] > 1 and not appended[i]:
                targets[i] = Path(r.path + fmt.suffix)
                appended[i] = True
                changed = True
        if not changed:
            return targets


def _grid_params(alphas: Sequence[float], betas: Sequence[float]) -> List[List[AffineParams]]:
    if not alphas or not betas:
        raise InvalidParams("alphas and betas must be non-empty")
    # 작업 전에 모든 alpha 를 검증 (InvalidParams)
    return [[AffineParams(alpha=a, beta=b) for b in betas] for a in alphas]


def _enhance_safely(image: Image, config: EnhanceConfig, image_index: int) -> _Outcome:
    try:
        out, params = enhance_image(image, config, image_index)
        return out, params, None
    except Exception as e:
        logger.warning(f"Image #{image_index} failed: {e}")
        return None, None, f"{type(e).__name__}: {e}"


def _process_record(
    index: int,
    record: ManifestRecord,
    target: Path,
    root: Path,
    config: EnhanceConfig,
    fmt: ImageFormat,
) -> Tuple[Optional[AffineParams], Optional[str]]:
    try:
        image = convert_domain(load_image(root / record.path), config.domain)
        enhanced, params = enhance_image(image, config, index)
        target.parent.mkdir(parents=True, exist_ok=True)
        save_image(convert_domain(enhanced, PixelDomain.BYTE255), target, fmt)
        return params, None
    except Exception as e:
        return None, f"{type(e).__name__}: {e}"


def _record_success(
    report: EnhanceReport,
    config: EnhanceConfig,
    image_index: int,
    params: Optional[AffineParams],
) -> None:
    report.images_processed += 1
    if config.mode is EnhanceMode.RANDOM_AFFINE and params is not None:
        report.per_image_params.append(
            ImageParamRecord(image_index=image_index, alpha=params.alpha, beta=params.beta)
        )


def _batches(total: int, batch_size: int) -> List[range]:
    return [range(start, min(start + batch_size, total)) for start in range(0, total, batch_size)]

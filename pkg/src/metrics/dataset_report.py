"""
데이터셋 단위 보정 전/후 지표 CSV

`path,mean_before,mean_after,rms_before,rms_after,entropy_before,entropy_after`
"""
import csv
import logging
from pathlib import Path
from typing import List, Sequence, TextIO, Tuple, Union

from src.dataset.image_io import ImageFormat, load_image
from src.enhancement.errors import EnhancementError
from src.metrics.image_stats import compare
from src.models.dataset import DatasetManifest
from src.models.enhance import FailureRecord
from src.models.metrics import MetricsDelta
from src.pipeline.enhance_pipeline import output_paths

logger = logging.getLogger(__name__)

METRICS_HEADER = [
    "path", "mean_before", "mean_after", "rms_before", "rms_after", "entropy_before", "entropy_after",
]


def collect_metrics(
    manifest: DatasetManifest,
    root: Union[str, Path],
    enhanced_root: Union[str, Path],
    fmt: ImageFormat = ImageFormat.PNG,
) -> Tuple[List[Tuple[str, MetricsDelta]], List[FailureRecord]]:
    """
    원본(root)과 enhance 출력(enhanced_root)을 레코드 단위로 비교

    Returns:
        ([(상대 경로, MetricsDelta)], [실패 기록])
    """
    root, enhanced_root = Path(root), Path(enhanced_root)
    targets = output_paths(manifest.records, fmt)
    rows, failures = [], []

    for record, target in zip(manifest.records, targets):
        try:
            before = load_image(root / record.path)
            after = load_image(enhanced_root / target)
            rows.append((record.path, compare(before, after)))
        except EnhancementError as e:
            logger.error(f"Cannot measure {record.path}: {e}")
            failures.append(FailureRecord(path=record.path, error=f"{type(e).__name__}: {e}"))

    logger.info(f"Measured {len(rows)} image pairs ({len(failures)} failed)")
    return rows, failures


def write_metrics_csv(rows: Sequence[Tuple[str, MetricsDelta]], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(METRICS_HEADER)
    for path, d in rows:
        writer.writerow([
            path,
            f"{d.before.mean_brightness:.6f}", f"{d.after.mean_brightness:.6f}",
            f"{d.before.rms_contrast:.6f}", f"{d.after.rms_contrast:.6f}",
            f"{d.before.entropy:.6f}", f"{d.after.entropy:.6f}",
        ])

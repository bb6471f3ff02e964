import logging
import sys
from pathlib import Path
from typing import Optional

import typer

from src.config.settings import get_settings
from src.dataset.image_io import ImageFormat
from src.dataset.scanner import read_manifest, scan_dataset
from src.enhancement.errors import EnhancementError
from src.metrics.dataset_report import collect_metrics, write_metrics_csv

logger = logging.getLogger(__name__)
settings = get_settings()


def run_metrics(
    input_dir: Path = typer.Option(..., "--in", help="Original dataset root"),
    out_dir: Path = typer.Option(..., "--out", help="Enhanced dataset root (output of enhance)"),
    report_path: Optional[Path] = typer.Option(None, "--report", help="Metrics CSV (default: stdout)"),
    manifest_path: Optional[Path] = typer.Option(None, "--manifest", help="Manifest CSV (default: scan --in)"),
    output_format: Optional[ImageFormat] = typer.Option(None, "--format", help="Format the enhanced images were written in"),
) -> int:
    """Report brightness/contrast/entropy before and after enhancement."""
    fmt = output_format or ImageFormat(settings.OUTPUT_FORMAT)

    try:
        manifest = read_manifest(manifest_path) if manifest_path else scan_dataset(input_dir)
        rows, failures = collect_metrics(manifest, input_dir, out_dir, fmt)
    except EnhancementError as e:
        logger.error(f"Metrics failed: {e}")
        return 2

    if report_path is None:
        write_metrics_csv(rows, sys.stdout)
    else:
        with report_path.open("w", encoding="utf-8", newline="") as f:
            write_metrics_csv(rows, f)
        logger.info(f"Metrics written: {report_path}")

    return 2 if failures else 0

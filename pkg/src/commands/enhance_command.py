"""
enhance: 데이터셋 전체 보정

1. 설정 해석 (--config JSON + 플래그)
2. manifest 로드 (--manifest) 또는 --in 디렉토리 스캔
3. enhance_dataset 실행 및 sidecar 기록
4. 실패가 하나라도 있으면 exit 2
"""
import logging
from pathlib import Path
from typing import Optional

import click
import typer

from src.commands.options import resolve_config
from src.dataset.image_io import ImageFormat
from src.dataset.scanner import read_manifest, scan_dataset
from src.enhancement.errors import EnhancementError
from src.models.enhance import EnhanceMode
from src.models.image import PixelDomain
from src.pipeline.enhance_pipeline import enhance_dataset

logger = logging.getLogger(__name__)


def run_enhance(
    input_dir: Optional[Path] = typer.Option(None, "--in", help="Dataset root (<root>/<label>/<images>)"),
    out_dir: Optional[Path] = typer.Option(None, "--out", help="Output root for enhanced images"),
    manifest_path: Optional[Path] = typer.Option(None, "--manifest", help="Manifest CSV (default: scan --in)"),
    mode: Optional[EnhanceMode] = typer.Option(None, "--mode", help="Enhancement method"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Gain for fixed mode"),
    beta: Optional[float] = typer.Option(None, "--beta", help="Bias for fixed mode"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="Exponent for gamma mode"),
    alpha_range: Optional[str] = typer.Option(None, "--alpha-range", help="Random-mode gain range 'a,b'"),
    beta_range: Optional[str] = typer.Option(None, "--beta-range", help="Random-mode bias range 'a,b'"),
    step: Optional[float] = typer.Option(None, "--step", help="Candidate set increment"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker pool size"),
    domain: Optional[PixelDomain] = typer.Option(None, "--domain", help="Pixel domain the kernel runs in"),
    batch_size: Optional[int] = typer.Option(None, "--batch-size", help="Images per batch"),
    output_format: Optional[ImageFormat] = typer.Option(None, "--format", help="Output image format"),
    config_file: Optional[Path] = typer.Option(None, "--config", help="EnhanceConfig JSON file"),
    dump_config: bool = typer.Option(False, "--dump-config", help="Print the resolved config as JSON and exit"),
) -> int:
    """Enhance every image of a dataset tree."""
    config = resolve_config(
        config_file=config_file,
        mode=mode,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        alpha_range=alpha_range,
        beta_range=beta_range,
        step=step,
        seed=seed,
        workers=workers,
        domain=domain,
        batch_size=batch_size,
    )

    if dump_config:
        typer.echo(config.model_dump_json(indent=2))
        return 0

    if input_dir is None or out_dir is None:
        raise click.UsageError("enhance requires --in and --out")

    try:
        manifest = read_manifest(manifest_path) if manifest_path else scan_dataset(input_dir)
        report = enhance_dataset(manifest, config, out_dir, root=input_dir, fmt=output_format)
    except EnhancementError as e:
        logger.error(f"Enhancement failed: {e}")
        return 2

    if report.failures:
        for failure in report.failures:
            logger.error(f"  {failure.path}: {failure.error}")
        return 2
    return 0

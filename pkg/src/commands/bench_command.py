import logging
import sys
from pathlib import Path
from typing import List, Optional

import click
import typer

from src.bench.benchmark import bench_images, run_bench, synthetic_images
from src.commands.options import resolve_config
from src.config.settings import get_settings
from src.dataset.scanner import read_manifest, scan_dataset
from src.enhancement.errors import EnhancementError
from src.models.bench import BenchResult
from src.models.enhance import EnhanceMode
from src.models.image import PixelDomain

logger = logging.getLogger(__name__)
settings = get_settings()

ALL_MODES = ",".join(m.value for m in EnhanceMode)


def run_bench_command(
    input_dir: Optional[Path] = typer.Option(None, "--in", help="Dataset root to benchmark on"),
    synthetic: Optional[int] = typer.Option(None, "--synthetic", help="Use N seeded synthetic 256x256 images"),
    manifest_path: Optional[Path] = typer.Option(None, "--manifest", help="Manifest CSV (default: scan --in)"),
    modes: str = typer.Option(ALL_MODES, "--modes", help="Comma-separated modes to compare"),
    repeats: int = typer.Option(settings.BENCH_REPEATS, "--repeats", help="Timed passes per mode (>= 3)"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Gain for fixed mode"),
    beta: Optional[float] = typer.Option(None, "--beta", help="Bias for fixed mode"),
    gamma: Optional[float] = typer.Option(None, "--gamma", help="Exponent for gamma mode"),
    alpha_range: Optional[str] = typer.Option(None, "--alpha-range", help="Random-mode gain range 'a,b'"),
    beta_range: Optional[str] = typer.Option(None, "--beta-range", help="Random-mode bias range 'a,b'"),
    step: Optional[float] = typer.Option(None, "--step", help="Candidate set increment"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed"),
    domain: Optional[PixelDomain] = typer.Option(None, "--domain", help="Pixel domain the kernel runs in"),
    config_file: Optional[Path] = typer.Option(None, "--config", help="EnhanceConfig JSON file"),
    out_path: Optional[Path] = typer.Option(None, "--out", help="Results CSV (default: stdout)"),
) -> int:
    """Compare enhancement throughput across modes."""
    requested = _parse_modes(modes)
    if input_dir is None and synthetic is None:
        raise click.UsageError("bench requires --in or --synthetic")

    configs = [
        resolve_config(
            config_file=config_file,
            mode=mode,
            alpha=alpha,
            beta=beta,
            gamma=gamma,
            alpha_range=alpha_range,
            beta_range=beta_range,
            step=step,
            seed=seed,
            domain=domain,
            payload_defaults=True,
        )
        for mode in requested
    ]

    try:
        if synthetic is not None:
            results = bench_images(synthetic_images(synthetic, seed=configs[0].master_seed), configs, repeats)
        else:
            manifest = read_manifest(manifest_path) if manifest_path else scan_dataset(input_dir)
            results = run_bench(manifest, configs, repeats, root=input_dir)
    except EnhancementError as e:
        logger.error(f"Benchmark failed: {e}")
        return 2

    if out_path is None:
        _write_results(results, sys.stdout)
    else:
        with out_path.open("w", encoding="utf-8", newline="") as f:
            _write_results(results, f)
        logger.info(f"Benchmark results written: {out_path}")

    return 0 if len(results) == len(configs) else 2


def _parse_modes(text: str) -> List[EnhanceMode]:
    modes = []
    for name in (p.strip() for p in text.split(",")):
        if not name:
            continue
        try:
            modes.append(EnhanceMode(name))
        except ValueError:
            raise typer.BadParameter(f"unknown mode '{name}' (choose from {ALL_MODES})", param_hint="--modes")
    if not modes:
        raise typer.BadParameter("at least one mode is required", param_hint="--modes")
    return modes


def _write_results(results: List[BenchResult], stream) -> None:
    stream.write(BenchResult.csv_header() + "\n")
    for result in results:
        stream.write(result.to_csv_row() + "\n")

import logging
from pathlib import Path
from typing import Optional

import typer

from src.config.settings import get_settings
from src.dataset.scanner import read_manifest, scan_dataset, write_manifest
from src.dataset.splitter import stratified_split
from src.enhancement.errors import EnhancementError, InvalidRatios
from src.models.dataset import SplitRatios

logger = logging.getLogger(__name__)
settings = get_settings()


def run_split(
    input_path: Path = typer.Option(..., "--in", help="Dataset root or an existing manifest CSV"),
    out_path: Path = typer.Option(..., "--out", help="Manifest CSV to write"),
    ratios: str = typer.Option("0.8,0.1,0.1", "--ratios", help="train,val,test fractions"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Shuffle seed"),
) -> int:
    """Write a stratified train/val/test manifest."""
    try:
        split_ratios = SplitRatios.parse(ratios)
    except InvalidRatios as e:
        raise typer.BadParameter(str(e), param_hint="--ratios")

    seed = settings.MASTER_SEED if seed is None else seed

    try:
        manifest = read_manifest(input_path) if input_path.is_file() else scan_dataset(input_path)
        result = stratified_split(manifest, split_ratios, seed)
        write_manifest(result, out_path)
    except EnhancementError as e:
        logger.error(f"Split failed: {e}")
        return 2

    for label, counts in result.split_counts().items():
        logger.info(f"{label}: train={counts['train']} val={counts['val']} test={counts['test']}")
    return 0

"""
sweep: 한 장의 이미지에 대해 (α, β) 격자 변형 생성

기본 격자는 범위 양 끝점 {1.15, 1.35} x {-0.1, 0.4}.
--alpha-range / --beta-range / --step 을 주면 build_param_set 격자로 범위 탐색을 재현합니다.

출력: original.png, alpha_<a>_beta_<b>.png, sweep_metrics.csv
"""
import csv
import logging
from pathlib import Path
from typing import List, Optional

import typer

from src.commands.options import parse_floats, parse_range
from src.config.settings import get_settings
from src.dataset.image_io import load_image, save_image
from src.enhancement.affine import convert_domain
from src.enhancement.errors import EnhancementError
from src.models.image import PixelDomain
from src.models.metrics import SweepCell
from src.pipeline.enhance_pipeline import sweep_grid, sweep_metrics
from src.sampling.param_sampler import build_param_set

logger = logging.getLogger(__name__)
settings = get_settings()

METRICS_HEADER = [
    "alpha", "beta", "mean_after", "rms_after", "entropy_after", "brightness_gain", "contrast_gain",
]


def variant_name(alpha: float, beta: float) -> str:
    """값을 반올림하지 않고 repr 그대로 사용 (서로 다른 값은 항상 다른 파일명)"""
    return f"alpha_{float(alpha)!r}_beta_{float(beta)!r}.png"


def require_distinct(values: List[float], option: str) -> None:
    seen = set()
    for v in values:
        if v in seen:
            raise typer.BadParameter(f"duplicate value {v!r}", param_hint=option)
        seen.add(v)


def run_sweep(
    input_path: Path = typer.Option(..., "--in", help="Source image"),
    out_dir: Path = typer.Option(..., "--out", help="Directory for the variants"),
    alphas: str = typer.Option("1.15,1.35", "--alphas", help="Comma-separated gains"),
    betas: str = typer.Option("-0.1,0.4", "--betas", help="Comma-separated biases"),
    alpha_range: Optional[str] = typer.Option(None, "--alpha-range", help="Gain range 'a,b' (overrides --alphas)"),
    beta_range: Optional[str] = typer.Option(None, "--beta-range", help="Bias range 'a,b' (overrides --betas)"),
    step: Optional[float] = typer.Option(None, "--step", help="Increment for the range grid"),
    domain: PixelDomain = typer.Option(PixelDomain.BYTE255, "--domain", help="Pixel domain the kernel runs in"),
) -> int:
    """Render the gain/bias ablation grid for one image."""
    alpha_values = parse_floats(alphas, "--alphas")
    beta_values = parse_floats(betas, "--betas")
    require_distinct(alpha_values, "--alphas")
    require_distinct(beta_values, "--betas")

    try:
        if alpha_range or beta_range or step is not None:
            a_start, a_end = parse_range(alpha_range, "--alpha-range") if alpha_range else (alpha_values[0], alpha_values[-1])
            b_start, b_end = parse_range(beta_range, "--beta-range") if beta_range else (beta_values[0], beta_values[-1])
            grid = build_param_set(a_start, a_end, b_start, b_end, step or settings.PARAM_STEP)
            alpha_values, beta_values = list(grid.alphas), list(grid.betas)

        source = load_image(input_path)
        image = convert_domain(source, domain)
        variants = sweep_grid(image, alpha_values, beta_values)
        cells = sweep_metrics(image, alpha_values, beta_values)

        out_dir.mkdir(parents=True, exist_ok=True)
        save_image(source, out_dir / "original.png")
        for a, row in zip(alpha_values, variants):
            for b, variant in zip(beta_values, row):
                save_image(convert_domain(variant, PixelDomain.BYTE255), out_dir / variant_name(a, b))
        write_sweep_metrics(cells, out_dir / "sweep_metrics.csv")
    except EnhancementError as e:
        logger.error(f"Sweep failed: {e}")
        return 2
    except OSError as e:
        logger.error(f"Sweep failed: cannot write to {out_dir}: {e}")
        return 2

    logger.info(f"Sweep written to {out_dir}: {len(cells)} variants + original")
    return 0


def write_sweep_metrics(cells: List[SweepCell], path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(METRICS_HEADER)
        for cell in cells:
            d = cell.delta
            writer.writerow([
                cell.alpha, cell.beta,
                f"{d.after.mean_brightness:.6f}", f"{d.after.rms_contrast:.6f}", f"{d.after.entropy:.6f}",
                f"{d.brightness_gain:.6f}", f"{d.contrast_gain:.6f}",
            ])

"""
CLI 공통 옵션 파싱 및 EnhanceConfig 해석

우선순위: settings 기본값 < --config JSON < 명시적 플래그
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple

import typer
from pydantic import ValidationError

from src.config.settings import get_settings
from src.enhancement.errors import EnhancementError
from src.models.enhance import EnhanceConfig, EnhanceMode
from src.models.image import AffineParams, GammaParams, PixelDomain
from src.sampling.param_sampler import build_param_set

logger = logging.getLogger(__name__)
settings = get_settings()


def parse_floats(text: str, option: str) -> List[float]:
    """'1.15,1.35' -> [1.15, 1.35]"""
    try:
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated numbers, got '{text}'", param_hint=option)
    if not values:
        raise typer.BadParameter("at least one value is required", param_hint=option)
    return values


def parse_range(text: str, option: str) -> Tuple[float, float]:
    values = parse_floats(text, option)
    if len(values) != 2:
        raise typer.BadParameter(f"expected 'start,end', got '{text}'", param_hint=option)
    return values[0], values[1]


def load_config_file(path: Path) -> EnhanceConfig:
    try:
        return EnhanceConfig.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise typer.BadParameter(f"cannot read config file: {e}", param_hint="--config")
    except (ValidationError, EnhancementError) as e:
        raise typer.BadParameter(f"invalid config file: {e}", param_hint="--config")


def resolve_config(
    config_file: Optional[Path] = None,
    mode: Optional[EnhanceMode] = None,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    gamma: Optional[float] = None,
    alpha_range: Optional[str] = None,
    beta_range: Optional[str] = None,
    step: Optional[float] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    domain: Optional[PixelDomain] = None,
    batch_size: Optional[int] = None,
    payload_defaults: bool = False,
) -> EnhanceConfig:
    """
    Args:
        payload_defaults: True 면 fixed/gamma 모드 값이 없을 때 기본값을 채움 (bench 용)

    Raises:
        typer.BadParameter: 잘못된 값 또는 모드에 필요한 값이 없을 때 (exit 1)
    """
    if config_file is not None:
        base = load_config_file(config_file)
    else:
        base = EnhanceConfig.model_construct(
            mode=EnhanceMode.RANDOM_AFFINE,
            affine=None,
            gamma=None,
            param_set=None,
            domain=PixelDomain(settings.PIXEL_DOMAIN),
            master_seed=settings.MASTER_SEED,
            batch_size=settings.BATCH_SIZE,
            workers=settings.WORKERS,
        )

    try:
        data = {
            "mode": mode or base.mode,
            "affine": base.affine,
            "gamma": base.gamma,
            "param_set": base.param_set,
            "domain": domain or base.domain,
            "master_seed": base.master_seed if seed is None else seed,
            "batch_size": base.batch_size if batch_size is None else batch_size,
            "workers": base.workers if workers is None else workers,
        }

        if alpha is not None or beta is not None:
            current = data["affine"]
            data["affine"] = AffineParams(
                alpha=alpha if alpha is not None else (current.alpha if current else 1.0),
                beta=beta if beta is not None else (current.beta if current else 0.0),
            )
        elif data["affine"] is None and payload_defaults:
            data["affine"] = AffineParams(alpha=settings.ALPHA_START, beta=0.0)

        if gamma is not None:
            data["gamma"] = GammaParams(gamma=gamma)
        elif data["gamma"] is None and payload_defaults:
            data["gamma"] = GammaParams(gamma=settings.BENCH_GAMMA)

        ranges_given = alpha_range is not None or beta_range is not None or step is not None
        if ranges_given or data["param_set"] is None:
            data["param_set"] = _resolve_param_set(data["param_set"], alpha_range, beta_range, step)

        return EnhanceConfig(**data)
    except (ValidationError, EnhancementError) as e:
        raise typer.BadParameter(str(e))


def _resolve_param_set(current, alpha_range: Optional[str], beta_range: Optional[str], step: Optional[float]):
    if current is not None:
        meta = current.meta
        a_start, a_end, b_start, b_end, base_step = (
            meta.alpha_start, meta.alpha_end, meta.beta_start, meta.beta_end, meta.step,
        )
    else:
        a_start, a_end = settings.ALPHA_START, settings.ALPHA_END
        b_start, b_end = settings.BETA_START, settings.BETA_END
        base_step = settings.PARAM_STEP

    if alpha_range is not None:
        a_start, a_end = parse_range(alpha_range, "--alpha-range")
    if beta_range is not None:
        b_start, b_end = parse_range(beta_range, "--beta-range")

    return build_param_set(a_start, a_end, b_start, b_end, step if step is not None else base_step)

"""
하이퍼파라미터 집합 생성 및 이미지별 (α, β) 추출

1. build_param_set: start 부터 step 간격으로 증가시키고, end 는 항상 포함
2. derive_stream: (master_seed, image_index) -> 이미지 전용 난수 스트림
3. draw_params: 스트림에서 α 인덱스, β 인덱스를 순서대로 하나씩 추출
"""
import logging
import math
from typing import List, Optional

from src.config.settings import get_settings
from src.enhancement.errors import InvalidRange
from src.models.image import AffineParams
from src.models.sampling import ParamSet, ParamSetMeta, RngStream

logger = logging.getLogger(__name__)
settings = get_settings()

# 반복 덧셈의 누적 오차로 end 직전 값이 빠지지 않도록 허용하는 여유
_STEP_EPSILON = 1e-9


def build_param_set(
    alpha_start: float,
    alpha_end: float,
    beta_start: float,
    beta_end: float,
    step: float,
    decimals: Optional[int] = None,
) -> ParamSet:
    """
    Args:
        alpha_start, alpha_end: gain 범위 (양 끝 포함)
        beta_start, beta_end: bias 범위 (양 끝 포함)
        step: 증가 간격 (> 0)
        decimals: 스냅 자릿수 (기본값 settings.PARAM_DECIMALS)

    Returns:
        ParamSet

    Raises:
        InvalidRange: start > end, step <= 0, 또는 alpha <= 0 이 포함될 때
    """
    decimals = settings.PARAM_DECIMALS if decimals is None else decimals

    if not math.isfinite(step) or step <= 0:
        raise InvalidRange(f"step must be > 0, got {step}")
    if step < 10 ** -decimals:
        raise InvalidRange(f"step {step} is finer than the {decimals}-decimal snapping grid")

    alphas = _progression(alpha_start, alpha_end, step, decimals, "alpha")
    betas = _progression(beta_start, beta_end, step, decimals, "beta")

    if alphas[0] <= 0:
        raise InvalidRange(f"every alpha must be > 0, got start {alpha_start}")

    param_set = ParamSet(
        alphas=tuple(alphas),
        betas=tuple(betas),
        meta=ParamSetMeta(
            alpha_start=alphas[0],
            alpha_end=alphas[-1],
            beta_start=betas[0],
            beta_end=betas[-1],
            step=step,
        ),
    )
    logger.debug(f"Built param set: {len(alphas)} alphas x {len(betas)} betas (step={step})")
    return param_set


def default_param_set() -> ParamSet:
    return build_param_set(
        settings.ALPHA_START,
        settings.ALPHA_END,
        settings.BETA_START,
        settings.BETA_END,
        settings.PARAM_STEP,
    )


def derive_stream(master_seed: int, image_index: int) -> RngStream:
    return RngStream(master_seed=master_seed, stream_index=image_index)


def draw_params(param_set: ParamSet, stream: RngStream) -> AffineParams:
    """α, β 를 각각 독립적으로 균등 추출 (스트림에서 정확히 두 번 추출)"""
    rng = stream.generator()
    alpha_index = int(rng.integers(len(param_set.alphas)))
    beta_index = int(rng.integers(len(param_set.betas)))
    return AffineParams(alpha=param_set.alphas[alpha_index], beta=param_set.betas[beta_index])


def _progression(start: float, end: float, step: float, decimals: int, axis: str) -> List[float]:
    if not (math.isfinite(start) and math.isfinite(end)):
        raise InvalidRange(f"{axis} range must be finite: [{start}, {end}]")
    if start > end:
        raise InvalidRange(f"{axis} start ({start}) must not exceed end ({end})")

    count = int(math.floor((end - start) / step + _STEP_EPSILON))
    values = [round(start + k * step, decimals) for k in range(count + 1)]

    last = round(end, decimals)
    if values[-1] < last:
        values.append(last)
    elif values[-1] > last:
        values[-1] = last

    # 스냅 이후 중복 제거 (순서 유지)
    deduped: List[float] = []
    for v in values:
        if not deduped or v > deduped[-1]:
            deduped.append(v)
    return deduped

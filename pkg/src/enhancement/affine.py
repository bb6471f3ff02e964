"""
픽셀 단위 affine 보정 커널: g = clip(α·f + β, lo, hi)

- Byte255: 결과를 가장 가까운 정수로 반올림 (동률은 0에서 먼 쪽)
- Unit: 반올림 없이 실수 그대로
- 모든 연산은 새 Image 를 반환하며 입력은 변경하지 않습니다.
"""

import numpy as np

from src.enhancement.errors import DomainMismatch, InvalidBounds, InvalidParams
from src.models.image import AffineParams, Image, PixelDomain


# uint8 입력이 가질 수 있는 모든 레벨
BYTE_LEVELS = np.arange(256, dtype=np.float64)


def clip(value: float, lo: float, hi: float) -> float:
    if lo > hi:
        raise InvalidBounds(f"lo ({lo}) must not exceed hi ({hi})")
    return min(max(value, lo), hi)


def round_half_away(values: np.ndarray) -> np.ndarray:
    return np.sign(values) * np.floor(np.abs(values) + 0.5)


def affine_lut(params: AffineParams) -> np.ndarray:
    """
    Byte255 입력 256 레벨 각각에 대한 출력 테이블

    레벨별로 per-pixel 계산과 동일한 부동소수점 연산을 수행하므로
    lut[f] 는 픽셀마다 직접 계산한 값과 bit 단위로 같습니다.
    """
    values = params.alpha * BYTE_LEVELS + params.beta
    np.clip(values, 0.0, 255.0, out=values)
    return round_half_away(values).astype(np.uint8)


def apply_affine(image: Image, params: AffineParams) -> Image:
    """
    Args:
        image: 입력 이미지 (Byte255 또는 Unit)
        params: gain(alpha) > 0, 유한한 bias(beta)

    Returns:
        같은 크기/채널/도메인의 보정된 이미지
    """
    _check_params(params)

    if image.domain is PixelDomain.BYTE255:
        out = affine_lut(params)[image.pixels]
    else:
        out = params.alpha * image.pixels + params.beta
        np.clip(out, image.domain.lo, image.domain.hi, out=out)

    return Image.trusted(out, image.domain)


def convert_domain(image: Image, target: PixelDomain) -> Image:
    if image.domain is target:
        return image

    if target is PixelDomain.UNIT:
        out = image.pixels.astype(np.float64) / 255.0
    else:
        out = round_half_away(image.pixels * 255.0)
        np.clip(out, 0.0, 255.0, out=out)
        out = out.astype(np.uint8)

    return Image.trusted(out, target)


def _check_params(params: AffineParams) -> None:
    # model_construct 로 검증을 우회한 파라미터도 여기서 걸러냅니다
    if not np.isfinite(params.alpha) or params.alpha <= 0:
        raise InvalidParams(f"alpha must be > 0, got {params.alpha}")
    if not np.isfinite(params.beta):
        raise DomainMismatch(f"beta must be finite, got {params.beta}")

"""
비교용 기준(baseline) 보정 기법

- histogram_equalize: 전역 히스토그램 평활화 (grayscale, Byte255)
- gamma_correct: 고정 γ power-law 보정 (Byte255 / Unit)
- adaptive_gamma_cdf: 누적분포 기반 레벨별 γ 보정 (grayscale, Byte255)
- linear_stretch: 채널별 min-max 대비 확장
"""
import numpy as np

from src.enhancement.affine import BYTE_LEVELS, round_half_away
from src.enhancement.errors import InvalidParams, UnsupportedChannels, UnsupportedDomain
from src.models.image import GammaParams, Image, PixelDomain


def histogram_equalize(image: Image) -> Image:
    """
    output = round(255 * (CDF(f) - CDF_min) / (N - CDF_min))

    CDF_min 은 0 이 아닌 가장 작은 누적값이며,
    단일 레벨 이미지(N == CDF_min)는 전부 0 으로 매핑합니다.
    """
    _require_gray_byte(image, "histogram_equalize")
    return Image.trusted(equalize_lut(image)[image.pixels], PixelDomain.BYTE255)


def equalize_lut(image: Image) -> np.ndarray:
    hist = np.bincount(image.flat(), minlength=256)
    cdf = np.cumsum(hist)
    total = int(cdf[-1])
    cdf_min = int(cdf[cdf > 0][0])

    if total == cdf_min:
        return np.zeros(256, dtype=np.uint8)

    scaled = (255.0 * (cdf - cdf_min)) / (total - cdf_min)
    np.clip(scaled, 0.0, 255.0, out=scaled)
    return round_half_away(scaled).astype(np.uint8)


def gamma_correct(image: Image, params: GammaParams) -> Image:
    """output = hi * (f / hi) ** gamma, Byte255 는 반올림"""
    _check_gamma(params)
    hi = image.domain.hi
    if image.domain is PixelDomain.BYTE255:
        levels = hi * (BYTE_LEVELS / hi) ** params.gamma
        lut = round_half_away(levels).astype(np.uint8)
        return Image.trusted(lut[image.pixels], image.domain)

    out = hi * (image.pixels / hi) ** params.gamma
    return Image.trusted(out, image.domain)


def adaptive_gamma_cdf(image: Image) -> Image:
    _require_gray_byte(image, "adaptive_gamma_cdf")
    return Image.trusted(adaptive_gamma_lut(image)[image.pixels], PixelDomain.BYTE255)


def adaptive_gamma_lut(image: Image) -> np.ndarray:
    """
    레벨 l 의 정규화 CDF c(l) 에 대해 round(255 * (l/255) ** (1 - c(l)))

    c 가 단조 증가하므로 지수는 단조 감소하고, 결과 매핑은 단조 비감소입니다.
    c(l) = 1 인 레벨은 지수가 0 이 되어 255 로 매핑됩니다 (단일 레벨 이미지 포함).
    """
    hist = np.bincount(image.flat(), minlength=256)
    cdf = np.cumsum(hist) / float(hist.sum())
    levels = 255.0 * (BYTE_LEVELS / 255.0) ** (1.0 - cdf)
    np.clip(levels, 0.0, 255.0, out=levels)
    return round_half_away(levels).astype(np.uint8)


def linear_stretch(image: Image) -> Image:
    """채널마다 [min, max] 를 [lo, hi] 로 선형 확장. 상수 채널은 그대로 둡니다."""
    lo, hi = image.domain.lo, image.domain.hi
    src = image.pixels.astype(np.float64)
    out = np.empty_like(src)

    for c in range(image.channels):
        plane = src[:, :, c]
        p_min, p_max = float(plane.min()), float(plane.max())
        if p_max == p_min:
            out[:, :, c] = plane
            continue
        out[:, :, c] = lo + (plane - p_min) * (hi - lo) / (p_max - p_min)

    np.clip(out, lo, hi, out=out)
    if image.domain is PixelDomain.BYTE255:
        out = round_half_away(out).astype(np.uint8)
    return Image.trusted(out, image.domain)


def _check_gamma(params: GammaParams) -> None:
    # model_construct 로 검증을 우회한 파라미터도 여기서 걸러냅니다
    if not np.isfinite(params.gamma) or params.gamma <= 0:
        raise InvalidParams(f"gamma must be a finite value > 0, got {params.gamma}")


def _require_gray_byte(image: Image, method: str) -> None:
    if image.channels != 1:
        raise UnsupportedChannels(f"{method} supports grayscale images only (got {image.channels} channels)")
    if image.domain is not PixelDomain.BYTE255:
        raise UnsupportedDomain(f"{method} supports the Byte255 domain only")

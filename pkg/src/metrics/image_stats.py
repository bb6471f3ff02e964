"""
보정 전/후 객관 지표

- mean_brightness: 산술 평균
- rms_contrast: 모집단 표준편차
- entropy: 256-bin 히스토그램의 Shannon entropy (bits)

RGB 이미지는 픽셀별 채널 평균을 밝기 대용값으로 사용합니다.
"""
import numpy as np

from src.enhancement.affine import round_half_away
from src.enhancement.errors import DimensionMismatch
from src.models.image import Image
from src.models.metrics import ImageStats, MetricsDelta


def intensity(image: Image) -> np.ndarray:
    values = image.pixels.astype(np.float64)
    if image.channels == 1:
        return values.reshape(-1)
    return values.mean(axis=2).reshape(-1)


def histogram_levels(image: Image) -> np.ndarray:
    """밝기 값을 0~255 레벨로 양자화한 256-bin 히스토그램"""
    lo, hi = image.domain.lo, image.domain.hi
    scaled = (intensity(image) - lo) * (255.0 / (hi - lo))
    levels = round_half_away(np.clip(scaled, 0.0, 255.0)).astype(np.int64)
    return np.bincount(levels, minlength=256)


def compute_stats(image: Image) -> ImageStats:
    values = intensity(image)

    hist = histogram_levels(image)
    p = hist[hist > 0] / float(values.size)
    entropy = float(-(p * np.log2(p)).sum()) + 0.0

    return ImageStats(
        mean_brightness=float(values.mean()),
        rms_contrast=float(values.std()),
        entropy=min(entropy, 8.0),
    )


def compare(before: Image, after: Image) -> MetricsDelta:
    if before.shape != after.shape or before.domain is not after.domain:
        raise DimensionMismatch(
            f"cannot compare {before.shape}/{before.domain.value} with {after.shape}/{after.domain.value}"
        )

    stats_before = compute_stats(before)
    stats_after = compute_stats(after)
    return MetricsDelta(
        before=stats_before,
        after=stats_after,
        brightness_gain=stats_after.mean_brightness - stats_before.mean_brightness,
        contrast_gain=stats_after.rms_contrast - stats_before.rms_contrast,
    )

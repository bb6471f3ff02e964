import math

import numpy as np
import pytest

from src.enhancement.affine import convert_domain
from src.enhancement.baselines import (
    adaptive_gamma_cdf,
    adaptive_gamma_lut,
    gamma_correct,
    histogram_equalize,
    linear_stretch,
)
from src.enhancement.errors import InvalidParams, UnsupportedChannels, UnsupportedDomain
from src.metrics.image_stats import compute_stats
from src.models.image import GammaParams, Image, PixelDomain
from tests.helpers import reference_equalize


def gray(values) -> Image:
    return Image.from_array(np.array(values, dtype=np.uint8))


# ---------------------------------------------------------------- histogram_equalize

def test_equalize_constant_image_maps_to_zero():
    out = histogram_equalize(gray(np.full((2, 2), 7)))
    assert np.all(out.pixels == 0)


def test_equalize_four_levels():
    out = histogram_equalize(gray([[0, 85], [170, 255]]))
    assert out.flat().tolist() == reference_equalize([0, 85, 170, 255]) == [0, 85, 170, 255]


def test_equalize_matches_brute_force_oracle():
    rng = np.random.default_rng(17)
    for trial in range(1000):
        h, w = (int(x) for x in rng.integers(1, 17, size=2))
        # 레벨 폭을 바꿔가며 희소/조밀 히스토그램 모두 생성
        high = int(rng.integers(1, 257))
        raw = rng.integers(0, high, size=(h, w), dtype=np.uint8)

        out = histogram_equalize(gray(raw))

        assert out.flat().tolist() == reference_equalize(raw.reshape(-1).tolist()), trial


def test_equalize_is_idempotent_up_to_one_level():
    rng = np.random.default_rng(5)
    for _ in range(200):
        once = histogram_equalize(gray(rng.integers(0, 256, size=(8, 8), dtype=np.uint8)))
        twice = histogram_equalize(once)
        diff = np.abs(once.pixels.astype(int) - twice.pixels.astype(int))
        assert diff.max() <= 1


def test_equalize_rejects_rgb_and_unit():
    with pytest.raises(UnsupportedChannels):
        histogram_equalize(Image.from_array(np.zeros((2, 2, 3), dtype=np.uint8)))
    with pytest.raises(UnsupportedDomain):
        histogram_equalize(convert_domain(gray([[1, 2]]), PixelDomain.UNIT))


# ---------------------------------------------------------------- gamma_correct

@pytest.mark.parametrize("domain", [PixelDomain.BYTE255, PixelDomain.UNIT])
def test_gamma_one_is_identity(domain):
    rng = np.random.default_rng(8)
    image = convert_domain(Image.from_array(rng.integers(0, 256, size=(12, 10, 3), dtype=np.uint8)), domain)

    assert gamma_correct(image, GammaParams(gamma=1.0)).equals(image)


@pytest.mark.parametrize("g", [0.3, 0.5, 1.7, 4.0])
def test_gamma_keeps_endpoints(g):
    out = gamma_correct(gray([[0, 255]]), GammaParams(gamma=g))
    assert out.flat().tolist() == [0, 255]


def test_gamma_half_brightens_64_to_128():
    out = gamma_correct(gray([[64]]), GammaParams(gamma=0.5))
    assert out.pixels[0, 0, 0] == 128


def test_gamma_works_on_rgb():
    image = Image.from_array(np.full((2, 2, 3), 64, dtype=np.uint8))
    out = gamma_correct(image, GammaParams(gamma=0.5))
    assert out.shape == (2, 2, 3) and np.all(out.pixels == 128)


@pytest.mark.parametrize("g", [0.0, -0.5, float("nan")])
def test_gamma_must_be_positive(g):
    with pytest.raises(InvalidParams):
        GammaParams(gamma=g)


@pytest.mark.parametrize("g", [0.0, -0.5, float("nan"), float("inf")])
@pytest.mark.parametrize("domain", [PixelDomain.BYTE255, PixelDomain.UNIT])
def test_gamma_correct_rejects_unvalidated_params(g, domain):
    image = convert_domain(Image.from_array(np.full((2, 2), 64, dtype=np.uint8)), domain)
    with pytest.raises(InvalidParams):
        gamma_correct(image, GammaParams.model_construct(gamma=g))


# ---------------------------------------------------------------- adaptive_gamma_cdf

def test_adaptive_constant_image_maps_to_255():
    out = adaptive_gamma_cdf(gray(np.full((3, 3), 7)))
    assert np.all(out.pixels == 255)


def test_adaptive_ramp_matches_per_level_formula():
    ramp = gray(np.arange(256, dtype=np.uint8).reshape(16, 16))

    out = adaptive_gamma_cdf(ramp)

    expected = [math.floor(255.0 * (level / 255.0) ** (1.0 - (level + 1) / 256.0) + 0.5) for level in range(256)]
    assert out.flat().tolist() == expected


def test_adaptive_level_map_is_monotone():
    rng = np.random.default_rng(23)
    for _ in range(1000):
        h, w = (int(x) for x in rng.integers(1, 17, size=2))
        lut = adaptive_gamma_lut(gray(rng.integers(0, 256, size=(h, w), dtype=np.uint8)))
        assert np.all(np.diff(lut.astype(int)) >= 0)


def test_adaptive_brightens_dark_image():
    rng = np.random.default_rng(31)
    dark = rng.integers(0, 64, size=900)
    bright = rng.integers(64, 256, size=100)
    image = gray(rng.permutation(np.concatenate([dark, bright])).reshape(25, 40))

    after = adaptive_gamma_cdf(image)

    assert compute_stats(after).mean_brightness > compute_stats(image).mean_brightness


def test_adaptive_rejects_rgb():
    with pytest.raises(UnsupportedChannels):
        adaptive_gamma_cdf(Image.from_array(np.zeros((2, 2, 3), dtype=np.uint8)))


# ---------------------------------------------------------------- linear_stretch

def test_stretch_spans_full_range():
    out = linear_stretch(gray([[50, 100, 150]]))
    assert out.flat().tolist() == [0, 128, 255]


def test_stretch_leaves_constant_channel_alone():
    arr = np.zeros((2, 2, 3), dtype=np.uint8)
    arr[:, :, 0] = 40
    arr[:, :, 1] = [[10, 20], [30, 40]]
    arr[:, :, 2] = 200

    out = linear_stretch(Image.from_array(arr))

    assert np.all(out.pixels[:, :, 0] == 40)
    assert out.pixels[:, :, 1].tolist() == [[0, 85], [170, 255]]
    assert np.all(out.pixels[:, :, 2] == 200)


def test_stretch_in_unit_domain():
    image = Image.from_array(np.array([[0.25, 0.5, 0.75]]), PixelDomain.UNIT)
    out = linear_stretch(image)
    assert out.flat().tolist() == pytest.approx([0.0, 0.5, 1.0])

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from src.enhancement.affine import apply_affine, clip, convert_domain
from src.enhancement.errors import DomainMismatch, InvalidBounds, InvalidParams
from src.models.image import AffineParams, Image, PixelDomain


def byte_image(values, shape=None) -> Image:
    arr = np.array(values, dtype=np.uint8)
    if shape is not None:
        arr = arr.reshape(shape)
    return Image.from_array(arr, PixelDomain.BYTE255)


def reference_affine(image: Image, alpha: float, beta: float) -> np.ndarray:
    """픽셀마다 스칼라로 계산하는 참조 구현"""
    lo, hi = image.domain.lo, image.domain.hi
    out = []
    for f in image.flat().tolist():
        g = min(max(alpha * f + beta, lo), hi)
        if image.domain is PixelDomain.BYTE255:
            g = math.floor(g + 0.5)
        out.append(g)
    return np.array(out, dtype=image.domain.dtype).reshape(image.shape)


# ---------------------------------------------------------------- apply_affine

def test_byte_pixel_rounds_to_nearest():
    out = apply_affine(byte_image([[100]]), AffineParams(alpha=1.15, beta=-0.1))
    assert out.pixels[0, 0, 0] == 115


def test_byte_pixel_saturates_at_255():
    out = apply_affine(byte_image([[255]]), AffineParams(alpha=1.35, beta=0.4))
    assert out.pixels[0, 0, 0] == 255


def test_unit_pixel_clips_to_one():
    image = Image.from_array(np.array([[0.5]]), PixelDomain.UNIT)
    out = apply_affine(image, AffineParams(alpha=1.35, beta=0.4))
    assert out.pixels[0, 0, 0] == 1.0


@pytest.mark.parametrize("domain", [PixelDomain.BYTE255, PixelDomain.UNIT])
def test_identity_params_are_bit_exact(domain):
    rng = np.random.default_rng(3)
    raw = rng.integers(0, 256, size=(9, 7, 3), dtype=np.uint8)
    image = convert_domain(Image.from_array(raw), domain)

    out = apply_affine(image, AffineParams(alpha=1.0, beta=0.0))

    assert out.equals(image)


def test_output_keeps_shape_domain_and_input_untouched():
    image = byte_image(np.arange(24), shape=(2, 4, 3))
    before = image.pixels.copy()

    out = apply_affine(image, AffineParams(alpha=1.2, beta=3.0))

    assert out.shape == image.shape
    assert out.domain is PixelDomain.BYTE255
    assert np.array_equal(image.pixels, before)
    assert out.pixels is not image.pixels


@pytest.mark.parametrize("alpha", [0.0, -1.15])
def test_non_positive_alpha_is_rejected(alpha):
    with pytest.raises(InvalidParams):
        AffineParams(alpha=alpha, beta=0.0)


def test_kernel_rejects_unvalidated_alpha():
    params = AffineParams.model_construct(alpha=-1.0, beta=0.0)
    with pytest.raises(InvalidParams):
        apply_affine(byte_image([[1]]), params)


@pytest.mark.parametrize("beta", [float("nan"), float("inf")])
def test_non_finite_beta_is_domain_mismatch(beta):
    with pytest.raises(DomainMismatch):
        AffineParams(alpha=1.0, beta=beta)


def test_matches_scalar_reference_on_random_images():
    rng = np.random.default_rng(2024)
    for trial in range(1000):
        h, w = (int(x) for x in rng.integers(1, 65, size=2))
        channels = 1 if trial % 2 else 3
        domain = PixelDomain.BYTE255 if trial % 4 < 2 else PixelDomain.UNIT
        raw = rng.integers(0, 256, size=(h, w, channels), dtype=np.uint8)
        image = convert_domain(Image.from_array(raw), domain)
        alpha = float(rng.uniform(0.05, 3.0))
        beta = float(rng.uniform(-100, 100) if domain is PixelDomain.BYTE255 else rng.uniform(-0.5, 0.5))

        out = apply_affine(image, AffineParams(alpha=alpha, beta=beta))

        assert np.array_equal(out.pixels, reference_affine(image, alpha, beta)), (trial, alpha, beta)


# ---------------------------------------------------------------- properties

_byte_arrays = arrays(np.uint8, st.tuples(st.integers(1, 8), st.integers(1, 8), st.sampled_from([1, 3])))
_alphas = st.floats(min_value=0.01, max_value=10.0)
_betas = st.floats(min_value=-300.0, max_value=300.0)


@given(_byte_arrays, _alphas, _betas)
def test_output_stays_within_bounds(raw, alpha, beta):
    out = apply_affine(Image.from_array(raw), AffineParams(alpha=alpha, beta=beta))
    assert out.pixels.min() >= 0 and out.pixels.max() <= 255


@given(_byte_arrays, _alphas, _betas)
def test_order_is_preserved(raw, alpha, beta):
    lower = raw // 2
    params = AffineParams(alpha=alpha, beta=beta)

    out_low = apply_affine(Image.from_array(lower), params)
    out_high = apply_affine(Image.from_array(raw), params)

    assert np.all(out_low.pixels <= out_high.pixels)


@given(arrays(np.uint8, st.tuples(st.integers(1, 6), st.integers(1, 6), st.just(3))), _alphas, _betas)
def test_rgb_equals_per_channel_application(raw, alpha, beta):
    image = Image.from_array(raw)
    params = AffineParams(alpha=alpha, beta=beta)

    per_channel = Image.stack([apply_affine(image.channel(c), params) for c in range(3)])

    assert apply_affine(image, params).equals(per_channel)


@given(_byte_arrays, _alphas, _betas)
def test_repeated_calls_are_identical(raw, alpha, beta):
    image = Image.from_array(raw)
    params = AffineParams(alpha=alpha, beta=beta)
    assert apply_affine(image, params).equals(apply_affine(image, params))


@given(arrays(np.float64, (4, 4, 1), elements=st.floats(0.0, 1.0)), _alphas, st.floats(-1.0, 1.0))
def test_unit_output_stays_within_bounds(raw, alpha, beta):
    out = apply_affine(Image.from_array(raw, PixelDomain.UNIT), AffineParams(alpha=alpha, beta=beta))
    assert out.pixels.min() >= 0.0 and out.pixels.max() <= 1.0


# ---------------------------------------------------------------- clip

@pytest.mark.parametrize("value, expected", [(300, 255), (-5, 0), (114.9, 114.9)])
def test_clip(value, expected):
    assert clip(value, 0, 255) == expected


def test_clip_rejects_inverted_bounds():
    with pytest.raises(InvalidBounds):
        clip(1.0, 2.0, 1.0)


# ---------------------------------------------------------------- convert_domain

def test_convert_endpoints():
    out = convert_domain(byte_image([[0, 255]]), PixelDomain.UNIT)
    assert out.pixels[0, 0, 0] == 0.0
    assert out.pixels[0, 1, 0] == 1.0


def test_byte_unit_byte_round_trip_is_exact():
    image = byte_image(np.arange(256, dtype=np.uint8), shape=(16, 16, 1))
    back = convert_domain(convert_domain(image, PixelDomain.UNIT), PixelDomain.BYTE255)
    assert back.equals(image)


def test_same_domain_conversion_is_identity():
    image = byte_image([[1, 2, 3]])
    assert convert_domain(image, PixelDomain.BYTE255) is image

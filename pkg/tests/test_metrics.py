import io

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from src.enhancement.affine import apply_affine, convert_domain
from src.enhancement.errors import DimensionMismatch
from src.metrics.dataset_report import collect_metrics, write_metrics_csv
from src.metrics.image_stats import compare, compute_stats
from src.models.dataset import DatasetManifest, ManifestRecord
from src.models.image import AffineParams, Image, PixelDomain
from tests.helpers import write_png


def gray(values) -> Image:
    return Image.from_array(np.array(values, dtype=np.uint8))


def test_constant_image_stats():
    s = compute_stats(gray(np.full((4, 4), 128)))
    assert (s.mean_brightness, s.rms_contrast, s.entropy) == (128.0, 0.0, 0.0)


def test_two_level_image_stats():
    s = compute_stats(gray([[0, 255], [255, 0]]))
    assert s.mean_brightness == 127.5
    assert s.rms_contrast == 127.5
    assert s.entropy == pytest.approx(1.0)


def test_full_ramp_has_eight_bits_of_entropy():
    s = compute_stats(gray(np.arange(256).reshape(16, 16)))
    assert s.entropy == pytest.approx(8.0)


def test_rgb_uses_channel_mean():
    arr = np.zeros((1, 2, 3), dtype=np.uint8)
    arr[0, 0] = (30, 60, 90)
    arr[0, 1] = (90, 120, 150)

    s = compute_stats(Image.from_array(arr))

    assert s.mean_brightness == 90.0
    assert s.rms_contrast == 30.0


def test_unit_domain_entropy_is_quantized_to_byte_levels():
    byte = gray(np.arange(256).reshape(16, 16))
    unit = convert_domain(byte, PixelDomain.UNIT)
    assert compute_stats(unit).entropy == pytest.approx(compute_stats(byte).entropy)


def test_compare_identity_has_zero_gains():
    image = gray(np.random.default_rng(0).integers(0, 256, size=(8, 8)))
    d = compare(image, image)
    assert d.brightness_gain == 0.0 and d.contrast_gain == 0.0


def test_compare_rejects_mismatched_shapes():
    with pytest.raises(DimensionMismatch):
        compare(gray(np.zeros((2, 2))), gray(np.zeros((2, 3))))


def test_compare_rejects_mismatched_domains():
    image = gray(np.zeros((2, 2)))
    with pytest.raises(DimensionMismatch):
        compare(image, convert_domain(image, PixelDomain.UNIT))


def test_gain_only_scales_contrast():
    image = gray(np.random.default_rng(1).integers(50, 151, size=(32, 32)))

    d = compare(image, apply_affine(image, AffineParams(alpha=1.15, beta=0.0)))

    assert abs(d.contrast_gain - 0.15 * d.before.rms_contrast) <= 1.0


def test_bias_only_shifts_brightness():
    image = gray(np.random.default_rng(2).integers(50, 151, size=(32, 32)))

    d = compare(image, apply_affine(image, AffineParams(alpha=1.0, beta=10.0)))

    assert abs(d.brightness_gain - 10.0) <= 1.0


def test_clip_free_affine_laws_hold():
    rng = np.random.default_rng(99)
    for case in range(500):
        h, w = (int(x) for x in rng.integers(1, 33, size=2))
        image = gray(rng.integers(50, 151, size=(h, w)))
        alpha = float(rng.uniform(1.0, 1.3))
        beta = float(rng.uniform(-20.0, 20.0))

        before = compute_stats(image)
        after = compute_stats(apply_affine(image, AffineParams(alpha=alpha, beta=beta)))

        assert abs(after.mean_brightness - (alpha * before.mean_brightness + beta)) <= 1.0, case
        assert abs(after.rms_contrast - alpha * before.rms_contrast) <= 1.0, case


@given(
    arrays(np.uint8, st.tuples(st.integers(1, 12), st.integers(1, 12))),
    st.floats(0.01, 5.0),
    st.floats(-300.0, 300.0),
)
def test_affine_never_increases_entropy(raw, alpha, beta):
    image = gray(raw)
    after = apply_affine(image, AffineParams(alpha=alpha, beta=beta))
    assert compute_stats(after).entropy <= compute_stats(image).entropy + 1e-12


@given(arrays(np.uint8, st.integers(1, 64)), st.randoms(use_true_random=False))
def test_stats_are_permutation_invariant(raw, random):
    values = raw.tolist()
    shuffled = values[:]
    random.shuffle(shuffled)

    a = compute_stats(gray([values]))
    b = compute_stats(gray([shuffled]))

    assert a.mean_brightness == pytest.approx(b.mean_brightness)
    assert a.rms_contrast == pytest.approx(b.rms_contrast)
    assert a.entropy == pytest.approx(b.entropy)


# ---------------------------------------------------------------- dataset report

def test_collect_metrics_pairs_originals_with_outputs(tmp_path):
    rng = np.random.default_rng(4)
    write_png(tmp_path / "in" / "a" / "x.png", rng.integers(0, 256, size=(4, 4), dtype=np.uint8))
    write_png(tmp_path / "out" / "a" / "x.png", np.full((4, 4), 9, dtype=np.uint8))
    manifest = DatasetManifest(records=[
        ManifestRecord(path="a/x.png", label="a"),
        ManifestRecord(path="a/missing.png", label="a"),
    ])

    rows, failures = collect_metrics(manifest, tmp_path / "in", tmp_path / "out")

    assert [path for path, _ in rows] == ["a/x.png"]
    assert rows[0][1].after.mean_brightness == 9.0
    assert [f.path for f in failures] == ["a/missing.png"]


def test_metrics_csv_layout():
    image = gray([[0, 255]])
    buffer = io.StringIO()

    write_metrics_csv([("a/x.png", compare(image, image))], buffer)

    lines = buffer.getvalue().splitlines()
    assert lines[0] == "path,mean_before,mean_after,rms_before,rms_after,entropy_before,entropy_after"
    assert lines[1] == "a/x.png,127.500000,127.500000,127.500000,127.500000,1.000000,1.000000"

import os
from pathlib import Path
from typing import Callable, Dict

import hypothesis
import numpy as np
import pytest

from tests.helpers import write_png

hypothesis.settings.register_profile("dev", deadline=None, max_examples=100)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def make_dataset(tmp_path) -> Callable[..., Path]:
    """
    <tmp>/data/<label>/img_XXXX.png 트리 생성

    Args:
        per_label: {label: 개수}
        size: 정사각 이미지 크기
        rgb: True 면 3채널
    """

    def _make(per_label: Dict[str, int], size: int = 16, rgb: bool = False, seed: int = 0) -> Path:
        root = tmp_path / "data"
        rng = np.random.default_rng(seed)
        for label, count in per_label.items():
            for i in range(count):
                shape = (size, size, 3) if rgb else (size, size)
                write_png(root / label / f"img_{i:04d}.png", rng.integers(0, 256, size=shape, dtype=np.uint8))
        root.mkdir(parents=True, exist_ok=True)
        return root

    return _make

import hashlib
import math
from pathlib import Path
from typing import Dict, List

import numpy as np
from PIL import Image as PILImage


def write_png(path: Path, array: np.ndarray) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    PILImage.fromarray(array).save(path, format="PNG")
    return path


def tree_digest(root: Path) -> Dict[str, str]:
    """상대 경로 -> sha256 (디렉토리 전체 비교용)"""
    return {
        p.relative_to(root).as_posix(): hashlib.sha256(p.read_bytes()).hexdigest()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def reference_equalize(values: List[int]) -> List[int]:
    """히스토그램 + CDF + remap 을 그대로 나열한 brute-force 평활화"""
    n = len(values)
    hist = [0] * 256
    for v in values:
        hist[v] += 1
    cdf, running = [], 0
    for count in hist:
        running += count
        cdf.append(running)
    cdf_min = min(c for c in cdf if c > 0)
    if n == cdf_min:
        return [0] * n
    return [math.floor(255 * (cdf[v] - cdf_min) / (n - cdf_min) + 0.5) for v in values]

"""
래스터 이미지 디코딩/인코딩 (Pillow)

지원 입력: PNG, JPEG, BMP (8-bit grayscale / RGB, 16-bit grayscale)
- 알파 채널은 제거
- 16-bit 소스는 정수 나눗셈(// 257)으로 8-bit 로 축소 (내림, 65535 -> 255)
- CMYK 등 그 외 모드는 UnsupportedFormat
"""
import logging
from enum import Enum
from pathlib import Path
from typing import Union

import numpy as np
from PIL import Image as PILImage

from src.enhancement.errors import DecodeError, DomainMismatch, IoError, UnsupportedFormat
from src.models.image import Image, PixelDomain

logger = logging.getLogger(__name__)

JPEG_QUALITY = 95

SUPPORTED_FORMATS = {"PNG", "JPEG", "BMP"}
SUPPORTED_EXTENSIONS = {".png", ".jpg", ".jpeg", ".bmp"}

# Pillow 모드 -> 변환 대상 모드
_MODE_CONVERSIONS = {
    "L": None,
    "RGB": None,
    "1": "L",
    "LA": "L",
    "La": "L",
    "P": "RGB",
    "PA": "RGB",
    "RGBA": "RGB",
    "RGBa": "RGB",
    "RGBX": "RGB",
}
_SIXTEEN_BIT_MODES = {"I;16", "I;16L", "I;16B", "I;16N", "I"}


class ImageFormat(str, Enum):
    PNG = "png"
    JPEG = "jpeg"

    @property
    def suffix(self) -> str:
        return ".png" if self is ImageFormat.PNG else ".jpg"


def is_supported_image(path: Union[str, Path]) -> bool:
    """숨김 파일을 제외하고 확장자로 지원 여부 판단"""
    name = Path(path).name
    if name.startswith("."):
        return False
    return Path(name).suffix.lower() in SUPPORTED_EXTENSIONS


def load_image(path: Union[str, Path]) -> Image:
    """
    Args:
        path: 이미지 파일 경로

    Returns:
        Byte255 도메인 Image

    Raises:
        IoError: 파일을 열 수 없을 때
        DecodeError: 손상되었거나 해석할 수 없는 파일
        UnsupportedFormat: PNG/JPEG/BMP 가 아니거나 지원하지 않는 색 모드
    """
    path = Path(path)
    try:
        handle = path.open("rb")
    except OSError as e:
        raise IoError(f"Cannot read {path}: {e}") from e

    with handle:
        try:
            pil = PILImage.open(handle)
            pil.load()
        except (OSError, SyntaxError, ValueError, PILImage.DecompressionBombError) as e:
            raise DecodeError(f"Cannot decode {path}: {e}") from e

        if pil.format not in SUPPORTED_FORMATS:
            raise UnsupportedFormat(f"{path}: format {pil.format} is not supported")

        pixels = _to_uint8_array(pil, path)

    logger.debug(f"Loaded {path} ({pixels.shape[1]}x{pixels.shape[0]}, mode={pil.mode})")
    return Image.from_array(pixels, PixelDomain.BYTE255)


def save_image(image: Image, path: Union[str, Path], fmt: ImageFormat = ImageFormat.PNG) -> None:
    """PNG 는 무손실, JPEG 는 quality 95 고정 (손실 압축)"""
    if image.domain is not PixelDomain.BYTE255:
        raise DomainMismatch("save_image requires a Byte255 image; convert Unit images first")

    arr = image.pixels[:, :, 0] if image.channels == 1 else image.pixels
    pil = PILImage.fromarray(np.ascontiguousarray(arr))

    try:
        if fmt is ImageFormat.JPEG:
            pil.save(path, format="JPEG", quality=JPEG_QUALITY)
        else:
            pil.save(path, format="PNG")
    except OSError as e:
        raise IoError(f"Cannot write {path}: {e}") from e


def _to_uint8_array(pil: PILImage.Image, path: Path) -> np.ndarray:
    mode = pil.mode

    if mode in _SIXTEEN_BIT_MODES:
        wide = np.asarray(pil).astype(np.int64)
        return (np.clip(wide, 0, 65535) // 257).astype(np.uint8)

    if mode not in _MODE_CONVERSIONS:
        raise UnsupportedFormat(f"{path}: color mode {mode} is not supported")

    target = _MODE_CONVERSIONS[mode]
    if target is not None:
        pil = pil.convert(target)
    return np.asarray(pil, dtype=np.uint8)

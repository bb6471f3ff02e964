import math
from enum import Enum
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.enhancement.errors import (
    DomainMismatch,
    InvalidParams,
    UnsupportedChannels,
)


class PixelDomain(str, Enum):
    """픽셀 값의 범위. kind 가 (lo, hi) 를 정확히 결정합니다."""

    BYTE255 = "byte"
    UNIT = "unit"

    @property
    def lo(self) -> float:
        return 0.0

    @property
    def hi(self) -> float:
        return 255.0 if self is PixelDomain.BYTE255 else 1.0

    @property
    def dtype(self) -> np.dtype:
        return np.dtype(np.uint8) if self is PixelDomain.BYTE255 else np.dtype(np.float64)


class Image(BaseModel):
    """
    (height, width, channels) 래스터 이미지

    pixels 는 row-major numpy 배열이며 생성 시 읽기 전용으로 고정됩니다.
    Byte255 는 uint8, Unit 은 float64 로 저장합니다.
    """

    pixels: np.ndarray = Field(..., description="Row-major (height, width, channels) pixel array")
    domain: PixelDomain = Field(PixelDomain.BYTE255, description="Pixel value domain")

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Image":
        arr = self.pixels
        if arr.ndim != 3:
            raise DomainMismatch(f"Expected (height, width, channels) array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainMismatch(f"Image must be at least 1x1, got shape {arr.shape}")
        if arr.shape[2] not in (1, 3):
            raise UnsupportedChannels(f"Channels must be 1 or 3, got {arr.shape[2]}")
        if arr.dtype != self.domain.dtype:
            raise DomainMismatch(f"{self.domain.value} domain requires {self.domain.dtype}, got {arr.dtype}")
        if self.domain is PixelDomain.UNIT:
            if not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() > 1.0:
                raise DomainMismatch("Unit domain pixels must lie in [0.0, 1.0]")
        arr.flags.writeable = False
        return self

    @classmethod
    def from_array(cls, array, domain: PixelDomain = PixelDomain.BYTE255) -> "Image":
        """
        2D(grayscale) 또는 3D 배열로부터 Image 생성

        Args:
            array: (h, w) 또는 (h, w, c) 배열
            domain: 픽셀 도메인

        Returns:
            검증된 Image (입력 배열은 복사됨)
        """
        arr = np.array(array, copy=True)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        if domain is PixelDomain.BYTE255:
            if arr.dtype != np.uint8:
                if np.issubdtype(arr.dtype, np.floating) and not np.all(arr == np.floor(arr)):
                    raise DomainMismatch("Byte255 pixels must be integers")
                if arr.size and (arr.min() < 0 or arr.max() > 255):
                    raise DomainMismatch("Byte255 pixels must lie in [0, 255]")
                arr = arr.astype(np.uint8)
        else:
            arr = arr.astype(np.float64)
        return cls(pixels=arr, domain=domain)

    @classmethod
    def trusted(cls, pixels: np.ndarray, domain: PixelDomain) -> "Image":
        """커널 출력처럼 불변식이 이미 보장된 배열을 검증 없이 감쌉니다."""
        pixels.flags.writeable = False
        return cls.model_construct(pixels=pixels, domain=domain)

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def channels(self) -> int:
        return int(self.pixels.shape[2])

    @property
    def shape(self) -> tuple:
        return self.pixels.shape

    def flat(self) -> np.ndarray:
        """row-major 1차원 픽셀 배열 (길이 = width * height * channels)"""
        return self.pixels.reshape(-1)

    def channel(self, index: int) -> "Image":
        return Image.trusted(self.pixels[:, :, index:index + 1].copy(), self.domain)

    @classmethod
    def stack(cls, channels: List["Image"]) -> "Image":
        """단일 채널 이미지들을 하나의 다채널 이미지로 합칩니다."""
        arr = np.concatenate([c.pixels for c in channels], axis=2)
        return cls(pixels=arr, domain=channels[0].domain)

    def equals(self, other: "Image") -> bool:
        """픽셀 단위 bit-exact 비교"""
        return (
            self.domain is other.domain
            and self.pixels.shape == other.pixels.shape
            and self.pixels.dtype == other.pixels.dtype
            and np.array_equal(self.pixels, other.pixels)
        )


class AffineParams(BaseModel):
    alpha: float = Field(..., description="Gain (contrast), dimensionless, > 0")
    beta: float = Field(..., description="Bias (brightness) in the image's pixel-domain units")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "AffineParams":
        if not math.isfinite(self.alpha) or self.alpha <= 0:
            raise InvalidParams(f"alpha must be a finite value > 0, got {self.alpha}")
        if not math.isfinite(self.beta):
            raise DomainMismatch(f"beta must be finite, got {self.beta}")
        return self


class GammaParams(BaseModel):
    gamma: float = Field(..., description="Power-law exponent, > 0")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "GammaParams":
        if not math.isfinite(self.gamma) or self.gamma <= 0:
            raise InvalidParams(f"gamma must be a finite value > 0, got {self.gamma}")
        return self

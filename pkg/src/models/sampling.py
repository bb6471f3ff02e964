from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.enhancement.errors import InvalidRange

UINT64_MAX = 2 ** 64 - 1


class ParamSetMeta(BaseModel):
    alpha_start: float
    alpha_end: float
    beta_start: float
    beta_end: float
    step: float

    model_config = ConfigDict(frozen=True)


class ParamSet(BaseModel):
    """α / β 후보 집합 (오름차순, 중복 없음, 양 끝점 포함)"""

    alphas: Tuple[float, ...] = Field(..., description="Candidate gains, strictly increasing, all > 0")
    betas: Tuple[float, ...] = Field(..., description="Candidate biases, strictly increasing")
    meta: ParamSetMeta = Field(..., description="Construction range and step")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "ParamSet":
        for name, values, start, end in (
            ("alphas", self.alphas, self.meta.alpha_start, self.meta.alpha_end),
            ("betas", self.betas, self.meta.beta_start, self.meta.beta_end),
        ):
            if not values:
                raise InvalidRange(f"{name} must not be empty")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise InvalidRange(f"{name} must be strictly increasing: {values}")
            if not np.isclose(values[0], start) or not np.isclose(values[-1], end):
                raise InvalidRange(f"{name} must start at {start} and end at {end}: {values}")
        if self.alphas[0] <= 0:
            raise InvalidRange(f"every alpha must be > 0: {self.alphas}")
        return self


class RngStream(BaseModel):
    """
    이미지 1장당 하나의 난수 스트림

    (master_seed, stream_index) 쌍이 Philox 의 key / counter 상위 워드를 결정하므로
    호출 순서나 스레드 배정과 무관하게 같은 수열을 재현합니다.
    """

    master_seed: int = Field(..., ge=0, le=UINT64_MAX, description="Run-wide seed")
    stream_index: int = Field(..., ge=0, le=UINT64_MAX, description="Per-image stream index")

    model_config = ConfigDict(frozen=True)

    def generator(self) -> np.random.Generator:
        bit_generator = np.random.Philox(key=self.master_seed, counter=self.stream_index << 192)
        return np.random.Generator(bit_generator)

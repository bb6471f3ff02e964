from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from src.enhancement.errors import InvalidParams
from src.models.image import AffineParams, GammaParams, PixelDomain
from src.models.sampling import UINT64_MAX, ParamSet


class EnhanceMode(str, Enum):
    RANDOM_AFFINE = "random"
    FIXED_AFFINE = "fixed"
    HIST_EQ = "histeq"
    GAMMA = "gamma"
    ADAPTIVE_GAMMA = "adaptive-gamma"
    STRETCH = "stretch"


# [설정] 보정 실행 설정 -> --dump-config / --config 로 JSON 왕복
class EnhanceConfig(BaseModel):
    mode: EnhanceMode = Field(EnhanceMode.RANDOM_AFFINE, description="Enhancement method")
    affine: Optional[AffineParams] = Field(None, description="Gain/bias for fixed mode")
    gamma: Optional[GammaParams] = Field(None, description="Exponent for gamma mode")
    param_set: Optional[ParamSet] = Field(None, description="Candidate sets for random mode")
    domain: PixelDomain = Field(PixelDomain.BYTE255, description="Pixel domain the kernel runs in")
    master_seed: int = Field(0, ge=0, le=UINT64_MAX, description="Seed for per-image streams")
    batch_size: int = Field(16, ge=1, description="Images per batch (reporting granularity only)")
    workers: int = Field(1, ge=1, description="Worker pool size")

    @model_validator(mode="after")
    def _check_mode_payload(self) -> "EnhanceConfig":
        if self.mode is EnhanceMode.RANDOM_AFFINE and self.param_set is None:
            raise InvalidParams("random mode requires a param_set")
        if self.mode is EnhanceMode.FIXED_AFFINE and self.affine is None:
            raise InvalidParams("fixed mode requires affine params (alpha, beta)")
        if self.mode is EnhanceMode.GAMMA and self.gamma is None:
            raise InvalidParams("gamma mode requires a gamma value")
        return self


class ImageParamRecord(BaseModel):
    image_index: int
    alpha: float
    beta: float


class FailureRecord(BaseModel):
    path: str = Field(..., description="Relative path, or '#<index>' for in-memory batches")
    error: str = Field(..., description="Exception type and message")


class EnhanceReport(BaseModel):
    images_processed: int = Field(0, description="Successfully enhanced images")
    wall_time: float = Field(0.0, description="Seconds")
    throughput: float = Field(0.0, description="images_processed / wall_time")
    per_image_params: List[ImageParamRecord] = Field(default_factory=list)
    failures: List[FailureRecord] = Field(default_factory=list)

    def finalize(self, wall_time: float) -> "EnhanceReport":
        self.wall_time = wall_time
        self.throughput = self.images_processed / wall_time if wall_time > 0 else 0.0
        return self

    def get_summary(self) -> str:
        return (
            f"processed={self.images_processed} "
            f"failed={len(self.failures)} "
            f"wall={self.wall_time:.3f}s "
            f"throughput={self.throughput:.1f} img/s"
        )

from pydantic import BaseModel, Field


class ImageStats(BaseModel):
    mean_brightness: float = Field(..., description="Arithmetic mean in domain units")
    rms_contrast: float = Field(..., ge=0, description="Population standard deviation")
    entropy: float = Field(..., ge=0, le=8, description="Shannon entropy of the 256-bin histogram (bits)")


class MetricsDelta(BaseModel):
    before: ImageStats
    after: ImageStats
    brightness_gain: float = Field(..., description="after.mean_brightness - before.mean_brightness")
    contrast_gain: float = Field(..., description="after.rms_contrast - before.rms_contrast")


# [Sweep] (α, β) 격자 한 칸의 결과
class SweepCell(BaseModel):
    alpha: float
    beta: float
    delta: MetricsDelta

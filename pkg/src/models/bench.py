from typing import Tuple

from pydantic import BaseModel, Field


class BenchResult(BaseModel):
    method: str = Field(..., description="Enhancement mode name")
    images: int = Field(..., description="Images per timed pass")
    total_seconds: float = Field(..., description="Median wall time of the timed passes")
    images_per_second: float = Field(..., description="images / total_seconds")
    per_image_micros: Tuple[float, float, float] = Field(..., description="(p50, p95, max) microseconds")

    @classmethod
    def csv_header(cls) -> str:
        return "method,images,total_seconds,images_per_second,p50_us,p95_us,max_us"

    def to_csv_row(self) -> str:
        p50, p95, p_max = self.per_image_micros
        return (
            f"{self.method},{self.images},{self.total_seconds:.6f},"
            f"{self.images_per_second:.3f},{p50:.3f},{p95:.3f},{p_max:.3f}"
        )

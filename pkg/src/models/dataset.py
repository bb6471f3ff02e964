import math
from enum import Enum
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.enhancement.errors import InvalidRatios, InvalidRange


class Split(str, Enum):
    TRAIN = "train"
    VAL = "val"
    TEST = "test"
    UNASSIGNED = "unassigned"


class ManifestRecord(BaseModel):
    path: str = Field(..., description="Path relative to the dataset root, '/' separated")
    label: str = Field(..., description="Class label (the parent directory name)")
    split: Split = Field(Split.UNASSIGNED, description="Split assignment")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "ManifestRecord":
        if not self.label:
            raise InvalidRange(f"label must not be empty ({self.path})")
        return self


class DatasetManifest(BaseModel):
    records: List[ManifestRecord] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_unique(self) -> "DatasetManifest":
        paths = [r.path for r in self.records]
        if len(set(paths)) != len(paths):
            raise InvalidRange("manifest paths must be unique")
        return self

    def __len__(self) -> int:
        return len(self.records)

    def labels(self) -> List[str]:
        return sorted({r.label for r in self.records})

    def split_counts(self) -> Dict[str, Dict[str, int]]:
        """label -> split -> 개수"""
        counts: Dict[str, Dict[str, int]] = {}
        for r in self.records:
            per_label = counts.setdefault(r.label, {s.value: 0 for s in Split})
            per_label[r.split.value] += 1
        return counts


class SplitRatios(BaseModel):
    train: float = Field(..., description="Train fraction")
    val: float = Field(..., description="Validation fraction")
    test: float = Field(..., description="Test fraction")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "SplitRatios":
        values = (self.train, self.val, self.test)
        if any(not math.isfinite(v) or v < 0 or v > 1 for v in values):
            raise InvalidRatios(f"each ratio must lie in [0, 1]: {values}")
        if abs(sum(values) - 1.0) > 1e-9:
            raise InvalidRatios(f"ratios must sum to 1: {values}")
        return self

    @classmethod
    def parse(cls, text: str) -> "SplitRatios":
        """'0.8,0.1,0.1' 형식 파싱"""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise InvalidRatios(f"expected three comma-separated ratios, got '{text}'")
        try:
            train, val, test = (float(p) for p in parts)
        except ValueError:
            raise InvalidRatios(f"ratios must be numbers: '{text}'")
        return cls(train=train, val=val, test=test)

    def as_tuple(self) -> tuple:
        return self.train, self.val, self.test

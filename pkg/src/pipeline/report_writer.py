"""
보정 결과 sidecar 파일

`index,relative_path,alpha,beta,status` 형식, UTF-8, LF, index 순 정렬.
실행 시각 등 비결정적 값은 기록하지 않으므로 같은 seed 로 재실행하면 바이트 단위로 동일합니다.
"""
import csv
import logging
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel

from src.enhancement.errors import IoError

logger = logging.getLogger(__name__)

SIDECAR_HEADER = ["index", "relative_path", "alpha", "beta", "status"]


class ReportRow(BaseModel):
    index: int
    relative_path: str
    alpha: Optional[float] = None
    beta: Optional[float] = None
    status: str


def write_sidecar(rows: Sequence[ReportRow], path: Path) -> None:
    ordered = sorted(rows, key=lambda r: r.index)
    try:
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SIDECAR_HEADER)
            for r in ordered:
                writer.writerow([
                    r.index,
                    r.relative_path,
                    _fmt(r.alpha),
                    _fmt(r.beta),
                    r.status,
                ])
    except OSError as e:
        raise IoError(f"Cannot write report {path}: {e}") from e

    logger.info(f"Report sidecar written: {path} ({len(ordered)} rows)")


def read_sidecar(path: Path) -> List[ReportRow]:
    with path.open("r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        return [
            ReportRow(
                index=int(row["index"]),
                relative_path=row["relative_path"],
                alpha=float(row["alpha"]) if row["alpha"] else None,
                beta=float(row["beta"]) if row["beta"] else None,
                status=row["status"],
            )
            for row in reader
        ]


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else repr(value)

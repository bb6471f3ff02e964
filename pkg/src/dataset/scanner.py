"""
데이터셋 디렉토리 스캔 및 manifest CSV 입출력

레이아웃: <root>/<label>/<image files>
manifest CSV: 헤더 `path,label,split`, UTF-8, LF
"""
import csv
import logging
from pathlib import Path
from typing import Union

from src.dataset.image_io import is_supported_image
from src.enhancement.errors import DecodeError, IoError
from src.models.dataset import DatasetManifest, ManifestRecord, Split

logger = logging.getLogger(__name__)

MANIFEST_HEADER = ["path", "label", "split"]


def scan_dataset(root: Union[str, Path]) -> DatasetManifest:
    """
    root 바로 아래 디렉토리를 클래스 라벨로 보고 지원 이미지만 수집

    Returns:
        경로 사전순 정렬된 DatasetManifest (split = unassigned)
    """
    root = Path(root)
    if not root.is_dir():
        raise IoError(f"Dataset root is not a readable directory: {root}")

    records = []
    try:
        for label_dir in root.iterdir():
            if not label_dir.is_dir() or label_dir.name.startswith("."):
                continue
            for file_path in label_dir.rglob("*"):
                relative = file_path.relative_to(root)
                # 숨김 디렉토리 / 파일 (.cache, .ipynb_checkpoints 등) 은 어느 깊이에서든 제외
                if any(part.startswith(".") for part in relative.parts):
                    continue
                if file_path.is_file() and is_supported_image(file_path):
                    records.append(ManifestRecord(path=relative.as_posix(), label=label_dir.name))
    except OSError as e:
        raise IoError(f"Cannot scan {root}: {e}") from e

    records.sort(key=lambda r: r.path)
    logger.info(f"Scanned {root}: {len(records)} images, {len({r.label for r in records})} labels")
    return DatasetManifest(records=records)


def write_manifest(manifest: DatasetManifest, path: Union[str, Path]) -> None:
    try:
        with Path(path).open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(MANIFEST_HEADER)
            for r in manifest.records:
                writer.writerow([r.path, r.label, r.split.value])
    except OSError as e:
        raise IoError(f"Cannot write manifest {path}: {e}") from e

    logger.info(f"Manifest written: {path} ({len(manifest)} records)")


def read_manifest(path: Union[str, Path]) -> DatasetManifest:
    try:
        with Path(path).open("r", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise IoError(f"Cannot read manifest {path}: {e}") from e

    if not rows or rows[0] != MANIFEST_HEADER:
        raise DecodeError(f"{path}: manifest header must be {','.join(MANIFEST_HEADER)}")

    records = []
    for line_no, row in enumerate(rows[1:], start=2):
        if len(row) != 3:
            raise DecodeError(f"{path}:{line_no}: expected 3 columns, got {len(row)}")
        try:
            split = Split(row[2])
        except ValueError as e:
            raise DecodeError(f"{path}:{line_no}: unknown split '{row[2]}'") from e
        records.append(ManifestRecord(path=row[0], label=row[1], split=split))

    return DatasetManifest(records=records)

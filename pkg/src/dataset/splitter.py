"""
라벨별 층화(stratified) train/val/test 분할

1. 라벨마다 seed 기반으로 레코드 순서를 섞음 (라벨 전용 스트림)
2. largest-remainder 반올림으로 split 별 개수 결정
3. 샘플이 3개 이상인 라벨은 비율이 0 이 아닌 모든 split 에 최소 1개 배정
"""
import logging
import math
from typing import Dict, List, Tuple

from src.enhancement.errors import AlreadySplit
from src.models.dataset import DatasetManifest, Split, SplitRatios
from src.sampling.param_sampler import derive_stream

logger = logging.getLogger(__name__)

SPLIT_ORDER = (Split.TRAIN, Split.VAL, Split.TEST)


def split_counts(total: int, ratios: SplitRatios) -> Tuple[int, int, int]:
    """
    Args:
        total: 라벨 내 샘플 수
        ratios: train/val/test 비율

    Returns:
        (train, val, test) 개수, 합계 = total
    """
    fractions = ratios.as_tuple()
    quotas = [f * total for f in fractions]
    counts = [int(math.floor(q + 1e-9)) for q in quotas]

    # 남은 개수는 소수부가 큰 split 부터 (동률이면 train, val, test 순)
    remainder = total - sum(counts)
    by_fraction = sorted(range(3), key=lambda i: (-(quotas[i] - counts[i]), i))
    for i in by_fraction[:max(remainder, 0)]:
        counts[i] += 1
    while sum(counts) > total:
        counts[counts.index(max(counts))] -= 1

    if total >= 3:
        for i, fraction in enumerate(fractions):
            if fraction > 0 and counts[i] == 0:
                donor = counts.index(max(counts))
                counts[donor] -= 1
                counts[i] += 1

    return counts[0], counts[1], counts[2]


def stratified_split(manifest: DatasetManifest, ratios: SplitRatios, seed: int) -> DatasetManifest:
    assigned = [r.path for r in manifest.records if r.split is not Split.UNASSIGNED]
    if assigned:
        raise AlreadySplit(f"{len(assigned)} records already have a split (first: {assigned[0]})")

    positions_by_label: Dict[str, List[int]] = {}
    for position, record in enumerate(manifest.records):
        positions_by_label.setdefault(record.label, []).append(position)

    splits: List[Split] = [Split.UNASSIGNED] * len(manifest.records)

    for label_index, label in enumerate(sorted(positions_by_label)):
        positions = positions_by_label[label]
        order = derive_stream(seed, label_index).generator().permutation(len(positions))
        shuffled = [positions[i] for i in order]

        counts = split_counts(len(positions), ratios)
        cursor = 0
        for split, count in zip(SPLIT_ORDER, counts):
            for position in shuffled[cursor:cursor + count]:
                splits[position] = split
            cursor += count

        logger.info(f"Label '{label}': train={counts[0]}, val={counts[1]}, test={counts[2]}")

    records = [r.model_copy(update={"split": s}) for r, s in zip(manifest.records, splits)]
    return DatasetManifest(records=records)

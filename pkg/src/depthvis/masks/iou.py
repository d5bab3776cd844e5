"""Frame- and tube-level IoU primitives.

Two empty masks have IoU 0, not 1; absent frames in a tube act as empty
masks, contributing nothing to either accumulator.
"""

from typing import Optional, Sequence

from depthvis.errors import ShapeMismatch
from depthvis.masks._backend import kernels
from depthvis.masks.types import BinaryMask


def mask_iou(a: BinaryMask, b: BinaryMask) -> float:
    if (a.height, a.width) != (b.height, b.width):
        raise ShapeMismatch(
            f"mask shapes differ: {a.height}x{a.width} vs {b.height}x{b.width}"
        )
    inter, union = kernels.intersect_union(a.data, b.data)
    if union == 0:
        return 0.0
    return inter / union


def tube_iou(
    a: Sequence[Optional[BinaryMask]], b: Sequence[Optional[BinaryMask]]
) -> float:
    if len(a) != len(b):
        raise ShapeMismatch(f"tube lengths differ: {len(a)} vs {len(b)}")
    inter_total = 0
    union_total = 0
    for ma, mb in zip(a, b):
        if ma is None and mb is None:
            continue
        if ma is None:
            union_total += kernels.count_ones(mb.data)
            continue
        if mb is None:
            union_total += kernels.count_ones(ma.data)
            continue
        if (ma.height, ma.width) != (mb.height, mb.width):
            raise ShapeMismatch(
                f"frame shapes differ: {ma.height}x{ma.width} vs {mb.height}x{mb.width}"
            )
        inter, union = kernels.intersect_union(ma.data, mb.data)
        inter_total += inter
        union_total += union
    if union_total == 0:
        return 0.0
    return inter_total / union_total

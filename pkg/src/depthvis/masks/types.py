"""Core mask and track containers used throughout the pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np


class BinaryMask:
    """A height x width mask of strict 0/1 values, stored as uint8."""

    __slots__ = ("data",)

    def __init__(self, data: np.ndarray):
        arr = np.asarray(data)
        if arr.ndim != 2:
            raise ValueError(f"mask must be 2-D, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            arr = arr.astype(np.uint8)
        if arr.size and arr.max() > 1:
            raise ValueError("mask values must be 0 or 1")
        self.data = np.ascontiguousarray(arr)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def area(self) -> int:
        return int(self.data.sum())

    @classmethod
    def zeros(cls, height: int, width: int) -> "BinaryMask":
        return cls(np.zeros((height, width), dtype=np.uint8))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMask):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(
            np.array_equal(self.data, other.data)
        )

    def __repr__(self) -> str:
        return f"BinaryMask({self.height}x{self.width}, area={self.area()})"


@dataclass
class RLE:
    """Uncompressed run-length encoding.

    Runs are column-major over the mask and the first run counts zeros,
    so an all-ones mask starts with a zero-length run.
    """

    size: tuple  # (height, width)
    counts: List[int]

    def to_json(self) -> dict:
        return {"size": [int(self.size[0]), int(self.size[1])], "counts": [int(c) for c in self.counts]}

    @classmethod
    def from_json(cls, obj: dict) -> "RLE":
        return cls(size=(int(obj["size"][0]), int(obj["size"][1])), counts=list(obj["counts"]))


@dataclass
class VideoAnnotation:
    """Ground-truth track: one instance of one category over a whole video."""

    video_id: int
    category_id: int
    instance_id: int
    segmentations: List[Optional[RLE]]


@dataclass
class InstanceTrack:
    """Predicted video-level instance with a stable identity."""

    track_id: int
    category_id: int
    score: float
    masks: List[Optional[BinaryMask]] = field(default_factory=list)

    def __post_init__(self):
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score must lie in [0,1], got {self.score}")


def masks_to_segmentations(masks: Sequence[Optional[BinaryMask]]) -> List[Optional[RLE]]:
    """Encode per-frame masks, mapping absent or empty frames to None."""
    from depthvis.masks.codec import rle_encode

    out: List[Optional[RLE]] = []
    for m in masks:
        if m is None or m.area() == 0:
            out.append(None)
        else:
            out.append(rle_encode(m))
    return out

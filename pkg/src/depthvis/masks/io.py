"""Annotation and prediction file formats.

Annotation file: JSON object with `videos` (id, width, height, length,
file_names), `categories` (id, name) and `annotations` (id, video_id,
category_id, segmentations as RLE-or-null). Prediction file: JSON array
of {video_id, category_id, score, segmentations}.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Optional

from depthvis.masks.types import RLE, VideoAnnotation


def _seg_to_json(seg: Optional[RLE]):
    return None if seg is None else seg.to_json()


def _seg_from_json(obj) -> Optional[RLE]:
    return None if obj is None else RLE.from_json(obj)


def annotations_to_json(
    videos: List[dict], categories: List[dict], annotations: List[VideoAnnotation]
) -> dict:
    return {
        "videos": videos,
        "categories": categories,
        "annotations": [
            {
                "id": ann.instance_id,
                "video_id": ann.video_id,
                "category_id": ann.category_id,
                "segmentations": [_seg_to_json(s) for s in ann.segmentations],
            }
            for ann in annotations
        ],
    }


def annotations_from_json(doc: dict) -> List[VideoAnnotation]:
    return [
        VideoAnnotation(
            video_id=a["video_id"],
            category_id=a["category_id"],
            instance_id=a["id"],
            segmentations=[_seg_from_json(s) for s in a["segmentations"]],
        )
        for a in doc["annotations"]
    ]


def write_annotation_file(path, videos, categories, annotations) -> None:
    doc = annotations_to_json(videos, categories, annotations)
    Path(path).write_text(json.dumps(doc, indent=1, sort_keys=True))


def read_annotation_file(path) -> dict:
    return json.loads(Path(path).read_text())


def write_prediction_file(path, predictions: List[dict]) -> None:
    """Predictions carry already-encoded segmentations (RLE json or None)."""
    Path(path).write_text(json.dumps(predictions, indent=1, sort_keys=True))


def read_prediction_file(path) -> List[dict]:
    return json.loads(Path(path).read_text())

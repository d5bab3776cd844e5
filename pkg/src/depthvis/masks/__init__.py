from depthvis.masks._backend import active_backend
from depthvis.masks.codec import rle_decode, rle_encode
from depthvis.masks.iou import mask_iou, tube_iou
from depthvis.masks.types import RLE, BinaryMask, InstanceTrack, VideoAnnotation, masks_to_segmentations

__all__ = [
    "BinaryMask",
    "RLE",
    "VideoAnnotation",
    "InstanceTrack",
    "rle_encode",
    "rle_decode",
    "mask_iou",
    "tube_iou",
    "masks_to_segmentations",
    "active_backend",
]

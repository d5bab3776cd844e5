"""Run-length codec for binary masks.

Runs are column-major and the first run counts zeros (the uncompressed
COCO convention), so external tooling can read the emitted files.
"""

from depthvis.errors import SizeMismatch
from depthvis.masks._backend import kernels
from depthvis.masks.types import RLE, BinaryMask


def rle_encode(mask: BinaryMask) -> RLE:
    counts = kernels.encode_runs(mask.data)
    return RLE(size=(mask.height, mask.width), counts=[int(c) for c in counts])


def rle_decode(rle: RLE) -> BinaryMask:
    height, width = int(rle.size[0]), int(rle.size[1])
    total = sum(int(c) for c in rle.counts)
    if total != height * width:
        raise SizeMismatch(
            f"run lengths sum to {total}, expected {height * width} for size {rle.size}"
        )
    return BinaryMask(kernels.decode_runs(rle.counts, height, width))

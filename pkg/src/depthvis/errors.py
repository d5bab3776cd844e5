"""Exception hierarchy shared across the package."""


class DepthVisError(Exception):
    """Base class for all package-specific errors."""


class ShapeMismatch(DepthVisError):
    """Operands have incompatible spatial dimensions."""


class SizeMismatch(DepthVisError):
    """RLE run lengths do not cover the declared mask size."""


class InvalidSpec(DepthVisError):
    """Scenario specification is degenerate or inconsistent."""


class NonFiniteDepth(DepthVisError):
    """Depth values contain NaN or Inf."""


class CorruptCache(DepthVisError):
    """Depth cache directory is incomplete or inconsistent with its sidecar."""


class EstimatorFailed(DepthVisError):
    """External depth estimator exited nonzero or produced a malformed cache."""


class BadShape(DepthVisError):
    """Tensor has an unexpected shape for the requested operation."""


class ConfigError(DepthVisError):
    """Model or run configuration violates a structural constraint."""


class VariantMismatch(DepthVisError):
    """Operation requested for a model variant that does not support it."""


class DimensionMismatch(DepthVisError):
    """Embedding dimensions of memory and queries differ."""


class EmptyVideo(DepthVisError):
    """Tracking requested on a video with no frames."""


class NonFiniteCost(DepthVisError):
    """Assignment cost matrix contains NaN or Inf."""


class InsufficientPixels(DepthVisError):
    """Masked loss needs at least two pixels to fit scale and shift."""


class MissingPredecessor(DepthVisError):
    """Training stage requires a checkpoint from the previous stage."""


class StageOrderViolation(DepthVisError):
    """Checkpoint provided as predecessor was produced by the wrong stage."""


class UnknownCategory(DepthVisError):
    """Prediction references a category absent from the ground truth."""


class MissingFrame(DepthVisError):
    """Overlay rendering references a frame file that does not exist."""

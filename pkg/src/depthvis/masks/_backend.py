"""Select the compiled mask kernels when available, numpy otherwise."""

try:
    from depthvis.masks import _speedups as kernels

    BACKEND = "compiled"
except ImportError:  # extension not built; pure install
    from depthvis.masks import _speedups_py as kernels

    BACKEND = "python"


def active_backend() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND

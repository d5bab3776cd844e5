"""Depth-augmented video instance segmentation at desk scale."""

__version__ = "0.1.0"

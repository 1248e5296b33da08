"""2D convex hulls with octagon pre-filtering."""

from octohull._core import classify, generate, heaphull, monotone_chain


def filter_rate(labels):
    """Fraction of points discarded by the filter (label == 0)."""
    import numpy as np

    labels = np.asarray(labels)
    if labels.size == 0:
        raise ValueError("empty label array")
    return float((labels == 0).mean())


__all__ = ["classify", "filter_rate", "generate", "heaphull", "monotone_chain"]

"""Integral image over a binary mask for O(1) rectangle-sum queries."""

from __future__ import annotations

import numpy as np

from .types import IntegralImage


def build_integral(mask: np.ndarray) -> IntegralImage:
    """Cumulative-sum table, one row/column of zeros on top and left."""
    h, w = mask.shape
    table = np.zeros((h + 1, w + 1), dtype=np.int64)
    np.cumsum(np.cumsum(mask, axis=0, dtype=np.int64), axis=1, out=table[1:, 1:])
    return IntegralImage(table)

"""Thick-blob cores: regions fatter than any painted line can be.

Field lines project to thin bands; the ball projects to a disc roughly
twice as wide as a line is thick at the same depth.  Under a pinhole
camera both apparent sizes grow linearly with the image-row distance
from the horizon, so a kernel that grows the same way separates them at
every depth: a k x k box erosion (integral-image based, O(1) per pixel)
keeps only pixels whose whole neighbourhood is white, which no line band
at that depth can satisfy, then a matching dilation restores the blob
extent.  The horizon row is anchored on the detected field boundary.
"""

from __future__ import annotations

import numpy as np

from .integral import build_integral

_K_BASE = 6.0
_K_SLOPE = 0.2          # kernel growth per row below the horizon
_K_STEPS = (7, 11, 17, 25, 35, 45)


def _dilate_band(band: np.ndarray, k: int, h: int, w: int) -> np.ndarray:
    """Box dilation of top-left anchored erosion hits."""
    grid = np.zeros((h, w), dtype=np.int64)
    grid[: band.shape[0], : band.shape[1]] = band
    gt = np.zeros((h + 1, w + 1), dtype=np.int64)
    np.cumsum(np.cumsum(grid, axis=0), axis=1, out=gt[1:, 1:])
    r0 = np.maximum(np.arange(h) - k + 1, 0)
    c0 = np.maximum(np.arange(w) - k + 1, 0)
    r1 = np.minimum(np.arange(h) + 1, h)
    c1 = np.minimum(np.arange(w) + 1, w)
    return (
        gt[np.ix_(r1, c1)] - gt[np.ix_(r0, c1)] - gt[np.ix_(r1, c0)] + gt[np.ix_(r0, c0)]
    ) > 0


def thick_cores(white: np.ndarray, horizon_row: float) -> np.ndarray:
    """Mask of blob interiors too thick to be line paint.

    ``horizon_row`` anchors the depth scale; the top of the detected
    field boundary is a good estimate.
    """
    h, w = white.shape
    r_h = min(max(horizon_row, 0.0), h * 0.75)
    table = build_integral(white).table
    out = np.zeros((h, w), dtype=bool)

    rows = np.arange(h, dtype=np.float64)
    k_of_row = np.clip(_K_BASE + _K_SLOPE * (rows - r_h), _K_STEPS[0], _K_STEPS[-1])

    prev_k = 0
    for k in _K_STEPS:
        if h < k or w < k:
            prev_k = k
            continue
        # rows whose required kernel rounds up to this step
        sel = (k_of_row <= k) & (k_of_row > prev_k)
        prev_k = k
        centre_rows = np.nonzero(sel)[0]
        if centre_rows.shape[0] == 0:
            continue
        tl0 = max(0, int(centre_rows[0]) - k // 2)
        tl1 = max(0, min(h - k + 1, int(centre_rows[-1]) - k // 2 + 1))
        if tl1 <= tl0:
            continue
        sums = table[k:, k:] - table[:-k, k:] - table[k:, :-k] + table[:-k, :-k]
        band = np.zeros_like(sums, dtype=bool)
        band[tl0:tl1, :] = sums[tl0:tl1, :] == k * k
        if band.any():
            out |= _dilate_band(band, k, h, w)
    return out

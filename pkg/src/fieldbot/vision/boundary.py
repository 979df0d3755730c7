"""Field-edge filtering: find the topmost green row per image column."""

from __future__ import annotations

import numpy as np

from ..core import Config
from .types import FieldBoundary, HsvImage


def green_mask(img: HsvImage, cfg: Config) -> np.ndarray:
    h_lo = cfg.f("vision.green_h_min_deg")
    h_hi = cfg.f("vision.green_h_max_deg")
    return (
        (img.h >= h_lo)
        & (img.h <= h_hi)
        & (img.s >= cfg.f("vision.green_s_min"))
        & (img.v >= cfg.f("vision.green_v_min"))
    )


def white_mask(img: HsvImage, cfg: Config) -> np.ndarray:
    return (img.s <= cfg.f("vision.white_s_max")) & (img.v >= cfg.f("vision.white_v_min"))


def field_edge_filter(img: HsvImage, cfg: Config) -> FieldBoundary:
    """Per column, the boundary is the first row starting a run of at
    least ``vision.min_green_run`` green pixels; rows above are masked out.
    Columns with no such run get boundary == height and an empty mask.
    """
    green = green_mask(img, cfg)
    height, width = green.shape
    k = cfg.i("vision.min_green_run")
    rows = np.full(width, height, dtype=np.int32)

    if height >= k:
        # windowed sum of k consecutive rows via one cumulative sum
        csum = np.cumsum(green, axis=0, dtype=np.int32)
        win = csum[k - 1 :, :].copy()
        win[1:, :] -= csum[: height - k, :]
        hit = win == k
        first = np.argmax(hit, axis=0)
        any_hit = hit.any(axis=0)
        rows = np.where(any_hit, first, height).astype(np.int32)

    mask = np.arange(height, dtype=np.int32)[:, None] >= rows[None, :]
    return FieldBoundary(rows=rows, mask=mask)

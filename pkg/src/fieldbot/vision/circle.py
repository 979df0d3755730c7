"""Centre-circle detection from short line remnants.

The short segments left over after long-line filtering are mostly chords
of the centre circle.  An algebraic least-squares circle fit over their
midpoints is accepted when enough midpoints lie on the fitted circle.
"""

from __future__ import annotations

import math

import numpy as np

from ..core import Config
from .types import LineSegment2D


def fit_circle(points: np.ndarray) -> tuple[float, float, float] | None:
    """Algebraic (Kasa) fit: x^2 + y^2 = D x + E y + F."""
    if points.shape[0] < 3:
        return None
    x, y = points[:, 0], points[:, 1]
    a = np.column_stack([x, y, np.ones_like(x)])
    b = x * x + y * y
    try:
        sol, *_ = np.linalg.lstsq(a, b, rcond=None)
    except np.linalg.LinAlgError:
        return None
    d, e, f = sol
    cx, cy = d / 2.0, e / 2.0
    r2 = f + cx * cx + cy * cy
    if not np.isfinite(r2) or r2 <= 0:
        return None
    return (float(cx), float(cy), float(math.sqrt(r2)))


def _near_collinear(points: np.ndarray) -> bool:
    """True when the point scatter is essentially one-dimensional (a
    straight line is the r -> infinity degenerate circle)."""
    centred = points - points.mean(axis=0)
    eig = np.linalg.eigvalsh(centred.T @ centred)
    return eig[1] <= 0 or math.sqrt(max(eig[0], 0.0) / eig[1]) < 0.05


def detect_centre_circle(
    short_segments: list[LineSegment2D], cfg: Config
) -> tuple[float, float, float] | None:
    """Fit over chord midpoints; None when support is insufficient."""
    if len(short_segments) < 3:
        return None
    mids = np.array([s.midpoint for s in short_segments], dtype=np.float64)
    if _near_collinear(mids):
        return None
    fitted = fit_circle(mids)
    if fitted is None:
        return None
    cx, cy, r = fitted
    dist = np.abs(np.hypot(mids[:, 0] - cx, mids[:, 1] - cy) - r)
    support = int((dist <= cfg.f("vision.circle_tol_px")).sum())
    if support < cfg.i("vision.circle_min_support"):
        return None
    return fitted

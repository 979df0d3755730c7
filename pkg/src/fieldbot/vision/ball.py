"""Ball classification over candidate boxes.

Three hard filters decide acceptance: white pixel count, fill ratio and
box area, each against a configured band.  The score grades how central
each value sits in its band and is boosted when the candidate lies close
to the previous detection, but proximity never rescues a failed filter.
"""

from __future__ import annotations

import math

from ..core import Config
from .types import BallDetection, Candidate


def _band_margin(value: float, lo: float, hi: float) -> float:
    """1.0 at band centre, linearly down to 0.0 at either edge."""
    if not (lo <= value <= hi) or hi <= lo:
        return 0.0
    half = (hi - lo) / 2.0
    return min(value - lo, hi - value) / half


def classify_ball(c: Candidate, prev: BallDetection | None, cfg: Config) -> BallDetection | None:
    count_ok = cfg.i("vision.count_min") <= c.white_pixel_count <= cfg.i("vision.count_max")
    ratio_ok = cfg.f("vision.ratio_min") <= c.fill_ratio <= cfg.f("vision.ratio_max")
    area_ok = cfg.i("vision.area_min") <= c.area <= cfg.i("vision.area_max")
    if not (count_ok and ratio_ok and area_ok):
        return None

    score = (
        _band_margin(c.white_pixel_count, cfg.i("vision.count_min"), cfg.i("vision.count_max"))
        * _band_margin(c.fill_ratio, cfg.f("vision.ratio_min"), cfg.f("vision.ratio_max"))
        * _band_margin(c.area, cfg.i("vision.area_min"), cfg.i("vision.area_max"))
    )

    cx, cy = c.centre
    bonus = 1.0
    if prev is not None:
        d = math.hypot(cx - prev.cx, cy - prev.cy)
        bonus += max(0.0, 1.0 - d / cfg.f("vision.track_radius_px"))
    # bonus is in [1, 2]; clamp so the reported score stays a fraction
    score = min(1.0, score * bonus)

    radius = math.sqrt(c.white_pixel_count / math.pi)
    return BallDetection(cx=cx, cy=cy, radius=radius, score=score)

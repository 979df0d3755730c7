"""Image-domain records passed between vision stages."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class CameraFrame:
    """Packed YUYV422 frame (2 bytes per pixel, width must be even)."""

    width: int
    height: int
    data: bytes
    timestamp_ns: int = 0

    def __post_init__(self) -> None:
        if self.width % 2 != 0:
            raise ValueError("frame width must be even for YUYV422")
        expected = self.width * self.height * 2
        if len(self.data) != expected:
            raise ValueError(f"frame buffer is {len(self.data)} bytes, expected {expected}")


@dataclass(frozen=True)
class HsvImage:
    """Per-pixel hue (degrees, [0,360)), saturation and value (fractions)."""

    h: np.ndarray
    s: np.ndarray
    v: np.ndarray

    @property
    def width(self) -> int:
        return self.h.shape[1]

    @property
    def height(self) -> int:
        return self.h.shape[0]


@dataclass(frozen=True)
class FieldBoundary:
    """Per-column topmost field row plus the at-or-below-boundary mask."""

    rows: np.ndarray   # (width,) int, boundary row per column, == height if none
    mask: np.ndarray   # (height, width) bool, True at or below the boundary

    @property
    def width(self) -> int:
        return self.rows.shape[0]


class IntegralImage:
    """(h+1, w+1) cumulative-sum table over a binary mask, 64-bit."""

    __slots__ = ("table", "width", "height")

    def __init__(self, table: np.ndarray):
        self.table = table
        self.height = table.shape[0] - 1
        self.width = table.shape[1] - 1

    def rect_sum(self, x: int, y: int, w: int, h: int) -> int:
        """Pixel count inside [x, x+w) x [y, y+h); four table lookups."""
        t = self.table
        return int(t[y + h, x + w] - t[y, x + w] - t[y + h, x] + t[y, x])


@dataclass(frozen=True)
class Candidate:
    """Axis-aligned proposal box over the white-pixel mask."""

    x: int
    y: int
    w: int
    h: int
    white_pixel_count: int

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def fill_ratio(self) -> float:
        return self.white_pixel_count / self.area if self.area > 0 else 0.0

    @property
    def centre(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)


@dataclass(frozen=True)
class BallDetection:
    cx: float
    cy: float
    radius: float
    score: float


@dataclass(frozen=True)
class LineSegment2D:
    x1: float
    y1: float
    x2: float
    y2: float

    def __post_init__(self) -> None:
        if self.length <= 0:
            raise ValueError("degenerate segment")

    @property
    def length(self) -> float:
        return math.hypot(self.x2 - self.x1, self.y2 - self.y1)

    @property
    def angle(self) -> float:
        """Direction in radians, folded to [0, pi)."""
        a = math.atan2(self.y2 - self.y1, self.x2 - self.x1)
        return a % math.pi

    @property
    def midpoint(self) -> tuple[float, float]:
        return ((self.x1 + self.x2) / 2.0, (self.y1 + self.y2) / 2.0)


@dataclass
class VisionResult:
    """Output of one pipeline run over a single frame."""

    ball: BallDetection | None
    lines: list[LineSegment2D]
    short_segments: list[LineSegment2D]
    circle: tuple[float, float, float] | None   # (cx, cy, radius) in pixels
    boundary: FieldBoundary
    candidates: list[Candidate] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)

"""Planar pose type and angle utilities shared by every module.

Frame conventions used throughout the package:

* field frame: origin at the centre mark, x toward the opponent goal,
  y to the left, theta counter-clockwise, radians.
* robot frame: origin at the robot's ground projection, x forward,
  y left, theta counter-clockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


def normalize_angle(theta: float) -> float:
    """Reduce an angle to the interval (-pi, pi].

    The result is congruent to ``theta`` modulo 2*pi.  Raises
    ``ValueError`` on non-finite input.
    """
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta!r}")
    t = math.fmod(theta, TWO_PI)
    if t <= -math.pi:
        t += TWO_PI
    elif t > math.pi:
        t -= TWO_PI
    return t


@dataclass(frozen=True)
class Pose2D:
    """Planar pose (x, y in metres, theta in radians, normalized)."""

    x: float = 0.0
    y: float = 0.0
    theta: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", normalize_angle(self.theta))

    def compose(self, delta: "Pose2D") -> "Pose2D":
        """Apply a pose increment expressed in this pose's own frame."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        return Pose2D(
            self.x + c * delta.x - s * delta.y,
            self.y + s * delta.x + c * delta.y,
            self.theta + delta.theta,
        )

    def inverse(self) -> "Pose2D":
        c, s = math.cos(self.theta), math.sin(self.theta)
        return Pose2D(-c * self.x - s * self.y, s * self.x - c * self.y, -self.theta)

    def transform_point(self, px: float, py: float) -> tuple[float, float]:
        """Map a point from this pose's local frame into the parent frame."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        return (self.x + c * px - s * py, self.y + s * px + c * py)

    def inverse_transform_point(self, px: float, py: float) -> tuple[float, float]:
        """Map a parent-frame point into this pose's local frame."""
        c, s = math.cos(self.theta), math.sin(self.theta)
        dx, dy = px - self.x, py - self.y
        return (c * dx + s * dy, -s * dx + c * dy)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.theta)

"""Field model: dimensions, painted line segments, centre circle, goals.

Everything is expressed in the field frame (origin at the centre mark,
x toward the opponent goal, y left).  The model doubles as ground truth
for the world simulator and as the landmark map for localisation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import Config

Point = tuple[float, float]
Segment = tuple[Point, Point]


@dataclass(frozen=True)
class FieldModel:
    length_m: float = 9.0
    width_m: float = 6.0
    line_width_m: float = 0.05
    centre_circle_radius_m: float = 0.75
    goal_width_m: float = 2.6
    goal_area_length_m: float = 1.0
    goal_area_width_m: float = 3.0
    line_segments: tuple[Segment, ...] = field(default=(), compare=False)
    goal_posts: tuple[Point, Point, Point, Point] = field(
        default=((0, 0), (0, 0), (0, 0), (0, 0)), compare=False
    )

    def __post_init__(self) -> None:
        dims = (
            self.length_m,
            self.width_m,
            self.line_width_m,
            self.centre_circle_radius_m,
            self.goal_width_m,
            self.goal_area_length_m,
            self.goal_area_width_m,
        )
        if any(d <= 0 for d in dims):
            raise ValueError("all field dimensions must be strictly positive")
        if 2 * self.centre_circle_radius_m >= min(self.length_m, self.width_m):
            raise ValueError("centre circle does not fit inside the field")
        if self.goal_width_m >= self.width_m:
            raise ValueError("goal wider than the field")
        if self.goal_area_width_m >= self.width_m or self.goal_area_length_m >= self.length_m / 2:
            raise ValueError("goal area does not fit inside the field")
        object.__setattr__(self, "line_segments", self._build_lines())
        object.__setattr__(self, "goal_posts", self._build_posts())

    def _build_lines(self) -> tuple[Segment, ...]:
        hl, hw = self.length_m / 2, self.width_m / 2
        ga, gw = self.goal_area_length_m, self.goal_area_width_m / 2
        segs: list[Segment] = [
            ((-hl, hw), (hl, hw)),      # left touchline
            ((-hl, -hw), (hl, -hw)),    # right touchline
            ((-hl, -hw), (-hl, hw)),    # own goal line
            ((hl, -hw), (hl, hw)),      # opponent goal line
            ((0.0, -hw), (0.0, hw)),    # halfway line
        ]
        for sx in (-1.0, 1.0):  # goal areas at both ends
            x_goal, x_front = sx * hl, sx * (hl - ga)
            segs.append(((x_front, -gw), (x_front, gw)))
            segs.append(((x_goal, -gw), (x_front, -gw)))
            segs.append(((x_goal, gw), (x_front, gw)))
        return tuple(segs)

    def _build_posts(self) -> tuple[Point, Point, Point, Point]:
        hl, g = self.length_m / 2, self.goal_width_m / 2
        return ((hl, g), (hl, -g), (-hl, g), (-hl, -g))

    # queries -----------------------------------------------------------
    def contains(self, x: float, y: float, margin: float = 0.0) -> bool:
        return abs(x) <= self.length_m / 2 + margin and abs(y) <= self.width_m / 2 + margin

    def opponent_goal_centre(self) -> Point:
        return (self.length_m / 2, 0.0)

    def describe(self) -> str:
        """Human-readable dump used by the CLI."""
        lines = [
            f"field {self.length_m} x {self.width_m} m, lines {self.line_width_m} m wide",
            f"centre circle radius {self.centre_circle_radius_m} m",
            f"goal width {self.goal_width_m} m, goal area "
            f"{self.goal_area_length_m} x {self.goal_area_width_m} m",
            f"{len(self.line_segments)} line segments:",
        ]
        for (a, b) in self.line_segments:
            lines.append(f"  ({a[0]:+.2f},{a[1]:+.2f}) -> ({b[0]:+.2f},{b[1]:+.2f})")
        lines.append("goal posts: " + ", ".join(f"({p[0]:+.2f},{p[1]:+.2f})" for p in self.goal_posts))
        return "\n".join(lines)

    @classmethod
    def from_config(cls, cfg: Config) -> "FieldModel":
        return cls(
            length_m=cfg.f("field.length_m"),
            width_m=cfg.f("field.width_m"),
            line_width_m=cfg.f("field.line_width_m"),
            centre_circle_radius_m=cfg.f("field.centre_circle_radius_m"),
            goal_width_m=cfg.f("field.goal_width_m"),
            goal_area_length_m=cfg.f("field.goal_area_length_m"),
            goal_area_width_m=cfg.f("field.goal_area_width_m"),
        )

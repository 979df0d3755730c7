"""Cooperative localisation: confidence-weighted field-symmetry breaking.

A symmetric field admits two pose hypotheses: the current belief and its
180-degree rotation about the centre mark.  Teammates report where they
see the ball in field coordinates; our own ball sighting, mapped through
each hypothesis, either agrees with them or agrees with their mirror.
When the mirrored hypothesis wins by a clear ratio the belief is rotated
onto it and its confidence docked; otherwise confidence is nudged toward
the weighted agreement with the team.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ..core import Config, Pose2D
from .ekf import BeliefState


@dataclass(frozen=True)
class TeammateReport:
    robot_id: int
    pose: Pose2D
    confidence: float
    ball_field: tuple[float, float] | None
    age_s: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError("report confidence outside [0,1]")
        if self.age_s < 0:
            raise ValueError("report age must be >= 0")


def mirror_pose(p: Pose2D) -> Pose2D:
    """The field-symmetric twin of a pose (180-degree rotation)."""
    return Pose2D(-p.x, -p.y, p.theta + math.pi)


def _agreement(ball: tuple[float, float], reports: list[TeammateReport], sigma: float) -> float:
    total = 0.0
    for rep in reports:
        bx, by = rep.ball_field  # type: ignore[misc]
        d2 = (bx - ball[0]) ** 2 + (by - ball[1]) ** 2
        total += rep.confidence * math.exp(-d2 / (2.0 * sigma * sigma))
    return total


def fuse_team(
    belief: BeliefState,
    reports: list[TeammateReport],
    cfg: Config,
    own_ball_field: tuple[float, float] | None = None,
) -> BeliefState:
    """Evaluate the two symmetric hypotheses against teammate ball sightings.

    ``own_ball_field`` is our own ball estimate under the *current* belief;
    under the mirrored hypothesis it mirrors with us.  Reports must already
    be filtered to ``net.max_report_age_s``.  With no usable reports (or
    all-zero confidences, or no own sighting) the belief is returned
    untouched.
    """
    usable = [r for r in reports if r.ball_field is not None and r.confidence > 0.0]
    weight_sum = sum(r.confidence for r in usable)
    if not usable or weight_sum <= 0.0 or own_ball_field is None:
        return belief

    sigma = cfg.f("ekf.ball_agree_sigma_m")
    score_cur = _agreement(own_ball_field, usable, sigma)
    mirrored_ball = (-own_ball_field[0], -own_ball_field[1])
    score_mir = _agreement(mirrored_ball, usable, sigma)

    if score_mir > cfg.f("ekf.flip_ratio") * score_cur and score_mir > 0.0:
        j = np.diag([-1.0, -1.0, 1.0])
        return replace(
            belief,
            mean=mirror_pose(belief.mean),
            cov=j @ belief.cov @ j.T,
            confidence=max(0.0, belief.confidence - cfg.f("ekf.flip_penalty")),
        )

    agreement = score_cur / weight_sum
    blended = belief.confidence + cfg.f("ekf.conf_blend") * (agreement - belief.confidence)
    return replace(belief, confidence=min(1.0, max(0.0, blended)))

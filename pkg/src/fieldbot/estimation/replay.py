"""Offline localisation replay over a JSONL log.

Each input line is one step::

    {"dt": 0.033, "odom": [dx, dy, dtheta],
     "heading": 0.12 | null,
     "lines": [[[x1,y1],[x2,y2]], ...],          # robot frame, metres
     "reports": [{"robot_id": 2, "pose": [x,y,th], "confidence": 0.8,
                  "ball": [bx,by] | null, "age_s": 0.4}, ...],
     "own_ball": [bx, by] | null,
     "reset_kickoff": true | absent}

The output is one line per step: {"mean": [x,y,th], "cov": [9 floats],
"confidence": c}.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from ..core import Config, FieldModel, Pose2D
from ..vision.types import LineSegment2D
from .ekf import BeliefState, ekf_predict, ekf_update_heading, ekf_update_lines, reset_kickoff
from .team import TeammateReport, fuse_team


def _parse_reports(raw: list[dict], max_age: float) -> list[TeammateReport]:
    out = []
    for rep in raw:
        age = float(rep.get("age_s", 0.0))
        if age >= max_age:
            continue
        ball = rep.get("ball")
        out.append(
            TeammateReport(
                robot_id=int(rep["robot_id"]),
                pose=Pose2D(*rep["pose"]),
                confidence=float(rep["confidence"]),
                ball_field=None if ball is None else (float(ball[0]), float(ball[1])),
                age_s=age,
            )
        )
    return out


def replay_steps(
    lines: Iterable[str], cfg: Config, field: FieldModel | None = None
) -> Iterator[dict]:
    field = field or FieldModel.from_config(cfg)
    belief = BeliefState.initial(cfg)
    max_age = cfg.f("net.max_report_age_s")

    for line in lines:
        line = line.strip()
        if not line:
            continue
        step = json.loads(line)
        if step.get("reset_kickoff"):
            belief = reset_kickoff(cfg)
        dt = float(step.get("dt", 1.0 / 30.0))
        odom = step.get("odom")
        if odom is not None:
            belief = ekf_predict(belief, Pose2D(*odom), dt, cfg)
        heading = step.get("heading")
        if heading is not None:
            belief = ekf_update_heading(belief, float(heading), cfg)
        obs = [
            LineSegment2D(p1[0], p1[1], p2[0], p2[1])
            for p1, p2 in step.get("lines", [])
        ]
        if obs:
            belief = ekf_update_lines(belief, obs, field, cfg)
        reports = _parse_reports(step.get("reports", []), max_age)
        own_ball = step.get("own_ball")
        if reports:
            belief = fuse_team(
                belief,
                reports,
                cfg,
                None if own_ball is None else (float(own_ball[0]), float(own_ball[1])),
            )
        yield {
            "mean": [belief.mean.x, belief.mean.y, belief.mean.theta],
            "cov": [float(v) for v in belief.cov.ravel()],
            "confidence": belief.confidence,
        }

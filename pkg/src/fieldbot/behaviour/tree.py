"""Gameplay decision tree: one Action per tick, fixed priority order.

Priorities, highest first: fall handling, game state (non-playing phases
and penalties), then ball play: find the ball, approach it, find the
goal, align, kick.  The tree is a total, pure function of its inputs;
identical snapshots always yield identical actions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..core import Config
from ..estimation.ekf import BeliefState
from ..estimation.fall import FallPhase, FallState
from ..netcomm.protocol import GamePhase
from .game import GameState


class ActionKind(enum.Enum):
    STAND = "stand"
    FIND_BALL = "find_ball"
    APPROACH_BALL = "approach_ball"
    FIND_GOAL = "find_goal"
    ALIGN_TO_GOAL = "align_to_goal"
    KICK = "kick"
    GAME_LOGIC_IDLE = "game_logic_idle"
    GET_UP = "get_up"
    BRACE = "brace"


_NO_WALK_KINDS = frozenset(
    {ActionKind.STAND, ActionKind.KICK, ActionKind.GET_UP, ActionKind.BRACE}
)

# head patterns executed by the hardware loop
HEAD_HOLD = "hold"
HEAD_TRACK = "track"
HEAD_SCAN_BALL = "scan_ball"
HEAD_SCAN_GOAL = "scan_goal"


@dataclass(frozen=True)
class Action:
    kind: ActionKind
    walk: tuple[float, float, float] | None = None   # (step, lateral, turn)
    head: str = HEAD_HOLD
    head_target: tuple[float, float] | None = None   # (pan, tilt) for "track"

    def __post_init__(self) -> None:
        if self.kind in _NO_WALK_KINDS and self.walk is not None:
            raise ValueError(f"{self.kind} must not carry a walk command")


@dataclass(frozen=True)
class WorldSnapshot:
    belief: BeliefState
    ball_field: tuple[float, float] | None
    ball_age_s: float
    goal_bearing: float | None
    goal_age_s: float
    fall: FallState


def _fresh(age: float, limit: float) -> bool:
    return math.isfinite(age) and 0.0 <= age < limit


def _clamp(v: float, limit: float) -> float:
    return max(-limit, min(limit, v))


def tick(snapshot: WorldSnapshot, game: GameState, cfg: Config) -> Action:
    # fall handling beats everything
    fall = snapshot.fall.state
    if fall is FallPhase.BRACING:
        return Action(ActionKind.BRACE)
    if fall in (FallPhase.FALLEN_FRONT, FallPhase.FALLEN_BACK, FallPhase.GETTING_UP):
        return Action(ActionKind.GET_UP)
    if fall is FallPhase.CORRECTING:
        return Action(ActionKind.STAND)

    if game.penalized:
        return Action(ActionKind.STAND)
    if game.phase is not GamePhase.PLAYING:
        return Action(ActionKind.GAME_LOGIC_IDLE)

    lost_after = cfg.f("behaviour.lost_after_s")
    max_step = cfg.f("walk.max_step_m")
    max_turn = cfg.f("walk.max_turn_rad")

    ball = snapshot.ball_field
    ball_ok = (
        ball is not None
        and _fresh(snapshot.ball_age_s, lost_after)
        and math.isfinite(ball[0])
        and math.isfinite(ball[1])
    )
    if not ball_ok:
        return Action(
            ActionKind.FIND_BALL,
            walk=(0.0, 0.0, cfg.f("behaviour.find_turn_rad")),
            head=HEAD_SCAN_BALL,
        )

    bx, by = snapshot.belief.mean.inverse_transform_point(ball[0], ball[1])
    dist = math.hypot(bx, by)
    bearing = math.atan2(by, bx)
    tilt = cfg.f("agent.head_tilt_rad")

    if not math.isfinite(dist) or dist > cfg.f("behaviour.near_dist_m"):
        step = _clamp(cfg.f("behaviour.approach_step_gain") * dist, max_step)
        step *= max(0.0, math.cos(bearing))   # don't drive forward while facing away
        turn = _clamp(cfg.f("behaviour.approach_turn_gain") * bearing, max_turn)
        if not (math.isfinite(step) and math.isfinite(turn)):
            step, turn = 0.0, 0.0
        return Action(
            ActionKind.APPROACH_BALL,
            walk=(step, 0.0, turn),
            head=HEAD_TRACK,
            head_target=(bearing, tilt),
        )

    goal_ok = snapshot.goal_bearing is not None and _fresh(snapshot.goal_age_s, lost_after)
    if not goal_ok:
        return Action(
            ActionKind.FIND_GOAL,
            walk=(0.0, 0.0, _clamp(0.5 * bearing, max_turn)),
            head=HEAD_SCAN_GOAL,
        )

    gb = snapshot.goal_bearing
    aligned = (
        abs(gb) < cfg.f("behaviour.align_tol_rad")
        and _fresh(snapshot.goal_age_s, cfg.f("behaviour.fresh_s"))
    )
    if aligned:
        return Action(ActionKind.KICK, head=HEAD_TRACK, head_target=(bearing, tilt))

    # orbit the ball until the goal lines up
    turn = _clamp(0.8 * gb, max_turn)
    lateral = _clamp(-0.3 * gb * cfg.f("behaviour.near_dist_m"), 0.03)
    if not (math.isfinite(turn) and math.isfinite(lateral)):
        turn, lateral = 0.0, 0.0
    return Action(
        ActionKind.ALIGN_TO_GOAL,
        walk=(0.0, lateral, turn),
        head=HEAD_TRACK,
        head_target=(bearing, tilt),
    )

"""Self-localisation, ball tracking, team fusion and fall detection."""

from .ball_filter import BallFilter
from .ekf import (
    BeliefState,
    ekf_predict,
    ekf_update_heading,
    ekf_update_lines,
    hesse_form,
    motion_jacobian,
    predict_line,
    reset_kickoff,
)
from .fall import (
    ACTION_BRACE,
    ACTION_CORRECT,
    ACTION_GETUP_BACK,
    ACTION_GETUP_FRONT,
    ACTION_NONE,
    FallPhase,
    FallState,
    fall_step,
)
from .replay import replay_steps
from .team import TeammateReport, fuse_team, mirror_pose

__all__ = [
    "ACTION_BRACE",
    "ACTION_CORRECT",
    "ACTION_GETUP_BACK",
    "ACTION_GETUP_FRONT",
    "ACTION_NONE",
    "BallFilter",
    "BeliefState",
    "FallPhase",
    "FallState",
    "TeammateReport",
    "ekf_predict",
    "ekf_update_heading",
    "ekf_update_lines",
    "fall_step",
    "fuse_team",
    "hesse_form",
    "mirror_pose",
    "motion_jacobian",
    "predict_line",
    "replay_steps",
    "reset_kickoff",
]

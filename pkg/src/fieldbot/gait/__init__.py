"""Walk engine, leg kinematics, balance offsets and scripted motions."""

from .balance import BalanceState, ImuSample, balance_offsets, tilt_from_accel
from .engine import GaitPhase, WalkParams, foot_targets, walk_tick
from .kinematics import (
    FootPose,
    GaitError,
    JointLimitError,
    UnreachableError,
    leg_fk,
    leg_ik,
)
from .motions import MOTION_NAMES, Motion, get_motion, parse_motion, play_motion

__all__ = [
    "BalanceState",
    "FootPose",
    "GaitError",
    "GaitPhase",
    "ImuSample",
    "JointLimitError",
    "MOTION_NAMES",
    "Motion",
    "UnreachableError",
    "WalkParams",
    "balance_offsets",
    "foot_targets",
    "get_motion",
    "leg_fk",
    "leg_ik",
    "parse_motion",
    "play_motion",
    "tilt_from_accel",
    "walk_tick",
]

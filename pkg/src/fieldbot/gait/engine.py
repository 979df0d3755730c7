"""Parameterised oscillatory walk: Cartesian foot trajectories solved
through the leg inverse kinematics every tick.

One gait cycle (phase 0..1) holds two steps.  Each foot follows the same
scalar trajectory half a cycle apart: a stance interval, during which the
foot translates backward under the torso at constant velocity with height
exactly zero, and a swing interval shaped by a cubic Hermite curve whose
endpoint velocities match the stance velocity, so every joint trajectory
is velocity-continuous.  The torso sways laterally once per cycle, away
from whichever foot is in the air.

Odometry is the commanded displacement: a full cycle with constant
parameters advances the body by exactly (2*step, 2*lateral, 2*turn).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from ..core import Config, JointModel, JointTargets, Pose2D
from .kinematics import FootPose, GaitError, UnreachableError, JointLimitError, leg_ik


@dataclass(frozen=True)
class WalkParams:
    frequency_hz: float = 1.5
    step_m: float = 0.0
    lateral_m: float = 0.0
    turn_rad: float = 0.0
    rise_m: float = 0.02
    swing_m: float = 0.01
    support_ratio: float = 0.6
    stance_height_m: float = 0.20
    spread_m: float = 0.01
    trim_offsets: dict[str, float] = field(default_factory=dict)
    enabled: bool = True

    def __post_init__(self) -> None:
        if self.frequency_hz <= 0:
            raise ValueError("frequency_hz must be positive")
        if self.rise_m < 0:
            raise ValueError("rise_m must be non-negative")
        if not (0.5 <= self.support_ratio < 1.0):
            raise ValueError("support_ratio must be in [0.5, 1)")

    @classmethod
    def from_config(cls, cfg: Config) -> "WalkParams":
        return cls(
            frequency_hz=cfg.f("walk.frequency_hz"),
            step_m=cfg.f("walk.step_m"),
            lateral_m=cfg.f("walk.lateral_m"),
            turn_rad=cfg.f("walk.turn_rad"),
            rise_m=cfg.f("walk.rise_m"),
            swing_m=cfg.f("walk.swing_m"),
            support_ratio=cfg.f("walk.support_ratio"),
            stance_height_m=cfg.f("walk.stance_height_m"),
            spread_m=cfg.f("walk.spread_m"),
        )

    def with_command(self, step: float, lateral: float, turn: float) -> "WalkParams":
        return replace(self, step_m=step, lateral_m=lateral, turn_rad=turn)


@dataclass(frozen=True)
class GaitPhase:
    """Position within the two-step cycle; wraps modulo 1."""

    phase: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 1.0)

    def advanced(self, dphase: float) -> "GaitPhase":
        return GaitPhase(self.phase + dphase)


def _hermite(u: float, p0: float, p1: float, m0: float, m1: float) -> float:
    u2, u3 = u * u, u * u * u
    return (
        (2 * u3 - 3 * u2 + 1) * p0
        + (u3 - 2 * u2 + u) * m0
        + (-2 * u3 + 3 * u2) * p1
        + (u3 - u2) * m1
    )


def _axis_trajectory(phi: float, amplitude: float, swing_frac: float) -> float:
    """One foot's oscillation along one axis, as a function of the foot's
    own phase.  Swing on [0, swing_frac): -A -> +A (Hermite, endpoint
    slope matched to stance); stance on [swing_frac, 1): +A -> -A linear.
    """
    if amplitude == 0.0:
        return 0.0
    support = 1.0 - swing_frac
    slope = -2.0 * amplitude / support  # per unit phase, during stance
    if phi < swing_frac:
        u = phi / swing_frac
        return _hermite(u, -amplitude, amplitude, slope * swing_frac, slope * swing_frac)
    return amplitude + slope * (phi - swing_frac)


def _lift(phi: float, rise: float, swing_frac: float) -> float:
    """Foot height: exactly zero during stance, smooth bump in swing."""
    if phi >= swing_frac or rise == 0.0:
        return 0.0
    u = phi / swing_frac
    s = math.sin(math.pi * u)
    return rise * s * s


def foot_targets(params: WalkParams, phase: GaitPhase) -> tuple[FootPose, FootPose]:
    """Cartesian targets (pelvis frame) for the left and right foot."""
    s = params.support_ratio
    d = 1.0 - s
    sway = -params.swing_m * math.cos(2.0 * math.pi * (phase.phase - d / 2.0))

    poses = []
    for side_sign, phi in ((1.0, phase.phase), (-1.0, (phase.phase + 0.5) % 1.0)):
        x = _axis_trajectory(phi, params.step_m * s, d)
        y = _axis_trajectory(phi, params.lateral_m * s, d)
        yaw = _axis_trajectory(phi, params.turn_rad * s, d)
        z = _lift(phi, params.rise_m, d)
        y_nominal = side_sign * (0.0 + params.spread_m)
        poses.append(
            FootPose(
                x=x,
                y=y_nominal + y - sway,
                z=-params.stance_height_m + z,
                roll=0.0,
                pitch=0.0,
                yaw=yaw,
            )
        )
    return poses[0], poses[1]


def _stand_targets(params: WalkParams) -> tuple[FootPose, FootPose]:
    left = FootPose(0.0, params.spread_m, -params.stance_height_m)
    right = FootPose(0.0, -params.spread_m, -params.stance_height_m)
    return left, right


def _solve_targets(
    feet: tuple[FootPose, FootPose], params: WalkParams, model: JointModel, phase_val: float
) -> JointTargets:
    angles: dict[str, float] = {}
    for side, foot in (("l", feet[0]), ("r", feet[1])):
        hip = _hip_relative(foot, side, model)
        try:
            q = leg_ik(hip, side, model)
        except (UnreachableError, JointLimitError) as exc:
            raise GaitError(f"IK failed at phase {phase_val:.3f} ({side} leg): {exc}") from exc
        for name, val in zip(model.leg_joint_names(side), q):
            angles[name] = val
    for name, trim in params.trim_offsets.items():
        if name in angles:
            angles[name] = model.clamp(name, angles[name] + trim)
    stiffness = {name: 1.0 for name in angles}
    return JointTargets(angles=angles, stiffness=stiffness)


def _hip_relative(foot: FootPose, side: str, model: JointModel) -> FootPose:
    """Foot targets are given relative to each hip; shift into pelvis frame."""
    sign = 1.0 if side == "l" else -1.0
    return FootPose(foot.x, foot.y + sign * model.hip_offset_m, foot.z, foot.roll, foot.pitch, foot.yaw)


def walk_tick(
    params: WalkParams,
    phase: GaitPhase,
    dt: float,
    model: JointModel | None = None,
) -> tuple[JointTargets, GaitPhase, Pose2D]:
    """Advance the gait by ``dt`` seconds.

    Returns leg joint targets for the current phase, the next phase, and
    the odometry increment commanded over this tick.
    """
    if not (0.0 < dt <= 0.1):
        raise ValueError(f"dt must be in (0, 0.1], got {dt}")
    model = model or JointModel()

    if not params.enabled:
        targets = _solve_targets(_stand_targets(params), params, model, phase.phase)
        return targets, phase, Pose2D()

    feet = foot_targets(params, phase)
    targets = _solve_targets(feet, params, model, phase.phase)
    dphase = params.frequency_hz * dt
    odom = Pose2D(
        2.0 * params.step_m * dphase,
        2.0 * params.lateral_m * dphase,
        2.0 * params.turn_rad * dphase,
    )
    return targets, phase.advanced(dphase), odom

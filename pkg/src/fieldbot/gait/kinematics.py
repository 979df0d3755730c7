"""Closed-form forward and inverse kinematics for one 6-DoF leg.

Chain (pelvis to sole, all in the body frame: x forward, y left, z up):

    pelvis --(lateral hip offset)--> hip_yaw(z) -> hip_roll(x) ->
    hip_pitch(y) --thigh--> knee_pitch(y) --shank--> ankle_pitch(y) ->
    ankle_roll(x) = foot origin

The foot pose target is the ankle point position plus roll/pitch/yaw
(matrix Rz(yaw) @ Ry(pitch) @ Rx(roll)).  The inverse solution works in
the foot frame: the hip-to-foot vector fixes the knee opening via the
law of cosines and the two ankle angles; what remains of the target
orientation is a Z-X-Y Euler decomposition for the three hip joints.
The knee solution is the non-negative branch (knee vertex forward).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..core import JointModel


class GaitError(Exception):
    """Base error for gait and kinematics failures."""


class UnreachableError(GaitError):
    """Foot target outside the leg's reachable shell."""


class JointLimitError(GaitError):
    """A computed or commanded angle violates the joint model limits."""


@dataclass(frozen=True)
class FootPose:
    """Foot origin position (metres, pelvis frame) and orientation."""

    x: float
    y: float
    z: float
    roll: float = 0.0
    pitch: float = 0.0
    yaw: float = 0.0

    def position(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


def rot_x(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rot_y(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rot_z(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rpy_matrix(roll: float, pitch: float, yaw: float) -> np.ndarray:
    return rot_z(yaw) @ rot_y(pitch) @ rot_x(roll)


def matrix_rpy(R: np.ndarray) -> tuple[float, float, float]:
    pitch = math.asin(max(-1.0, min(1.0, -R[2, 0])))
    roll = math.atan2(R[2, 1], R[2, 2])
    yaw = math.atan2(R[1, 0], R[0, 0])
    return (roll, pitch, yaw)


def _hip_origin(side: str, model: JointModel) -> np.ndarray:
    sign = 1.0 if side == "l" else -1.0
    return np.array([0.0, sign * model.hip_offset_m, 0.0])


def _check_limits(angles: tuple[float, ...], side: str, model: JointModel) -> None:
    for name, q in zip(model.leg_joint_names(side), angles):
        lo, hi = model.limits(name)
        if not (lo - 1e-9 <= q <= hi + 1e-9):
            raise JointLimitError(f"{name}={q:.4f} outside [{lo}, {hi}]")


def leg_fk(angles, side: str, model: JointModel | None = None) -> FootPose:
    """Foot pose from six joint angles (hip yaw/roll/pitch, knee,
    ankle pitch/roll).  Raises on out-of-limit input.
    """
    model = model or _default_model()
    q1, q2, q3, q4, q5, q6 = (float(a) for a in angles)
    _check_limits((q1, q2, q3, q4, q5, q6), side, model)

    a, b = model.thigh_m, model.shank_m
    r_hip = rot_z(q1) @ rot_x(q2) @ rot_y(q3)
    r_shank = r_hip @ rot_y(q4)
    p = _hip_origin(side, model) + r_hip @ np.array([0.0, 0.0, -a]) + r_shank @ np.array([0.0, 0.0, -b])
    r_foot = r_shank @ rot_y(q5) @ rot_x(q6)
    roll, pitch, yaw = matrix_rpy(r_foot)
    return FootPose(float(p[0]), float(p[1]), float(p[2]), roll, pitch, yaw)


def leg_ik(target: FootPose, side: str, model: JointModel | None = None) -> tuple[float, ...]:
    """Six joint angles reaching ``target``; knee angle is non-negative.

    Raises ``UnreachableError`` when the ankle point lies outside the
    [|thigh-shank|, thigh+shank] shell and ``JointLimitError`` when the
    unique closed-form solution violates a joint limit.
    """
    model = model or _default_model()
    pos = target.position()
    if not np.all(np.isfinite(pos)):
        raise UnreachableError("non-finite target position")
    a, b = model.thigh_m, model.shank_m
    r_t = rpy_matrix(target.roll, target.pitch, target.yaw)

    # hip position seen from the foot
    d = r_t.T @ (_hip_origin(side, model) - pos)
    reach = float(np.linalg.norm(d))
    if reach > a + b + 1e-12 or reach < abs(a - b) - 1e-12:
        raise UnreachableError(
            f"target at {reach:.4f} m, reachable shell is [{abs(a - b):.4f}, {a + b:.4f}] m"
        )

    cos_knee = (reach * reach - a * a - b * b) / (2.0 * a * b)
    q4 = math.acos(max(-1.0, min(1.0, cos_knee)))

    q6 = math.atan2(d[1], d[2])
    bx, bz = float(d[0]), math.hypot(float(d[1]), float(d[2]))
    q5 = math.atan2(-bx, bz) - math.atan2(a * math.sin(q4), a * math.cos(q4) + b)

    # remaining rotation belongs to the hip ball joint: Rz(q1) Rx(q2) Ry(q3)
    r_hip = r_t @ rot_x(-q6) @ rot_y(-(q4 + q5))
    q2 = math.asin(max(-1.0, min(1.0, r_hip[2, 1])))
    q1 = math.atan2(-r_hip[0, 1], r_hip[1, 1])
    q3 = math.atan2(-r_hip[2, 0], r_hip[2, 2])

    angles = (q1, q2, q3, q4, q5, q6)
    _check_limits(angles, side, model)
    return angles


_MODEL_CACHE: JointModel | None = None


def _default_model() -> JointModel:
    global _MODEL_CACHE
    if _MODEL_CACHE is None:
        _MODEL_CACHE = JointModel()
    return _MODEL_CACHE

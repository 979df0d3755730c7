"""Joint model for the 20-DoF humanoid and the joint command record.

Sign conventions (single source of truth for IK, simulation and fall
detection; body frame: x forward, y left, z up):

===============  ====  =============================================
joint            axis  positive direction
===============  ====  =============================================
*_hip_yaw        z     toes turn left
*_hip_roll       x     leg swings left (lean right)
*_hip_pitch      y     thigh swings backward (torso tips forward)
*_knee_pitch     y     knee flexes (heel toward body); >= 0 always
*_ankle_pitch    y     toes drop
*_ankle_roll     x     sole tilts left edge down
*_shoulder_pitch y     arm swings backward
*_shoulder_roll  x     arm swings outward (left arm: +, right arm: -)
*_elbow_pitch    y     elbow extends backward (flexion is negative)
head_yaw         z     look left
head_pitch       y     look down
===============  ====  =============================================

Per leg: 3 hip + 1 knee + 2 ankle = 6 joints (12 in the legs); per arm:
2 shoulder + 1 elbow; 2 in the neck.  Total 20.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Joint:
    name: str
    axis: str           # "x" (roll), "y" (pitch) or "z" (yaw)
    parent: str         # parent link name
    link_m: float       # length of the link from the parent joint to this one
    lo: float           # lower angle limit, radians
    hi: float           # upper angle limit, radians

    def __post_init__(self) -> None:
        if self.axis not in ("x", "y", "z"):
            raise ValueError(f"bad axis {self.axis!r} for joint {self.name}")
        if not self.lo < self.hi:
            raise ValueError(f"joint {self.name}: limits must satisfy lo < hi")


def _leg(side: str, sign: float, thigh: float, shank: float, hip_off: float) -> list[Joint]:
    p = f"{side}_"
    return [
        Joint(p + "hip_yaw", "z", "pelvis", hip_off, -0.8, 0.8),
        Joint(p + "hip_roll", "x", p + "hip_yaw", 0.0, -0.8, 0.8),
        Joint(p + "hip_pitch", "y", p + "hip_roll", 0.0, -1.8, 0.7),
        Joint(p + "knee_pitch", "y", p + "hip_pitch", thigh, 0.0, 2.6),
        Joint(p + "ankle_pitch", "y", p + "knee_pitch", shank, -1.4, 1.0),
        Joint(p + "ankle_roll", "x", p + "ankle_pitch", 0.0, -0.8, 0.8),
    ]


def _arm(side: str, sign: float) -> list[Joint]:
    p = f"{side}_"
    roll_lo, roll_hi = (-0.3, 1.6) if sign > 0 else (-1.6, 0.3)
    return [
        Joint(p + "shoulder_pitch", "y", "torso", 0.06, -3.0, 3.0),
        Joint(p + "shoulder_roll", "x", p + "shoulder_pitch", 0.0, roll_lo, roll_hi),
        Joint(p + "elbow_pitch", "y", p + "shoulder_roll", 0.09, -2.3, 0.1),
    ]


@dataclass(frozen=True)
class JointModel:
    """Ordered 20-joint kinematic description."""

    thigh_m: float = 0.11
    shank_m: float = 0.11
    hip_offset_m: float = 0.035
    joints: tuple[Joint, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if min(self.thigh_m, self.shank_m, self.hip_offset_m) <= 0:
            raise ValueError("link lengths must be strictly positive")
        joints = tuple(
            [
                Joint("head_yaw", "z", "torso", 0.05, -2.0, 2.0),
                Joint("head_pitch", "y", "head_yaw", 0.03, -0.6, 0.9),
            ]
            + _arm("l", +1.0)
            + _arm("r", -1.0)
            + _leg("l", +1.0, self.thigh_m, self.shank_m, self.hip_offset_m)
            + _leg("r", -1.0, self.thigh_m, self.shank_m, self.hip_offset_m)
        )
        assert len(joints) == 20
        legs = [j for j in joints if "hip" in j.name or "knee" in j.name or "ankle" in j.name]
        assert len(legs) == 12
        object.__setattr__(self, "joints", joints)

    def names(self) -> tuple[str, ...]:
        return tuple(j.name for j in self.joints)

    def joint(self, name: str) -> Joint:
        for j in self.joints:
            if j.name == name:
                return j
        raise KeyError(name)

    def leg_joint_names(self, side: str) -> tuple[str, ...]:
        order = ("hip_yaw", "hip_roll", "hip_pitch", "knee_pitch", "ankle_pitch", "ankle_roll")
        return tuple(f"{side}_{n}" for n in order)

    def limits(self, name: str) -> tuple[float, float]:
        j = self.joint(name)
        return (j.lo, j.hi)

    def clamp(self, name: str, angle: float) -> float:
        lo, hi = self.limits(name)
        return min(max(angle, lo), hi)

    @classmethod
    def from_config(cls, cfg) -> "JointModel":
        return cls(
            thigh_m=cfg.f("robot.thigh_m"),
            shank_m=cfg.f("robot.shank_m"),
            hip_offset_m=cfg.f("robot.hip_offset_m"),
        )


@dataclass
class JointTargets:
    """Angle and stiffness commands, keyed by joint name.

    A partial map is allowed; unlisted joints hold their previous command.
    Stiffness 0 relaxes the motor entirely (used to brace for a fall).
    """

    angles: dict[str, float] = field(default_factory=dict)
    stiffness: dict[str, float] = field(default_factory=dict)

    def validate(self, model: JointModel) -> None:
        for name, angle in self.angles.items():
            lo, hi = model.limits(name)
            if not (lo - 1e-9 <= angle <= hi + 1e-9):
                raise ValueError(f"{name}={angle:.4f} outside limits [{lo}, {hi}]")
        for name, s in self.stiffness.items():
            if not (0.0 <= s <= 1.0):
                raise ValueError(f"stiffness for {name} must be in [0,1], got {s}")

    def merged_over(self, base: "JointTargets") -> "JointTargets":
        """Overlay this command on top of ``base`` (self wins)."""
        angles = dict(base.angles)
        angles.update(self.angles)
        stiffness = dict(base.stiffness)
        stiffness.update(self.stiffness)
        return JointTargets(angles, stiffness)

    @classmethod
    def relaxed(cls, model: JointModel) -> "JointTargets":
        """All motors limp; angles untouched."""
        return cls(angles={}, stiffness={j.name: 0.0 for j in model.joints})

"""Scripted keyframe motions (kick, get-up sequences, brace).

Motions live in text files under ``fieldbot/gait/motions/`` so sequences
can be edited without touching code.  One line per keyframe::

    t_seconds joint=radians [joint=radians ...] stiffness=<0..1>

Playback interpolates angles and stiffness linearly between keyframes and
holds the final keyframe beyond the end.  A keyframe that names no joints
(the brace) applies its stiffness to every joint of the model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

from ..core import JointModel, JointTargets

MOTION_NAMES = ("kick", "get_up_front", "get_up_back", "brace")


@dataclass(frozen=True)
class Keyframe:
    t: float
    angles: dict[str, float]
    stiffness: float


@dataclass(frozen=True)
class Motion:
    name: str
    keyframes: tuple[Keyframe, ...]

    @property
    def duration(self) -> float:
        return self.keyframes[-1].t

    @property
    def joint_names(self) -> tuple[str, ...]:
        names: set[str] = set()
        for kf in self.keyframes:
            names.update(kf.angles)
        return tuple(sorted(names))


def parse_motion(name: str, text: str, model: JointModel | None = None) -> Motion:
    model = model or _default_model()
    frames: list[Keyframe] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        try:
            t = float(tokens[0])
        except ValueError:
            raise ValueError(f"{name}:{lineno}: first token must be a time") from None
        angles: dict[str, float] = {}
        stiffness = 1.0
        for tok in tokens[1:]:
            key, _, raw = tok.partition("=")
            if not raw:
                raise ValueError(f"{name}:{lineno}: expected key=value, got {tok!r}")
            val = float(raw)
            if key == "stiffness":
                if not 0.0 <= val <= 1.0:
                    raise ValueError(f"{name}:{lineno}: stiffness outside [0,1]")
                stiffness = val
            else:
                lo, hi = model.limits(key)  # raises KeyError on unknown joints
                if not lo <= val <= hi:
                    raise ValueError(f"{name}:{lineno}: {key}={val} outside [{lo},{hi}]")
                angles[key] = val
        if frames and t <= frames[-1].t:
            raise ValueError(f"{name}:{lineno}: keyframe times must increase")
        frames.append(Keyframe(t, angles, stiffness))
    if not frames:
        raise ValueError(f"{name}: motion file has no keyframes")
    return Motion(name, tuple(frames))


_LIBRARY: dict[str, Motion] = {}


def get_motion(name: str) -> Motion:
    if name not in MOTION_NAMES:
        raise KeyError(f"unknown motion {name!r}; available: {MOTION_NAMES}")
    if name not in _LIBRARY:
        text = (resources.files("fieldbot.gait") / "motions" / f"{name}.motion").read_text()
        _LIBRARY[name] = parse_motion(name, text)
    return _LIBRARY[name]


def play_motion(name: str, t: float, model: JointModel | None = None) -> JointTargets:
    """Joint targets for motion ``name`` at time ``t`` since its start."""
    if t < 0 or not math.isfinite(t):
        raise ValueError(f"motion time must be finite and >= 0, got {t}")
    model = model or _default_model()
    motion = get_motion(name)
    frames = motion.keyframes

    if t <= frames[0].t:
        return _targets(frames[0].angles, frames[0].stiffness, model)
    if t >= frames[-1].t:
        return _targets(frames[-1].angles, frames[-1].stiffness, model)

    for prev, nxt in zip(frames, frames[1:]):
        if prev.t <= t <= nxt.t:
            u = (t - prev.t) / (nxt.t - prev.t)
            angles = {}
            for joint in set(prev.angles) | set(nxt.angles):
                a0 = prev.angles.get(joint, nxt.angles[joint])
                a1 = nxt.angles.get(joint, prev.angles[joint])
                angles[joint] = a0 + u * (a1 - a0)
            stiffness = prev.stiffness + u * (nxt.stiffness - prev.stiffness)
            return _targets(angles, stiffness, model)
    raise AssertionError("unreachable")


def _targets(angles: dict[str, float], stiffness: float, model: JointModel) -> JointTargets:
    if angles:
        return JointTargets(angles=dict(angles), stiffness={j: stiffness for j in angles})
    # jointless keyframe: stiffness command for the whole body (brace)
    return JointTargets(angles={}, stiffness={j.name: stiffness for j in model.joints})


_MODEL: JointModel | None = None


def _default_model() -> JointModel:
    global _MODEL
    if _MODEL is None:
        _MODEL = JointModel()
    return _MODEL

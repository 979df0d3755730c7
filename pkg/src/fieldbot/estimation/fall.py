"""Fall detection state machine driven by low-passed IMU tilt.

State graph (tilt = max of |pitch|, |roll| after filtering)::

    Upright    --tilt > correct_rad-------------------> Correcting
    Correcting --tilt < 0.8 * correct_rad-------------> Upright
    Correcting --tilt > brace_rad or rate > brace_rate> Bracing   [brace]
    Bracing    --at rest, after settle_s--------------> FallenFront/Back
    Fallen*    ----------------------------------------> GettingUp [get-up]
    GettingUp  --tilt < 0.5 * correct_rad for stable_s> Upright

The recommended action is edge-triggered for ``brace`` and the get-up
motions (emitted exactly once, on the transition) and level-triggered
for ``apply_correction`` while Correcting.  The step function is pure in
(state, sample, config), so identical traces give identical sequences.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from ..core import Config
from ..gait.balance import ImuSample, tilt_from_accel


class FallPhase(enum.Enum):
    UPRIGHT = "upright"
    CORRECTING = "correcting"
    BRACING = "bracing"
    FALLEN_FRONT = "fallen_front"
    FALLEN_BACK = "fallen_back"
    GETTING_UP = "getting_up"


# recommended actions
ACTION_NONE = "none"
ACTION_CORRECT = "apply_correction"
ACTION_BRACE = "brace"
ACTION_GETUP_FRONT = "play_getup_front"
ACTION_GETUP_BACK = "play_getup_back"


@dataclass(frozen=True)
class FallState:
    state: FallPhase = FallPhase.UPRIGHT
    entered_at_ns: int = 0
    pitch: float = 0.0
    roll: float = 0.0
    last_t_ns: int = -1
    stable_since_ns: int = -1

    @property
    def upright(self) -> bool:
        return self.state is FallPhase.UPRIGHT


def _filtered(fs: FallState, imu: ImuSample, cfg: Config) -> tuple[float, float]:
    acc_pitch, acc_roll = tilt_from_accel(imu.accel)
    if fs.last_t_ns < 0:
        return acc_pitch, acc_roll
    dt = max(0.0, (imu.timestamp_ns - fs.last_t_ns) * 1e-9)
    alpha = math.exp(-dt / cfg.f("fall.lp_tau_s"))
    return (
        alpha * fs.pitch + (1.0 - alpha) * acc_pitch,
        alpha * fs.roll + (1.0 - alpha) * acc_roll,
    )


def fall_step(fs: FallState, imu: ImuSample, cfg: Config) -> tuple[FallState, str]:
    """Advance the machine by one IMU sample; timestamps must be monotonic."""
    t = imu.timestamp_ns
    pitch, roll = _filtered(fs, imu, cfg)
    tilt = max(abs(pitch), abs(roll))
    rate = math.hypot(imu.gyro[0], imu.gyro[1])
    fs = replace(fs, pitch=pitch, roll=roll, last_t_ns=t)

    correct = cfg.f("fall.correct_rad")
    state, action = fs.state, ACTION_NONE

    if state is FallPhase.UPRIGHT:
        if tilt > correct:
            return replace(fs, state=FallPhase.CORRECTING, entered_at_ns=t), ACTION_CORRECT

    elif state is FallPhase.CORRECTING:
        if tilt > cfg.f("fall.brace_rad") or rate > cfg.f("fall.brace_rate"):
            return replace(fs, state=FallPhase.BRACING, entered_at_ns=t), ACTION_BRACE
        if tilt < 0.8 * correct:
            return replace(fs, state=FallPhase.UPRIGHT, entered_at_ns=t), ACTION_NONE
        action = ACTION_CORRECT

    elif state is FallPhase.BRACING:
        settled = (t - fs.entered_at_ns) * 1e-9 >= cfg.f("fall.settle_s")
        accel_mag = math.sqrt(sum(a * a for a in imu.accel))
        at_rest = abs(accel_mag - 9.81) < cfg.f("fall.rest_accel_tol")
        if settled and at_rest:
            down = FallPhase.FALLEN_FRONT if pitch > 0 else FallPhase.FALLEN_BACK
            return replace(fs, state=down, entered_at_ns=t), ACTION_NONE

    elif state is FallPhase.FALLEN_FRONT:
        return replace(fs, state=FallPhase.GETTING_UP, entered_at_ns=t, stable_since_ns=-1), ACTION_GETUP_FRONT

    elif state is FallPhase.FALLEN_BACK:
        return replace(fs, state=FallPhase.GETTING_UP, entered_at_ns=t, stable_since_ns=-1), ACTION_GETUP_BACK

    elif state is FallPhase.GETTING_UP:
        if tilt < 0.5 * correct:
            since = fs.stable_since_ns if fs.stable_since_ns >= 0 else t
            if (t - since) * 1e-9 >= cfg.f("fall.stable_s"):
                return replace(fs, state=FallPhase.UPRIGHT, entered_at_ns=t, stable_since_ns=-1), ACTION_NONE
            return replace(fs, stable_since_ns=since), ACTION_NONE
        return replace(fs, stable_since_ns=-1), ACTION_NONE

    return fs, action

"""IMU-driven balance: complementary tilt filter and trim corrections.

The accelerometer reports the gravity vector in the body frame (upright
and at rest: (0, 0, -9.81)), the gyro reports body rates.  A standard
complementary filter blends integrated gyro rates with the accelerometer
tilt; the filtered pitch/roll produce proportional counter-trims on the
hip and ankle joints, clamped to ``balance.max_trim_rad``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core import Config


@dataclass(frozen=True)
class ImuSample:
    gyro: tuple[float, float, float]    # body rates, rad/s
    accel: tuple[float, float, float]   # gravity vector in body frame, m/s^2
    timestamp_ns: int = 0

    def __post_init__(self) -> None:
        vals = (*self.gyro, *self.accel)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("IMU sample has non-finite components")


def tilt_from_accel(accel: tuple[float, float, float]) -> tuple[float, float]:
    """(pitch, roll) from the measured gravity direction.

    Positive pitch tips the torso forward (gravity acquires +x), positive
    roll tips it left side up (gravity acquires -y).
    """
    ax, ay, az = accel
    pitch = math.atan2(ax, -az) if (ax, az) != (0.0, 0.0) else 0.0
    roll = math.atan2(-ay, -az) if (ay, az) != (0.0, 0.0) else 0.0
    return pitch, roll


@dataclass(frozen=True)
class BalanceState:
    """Complementary-filter memory; start with ``BalanceState.fresh()``."""

    pitch: float = 0.0
    roll: float = 0.0
    timestamp_ns: int = -1

    @classmethod
    def fresh(cls) -> "BalanceState":
        return cls()

    def update(self, imu: ImuSample, cfg: Config) -> "BalanceState":
        acc_pitch, acc_roll = tilt_from_accel(imu.accel)
        if self.timestamp_ns < 0:
            return BalanceState(acc_pitch, acc_roll, imu.timestamp_ns)
        dt = max(0.0, (imu.timestamp_ns - self.timestamp_ns) * 1e-9)
        alpha = cfg.f("balance.comp_alpha")
        pitch = alpha * (self.pitch + imu.gyro[1] * dt) + (1.0 - alpha) * acc_pitch
        roll = alpha * (self.roll + imu.gyro[0] * dt) + (1.0 - alpha) * acc_roll
        return BalanceState(pitch, roll, imu.timestamp_ns)


def balance_offsets(
    imu: ImuSample, cfg: Config, state: BalanceState | None = None
) -> tuple[dict[str, float], BalanceState]:
    """Trim adjustments opposing the current lean.

    Returns the per-joint offsets and the advanced filter state.  With no
    prior state the filter initializes from the accelerometer alone.
    """
    state = (state or BalanceState.fresh()).update(imu, cfg)
    max_trim = cfg.f("balance.max_trim_rad")
    p_corr = _clamp(-cfg.f("balance.pitch_gain") * state.pitch, max_trim)
    r_corr = _clamp(-cfg.f("balance.roll_gain") * state.roll, max_trim)
    offsets = {
        "l_hip_pitch": p_corr,
        "r_hip_pitch": p_corr,
        "l_ankle_pitch": p_corr,
        "r_ankle_pitch": p_corr,
        "l_hip_roll": r_corr,
        "r_hip_roll": r_corr,
        "l_ankle_roll": r_corr,
        "r_ankle_roll": r_corr,
    }
    return offsets, state


def _clamp(v: float, limit: float) -> float:
    return max(-limit, min(limit, v))

"""Constant-velocity Kalman filter tracking the ball in the field frame."""

from __future__ import annotations

import numpy as np

from ..core import Config


class BallFilter:
    """Position + velocity tracker with the usual predict/update split.

    State is (x, y, vx, vy) in field metres.  ``age_s`` counts time since
    the last measurement; callers treat the ball as lost once it exceeds
    their staleness threshold.
    """

    def __init__(self, cfg: Config):
        self.cfg = cfg
        self.x = np.zeros(4)
        self.p = np.diag([25.0, 25.0, 4.0, 4.0])
        self.age_s = float("inf")   # never seen yet

    @property
    def position(self) -> tuple[float, float]:
        return (float(self.x[0]), float(self.x[1]))

    @property
    def velocity(self) -> tuple[float, float]:
        return (float(self.x[2]), float(self.x[3]))

    def predict(self, dt: float) -> None:
        if dt <= 0:
            raise ValueError("dt must be positive")
        f = np.eye(4)
        f[0, 2] = f[1, 3] = dt
        qp, qv = self.cfg.f("ball.q_pos"), self.cfg.f("ball.q_vel")
        q = np.diag([qp, qp, qv, qv]) * dt
        self.x = f @ self.x
        self.p = (f @ self.p @ f.T + q + (f @ self.p @ f.T + q).T) / 2.0
        self.age_s += dt

    def update(self, meas_xy: tuple[float, float]) -> None:
        h = np.zeros((2, 4))
        h[0, 0] = h[1, 1] = 1.0
        r = np.eye(2) * self.cfg.f("ball.r_meas")
        z = np.asarray(meas_xy, dtype=float)
        s = h @ self.p @ h.T + r
        k = self.p @ h.T @ np.linalg.inv(s)
        self.x = self.x + k @ (z - h @ self.x)
        i_kh = np.eye(4) - k @ h
        p = i_kh @ self.p @ i_kh.T + k @ r @ k.T
        self.p = (p + p.T) / 2.0
        self.age_s = 0.0

"""Extended Kalman filter over the planar pose (x, y, theta).

Prediction composes commanded odometry in the robot frame:

    x' = x + dx cos(t) - dy sin(t)
    y' = y + dx sin(t) + dy cos(t)        F = d(motion)/d(state)
    t' = t + dt_theta

Measurements are (a) the integrated-gyro heading, a scalar update on
theta, and (b) field lines in Hesse normal form.  A line with field-frame
parameters (alpha, r) is seen from pose (x, y, theta) as

    distance = | r - x cos(alpha) - y sin(alpha) |
    bearing  = alpha - theta (+ pi when the signed distance is negative)

which is what the vision pipeline measures after projecting observed
segments to the ground plane.  All covariance updates use the Joseph
form and re-symmetrization, keeping the covariance PSD.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ..core import Config, FieldModel, Pose2D, normalize_angle
from ..vision.types import LineSegment2D


@dataclass(frozen=True)
class BeliefState:
    mean: Pose2D
    cov: np.ndarray                 # 3x3, (m^2, m^2, rad^2)
    confidence: float = 0.5
    last_update_ns: int = 0

    def check(self) -> None:
        if self.cov.shape != (3, 3):
            raise ValueError("covariance must be 3x3")
        if not np.allclose(self.cov, self.cov.T, atol=1e-9):
            raise ValueError("covariance must be symmetric")
        eig = np.linalg.eigvalsh(self.cov)
        if eig.min() < -1e-12:
            raise ValueError(f"covariance not PSD, eigenvalues {eig}")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError("confidence outside [0,1]")

    @classmethod
    def initial(cls, cfg: Config, pose: Pose2D | None = None) -> "BeliefState":
        cov = np.diag([1.0, 1.0, 0.5])
        return cls(mean=pose or Pose2D(), cov=cov, confidence=0.1)


def _symmetrize(p: np.ndarray) -> np.ndarray:
    return (p + p.T) / 2.0


def motion_jacobian(theta: float, odom: Pose2D) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [1.0, 0.0, -odom.x * s - odom.y * c],
            [0.0, 1.0, odom.x * c - odom.y * s],
            [0.0, 0.0, 1.0],
        ]
    )


def process_noise(cfg: Config) -> np.ndarray:
    return np.diag([cfg.f("ekf.qx"), cfg.f("ekf.qy"), cfg.f("ekf.qtheta")])


def ekf_predict(belief: BeliefState, odom: Pose2D, dt: float, cfg: Config) -> BeliefState:
    """Propagate the belief through one odometry increment."""
    if dt <= 0:
        raise ValueError("dt must be positive")
    if not all(math.isfinite(v) for v in odom.as_tuple()):
        raise ValueError("non-finite odometry")
    f = motion_jacobian(belief.mean.theta, odom)
    cov = _symmetrize(f @ belief.cov @ f.T + process_noise(cfg) * dt)
    conf = belief.confidence * math.exp(-cfg.f("ekf.conf_decay") * dt)
    return replace(belief, mean=belief.mean.compose(odom), cov=cov, confidence=conf)


def _joseph_update(
    belief: BeliefState, innovation: np.ndarray, h: np.ndarray, r: np.ndarray
) -> BeliefState:
    p = belief.cov
    s = h @ p @ h.T + r
    k = p @ h.T @ np.linalg.inv(s)
    delta = k @ innovation
    mean = Pose2D(belief.mean.x + delta[0], belief.mean.y + delta[1], belief.mean.theta + delta[2])
    i_kh = np.eye(3) - k @ h
    cov = _symmetrize(i_kh @ p @ i_kh.T + k @ r @ k.T)
    return replace(belief, mean=mean, cov=cov)


def ekf_update_heading(belief: BeliefState, measured_heading: float, cfg: Config) -> BeliefState:
    """Scalar update on theta with innovation wrapped to (-pi, pi]."""
    if not math.isfinite(measured_heading):
        raise ValueError("non-finite heading")
    h = np.array([[0.0, 0.0, 1.0]])
    r = np.array([[cfg.f("ekf.heading_var")]])
    nu = np.array([normalize_angle(measured_heading - belief.mean.theta)])
    return _joseph_update(belief, nu, h, r)


def hesse_form(x1: float, y1: float, x2: float, y2: float) -> tuple[float, float]:
    """Canonical Hesse parameters (alpha, r >= 0) of the carrier line."""
    dx, dy = x2 - x1, y2 - y1
    norm = math.hypot(dx, dy)
    nx, ny = -dy / norm, dx / norm
    r = nx * x1 + ny * y1
    if r < 0:
        nx, ny, r = -nx, -ny, -r
    return math.atan2(ny, nx), r


def predict_line(mean: Pose2D, alpha: float, r: float) -> tuple[float, float, float]:
    """Expected (distance, bearing) of a field line plus the sign needed
    by the Jacobian (negative when the robot sits on the far side)."""
    g = r - mean.x * math.cos(alpha) - mean.y * math.sin(alpha)
    sign = 1.0 if g >= 0 else -1.0
    dist = abs(g)
    bearing = normalize_angle(alpha - mean.theta + (0.0 if g >= 0 else math.pi))
    return dist, bearing, sign


def _point_segment_dist(px: float, py: float, seg) -> float:
    (x1, y1), (x2, y2) = seg
    vx, vy = x2 - x1, y2 - y1
    denom = vx * vx + vy * vy
    t = 0.0 if denom == 0 else max(0.0, min(1.0, ((px - x1) * vx + (py - y1) * vy) / denom))
    return math.hypot(px - (x1 + t * vx), py - (y1 + t * vy))


def ekf_update_lines(
    belief: BeliefState,
    observed: list[LineSegment2D],
    field: FieldModel,
    cfg: Config,
) -> BeliefState:
    """Associate robot-frame segments to field lines and update.

    Segments are processed longest first; each is matched to the nearest
    model line inside a distance and angle gate, plus an extent check that
    the observed midpoint falls near the model segment.  Unmatched
    segments are skipped.
    """
    gate_d = cfg.f("ekf.assoc_dist_m")
    gate_a = cfg.f("ekf.assoc_angle_rad")
    r_mat = np.diag([cfg.f("ekf.line_dist_var"), cfg.f("ekf.line_bearing_var")])

    model_lines = [
        (hesse_form(a[0], a[1], b[0], b[1]), (a, b)) for a, b in field.line_segments
    ]

    for seg in sorted(observed, key=lambda s: -s.length):
        obs_alpha, obs_r = hesse_form(seg.x1, seg.y1, seg.x2, seg.y2)
        mx, my = seg.midpoint
        mid_field = belief.mean.transform_point(mx, my)

        best = None
        for (alpha, r), endpoints in model_lines:
            dist, bearing, sign = predict_line(belief.mean, alpha, r)
            dd = obs_r - dist
            da = normalize_angle(obs_alpha - bearing)
            if abs(dd) > gate_d or abs(da) > gate_a:
                continue
            if _point_segment_dist(mid_field[0], mid_field[1], endpoints) > 2.0 * gate_d:
                continue
            score = abs(dd) / gate_d + abs(da) / gate_a
            if best is None or score < best[0]:
                best = (score, dd, da, alpha, sign)
        if best is None:
            continue

        _, dd, da, alpha, sign = best
        h = np.array(
            [
                [-sign * math.cos(alpha), -sign * math.sin(alpha), 0.0],
                [0.0, 0.0, -1.0],
            ]
        )
        belief = _joseph_update(belief, np.array([dd, da]), h, r_mat)
    return belief


def reset_kickoff(cfg: Config, now_ns: int = 0) -> BeliefState:
    """High-confidence pose reset at the legal kick-off position."""
    mean = Pose2D(cfg.f("ekf.kickoff_x_m"), 0.0, 0.0)
    cov = np.diag(
        [cfg.f("ekf.kickoff_cov_xy"), cfg.f("ekf.kickoff_cov_xy"), cfg.f("ekf.kickoff_cov_theta")]
    )
    return BeliefState(mean=mean, cov=cov, confidence=0.9, last_update_ns=now_ns)

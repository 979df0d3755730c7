"""Flat key/value configuration with typed accessors.

File format: UTF-8 text, one ``key = value`` pair per line, ``#`` starts
a comment, blank lines ignored.  Every key known to the package is listed
in ``CONFIG_SPEC`` together with its default and a range check; unknown
keys and out-of-range values are rejected with the offending line number.
"""

from __future__ import annotations

from typing import Any, Callable, Iterator


class ConfigError(ValueError):
    """Raised for unknown keys, bad syntax or out-of-range values."""


def _positive(v: float) -> bool:
    return v > 0


def _non_negative(v: float) -> bool:
    return v >= 0


def _fraction(v: float) -> bool:
    return 0.0 <= v <= 1.0


def _support_ratio(v: float) -> bool:
    return 0.5 <= v < 1.0


def _port(v: int) -> bool:
    return 0 < v < 65536


def _any(v: Any) -> bool:
    return True


# key -> (default, type, range check).  Types: float, int, bool, str and
# "ints" (comma-separated integer list, stored as a tuple).
CONFIG_SPEC: dict[str, tuple[Any, str, Callable[[Any], bool]]] = {
    # field geometry (kid-size league defaults; fully overridable)
    "field.length_m": (9.0, "float", _positive),
    "field.width_m": (6.0, "float", _positive),
    "field.line_width_m": (0.05, "float", _positive),
    "field.centre_circle_radius_m": (0.75, "float", _positive),
    "field.goal_width_m": (2.6, "float", _positive),
    "field.goal_area_length_m": (1.0, "float", _positive),
    "field.goal_area_width_m": (3.0, "float", _positive),
    # robot geometry
    "robot.thigh_m": (0.11, "float", _positive),
    "robot.shank_m": (0.11, "float", _positive),
    "robot.hip_offset_m": (0.035, "float", _positive),
    # camera model
    "camera.width_px": (640, "int", _positive),
    "camera.height_px": (480, "int", _positive),
    "camera.fov_rad": (1.05, "float", lambda v: 0 < v < 3.14159),
    "camera.height_m": (0.45, "float", _positive),
    "camera.pitch_rad": (0.35, "float", lambda v: -1.2 <= v <= 1.2),
    # vision: colour thresholds
    "vision.green_h_min_deg": (70.0, "float", lambda v: 0 <= v < 360),
    "vision.green_h_max_deg": (160.0, "float", lambda v: 0 <= v < 360),
    "vision.green_s_min": (0.25, "float", _fraction),
    "vision.green_v_min": (0.15, "float", _fraction),
    "vision.white_s_max": (0.25, "float", _fraction),
    "vision.white_v_min": (0.6, "float", _fraction),
    "vision.min_green_run": (5, "int", _positive),
    # vision: candidate proposal
    "vision.window_scales": ((8, 16, 32), "ints", lambda v: all(x > 0 for x in v)),
    "vision.density_min": (0.5, "float", _fraction),
    "vision.merge_radius_px": (12, "int", _non_negative),
    # vision: ball classifier bands
    "vision.count_min": (150, "int", _non_negative),
    "vision.count_max": (30000, "int", _positive),
    "vision.ratio_min": (0.58, "float", _fraction),
    "vision.ratio_max": (0.95, "float", _fraction),
    "vision.area_min": (250, "int", _positive),
    "vision.area_max": (45000, "int", _positive),
    "vision.track_radius_px": (80.0, "float", _positive),
    # vision: line and circle detection
    "vision.hough_votes": (25, "int", _positive),
    "vision.hough_max_gap_px": (6.0, "float", _positive),
    "vision.hough_min_len_px": (20.0, "float", _positive),
    "vision.hough_samples": (1500, "int", _positive),
    "vision.hough_rho_res_px": (2.0, "float", _positive),
    "vision.hough_theta_res_deg": (1.0, "float", _positive),
    "vision.hough_inlier_tol_px": (3.0, "float", _positive),
    "vision.hough_band_px": (30.0, "float", _positive),
    "vision.merge_angle_rad": (0.08, "float", _positive),
    "vision.merge_gap_px": (25.0, "float", _non_negative),
    "vision.merge_perp_px": (12.0, "float", _positive),
    "vision.min_line_len_px": (80.0, "float", _positive),
    "vision.circle_min_support": (6, "int", lambda v: v >= 3),
    "vision.circle_tol_px": (4.0, "float", _positive),
    "vision.rng_seed": (12345, "int", _non_negative),
    # walk engine
    "walk.frequency_hz": (1.5, "float", _positive),
    "walk.step_m": (0.0, "float", _any),
    "walk.lateral_m": (0.0, "float", _any),
    "walk.turn_rad": (0.0, "float", _any),
    "walk.rise_m": (0.02, "float", _non_negative),
    "walk.swing_m": (0.01, "float", _non_negative),
    "walk.support_ratio": (0.6, "float", _support_ratio),
    "walk.stance_height_m": (0.20, "float", _positive),
    "walk.spread_m": (0.01, "float", _non_negative),
    "walk.max_step_m": (0.05, "float", _positive),
    "walk.max_turn_rad": (0.4, "float", _positive),
    "walk.max_joint_step_rad": (0.12, "float", _positive),
    # IMU balance offsets
    "balance.comp_alpha": (0.98, "float", _fraction),
    "balance.pitch_gain": (0.3, "float", _non_negative),
    "balance.roll_gain": (0.3, "float", _non_negative),
    "balance.max_trim_rad": (0.2, "float", _positive),
    # self-localisation EKF
    "ekf.qx": (0.01, "float", _positive),
    "ekf.qy": (0.01, "float", _positive),
    "ekf.qtheta": (0.02, "float", _positive),
    "ekf.heading_var": (0.05, "float", _positive),
    "ekf.line_dist_var": (0.04, "float", _positive),
    "ekf.line_bearing_var": (0.02, "float", _positive),
    "ekf.assoc_dist_m": (0.8, "float", _positive),
    "ekf.assoc_angle_rad": (0.5, "float", _positive),
    "ekf.conf_decay": (0.05, "float", _non_negative),
    "ekf.conf_blend": (0.1, "float", _fraction),
    "ekf.flip_ratio": (2.0, "float", lambda v: v >= 1.0),
    "ekf.flip_penalty": (0.3, "float", _fraction),
    "ekf.ball_agree_sigma_m": (1.2, "float", _positive),
    "ekf.kickoff_x_m": (-2.25, "float", _any),
    "ekf.kickoff_cov_xy": (0.04, "float", _positive),
    "ekf.kickoff_cov_theta": (0.02, "float", _positive),
    # ball tracking filter
    "ball.q_pos": (0.05, "float", _positive),
    "ball.q_vel": (0.5, "float", _positive),
    "ball.r_meas": (0.04, "float", _positive),
    # fall detection
    "fall.correct_rad": (0.25, "float", _positive),
    "fall.brace_rad": (0.7, "float", _positive),
    "fall.brace_rate": (3.0, "float", _positive),
    "fall.settle_s": (0.5, "float", _positive),
    "fall.stable_s": (1.0, "float", _positive),
    "fall.rest_accel_tol": (1.5, "float", _positive),
    "fall.lp_tau_s": (0.05, "float", _positive),
    # behaviour
    "behaviour.lost_after_s": (2.5, "float", _positive),
    "behaviour.fresh_s": (1.0, "float", _positive),
    "behaviour.near_dist_m": (0.35, "float", _positive),
    "behaviour.align_tol_rad": (0.25, "float", _positive),
    "behaviour.approach_turn_gain": (1.2, "float", _positive),
    "behaviour.approach_step_gain": (0.15, "float", _positive),
    "behaviour.goal_conf_min": (0.25, "float", _fraction),
    "behaviour.find_turn_rad": (0.12, "float", _non_negative),
    # networking
    "net.team_port": (3737, "int", _port),
    "net.gc_port": (3838, "int", _port),
    "net.team_hz": (3.0, "float", _positive),
    "net.broadcast_addr": ("127.255.255.255", "str", _any),
    "net.robot_id": (1, "int", lambda v: 0 <= v < 256),
    "net.team_id": (0, "int", lambda v: 0 <= v < 256),
    "net.max_report_age_s": (3.0, "float", _positive),
    # world simulator
    "sim.odom_noise_xy": (0.0, "float", _non_negative),
    "sim.odom_noise_theta": (0.0, "float", _non_negative),
    "sim.imu_accel_noise": (0.0, "float", _non_negative),
    "sim.imu_gyro_noise": (0.0, "float", _non_negative),
    "sim.ball_friction": (0.5, "float", _positive),
    "sim.kick_speed": (2.0, "float", _positive),
    "sim.kick_range_m": (0.3, "float", _positive),
    "sim.brightness_jitter": (0.0, "float", _fraction),
    # agent runtime
    "agent.vision_hz": (30.0, "float", _positive),
    "agent.hardware_hz": (100.0, "float", _positive),
    "agent.kick_strike_s": (0.6, "float", _positive),
    "agent.head_scan_period_s": (2.5, "float", _positive),
    "agent.head_scan_amp_rad": (1.0, "float", _positive),
    "agent.head_tilt_rad": (0.5, "float", _any),
}


def _parse_value(raw: str, kind: str) -> Any:
    if kind == "float":
        return float(raw)
    if kind == "int":
        v = float(raw)
        if v != int(v):
            raise ValueError(f"expected integer, got {raw!r}")
        return int(v)
    if kind == "bool":
        low = raw.lower()
        if low in ("true", "1", "yes", "on"):
            return True
        if low in ("false", "0", "no", "off"):
            return False
        raise ValueError(f"expected boolean, got {raw!r}")
    if kind == "ints":
        return tuple(int(p.strip()) for p in raw.split(",") if p.strip())
    return raw  # str


class Config:
    """Immutable snapshot of all configuration keys."""

    __slots__ = ("_values",)

    def __init__(self, overrides: dict[str, Any] | None = None):
        values = {k: spec[0] for k, spec in CONFIG_SPEC.items()}
        if overrides:
            for key, val in overrides.items():
                if key not in CONFIG_SPEC:
                    raise ConfigError(f"unknown config key {key!r}")
                default, kind, check = CONFIG_SPEC[key]
                if isinstance(val, str) and kind != "str":
                    val = _parse_value(val, kind)
                if kind == "float" and isinstance(val, int):
                    val = float(val)
                if not check(val):
                    raise ConfigError(f"value out of range for {key!r}: {val!r}")
                values[key] = val
        self._values = values

    # typed accessors --------------------------------------------------
    def f(self, key: str) -> float:
        return float(self._values[key])

    def i(self, key: str) -> int:
        return int(self._values[key])

    def s(self, key: str) -> str:
        return str(self._values[key])

    def ints(self, key: str) -> tuple[int, ...]:
        return tuple(self._values[key])

    def __getitem__(self, key: str) -> Any:
        return self._values[key]

    def __contains__(self, key: str) -> bool:
        return key in self._values

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Config) and self._values == other._values

    def __hash__(self) -> int:  # content-hashable, values are immutable
        return hash(tuple(sorted((k, str(v)) for k, v in self._values.items())))

    def with_overrides(self, overrides: dict[str, Any]) -> "Config":
        merged = dict(self._values)
        merged.update(overrides)
        # revalidate through the constructor
        return Config(merged)

    def dump(self) -> str:
        """Serialize every key; ``load_config`` on the result round-trips."""
        lines = []
        for key in CONFIG_SPEC:
            val = self._values[key]
            if isinstance(val, tuple):
                val = ",".join(str(x) for x in val)
            lines.append(f"{key} = {val!r}" if isinstance(val, str) and " " in val else f"{key} = {val}")
        return "\n".join(lines) + "\n"


def parse_kv_lines(text: str) -> dict[str, tuple[int, str]]:
    """Parse flat ``key = value`` text into {key: (line_no, raw_value)}.

    Shared by config and scenario files.  Raises ``ConfigError`` with the
    line number on malformed lines or duplicate keys.
    """
    out: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip().strip("'\"")
        if not key:
            raise ConfigError(f"line {lineno}: empty key")
        if key in out:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        out[key] = (lineno, raw)
    return out


def load_config_text(text: str) -> Config:
    """Build a Config from file contents (see module docstring for format)."""
    overrides: dict[str, Any] = {}
    for key, (lineno, raw) in parse_kv_lines(text).items():
        if key not in CONFIG_SPEC:
            raise ConfigError(f"line {lineno}: unknown config key {key!r}")
        _, kind, check = CONFIG_SPEC[key]
        try:
            val = _parse_value(raw, kind)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
        if not check(val):
            raise ConfigError(f"line {lineno}: value out of range for {key!r}: {raw}")
        overrides[key] = val
    return Config(overrides)


def load_config(path: str) -> Config:
    """Load a Config from a file; missing keys take their defaults."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from None
    return load_config_text(text)

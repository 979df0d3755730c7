"""Kinematic world: robots driven by commanded odometry, a rolling ball,
synthetic camera frames and IMU samples.

Robots are kinematic pucks with a head: commanded odometry composes onto
their pose (plus seeded Gaussian noise), nothing else moves them.  The
ball decelerates under constant friction using the exact closed-form of
uniform deceleration within each step, so travel distances match the
v^2/(2a) prediction to float precision.  Everything consumes one seeded
generator owned by the world, making runs bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from ..core import Config, FieldModel, Pose2D
from ..gait.balance import ImuSample
from ..vision.colour import rgb_to_yuyv_bytes
from ..vision.types import CameraFrame
from .camera import CameraIntrinsics, project_point, world_rays

GRAVITY = 9.81

# flat-shaded palette (RGB)
COLOUR_FIELD = np.array([30.0, 130.0, 50.0])
COLOUR_WHITE = np.array([240.0, 240.0, 240.0])
COLOUR_BACKGROUND = np.array([110.0, 110.0, 115.0])

FALLEN_NONE = None
FALLEN_FRONT = "front"
FALLEN_BACK = "back"


@dataclass
class RobotState:
    pose: Pose2D = dc_field(default_factory=Pose2D)
    head_pan: float = 0.0
    head_tilt: float = 0.0
    fallen: str | None = None
    vel: tuple[float, float, float] = (0.0, 0.0, 0.0)   # body frame, m/s & rad/s


@dataclass
class RobotCommand:
    odom: Pose2D | None = None
    kick: bool = False
    head_pan: float | None = None
    head_tilt: float | None = None


@dataclass
class WorldState:
    robots: list[RobotState]
    ball_pos: np.ndarray
    ball_vel: np.ndarray
    time_s: float = 0.0
    ball_out: bool = False


class World:
    """Owns the world state, the field model and the seeded RNG."""

    def __init__(
        self,
        field: FieldModel,
        cfg: Config,
        seed: int = 0,
        robots: list[RobotState] | None = None,
        ball_pos: tuple[float, float] = (0.0, 0.0),
        ball_vel: tuple[float, float] = (0.0, 0.0),
        ball_radius_m: float = 0.05,
    ):
        self.field = field
        self.cfg = cfg
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.ball_radius_m = ball_radius_m
        self.state = WorldState(
            robots=robots or [RobotState()],
            ball_pos=np.array(ball_pos, dtype=np.float64),
            ball_vel=np.array(ball_vel, dtype=np.float64),
        )

    # stepping ---------------------------------------------------------
    def step(self, commands: dict[int, RobotCommand], dt: float) -> None:
        if not (0.0 < dt <= 0.05):
            raise ValueError(f"dt must be in (0, 0.05], got {dt}")
        st = self.state
        sigma_xy = self.cfg.f("sim.odom_noise_xy")
        sigma_th = self.cfg.f("sim.odom_noise_theta")

        for idx, robot in enumerate(st.robots):
            cmd = commands.get(idx)
            if cmd is None:
                robot.vel = (0.0, 0.0, 0.0)
                continue
            if cmd.head_pan is not None:
                robot.head_pan = cmd.head_pan
            if cmd.head_tilt is not None:
                robot.head_tilt = cmd.head_tilt
            odom = cmd.odom
            if odom is not None and robot.fallen is None:
                if not all(math.isfinite(v) for v in odom.as_tuple()):
                    raise ValueError(f"non-finite odometry command for robot {idx}")
                noisy = Pose2D(
                    odom.x + self.rng.normal(0.0, sigma_xy) * math.sqrt(dt) if sigma_xy else odom.x,
                    odom.y + self.rng.normal(0.0, sigma_xy) * math.sqrt(dt) if sigma_xy else odom.y,
                    odom.theta
                    + (self.rng.normal(0.0, sigma_th) * math.sqrt(dt) if sigma_th else 0.0),
                )
                robot.pose = robot.pose.compose(noisy)
                robot.vel = (odom.x / dt, odom.y / dt, odom.theta / dt)
            else:
                robot.vel = (0.0, 0.0, 0.0)
            if cmd.kick and robot.fallen is None:
                self._try_kick(robot)

        self._step_ball(dt)
        st.time_s += dt

    def _try_kick(self, robot: RobotState) -> None:
        st = self.state
        delta = st.ball_pos - np.array([robot.pose.x, robot.pose.y])
        if float(np.hypot(delta[0], delta[1])) <= self.cfg.f("sim.kick_range_m"):
            speed = self.cfg.f("sim.kick_speed")
            st.ball_vel = speed * np.array(
                [math.cos(robot.pose.theta), math.sin(robot.pose.theta)]
            )

    def _step_ball(self, dt: float) -> None:
        st = self.state
        speed = float(np.linalg.norm(st.ball_vel))
        if speed > 0.0:
            friction = self.cfg.f("sim.ball_friction")
            direction = st.ball_vel / speed
            t_stop = speed / friction
            t = min(dt, t_stop)
            # exact uniform-deceleration kinematics within the step
            st.ball_pos = st.ball_pos + direction * (speed * t - 0.5 * friction * t * t)
            new_speed = max(0.0, speed - friction * dt)
            st.ball_vel = direction * new_speed
        hl, hw = self.field.length_m / 2, self.field.width_m / 2
        if abs(st.ball_pos[0]) > hl or abs(st.ball_pos[1]) > hw:
            st.ball_pos[0] = min(max(st.ball_pos[0], -hl), hl)
            st.ball_pos[1] = min(max(st.ball_pos[1], -hw), hw)
            st.ball_vel[:] = 0.0
            st.ball_out = True

    # sensors ------------------------------------------------------------
    def sample_imu(self, robot_id: int) -> ImuSample:
        robot = self.state.robots[robot_id]
        sigma_a = self.cfg.f("sim.imu_accel_noise")
        sigma_g = self.cfg.f("sim.imu_gyro_noise")
        if robot.fallen == FALLEN_FRONT:
            accel = np.array([GRAVITY, 0.0, 0.0])
        elif robot.fallen == FALLEN_BACK:
            accel = np.array([-GRAVITY, 0.0, 0.0])
        else:
            accel = np.array([0.0, 0.0, -GRAVITY])
        gyro = np.array([0.0, 0.0, robot.vel[2]])
        if sigma_a:
            accel = accel + self.rng.normal(0.0, sigma_a, 3)
        if sigma_g:
            gyro = gyro + self.rng.normal(0.0, sigma_g, 3)
        return ImuSample(
            gyro=tuple(float(v) for v in gyro),
            accel=tuple(float(v) for v in accel),
            timestamp_ns=int(self.state.time_s * 1e9),
        )

    # rendering ----------------------------------------------------------
    def render(self, robot_id: int, intr: CameraIntrinsics) -> CameraFrame:
        """Flat-shaded pinhole view of field, lines, circle and ball."""
        robot = self.state.robots[robot_id]
        centre, dirs = world_rays(robot.pose, robot.head_pan, robot.head_tilt, intr)
        h, w = intr.height, intr.width
        n = h * w
        dirs_f = dirs.reshape(n, 3)
        dz = dirs_f[:, 2]

        cx, cy_, cz = float(centre[0]), float(centre[1]), float(centre[2])
        ground = dz < -1e-9
        t_ground = np.full(n, np.inf, dtype=np.float32)
        t_ground[ground] = -cz / dz[ground]
        ground &= t_ground < 60.0

        rgb = np.empty((n, 3), dtype=np.float32)
        rgb[:] = COLOUR_BACKGROUND

        fl = self.field
        gidx = np.nonzero(ground)[0]
        gx = cx + t_ground[gidx] * dirs_f[gidx, 0]
        gy = cy_ + t_ground[gidx] * dirs_f[gidx, 1]
        near = (np.abs(gx) <= fl.length_m / 2 + 0.7) & (np.abs(gy) <= fl.width_m / 2 + 0.7)
        fidx = gidx[near]
        fx, fy = gx[near], gy[near]
        rgb[fidx] = COLOUR_FIELD

        half_lw2 = (fl.line_width_m / 2) ** 2
        white = np.zeros(fx.shape[0], dtype=bool)
        for (x1, y1), (x2, y2) in fl.line_segments:
            vx, vy = x2 - x1, y2 - y1
            tproj = np.clip(((fx - x1) * vx + (fy - y1) * vy) / (vx * vx + vy * vy), 0.0, 1.0)
            white |= (fx - (x1 + tproj * vx)) ** 2 + (fy - (y1 + tproj * vy)) ** 2 <= half_lw2
        ring2 = fx * fx + fy * fy
        rr = fl.centre_circle_radius_m
        white |= np.abs(np.sqrt(ring2) - rr) <= fl.line_width_m / 2
        rgb[fidx[white]] = COLOUR_WHITE

        # ball: ray-sphere intersection, occluding the ground behind it
        bp = self.state.ball_pos
        r = self.ball_radius_m
        oc = (centre - np.array([bp[0], bp[1], r])).astype(np.float32)
        b = dirs_f @ oc
        c = float(oc @ oc) - r * r
        disc = b * b - np.float32(c)
        hit = disc >= 0.0
        t_ball = np.where(hit, -b - np.sqrt(np.where(hit, disc, 1.0)), np.inf)
        ball_px = hit & (t_ball > 0.0) & (t_ball < t_ground)
        rgb[ball_px] = COLOUR_WHITE

        jitter = self.cfg.f("sim.brightness_jitter")
        if jitter > 0.0:
            factor = 1.0 + self.rng.uniform(-jitter, jitter)
            rgb = np.clip(rgb * np.float32(factor), 0.0, 255.0)

        return CameraFrame(
            width=w,
            height=h,
            data=rgb_to_yuyv_bytes(rgb.reshape(h, w, 3)),
            timestamp_ns=int(self.state.time_s * 1e9),
        )

    def ball_projection(
        self, robot_id: int, intr: CameraIntrinsics
    ) -> tuple[float, float, float] | None:
        """Analytic (u, v, radius_px) of the ball centre; the renderer's
        ground truth for vision tests."""
        robot = self.state.robots[robot_id]
        bp = self.state.ball_pos
        hit = project_point(
            robot.pose,
            robot.head_pan,
            robot.head_tilt,
            intr,
            np.array([bp[0], bp[1], self.ball_radius_m]),
        )
        if hit is None:
            return None
        u, v, depth = hit
        if not (0 <= u < intr.width and 0 <= v < intr.height):
            return None
        dist = math.sqrt(
            (robot.pose.x - bp[0]) ** 2
            + (robot.pose.y - bp[1]) ** 2
            + (intr.height_m - self.ball_radius_m) ** 2
        )
        radius_px = intr.focal_px * self.ball_radius_m / dist
        return (u, v, radius_px)


# spec-facing free functions ---------------------------------------------
def step_world(world: World, commands: dict[int, RobotCommand], dt: float) -> WorldState:
    world.step(commands, dt)
    return world.state


def render_camera(world: World, robot_id: int, intr: CameraIntrinsics) -> CameraFrame:
    return world.render(robot_id, intr)


def sample_imu(world: World, robot_id: int) -> ImuSample:
    return world.sample_imu(robot_id)

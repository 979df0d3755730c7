"""Pinhole camera model shared by the renderer and the vision back-projection.

Camera frame follows the usual computer-vision convention: x right,
y down, z along the optical axis.  The camera sits ``height_m`` above
the robot's ground point; its yaw is the robot heading plus head pan,
its downward pitch is the mount pitch plus head tilt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core import Pose2D


@dataclass(frozen=True)
class CameraIntrinsics:
    fov_rad: float = 1.05          # horizontal field of view
    width: int = 640
    height: int = 480
    height_m: float = 0.45         # optical centre above ground
    mount_pitch_rad: float = 0.35  # fixed downward pitch of the mount

    def __post_init__(self) -> None:
        if not 0.0 < self.fov_rad < math.pi:
            raise ValueError("fov must be in (0, pi)")

    @property
    def focal_px(self) -> float:
        return (self.width / 2.0) / math.tan(self.fov_rad / 2.0)

    @classmethod
    def from_config(cls, cfg) -> "CameraIntrinsics":
        return cls(
            fov_rad=cfg.f("camera.fov_rad"),
            width=cfg.i("camera.width_px"),
            height=cfg.i("camera.height_px"),
            height_m=cfg.f("camera.height_m"),
            mount_pitch_rad=cfg.f("camera.pitch_rad"),
        )


def camera_basis(pose: Pose2D, pan: float, tilt: float, intr: CameraIntrinsics):
    """(centre, right, down, forward) of the camera in world coordinates."""
    yaw = pose.theta + pan
    pitch = intr.mount_pitch_rad + tilt   # positive looks down
    cy, sy = math.cos(yaw), math.sin(yaw)
    cp, sp = math.cos(pitch), math.sin(pitch)
    forward = np.array([cy * cp, sy * cp, -sp])
    right = np.array([sy, -cy, 0.0])
    down = np.array([-sp * cy, -sp * sy, -cp])
    centre = np.array([pose.x, pose.y, intr.height_m])
    return centre, right, down, forward


@lru_cache(maxsize=4)
def _unit_rays(width: int, height: int, focal: float) -> np.ndarray:
    """(h, w, 3) unit ray directions in the camera frame (float32)."""
    u = (np.arange(width, dtype=np.float64) - width / 2.0 + 0.5) / focal
    v = (np.arange(height, dtype=np.float64) - height / 2.0 + 0.5) / focal
    uu, vv = np.meshgrid(u, v)
    rays = np.stack([uu, vv, np.ones_like(uu)], axis=-1)
    rays /= np.linalg.norm(rays, axis=-1, keepdims=True)
    return rays.astype(np.float32)


def world_rays(pose: Pose2D, pan: float, tilt: float, intr: CameraIntrinsics):
    """(centre, (h, w, 3) unit world-frame ray directions, float32)."""
    centre, right, down, forward = camera_basis(pose, pan, tilt, intr)
    rays_cam = _unit_rays(intr.width, intr.height, intr.focal_px)
    rot = np.stack([right, down, forward], axis=0).astype(np.float32)
    dirs = rays_cam @ rot
    return centre, dirs


def project_point(
    pose: Pose2D, pan: float, tilt: float, intr: CameraIntrinsics, point: np.ndarray
) -> tuple[float, float, float] | None:
    """World point -> (u, v, depth); None when behind the image plane."""
    centre, right, down, forward = camera_basis(pose, pan, tilt, intr)
    rel = np.asarray(point, dtype=np.float64) - centre
    z = float(rel @ forward)
    if z <= 1e-9:
        return None
    f = intr.focal_px
    u = intr.width / 2.0 + f * float(rel @ right) / z
    v = intr.height / 2.0 + f * float(rel @ down) / z
    return (u, v, z)


def pixel_to_ground(
    pose: Pose2D,
    pan: float,
    tilt: float,
    intr: CameraIntrinsics,
    u: float,
    v: float,
    plane_z: float = 0.0,
    robot_frame: bool = True,
) -> tuple[float, float] | None:
    """Back-project a pixel onto the horizontal plane ``z = plane_z``.

    Returns robot-frame coordinates by default (what the localisation
    consumes), or world coordinates with ``robot_frame=False``; None for
    rays that do not hit the plane in front of the camera.
    """
    centre, right, down, forward = camera_basis(pose, pan, tilt, intr)
    f = intr.focal_px
    d = (
        right * ((u - intr.width / 2.0) / f)
        + down * ((v - intr.height / 2.0) / f)
        + forward
    )
    if d[2] >= -1e-9:
        return None
    t = (plane_z - centre[2]) / d[2]
    if t <= 0:
        return None
    gx, gy = centre[0] + t * d[0], centre[1] + t * d[1]
    if not robot_frame:
        return (float(gx), float(gy))
    return pose.inverse_transform_point(float(gx), float(gy))

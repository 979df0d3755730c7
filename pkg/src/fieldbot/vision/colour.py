"""YUYV422 <-> RGB <-> HSV conversions (BT.601 full-range).

The camera delivers packed YUYV422: byte groups [Y0 U Y1 V] where two
horizontally adjacent pixels share one chroma pair.  Both conversion
directions live here so the synthetic renderer encodes frames with the
exact inverse of what the pipeline decodes.
"""

from __future__ import annotations

import numpy as np

from .types import CameraFrame, HsvImage


def yuyv_to_rgb(frame: CameraFrame) -> np.ndarray:
    """Decode to an (h, w, 3) float32 RGB array in [0, 255]."""
    raw = np.frombuffer(frame.data, dtype=np.uint8)
    groups = raw.reshape(frame.height, frame.width // 2, 4).astype(np.float32)
    y = np.empty((frame.height, frame.width), dtype=np.float32)
    y[:, 0::2] = groups[:, :, 0]
    y[:, 1::2] = groups[:, :, 2]
    u = np.repeat(groups[:, :, 1], 2, axis=1) - 128.0
    v = np.repeat(groups[:, :, 3], 2, axis=1) - 128.0

    rgb = np.empty((frame.height, frame.width, 3), dtype=np.float32)
    rgb[:, :, 0] = y + 1.402 * v
    rgb[:, :, 1] = y - 0.344136 * u - 0.714136 * v
    rgb[:, :, 2] = y + 1.772 * u
    np.clip(rgb, 0.0, 255.0, out=rgb)
    return rgb


def rgb_to_hsv(rgb: np.ndarray) -> HsvImage:
    """RGB in [0, 255] to hue degrees [0, 360) and s, v fractions."""
    r, g, b = rgb[:, :, 0], rgb[:, :, 1], rgb[:, :, 2]
    maxc = np.maximum(r, g)
    np.maximum(maxc, b, out=maxc)
    minc = np.minimum(r, g)
    np.minimum(minc, b, out=minc)
    delta = maxc - minc

    v = maxc * np.float32(1.0 / 255.0)
    s = delta / np.maximum(maxc, np.float32(1e-12))

    # hue (standard hexcone, 0 by convention where delta == 0), via
    # scatter writes on each channel's argmax subset
    safe = np.maximum(delta, np.float32(1e-12))
    h = np.zeros_like(maxc)
    m = (maxc == r) & (delta > 0)
    h[m] = ((g[m] - b[m]) / safe[m]) % np.float32(6.0)
    m = (maxc == g) & (r < g) & (delta > 0)
    h[m] = np.float32(2.0) + (b[m] - r[m]) / safe[m]
    m = (maxc == b) & (r < b) & (g < b) & (delta > 0)
    h[m] = np.float32(4.0) + (r[m] - g[m]) / safe[m]
    h *= np.float32(60.0)
    return HsvImage(h, s, v)


def yuyv_to_hsv(frame: CameraFrame) -> HsvImage:
    """Full decode used as the first pipeline stage; deterministic."""
    return rgb_to_hsv(yuyv_to_rgb(frame))


def rgb_to_yuyv_bytes(rgb: np.ndarray) -> bytes:
    """Encode an (h, w, 3) RGB array ([0,255]) as packed YUYV422 bytes.

    Chroma of each pixel pair is the average of the two pixels' chroma.
    """
    h, w = rgb.shape[0], rgb.shape[1]
    if w % 2 != 0:
        raise ValueError("width must be even")
    r = rgb[:, :, 0].astype(np.float32)
    g = rgb[:, :, 1].astype(np.float32)
    b = rgb[:, :, 2].astype(np.float32)
    y = 0.299 * r + 0.587 * g + 0.114 * b
    u = 128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b
    v = 128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b

    out = np.empty((h, w // 2, 4), dtype=np.float32)
    out[:, :, 0] = y[:, 0::2]
    out[:, :, 2] = y[:, 1::2]
    out[:, :, 1] = (u[:, 0::2] + u[:, 1::2]) / 2.0
    out[:, :, 3] = (v[:, 0::2] + v[:, 1::2]) / 2.0
    return np.clip(np.rint(out), 0, 255).astype(np.uint8).tobytes()

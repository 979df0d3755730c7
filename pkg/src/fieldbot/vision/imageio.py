"""Frame and debug-image file formats.

* ``.yuyv``: 16-byte header (magic ``YUYV``, u32 width, u32 height,
  both little-endian, 4 reserved zero bytes) followed by the packed
  YUYV422 payload.
* ``.ppm``: binary P6, used for RGB debug dumps and overlays.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .types import CameraFrame

_YUYV_MAGIC = b"YUYV"
_HEADER = struct.Struct("<4sII4x")


def write_yuyv(path: str | Path, frame: CameraFrame) -> None:
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(_YUYV_MAGIC, frame.width, frame.height))
        fh.write(frame.data)


def read_yuyv(path: str | Path) -> CameraFrame:
    with open(path, "rb") as fh:
        head = fh.read(_HEADER.size)
        if len(head) < _HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, width, height = _HEADER.unpack(head)
        if magic != _YUYV_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        data = fh.read(width * height * 2)
        if len(data) != width * height * 2:
            raise ValueError(f"{path}: truncated payload")
    return CameraFrame(width=width, height=height, data=data)


def write_ppm(path: str | Path, rgb: np.ndarray) -> None:
    """Write an (h, w, 3) array (any numeric dtype, [0,255]) as binary P6."""
    arr = np.clip(np.rint(np.asarray(rgb)), 0, 255).astype(np.uint8)
    h, w = arr.shape[0], arr.shape[1]
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def read_ppm(path: str | Path) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    parts = data.split(maxsplit=4)
    if parts[0] != b"P6":
        raise ValueError(f"{path}: not a binary PPM")
    w, h, maxval = int(parts[1]), int(parts[2]), int(parts[3])
    if maxval != 255:
        raise ValueError(f"{path}: unsupported maxval {maxval}")
    pixels = np.frombuffer(parts[4][: w * h * 3], dtype=np.uint8)
    return pixels.reshape(h, w, 3).copy()

"""Frame pipeline: colour conversion, field boundary, candidates, ball,
lines and centre circle, with per-stage wall-time accounting.

Stage order follows the camera processing chain: raw image, HSV colour
space, horizon/field-edge filter, integral-image candidate selection,
classification filter.  Line extraction runs on the white mask before
candidate selection and the painted bands it finds are erased from the
candidate mask: what reaches the classifier is then ball-shaped blobs
rather than line paint, which is the entire point of the search-space
reduction stages.  Segments that actually belong to the detected ball
are dropped from the line output afterwards.  One invocation is
single-threaded and deterministic for a fixed (frame, config, previous
detection) triple.
"""

from __future__ import annotations

import time

import numpy as np

from ..core import Config
from .ball import classify_ball
from .blobs import thick_cores
from .boundary import field_edge_filter, white_mask
from .candidates import select_candidates
from .circle import detect_centre_circle
from .colour import yuyv_to_hsv
from .integral import build_integral
from .lines import hough_segments_with_width
from .types import BallDetection, CameraFrame, LineSegment2D, VisionResult

_BORDER_PX = 2      # candidates touching the frame border are clipped blobs
_ERASE_PAD = 1.5    # erased band: measured half-width plus this margin
_ERASE_EXT = 25.0   # erase past segment ends (junction stubs, cut-off runs)


def _erase_segments(
    white: np.ndarray, pairs: list[tuple[LineSegment2D, float]]
) -> np.ndarray:
    """White mask with the painted bands of detected segments removed."""
    ys, xs = np.nonzero(white)
    if xs.shape[0] == 0 or not pairs:
        return white
    px = xs.astype(np.float64)
    py = ys.astype(np.float64)
    erase = np.zeros(px.shape[0], dtype=bool)
    for seg, half in pairs:
        half += _ERASE_PAD
        ux = (seg.x2 - seg.x1) / seg.length
        uy = (seg.y2 - seg.y1) / seg.length
        rx, ry = px - seg.x1, py - seg.y1
        along = rx * ux + ry * uy
        perp = np.abs(rx * -uy + ry * ux)
        erase |= (
            (perp <= half) & (along >= -_ERASE_EXT) & (along <= seg.length + _ERASE_EXT)
        )
    out = np.zeros_like(white)
    keep = ~erase
    out[ys[keep], xs[keep]] = True
    return out


def _touches_border(c, width: int, height: int) -> bool:
    return (
        c.x <= _BORDER_PX
        or c.y <= _BORDER_PX
        or c.x + c.w >= width - _BORDER_PX
        or c.y + c.h >= height - _BORDER_PX
    )


def _restore_candidate(cand, white: np.ndarray):
    """Re-measure a proposal box against the un-erased white mask.

    Line bands are erased before proposal so that paint cannot seed or
    bridge candidates, but the erasure also cuts the ball where a line
    passes behind it.  Counting the original white pixels inside the
    proposal's own box (no growth) restores the blob without letting a
    stub pull in its line's continuation.
    """
    from .types import Candidate

    crop = white[cand.y : cand.y + cand.h, cand.x : cand.x + cand.w]
    count = int(crop.sum())
    if count == 0:
        return None, None
    ys, xs = np.nonzero(crop)
    restored = Candidate(x=cand.x, y=cand.y, w=cand.w, h=cand.h, white_pixel_count=count)
    centroid = (cand.x + float(xs.mean()) + 0.5, cand.y + float(ys.mean()) + 0.5)
    return restored, centroid


def run_pipeline(
    frame: CameraFrame, prev: BallDetection | None, cfg: Config
) -> VisionResult:
    timings: dict[str, float] = {}
    t_start = time.perf_counter()

    t0 = time.perf_counter()
    hsv = yuyv_to_hsv(frame)
    timings["hsv"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    boundary = field_edge_filter(hsv, cfg)
    white = white_mask(hsv, cfg) & boundary.mask
    visible = boundary.rows[boundary.rows < frame.height]
    horizon = float(np.percentile(visible, 5)) if visible.shape[0] else 0.0
    cores = thick_cores(white, horizon)
    timings["boundary"] = (time.perf_counter() - t0) * 1e3

    # blob interiors can't be line paint: keep them out of the Hough
    # input (lines split cleanly at an occluding ball) and shield them
    # from band erasure
    t0 = time.perf_counter()
    seg_pairs = hough_segments_with_width(white & ~cores, cfg)
    min_len = cfg.f("vision.min_line_len_px")
    lines = [s for s, _ in seg_pairs if s.length >= min_len]
    shorts = [s for s, _ in seg_pairs if s.length < min_len]
    timings["hough"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    ball_mask = _erase_segments(white, seg_pairs)
    ball_mask |= white & cores
    integral = build_integral(ball_mask)
    timings["integral"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    candidates = select_candidates(integral, boundary, cfg)
    timings["candidates"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    ball: BallDetection | None = None
    for cand in candidates:
        restored, centroid = _restore_candidate(cand, white)
        if restored is None or _touches_border(restored, frame.width, frame.height):
            continue
        det = classify_ball(restored, prev, cfg)
        if det is not None and (ball is None or det.score > ball.score):
            ball = BallDetection(cx=centroid[0], cy=centroid[1], radius=det.radius, score=det.score)
    timings["classify"] = (time.perf_counter() - t0) * 1e3

    # a large, close ball sheds spurious chord segments; drop anything
    # whose midpoint falls inside the detected ball's box
    if ball is not None:
        lines = [s for s in lines if not _in_ball_box(s, ball)]
        shorts = [s for s in shorts if not _in_ball_box(s, ball)]

    t0 = time.perf_counter()
    circle = detect_centre_circle(shorts, cfg)
    timings["circle"] = (time.perf_counter() - t0) * 1e3

    timings["total"] = (time.perf_counter() - t_start) * 1e3
    return VisionResult(
        ball=ball,
        lines=lines,
        short_segments=shorts,
        circle=circle,
        boundary=boundary,
        candidates=candidates,
        timings_ms=timings,
    )


def _in_ball_box(seg: LineSegment2D, ball: BallDetection) -> bool:
    mx, my = seg.midpoint
    r = ball.radius * 1.3 + 4.0
    return abs(mx - ball.cx) <= r and abs(my - ball.cy) <= r


def result_to_json(res: VisionResult, timestamp_ns: int = 0) -> dict:
    """JSON-serializable record for one frame (one JSONL line)."""
    return {
        "t_ns": timestamp_ns,
        "ball": None
        if res.ball is None
        else {
            "cx": round(res.ball.cx, 2),
            "cy": round(res.ball.cy, 2),
            "radius": round(res.ball.radius, 2),
            "score": round(res.ball.score, 4),
        },
        "lines": [[round(s.x1, 1), round(s.y1, 1), round(s.x2, 1), round(s.y2, 1)] for s in res.lines],
        "circle": None if res.circle is None else [round(v, 2) for v in res.circle],
        "boundary": [int(r) for r in res.boundary.rows],
        "timings_ms": {k: round(v, 3) for k, v in res.timings_ms.items()},
    }

"""Probabilistic Hough line extraction and collinear segment merging.

A random subset of mask pixels votes in a (theta, rho) accumulator.
Accumulator peaks above the vote threshold are taken in descending order
(with non-maximum suppression); for each peak the full-resolution inlier
pixels are gathered, projected along the line, split at gaps and turned
into least-squares-refit segments.  Each raw segment is then grown to
the full thickness of the painted band it lies on (estimated from the
perpendicular spread of its pixels) and refit, so segments sit on band
centrelines and know their own half-width.  Pixels consumed by one peak
are removed before the next is processed.  Collinear segments closer
than the merge gap are finally fused by a refit over their endpoints,
repeated to a fixpoint so merging is idempotent.
"""

from __future__ import annotations

import math

import numpy as np

from ..core import Config
from .types import LineSegment2D

_MAX_PEAKS = 16


def _angle_diff(a: float, b: float) -> float:
    """Distance between undirected line angles, in [0, pi/2]."""
    d = abs(a - b) % math.pi
    return min(d, math.pi - d)


def _fit_segment(xs: np.ndarray, ys: np.ndarray) -> LineSegment2D | None:
    """Least-squares line through pixels; endpoints from extreme projections."""
    mx, my = float(xs.mean()), float(ys.mean())
    dx, dy = xs - mx, ys - my
    # principal direction of the 2x2 scatter matrix
    sxx, syy, sxy = float(dx @ dx), float(dy @ dy), float(dx @ dy)
    angle = 0.5 * math.atan2(2.0 * sxy, sxx - syy)
    ux, uy = math.cos(angle), math.sin(angle)
    t = dx * ux + dy * uy
    t0, t1 = float(t.min()), float(t.max())
    if t1 - t0 <= 0:
        return None
    return LineSegment2D(mx + t0 * ux, my + t0 * uy, mx + t1 * ux, my + t1 * uy)


def _grow_to_band(
    seg: LineSegment2D,
    px: np.ndarray,
    py: np.ndarray,
    alive: np.ndarray,
    band_px: float,
    max_gap: float,
) -> tuple[LineSegment2D | None, np.ndarray, float]:
    """Collect the full painted band around a raw segment.

    Gathers alive pixels near the carrier, estimates the band half-width
    from their perpendicular spread, trims to it and refits.  Returns the
    refit segment, the consumed pixel indices and the half-width.
    """
    ux = (seg.x2 - seg.x1) / seg.length
    uy = (seg.y2 - seg.y1) / seg.length
    nx, ny = -uy, ux
    rx, ry = px - seg.x1, py - seg.y1
    perp = rx * nx + ry * ny
    along = rx * ux + ry * uy
    rough = alive & (np.abs(perp) <= band_px) & (along >= -max_gap) & (along <= seg.length + max_gap)
    idx = np.nonzero(rough)[0]
    if idx.shape[0] < 2:
        return None, idx, 0.0
    # robust band width from the median absolute deviation, so a blob
    # (e.g. a ball) brushing the carrier cannot inflate the band
    p = perp[idx]
    centre = float(np.median(p))
    mad = float(np.median(np.abs(p - centre)))
    half = max(2.0, min(band_px, 2.4 * mad + 1.0))
    # a band nearly as thick as it is long is a blob chord, not a line:
    # refuse it and leave its pixels untouched
    if half > max(6.0, 0.15 * seg.length):
        return None, idx[:0], half
    keep = idx[np.abs(p - centre) <= half]
    if keep.shape[0] < 2:
        return None, keep, half
    return _fit_segment(px[keep], py[keep]), keep, half


def hough_segments_with_width(
    mask: np.ndarray, cfg: Config
) -> list[tuple[LineSegment2D, float]]:
    """Merged (segment, band half-width) pairs, longest first."""
    ys_all, xs_all = np.nonzero(mask)
    n = xs_all.shape[0]
    if n < cfg.i("vision.hough_votes"):
        return []

    rng = np.random.default_rng(cfg.i("vision.rng_seed"))
    n_sample = min(n, cfg.i("vision.hough_samples"))
    idx = rng.choice(n, size=n_sample, replace=False) if n > n_sample else np.arange(n)
    sx = xs_all[idx].astype(np.float64)
    sy = ys_all[idx].astype(np.float64)

    theta_res = math.radians(cfg.f("vision.hough_theta_res_deg"))
    n_theta = max(1, int(round(math.pi / theta_res)))
    thetas = np.arange(n_theta) * theta_res
    cos_t, sin_t = np.cos(thetas), np.sin(thetas)

    rho_res = cfg.f("vision.hough_rho_res_px")
    diag = math.hypot(mask.shape[0], mask.shape[1])
    n_rho = int(2 * diag / rho_res) + 3
    rho = sx[:, None] * cos_t[None, :] + sy[:, None] * sin_t[None, :]
    rho_idx = np.rint((rho + diag) / rho_res).astype(np.int64)

    flat = (np.arange(n_theta, dtype=np.int64)[None, :] * n_rho + rho_idx).ravel()
    acc = np.bincount(flat, minlength=n_theta * n_rho).reshape(n_theta, n_rho).astype(np.int32)

    votes_min = cfg.i("vision.hough_votes")
    inlier_tol = cfg.f("vision.hough_inlier_tol_px")
    band_px = cfg.f("vision.hough_band_px")
    max_gap = cfg.f("vision.hough_max_gap_px")
    min_len = cfg.f("vision.hough_min_len_px")
    sup_t = max(1, int(round(math.radians(5.0) / theta_res)))
    sup_r = max(1, int(round((inlier_tol + 2 * rho_res) / rho_res)))

    px = xs_all.astype(np.float64)
    py = ys_all.astype(np.float64)
    alive = np.ones(n, dtype=bool)
    found: list[tuple[LineSegment2D, float]] = []

    for _ in range(_MAX_PEAKS):
        peak = int(np.argmax(acc))
        ti, ri = divmod(peak, n_rho)
        if acc[ti, ri] < votes_min:
            break
        theta = ti * theta_res
        rho_val = ri * rho_res - diag
        # suppress the peak neighbourhood so parallel bins don't re-fire
        t_lo, t_hi = max(0, ti - sup_t), min(n_theta, ti + sup_t + 1)
        r_lo, r_hi = max(0, ri - sup_r), min(n_rho, ri + sup_r + 1)
        acc[t_lo:t_hi, r_lo:r_hi] = 0

        c, s = math.cos(theta), math.sin(theta)
        d = np.abs(px * c + py * s - rho_val)
        inl = alive & (d <= inlier_tol)
        if int(inl.sum()) < votes_min:
            continue
        ix, iy = px[inl], py[inl]
        # walk along the line, splitting at gaps
        t = -ix * s + iy * c
        order = np.argsort(t, kind="stable")
        ts = t[order]
        breaks = np.nonzero(np.diff(ts) > max_gap)[0]
        start = 0
        run_slices = []
        for b in breaks:
            run_slices.append((start, b + 1))
            start = b + 1
        run_slices.append((start, len(ts)))
        for a, b in run_slices:
            if b - a < 2 or ts[b - 1] - ts[a] < min_len:
                continue
            sel = order[a:b]
            seg = _fit_segment(ix[sel], iy[sel])
            if seg is None or seg.length < min_len:
                continue
            seg2, used, half = _grow_to_band(seg, px, py, alive, band_px, max_gap)
            if seg2 is not None and seg2.length >= min_len:
                found.append((seg2, half))
                alive[used] = False

    return _merge_with_width(found, cfg)


def hough_segments(mask: np.ndarray, cfg: Config) -> list[LineSegment2D]:
    """All merged line segments at least ``vision.hough_min_len_px`` long."""
    return [seg for seg, _ in hough_segments_with_width(mask, cfg)]


def _merge_with_width(
    pairs: list[tuple[LineSegment2D, float]], cfg: Config
) -> list[tuple[LineSegment2D, float]]:
    angle_tol = cfg.f("vision.merge_angle_rad")
    gap_tol = cfg.f("vision.merge_gap_px")
    perp_tol = cfg.f("vision.merge_perp_px")

    items = sorted(pairs, key=lambda p: (-p[0].length, p[0].x1, p[0].y1))
    changed = True
    while changed:
        changed = False
        out: list[tuple[LineSegment2D, float]] = []
        for seg, width in items:
            merged = False
            for i, (other, ow) in enumerate(out):
                if _mergeable(seg, other, angle_tol, gap_tol, perp_tol):
                    out[i] = (_fuse(seg, other), max(width, ow))
                    merged = True
                    changed = True
                    break
            if not merged:
                out.append((seg, width))
        items = sorted(out, key=lambda p: (-p[0].length, p[0].x1, p[0].y1))
    return items


def merge_segments(segments: list[LineSegment2D], cfg: Config) -> list[LineSegment2D]:
    """Fuse collinear neighbours until nothing merges (idempotent)."""
    return [seg for seg, _ in _merge_with_width([(s, 0.0) for s in segments], cfg)]


def _mergeable(a: LineSegment2D, b: LineSegment2D, angle_tol: float, gap_tol: float, perp_tol: float) -> bool:
    if _angle_diff(a.angle, b.angle) > angle_tol:
        return False
    # perpendicular offset of b's midpoint from a's carrier line
    ax, ay = a.x2 - a.x1, a.y2 - a.y1
    norm = math.hypot(ax, ay)
    nx, ny = -ay / norm, ax / norm
    mbx, mby = b.midpoint
    if abs((mbx - a.x1) * nx + (mby - a.y1) * ny) > perp_tol:
        return False
    # along-line gap between projection intervals
    ux, uy = ax / norm, ay / norm
    ta = sorted((0.0, (a.x2 - a.x1) * ux + (a.y2 - a.y1) * uy))
    tb = sorted(((b.x1 - a.x1) * ux + (b.y1 - a.y1) * uy, (b.x2 - a.x1) * ux + (b.y2 - a.y1) * uy))
    gap = max(ta[0], tb[0]) - min(ta[1], tb[1])
    return gap <= gap_tol


def _fuse(a: LineSegment2D, b: LineSegment2D) -> LineSegment2D:
    xs = np.array([a.x1, a.x2, b.x1, b.x2])
    ys = np.array([a.y1, a.y2, b.y1, b.y2])
    seg = _fit_segment(xs, ys)
    assert seg is not None
    return seg


def detect_lines(mask: np.ndarray, cfg: Config) -> list[LineSegment2D]:
    """Long-line detector: Hough segments filtered to the localisation set."""
    min_len = cfg.f("vision.min_line_len_px")
    return [s for s in hough_segments(mask, cfg) if s.length >= min_len]

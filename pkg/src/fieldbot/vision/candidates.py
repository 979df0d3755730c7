"""Sliding-window candidate proposal over the white-pixel integral image.

Windows at a few fixed scales slide with 50% overlap; any window whose
white-pixel density exceeds the threshold becomes a seed box.  Seed boxes
that touch (within a small merge radius) are unioned, then each union is
shrunk to the tight bounding box of the white pixels it contains, so the
reported fill ratio is meaningful for the downstream classifier.
"""

from __future__ import annotations

import numpy as np

from ..core import Config
from .types import Candidate, FieldBoundary, IntegralImage


def _window_seeds(ii: IntegralImage, scale: int, density_min: float) -> list[tuple[int, int, int, int]]:
    w, h = ii.width, ii.height
    if scale > w or scale > h:
        return []
    stride = max(1, scale // 2)
    xs = np.arange(0, w - scale + 1, stride)
    ys = np.arange(0, h - scale + 1, stride)
    t = ii.table
    # rect sums for the whole position grid in one shot
    sums = (
        t[np.ix_(ys + scale, xs + scale)]
        - t[np.ix_(ys, xs + scale)]
        - t[np.ix_(ys + scale, xs)]
        + t[np.ix_(ys, xs)]
    )
    dense = sums > density_min * scale * scale
    found = np.argwhere(dense)
    return [(int(xs[j]), int(ys[i]), scale, scale) for i, j in found]


def _merge_boxes(boxes: list[tuple[int, int, int, int]], radius: int) -> list[tuple[int, int, int, int]]:
    """Union boxes whose *originals* touch, via connected components.

    Components are formed on the overlap graph of the input boxes, so two
    structures merge only when some of their original boxes touch; a
    growing union cannot swallow unrelated neighbours.
    """
    n = len(boxes)
    arr = np.asarray(boxes, dtype=np.int64)
    x0, y0 = arr[:, 0], arr[:, 1]
    x1, y1 = arr[:, 0] + arr[:, 2], arr[:, 1] + arr[:, 3]
    touch = (
        (x0[:, None] < x1[None, :] + radius)
        & (x0[None, :] < x1[:, None] + radius)
        & (y0[:, None] < y1[None, :] + radius)
        & (y0[None, :] < y1[:, None] + radius)
    )
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in zip(*np.nonzero(np.triu(touch, k=1))):
        ri, rj = find(int(i)), find(int(j))
        if ri != rj:
            parent[rj] = ri

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    out = []
    for members in groups.values():
        x = min(boxes[i][0] for i in members)
        y = min(boxes[i][1] for i in members)
        x2 = max(boxes[i][0] + boxes[i][2] for i in members)
        y2 = max(boxes[i][1] + boxes[i][3] for i in members)
        out.append((x, y, x2 - x, y2 - y))
    return sorted(out)


def _tight_shrink(ii: IntegralImage, box: tuple[int, int, int, int]) -> tuple[int, int, int, int] | None:
    """Shrink a box to the bounding box of the white pixels inside it."""
    x, y, w, h = box
    t = ii.table
    rows = t[y + 1 : y + h + 1, x + w] - t[y : y + h, x + w] - t[y + 1 : y + h + 1, x] + t[y : y + h, x]
    cols = t[y + h, x + 1 : x + w + 1] - t[y + h, x : x + w] - t[y, x + 1 : x + w + 1] + t[y, x : x + w]
    nz_r = np.nonzero(rows)[0]
    nz_c = np.nonzero(cols)[0]
    if len(nz_r) == 0 or len(nz_c) == 0:
        return None
    y0, y1 = y + int(nz_r[0]), y + int(nz_r[-1]) + 1
    x0, x1 = x + int(nz_c[0]), x + int(nz_c[-1]) + 1
    return (x0, y0, x1 - x0, y1 - y0)


def select_candidates(ii: IntegralImage, boundary: FieldBoundary, cfg: Config) -> list[Candidate]:
    """Propose merged, tightened candidate boxes sorted by white count.

    ``ii`` must be built over the white mask already restricted to at or
    below the field boundary, so windows above the field contribute
    nothing by construction.
    """
    density_min = cfg.f("vision.density_min")
    seeds: list[tuple[int, int, int, int]] = []
    for scale in cfg.ints("vision.window_scales"):
        seeds.extend(_window_seeds(ii, int(scale), density_min))
    if not seeds:
        return []

    # shrink every fired window to its local white bounding box first, so
    # merging joins actual blobs instead of chaining along sparse windows
    shrunk: set[tuple[int, int, int, int]] = set()
    for box in seeds:
        tight = _tight_shrink(ii, box)
        if tight is not None:
            shrunk.add(tight)

    out: list[Candidate] = []
    for box in _merge_boxes(sorted(shrunk), cfg.i("vision.merge_radius_px")):
        tight = _tight_shrink(ii, box)
        if tight is None:
            continue
        x, y, w, h = tight
        count = ii.rect_sum(x, y, w, h)
        if count > 0:
            out.append(Candidate(x=x, y=y, w=w, h=h, white_pixel_count=count))
    out.sort(key=lambda c: (-c.white_pixel_count, c.x, c.y))
    return out

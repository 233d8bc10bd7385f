"""Seeded point-set generators for the CLI and the test harness.

All modes emit integer coordinates in [0, 10^6], resampling until the
set is in general position, and are deterministic for a given
(n, seed, mode, colored) combination.
"""

from __future__ import annotations

import math
import random
from typing import List, Optional

from .geom import GeomError, Point, PointSet, convex_hull, \
    is_general_position

COORD_MAX = 1_000_000
MODES = ("uniform", "convex", "clustered")


def _finish(pts: List[Point], colored: bool) -> PointSet:
    if not colored:
        return PointSet(pts)
    # split by x so the two classes are linearly separated, which is what
    # the two-colored constructions want from their input
    order = sorted(range(len(pts)), key=lambda i: (pts[i].x, pts[i].y))
    half = len(pts) // 2
    reds = set(order[:half])
    return PointSet(
        Point(p.id, p.x, p.y, "r" if i in reds else "b")
        for i, p in enumerate(pts))


def _uniform(rng: random.Random, n: int) -> List[Point]:
    while True:
        pts = [Point(i, rng.randint(0, COORD_MAX), rng.randint(0, COORD_MAX))
               for i in range(n)]
        try:
            ps = PointSet(pts)
        except GeomError:
            continue
        if is_general_position(ps):
            return pts


def _convex(rng: random.Random, n: int) -> List[Point]:
    cx = cy = COORD_MAX // 2
    r = COORD_MAX // 2 - 2
    while True:
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        if n > 1 and min(
                (b - a for a, b in zip(angles, angles[1:])),
                default=1.0) < 1e-4:
            continue
        pts = [Point(i, cx + round(r * math.cos(a)),
                     cy + round(r * math.sin(a)))
               for i, a in enumerate(angles)]
        try:
            ps = PointSet(pts)
        except GeomError:
            continue
        if is_general_position(ps) and len(convex_hull(ps)) == n:
            return pts


def _clustered(rng: random.Random, n: int) -> List[Point]:
    k = max(2, min(5, round(math.sqrt(n / 3)) or 2))
    spread = COORD_MAX // 12
    while True:
        centers = [(rng.randint(spread, COORD_MAX - spread),
                    rng.randint(spread, COORD_MAX - spread))
                   for _ in range(k)]
        pts = []
        for i in range(n):
            cx, cy = centers[i % k]
            pts.append(Point(i, cx + rng.randint(-spread, spread),
                             cy + rng.randint(-spread, spread)))
        try:
            ps = PointSet(pts)
        except GeomError:
            continue
        if is_general_position(ps):
            return pts


def generate(n: int, seed: int = 0, mode: str = "uniform",
             colored: bool = False) -> PointSet:
    """Random general-position set; modes: uniform, convex, clustered."""
    if n < 1:
        raise GeomError(f"need n >= 1, got {n}")
    if mode not in MODES:
        raise GeomError(f"unknown mode {mode!r}; pick one of {MODES}")
    if n > 5000:
        raise GeomError(f"n={n}: the general-position recheck is quadratic; "
                        f"this generator stops at 5000")
    rng = random.Random(f"{mode}:{n}:{seed}")
    builder = {"uniform": _uniform, "convex": _convex,
               "clustered": _clustered}[mode]
    return _finish(builder(rng, n), colored)

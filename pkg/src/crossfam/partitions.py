"""Line partitions of planar point sets, all verified exactly.

The constructions need a small zoo of partition tools:

* longest monotone subsequence (patience sorting),
* halving lines with a prescribed positive-side count,
* simultaneous two-set division by one line (candidate enumeration),
* six sectors around a common center from three concurrent lines,
* six regions from two parallel lines plus a transversal,
* the four-corner partition (corner regions of equal size w).

Every partition routine re-checks its own postcondition with exact sign
tests before returning, and raises SearchError instead of ever returning an
unverified result.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .geom import CCW, COLLINEAR, CW, GeomError, Line, side_counts
from . import _kernels


class SearchError(RuntimeError):
    """A partition/construction search exhausted its candidates."""


# Integer direction fan with a reasonable angular spread, used wherever a
# search wants to retry under a rotated frame.  Exact coordinates only.
DIRECTION_FAN = [
    (1, 0), (4, 1), (2, 1), (4, 3), (1, 1), (3, 4), (1, 2), (1, 4),
    (0, 1), (-1, 4), (-1, 2), (-3, 4), (-1, 1), (-4, 3), (-2, 1), (-4, 1),
]


@dataclass
class MonotoneResult:
    indices: List[int]
    direction: str  # "ascending" | "descending"

    def __len__(self):
        return len(self.indices)


@dataclass
class PartitionResult:
    lines: List[Line]
    regions: Dict[str, List[int]]
    counts: Dict[str, int] = field(default_factory=dict)
    discarded: List[int] = field(default_factory=list)
    # Affine frame used internally (row vectors of the linear map), recorded
    # so downstream consumers can reproduce the frame ordering exactly.
    frame: Optional[Tuple[Tuple[int, int], Tuple[int, int]]] = None

    def __post_init__(self):
        if not self.counts:
            self.counts = {k: len(v) for k, v in self.regions.items()}


def _longest_ascending(values):
    """Indices of one longest strictly-ascending subsequence (patience)."""
    tails = []        # tails[k] = value ending a best length-(k+1) run
    tail_idx = []     # index of that value
    prev = [-1] * len(values)
    for i, v in enumerate(values):
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
            tail_idx.append(i)
        else:
            tails[k] = v
            tail_idx[k] = i
        prev[i] = tail_idx[k - 1] if k > 0 else -1
    out = []
    i = tail_idx[-1]
    while i != -1:
        out.append(i)
        i = prev[i]
    return out[::-1]


def monotone_subsequence(values: Sequence) -> MonotoneResult:
    """A longest strictly monotone subsequence of distinct values.

    Any n distinct values admit one of length at least ceil(sqrt(n)), and
    the search is exact, so the result is never shorter than that.
    Ascending wins ties.
    """
    vals = list(values)
    if not vals:
        raise GeomError("monotone_subsequence of empty sequence")
    if len(set(vals)) != len(vals):
        raise GeomError("values must be pairwise distinct")
    up = _longest_ascending(vals)
    down = _longest_ascending([-v for v in vals])
    if len(up) >= len(down):
        return MonotoneResult(up, "ascending")
    return MonotoneResult(down, "descending")


# ------------------------------------------------------------------ lines

def _perturbed_direction(dx: int, dy: int, coord_bound: int) -> Tuple[int, int]:
    """Rotate (dx,dy) by an exact 'infinitesimal' so projections are distinct."""
    m = 2 * coord_bound * (abs(dx) + abs(dy)) + 1
    return dx * m - dy, dy * m + dx


def halving_line(ps, k: int, direction: Tuple[int, int]) -> Line:
    """A line orthogonal to `direction` with exactly k points strictly on the
    positive (direction) side, passing through no point.

    Projection ties are broken by an exact perturbed direction.
    """
    pts = list(ps)
    n = len(pts)
    dx, dy = direction
    if dx == 0 and dy == 0:
        raise GeomError("zero direction")
    if not 0 <= k <= n:
        raise GeomError(f"k={k} outside [0, {n}]")
    proj = sorted(dx * p.x + dy * p.y for p in pts)
    if any(proj[i] == proj[i + 1] for i in range(n - 1)):
        bound = max(max(abs(p.x), abs(p.y)) for p in pts) + 1
        dx, dy = _perturbed_direction(dx, dy, bound)
        proj = sorted(dx * p.x + dy * p.y for p in pts)
    # positive side = large projection; cut between ranks n-k-1 and n-k
    if k == 0:
        c = -(2 * proj[-1] + 1)
    elif k == n:
        c = -(2 * proj[0] - 1)
    else:
        c = -(proj[n - k - 1] + proj[n - k])
    line = Line.of(2 * dx, 2 * dy, c)
    left, _right = side_counts(line, pts)
    if left != k:
        raise SearchError(f"halving_line recount failed: {left} != {k}")
    return line


def _line_hits_any(line: Line, pts) -> bool:
    return any(line.value(p) == 0 for p in pts)


def megiddo_line(A, B, a: int, b: int, avoid=()) -> Line:
    """A line with exactly `a` points of A and `b` points of B strictly on
    its left (positive) side, through no point of A, B or `avoid`.

    Existence is guaranteed whenever A and B are themselves separated by a
    line (the only way this module uses it); for radially mixed sets some
    (a, b) targets are impossible (a point of B inside the hull of A rules
    out a = |A|, b = 0) and SearchError is raised.

    Candidate enumeration over point pairs: parallel 'shift' candidates
    (which can never contain a lattice point) first, then 'tilt' candidates
    rotated about pair midpoints.  O(n^3) overall, exact arithmetic, every
    hit re-verified before returning.
    """
    pa = list(A)
    pb = list(B)
    if not 0 <= a <= len(pa) or not 0 <= b <= len(pb):
        raise GeomError("requested counts out of range")
    pts = pa + pb
    n_a = len(pa)
    if not pts:
        raise GeomError("empty input")

    found = _kernels.megiddo_shift_search(pts, n_a, a, b)
    if found is not None:
        i, j, sigma, negate = found
        p, q = pts[i], pts[j]
        base = Line.through(p, q)
        aa, bb, cc = 3 * base.a, 3 * base.b, 3 * base.c - sigma
        if negate:
            aa, bb, cc = -aa, -bb, -cc
        line = Line.of(aa, bb, cc)
        if _check_megiddo(line, pa, pb, a, b):
            return line
        raise SearchError("shift candidate failed recount")  # pragma: no cover

    line = _megiddo_tilt_search(pts, n_a, a, b, list(avoid))
    if line is not None:
        return line
    raise SearchError(
        f"no line with ({a},{b}) of ({len(pa)},{len(pb)}) on its left")


def _check_megiddo(line, pa, pb, a, b):
    la, _ = side_counts(line, pa) if pa else (0, 0)
    lb, _ = side_counts(line, pb) if pb else (0, 0)
    return la == a and lb == b


def _megiddo_tilt_search(pts, n_a, a, b, avoid_pts):
    """Rotate lines about pair midpoints; covers mixed-side assignments the
    parallel shifts cannot.  Exact big-integer arithmetic throughout."""
    n = len(pts)
    n_b = n - n_a
    everything = pts + avoid_pts
    for i in range(n):
        p = pts[i]
        for j in range(i + 1, n):
            q = pts[j]
            dx, dy = q.x - p.x, q.y - p.y
            sx, sy = p.x + q.x, p.y + q.y
            # side value of z is N*f0(z) + eps*f1(z) with
            #   f0 = cross(d, 2z-p-q),  f1 = cross(perp d, 2z-p-q);
            # N beats every |f1|, so only p and q (where f0 = 0) depend
            # on the tilt sign eps.
            big = 1 + max(
                abs(-dy * (2 * z.y - sy) - dx * (2 * z.x - sx))
                for z in everything)
            for eps in (1, -1):
                dxx = big * dx - eps * dy
                dyy = big * dy + eps * dx
                la = lb = 0
                skip = False
                for t in range(n):
                    z = pts[t]
                    v = dxx * (2 * z.y - sy) - dyy * (2 * z.x - sx)
                    if v == 0:  # pragma: no cover - excluded by N choice
                        skip = True
                        break
                    if v > 0:
                        if t < n_a:
                            la += 1
                        else:
                            lb += 1
                if skip:
                    continue
                for negate in (False, True):
                    ca, cb = (n_a - la, n_b - lb) if negate else (la, lb)
                    if ca != a or cb != b:
                        continue
                    aa, bb, cc = -2 * dyy, 2 * dxx, dyy * sx - dxx * sy
                    if negate:
                        aa, bb, cc = -aa, -bb, -cc
                    line = Line.of(aa, bb, cc)
                    if _line_hits_any(line, avoid_pts):
                        continue
                    if _check_megiddo(line, pts[:n_a], pts[n_a:], a, b):
                        return line
    return None


# --------------------------------------------------- six concurrent sectors

def _angular_key(vx, vy):
    """(halfplane, ...) sort key pieces for exact CCW order; cmp via cross."""
    upper = (vy > 0) or (vy == 0 and vx > 0)
    return 0 if upper else 1


def _ccw_sorted(marks):
    """Sort direction vectors CCW starting at +x axis, exactly."""
    from functools import cmp_to_key

    def cmp(u, v):
        hu, hv = _angular_key(u[0], u[1]), _angular_key(v[0], v[1])
        if hu != hv:
            return -1 if hu < hv else 1
        c = u[0] * v[1] - u[1] * v[0]
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    return sorted(marks, key=cmp_to_key(cmp))


def ceder_six_sectors(ps, q: int) -> PartitionResult:
    """Three concurrent lines whose six open sectors each hold >= q points.

    Candidate centers are intersections of halving lines over a direction
    fan; for each center the three cut directions are found by an exact
    angular sweep.  Fails loudly if no candidate center admits a valid
    partition.
    """
    pts = list(ps)
    m = len(pts)
    if q < 0:
        raise GeomError("q must be nonnegative")
    if m < 6 * q + 6:
        raise GeomError(f"need n >= 6q+6 = {6 * q + 6}, got {m}")
    q = max(q, 1)  # strictly positive sectors keep the cuts distinct

    halves = []
    for d in DIRECTION_FAN[::2]:  # eight directions over a half-turn
        try:
            halves.append(halving_line(pts, m // 2, d))
        except SearchError:  # pragma: no cover - recount cannot really fail
            continue

    centers = []
    for i in range(len(halves)):
        for j in range(i + 1, len(halves)):
            c = _line_intersection(halves[i], halves[j])
            if c is not None:
                centers.append(c)
    # deterministic order: centroid-closest first (good centers come early)
    cx = Fraction(sum(p.x for p in pts), m)
    cy = Fraction(sum(p.y for p in pts), m)
    centers.sort(key=lambda c: (c[0] - cx) ** 2 + (c[1] - cy) ** 2)

    for center in centers:
        res = _sectors_around(pts, center, q)
        if res is not None:
            return res
    raise SearchError(f"no six-sector partition with q={q} found")


def _line_intersection(l1: Line, l2: Line):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(-l1.c * l2.b + l2.c * l1.b, det)
    y = Fraction(-l1.a * l2.c + l2.a * l1.c, det)
    return (x, y)


def _sectors_around(pts, center, q):
    """Try to cut six sectors of >= q points around one exact center."""
    cx, cy = center
    den = cx.denominator * cy.denominator // math.gcd(
        cx.denominator, cy.denominator)
    cxn = int(cx * den)
    cyn = int(cy * den)

    # direction vector of each point from the center, denominator cleared
    vecs = []
    for idx, p in enumerate(pts):
        vx = p.x * den - cxn
        vy = p.y * den - cyn
        if vx == 0 and vy == 0:
            return None  # center coincides with a point
        vecs.append((vx, vy, idx))

    # 2m marks: each point direction plus its antipode; a collinear pair
    # (same or opposite ray) makes the sweep ill-defined -> reject center
    marks = []
    for vx, vy, idx in vecs:
        marks.append((vx, vy, idx, 0))   # direct
        marks.append((-vx, -vy, idx, 1))  # antipodal proxy
    marks = _ccw_sorted(marks)
    mm = len(marks)
    for k in range(mm):
        u = marks[k]
        v = marks[(k + 1) % mm]
        if u[0] * v[1] - u[1] * v[0] == 0:
            return None  # shared ray through the center

    m = len(pts)
    # prefix counts of direct/antipodal marks over the doubled circle
    kinds = [mk[3] for mk in marks] * 2
    pref_d = [0]
    pref_p = [0]
    for kd in kinds:
        pref_d.append(pref_d[-1] + (1 - kd))
        pref_p.append(pref_p[-1] + kd)
    pos_d = [i for i, kd in enumerate(kinds) if kd == 0]
    pos_p = [i for i, kd in enumerate(kinds) if kd == 1]

    def kth_at_or_after(pos, count_before, k_needed):
        # smallest mark index with k_needed marks of this kind since start
        t = count_before + k_needed
        if t - 1 >= len(pos):
            return None
        return pos[t - 1]

    for start in range(m):
        # window [start, start+m) is exactly one mark per point
        end = start + m
        d0, p0 = pref_d[start], pref_p[start]
        # earliest first cut with q direct and q proxy marks before it
        i1 = kth_at_or_after(pos_d, d0, q)
        i2 = kth_at_or_after(pos_p, p0, q)
        if i1 is None or i2 is None:
            continue
        cut1 = max(i1, i2) + 1  # cut sits after this many marks
        if cut1 > end:
            continue
        d1, p1 = pref_d[cut1], pref_p[cut1]
        i1 = kth_at_or_after(pos_d, d1, q)
        i2 = kth_at_or_after(pos_p, p1, q)
        if i1 is None or i2 is None:
            continue
        cut2 = max(i1, i2) + 1
        if cut2 > end:
            continue
        # remaining marks of the window must still hold q of each kind
        if pref_d[end] - pref_d[cut2] < q or pref_p[end] - pref_p[cut2] < q:
            continue
        return _build_sector_partition(pts, marks, (cxn, cyn, den),
                                       start, cut1, cut2, q)
    return None


def _gap_direction(marks, gap_index):
    """Exact direction strictly inside the angular gap before marks[i]."""
    mm = len(marks)
    u = marks[(gap_index - 1) % mm]
    v = marks[gap_index % mm]
    return (u[0] + v[0], u[1] + v[1])


def _build_sector_partition(pts, marks, center_ints, start, cut1, cut2, q):
    cxn, cyn, den = center_ints
    mm = len(marks)
    ray_gaps = [start, cut1, cut2]
    lines = []
    for g in ray_gaps:
        dx, dy = _gap_direction(marks, g % mm)
        # line through the rational center with direction (dx, dy)
        aa = -dy * den
        bb = dx * den
        cc = dy * cxn - dx * cyn
        lines.append(Line.of(aa, bb, cc))

    # classify each point into one of six angular intervals via mark order
    w1 = cut1 - start
    w2 = cut2 - start
    regions = {f"S{i}": [] for i in range(1, 7)}
    for mk_off in range(len(pts)):
        mk = marks[(start + mk_off) % mm]
        sector = 0 if mk_off < w1 else (1 if mk_off < w2 else 2)
        # direct mark -> the point is in this half-sector; antipodal proxy
        # -> the point sits in the opposite sector (index + 3)
        s = sector if mk[3] == 0 else sector + 3
        regions[f"S{s + 1}"].append(pts[mk[2]].id)

    result = PartitionResult(lines=lines, regions=regions)
    _verify_sector_partition(pts, result, q)
    return result


def _verify_sector_partition(pts, result, q):
    by_id = {p.id: p for p in pts}
    seen = set()
    for label, ids in result.regions.items():
        if len(ids) < q:
            raise SearchError(f"sector {label} holds {len(ids)} < {q}")
        seen.update(ids)
    if len(seen) != len(pts):
        raise SearchError("sector partition lost points")
    # no point on any line; sign vector constant per region
    sigs = {}
    for label, ids in result.regions.items():
        vecs = set()
        for i in ids:
            p = by_id[i]
            sig = tuple(l.side(p) for l in result.lines)
            if COLLINEAR in sig:
                raise SearchError(f"point {i} lies on a sector line")
            vecs.add(sig)
        if len(vecs) != 1:
            raise SearchError(f"sector {label} spans sign patterns {vecs}")
        sigs[label] = vecs.pop()
    if len(set(sigs.values())) != 6:
        raise SearchError("sectors do not have six distinct sign patterns")
    # concurrency is exact by construction: all lines pass through the center


# ------------------------------------- two parallel lines plus a transversal

REGION_LABELS = ("S1", "S2", "S3", "S4", "S5", "S6")
# S1 S2 S3 run left-to-right above the transversal, S4 S5 S6 clockwise below
# (S4 right, S5 middle, S6 left), matching the corner layout the
# constructions expect.


def parallel_partition_six(ps, quotas: Optional[Sequence[int]] = None) -> PartitionResult:
    """Two parallel lines and a transversal giving six regions.

    Default quotas: every region holds at least ceil(n/6) - 1 points.
    Callers may pass per-region quotas (S1..S6 order); region S_i then holds
    at least quotas[i-1] points.  Search: direction fan x transversal
    position sweep x greedy column cuts, each candidate verified exactly.
    """
    pts = list(ps)
    n = len(pts)
    if quotas is None:
        if n < 12:
            raise GeomError(f"need n >= 12, got {n}")
        q = (n + 5) // 6 - 1
        quotas = (q, q, q, q, q, q)
    quotas = tuple(quotas)
    if len(quotas) != 6:
        raise GeomError("quotas must have six entries")
    if sum(quotas) > n:
        raise SearchError(f"quotas {quotas} exceed n={n}")

    q1, q2, q3, q4, q5, q6 = quotas
    top_min = q1 + q2 + q3
    bot_min = q4 + q5 + q6
    bound = max(max(abs(p.x), abs(p.y)) for p in pts) + 1

    for d in DIRECTION_FAN:
        pdx, pdy = _perturbed_direction(d[0], d[1], bound)
        order = sorted(range(n), key=lambda i: pdx * pts[i].x + pdy * pts[i].y)
        u = [pdx * pts[i].x + pdy * pts[i].y for i in order]
        # transversal: perpendicular to the column direction, perturbed the
        # same exact way so projections are distinct; sorted once per d
        tdx, tdy = _perturbed_direction(-d[1], d[0], bound)
        tvals = [tdx * p.x + tdy * p.y for p in pts]
        trank = sorted(range(n), key=lambda i: tvals[i])
        tsorted = [tvals[i] for i in trank]
        for n_top in range(top_min, n - bot_min + 1):
            ell_t = _column_line(tdx, tdy, tsorted, n - n_top)
            thresh = tsorted[n - n_top - 1] if n_top < n else None
            is_top = [
                (thresh is None or tvals[i] > thresh) for i in order]
            res = _greedy_columns(pts, order, u, is_top, (pdx, pdy),
                                  ell_t, quotas)
            if res is not None:
                return res
    # the cheap sweep above only tries transversals perpendicular to the
    # column direction; when quotas are tight that can miss.  Second stage:
    # per direction, search transversals of every slope (pair-line
    # candidates), complete for that column direction.
    for d in DIRECTION_FAN:
        pdx, pdy = _perturbed_direction(d[0], d[1], bound)
        order = sorted(range(n), key=lambda i: pdx * pts[i].x + pdy * pts[i].y)
        u = [pdx * pts[i].x + pdy * pts[i].y for i in order]
        spts = [pts[i] for i in order]
        hit = _kernels.six_region_transversal_scan(spts, quotas)
        if hit is None:
            continue
        i, j, orient, si, sj = hit
        ell_t = _pair_split_line(spts[i], spts[j], spts, orient, si, sj)
        is_top = [ell_t.side(p) == CCW for p in spts]
        res = _greedy_columns(pts, order, u, is_top, (pdx, pdy),
                              ell_t, quotas)
        if res is not None:
            return res
    raise SearchError(f"no parallel partition with quotas {quotas}")


def _pair_split_line(pi, pj, pts, orient, si, sj):
    """Exact line near the one through pi, pj realizing a perturbation cell.

    Every other point keeps (orient=+1) or flips (orient=-1) its side of the
    base pair-line; pi lands strictly on side si and pj on side sj (CCW=+1).
    Built as base*M + correction with M large enough that the correction
    never overrules a strict base side.
    """
    dx = pj.x - pi.x
    dy = pj.y - pi.y
    a0, b0 = -dy, dx
    c0 = -(a0 * pi.x + b0 * pi.y)
    # correction with value si*(dx^2+dy^2) at pi and sj*(dx^2+dy^2) at pj
    ta = (sj - si) * dx
    tb = (sj - si) * dy
    tc = si * (dx * pj.x + dy * pj.y) - sj * (dx * pi.x + dy * pi.y)
    m = 1 + 2 * max(abs(ta * p.x + tb * p.y + tc) for p in pts)
    return Line.of(m * orient * a0 + ta,
                   m * orient * b0 + tb,
                   m * orient * c0 + tc)


def _greedy_columns(pts, order, u, is_top, pdir, ell_t, quotas):
    n = len(order)
    q1, q2, q3, q4, q5, q6 = quotas
    top_pref = [0]
    for flag in is_top:
        top_pref.append(top_pref[-1] + (1 if flag else 0))

    def tops(i, j):  # tops among sorted positions [i, j)
        return top_pref[j] - top_pref[i]

    def bots(i, j):
        return (j - i) - tops(i, j)

    # smallest left block meeting S1/S6, largest right block start for S3/S4
    cut_a = None
    for i in range(n + 1):
        if tops(0, i) >= q1 and bots(0, i) >= q6:
            cut_a = i
            break
    if cut_a is None:
        return None
    cut_b = None
    for j in range(n, -1, -1):
        if tops(j, n) >= q3 and bots(j, n) >= q4:
            cut_b = j
            break
    if cut_b is None or cut_b < cut_a:
        return None
    if tops(cut_a, cut_b) < q2 or bots(cut_a, cut_b) < q5:
        return None

    pdx, pdy = pdir
    la = _column_line(pdx, pdy, u, cut_a)
    lb = _column_line(pdx, pdy, u, cut_b)
    regions = {k: [] for k in REGION_LABELS}
    for pos, i in enumerate(order):
        col = 0 if pos < cut_a else (1 if pos < cut_b else 2)
        if is_top[pos]:
            regions[("S1", "S2", "S3")[col]].append(pts[i].id)
        else:
            regions[("S6", "S5", "S4")[col]].append(pts[i].id)
    result = PartitionResult(lines=[la, lb, ell_t], regions=regions,
                             frame=((pdx, pdy), (-pdy, pdx)))
    _verify_parallel_partition(pts, result, quotas)
    return result


def _column_line(pdx, pdy, u, cut):
    """Column cut line with `cut` sorted projections strictly below it."""
    n = len(u)
    if cut == 0:
        c = -(2 * u[0] - 1)
    elif cut == n:
        c = -(2 * u[-1] + 1)
    else:
        c = -(u[cut - 1] + u[cut])
    # positive side = larger projection (right of the cut)
    return Line.of(2 * pdx, 2 * pdy, c)


def _verify_parallel_partition(pts, result, quotas):
    la, lb, lt = result.lines
    if la.a * lb.b - lb.a * la.b != 0:
        raise SearchError("column lines are not parallel")
    by_id = {p.id: p for p in pts}
    seen = set()
    for label, quota in zip(REGION_LABELS, quotas):
        ids = result.regions[label]
        if len(ids) < quota:
            raise SearchError(f"region {label}: {len(ids)} < quota {quota}")
        seen.update(ids)
    if len(seen) != len(pts):
        raise SearchError("parallel partition lost points")
    want = {
        "S1": (CW, CW, CCW), "S2": (CCW, CW, CCW), "S3": (CCW, CCW, CCW),
        "S4": (CCW, CCW, CW), "S5": (CCW, CW, CW), "S6": (CW, CW, CW),
    }
    for label, ids in result.regions.items():
        for i in ids:
            p = by_id[i]
            sig = (la.side(p), lb.side(p), lt.side(p))
            if COLLINEAR in sig:
                raise SearchError(f"point {i} on a partition line")
            if sig != want[label]:
                raise SearchError(
                    f"point {i} in {label} has sign pattern {sig}")


# ----------------------------------------------------- four-corner partition

def corner_bound(n: int) -> int:
    """Corner region size w for the four-corner partition."""
    return math.isqrt(n // 2 + 1) - 1


def four_corner_partition(ps) -> PartitionResult:
    """Two parallel column lines and one transversal with the four corner
    regions holding exactly w = isqrt(n/2+1)-1 points each and the top
    middle holding at least floor(n/2) - 2w.

    Realized with a sheared frame: the 2w extreme points on each side form
    the outer columns, one simultaneous-division line supplies the
    transversal, and an orientation flip rescues the top-middle quota.
    No points are discarded.
    """
    pts = list(ps)
    n = len(pts)
    w = corner_bound(n)
    if n < 8 or w < 1:
        raise GeomError(f"need n >= 8 (got n={n})")

    ymin = min(p.y for p in pts)
    ymax = max(p.y for p in pts)
    m_shear = ymax - ymin + 1
    for _attempt in range(4):
        res = _corner_partition_attempt(pts, n, w, m_shear)
        if res is not None:
            return res
        m_shear += 1
    raise SearchError("four-corner partition failed (degenerate frames)")


def _corner_partition_attempt(pts, n, w, m_shear):
    u = sorted(range(n), key=lambda i: m_shear * pts[i].x + pts[i].y)
    uval = [m_shear * pts[i].x + pts[i].y for i in u]
    left_block = [pts[i] for i in u[: 2 * w]]
    right_block = [pts[i] for i in u[n - 2 * w:]]
    middle = [pts[i] for i in u[2 * w: n - 2 * w]]

    ell_t = megiddo_line(left_block, right_block, w, w, avoid=middle)
    # frame must stay invertible: u-direction (m,1) vs transversal normal
    if m_shear * ell_t.b - ell_t.a == 0:
        return None

    mid_above = sum(1 for p in middle if ell_t.side(p) == CCW)
    need = n // 2 - 2 * w
    if mid_above < need:
        ell_t = Line(-ell_t.a, -ell_t.b, -ell_t.c)
        mid_above = len(middle) - mid_above
        if mid_above < need:  # pragma: no cover - pigeonhole forbids this
            return None

    la = _column_line(m_shear, 1, uval, 2 * w)
    lb = _column_line(m_shear, 1, uval, n - 2 * w)
    regions = {k: [] for k in REGION_LABELS}
    for p in left_block:
        regions["S1" if ell_t.side(p) == CCW else "S6"].append(p.id)
    for p in middle:
        regions["S2" if ell_t.side(p) == CCW else "S5"].append(p.id)
    for p in right_block:
        regions["S3" if ell_t.side(p) == CCW else "S4"].append(p.id)

    result = PartitionResult(
        lines=[la, lb, ell_t], regions=regions,
        frame=((m_shear, 1), (ell_t.a, ell_t.b)))
    for corner in ("S1", "S3", "S4", "S6"):
        if result.counts[corner] != w:
            raise SearchError(f"corner {corner} holds {result.counts[corner]} != {w}")
    if result.counts["S2"] < need:
        raise SearchError(f"top middle holds {result.counts['S2']} < {need}")
    _verify_parallel_partition(pts, result, (w, need, w, w, 0, w))
    return result

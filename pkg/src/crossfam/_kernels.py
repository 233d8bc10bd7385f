"""Hot inner loops, compiled with numba when available.

Every kernel has a pure-Python twin used when numba is missing or the
coordinates are too large for safe int64 arithmetic.  Set CROSSFAM_NO_NUMBA=1
to force the fallbacks (the benchmark script compares both).
"""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from ._accel import HAS_NUMBA, jit

# Shift-candidate values stay below ~1e14 for |coords| up to this bound,
# comfortably inside int64.
KERNEL_COORD_LIMIT = 2_000_000


def _coords_ok(pts) -> bool:
    return all(abs(p.x) <= KERNEL_COORD_LIMIT and abs(p.y) <= KERNEL_COORD_LIMIT
               for p in pts)


# ------------------------------------------------------- megiddo shift scan

@jit
def _shift_scan(xs, ys, n_a, a, b):  # pragma: no cover - compiled
    n = xs.shape[0]
    n_b = n - n_a
    for i in range(n):
        for j in range(i + 1, n):
            a0 = -(ys[j] - ys[i])
            b0 = xs[j] - xs[i]
            c0 = -(a0 * xs[i] + b0 * ys[i])
            pos_a = 0
            pos_b = 0
            for t in range(n):
                v = a0 * xs[t] + b0 * ys[t] + c0
                if v > 0:
                    if t < n_a:
                        pos_a += 1
                    else:
                        pos_b += 1
            # sigma=+1 puts the pair strictly right, sigma=-1 strictly left
            for s in range(2):
                sigma = 1 - 2 * s
                la = pos_a
                lb = pos_b
                if sigma == -1:
                    if i < n_a:
                        la += 1
                    else:
                        lb += 1
                    if j < n_a:
                        la += 1
                    else:
                        lb += 1
                if la == a and lb == b:
                    return i, j, sigma, 0
                if n_a - la == a and n_b - lb == b:
                    return i, j, sigma, 1
    return -1, -1, 0, 0


def _shift_scan_py(xs, ys, n_a, a, b):
    n = len(xs)
    n_b = n - n_a
    for i in range(n):
        for j in range(i + 1, n):
            a0 = -(ys[j] - ys[i])
            b0 = xs[j] - xs[i]
            c0 = -(a0 * xs[i] + b0 * ys[i])
            pos_a = pos_b = 0
            for t in range(n):
                if a0 * xs[t] + b0 * ys[t] + c0 > 0:
                    if t < n_a:
                        pos_a += 1
                    else:
                        pos_b += 1
            for sigma in (1, -1):
                la, lb = pos_a, pos_b
                if sigma == -1:
                    if i < n_a:
                        la += 1
                    else:
                        lb += 1
                    if j < n_a:
                        la += 1
                    else:
                        lb += 1
                if la == a and lb == b:
                    return i, j, sigma, 0
                if n_a - la == a and n_b - lb == b:
                    return i, j, sigma, 1
    return -1, -1, 0, 0


def megiddo_shift_search(pts, n_a: int, a: int, b: int
                         ) -> Optional[Tuple[int, int, int, int]]:
    """First (i, j, sigma, negate) whose shifted pair-line splits A and B
    as (a, b) on the left; None if no shift candidate works."""
    if HAS_NUMBA and _coords_ok(pts):
        xs = np.array([p.x for p in pts], dtype=np.int64)
        ys = np.array([p.y for p in pts], dtype=np.int64)
        i, j, sigma, neg = _shift_scan(xs, ys, n_a, a, b)
    else:
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        i, j, sigma, neg = _shift_scan_py(xs, ys, n_a, a, b)
    if i < 0:
        return None
    return int(i), int(j), int(sigma), int(neg)


# ----------------------------------------------- six-region transversal scan

@jit
def _six_above(pre, t, i, j, si_pos, sj_pos, neg):  # pragma: no cover
    # points "above" among the first t column positions, for the cell where
    # far points keep (neg=0) or flip (neg=1) the base side and the defining
    # pair lands on si/sj
    a = pre[t]
    pc = 0
    if i < t:
        pc += 1
    if j < t:
        pc += 1
    if neg:
        a = t - pc - a
    if i < t and si_pos:
        a += 1
    if j < t and sj_pos:
        a += 1
    return a


@jit
def _six_scan(xs, ys, q1, q2, q3, q4, q5, q6):  # pragma: no cover - compiled
    n = xs.shape[0]
    pre = np.empty(n + 1, dtype=np.int64)
    top_min = q1 + q2 + q3
    bot_min = q4 + q5 + q6
    for i in range(n):
        for j in range(i + 1, n):
            a0 = -(ys[j] - ys[i])
            b0 = xs[j] - xs[i]
            c0 = -(a0 * xs[i] + b0 * ys[i])
            pre[0] = 0
            for t in range(n):
                v = a0 * xs[t] + b0 * ys[t] + c0
                pre[t + 1] = pre[t] + (1 if v > 0 else 0)
            for panel in range(8):
                neg = 1 if panel >= 4 else 0
                si_pos = panel & 1
                sj_pos = (panel >> 1) & 1
                tot = _six_above(pre, n, i, j, si_pos, sj_pos, neg)
                if tot < top_min or n - tot < bot_min:
                    continue
                # smallest prefix with >= q1 above and >= q6 below; both
                # counts are nondecreasing in the prefix length
                lo, hi = 0, n
                while lo < hi:
                    mid = (lo + hi) // 2
                    if _six_above(pre, mid, i, j, si_pos, sj_pos, neg) >= q1:
                        hi = mid
                    else:
                        lo = mid + 1
                cut_a = lo
                lo, hi = 0, n
                while lo < hi:
                    mid = (lo + hi) // 2
                    if mid - _six_above(pre, mid, i, j, si_pos, sj_pos,
                                        neg) >= q6:
                        hi = mid
                    else:
                        lo = mid + 1
                if lo > cut_a:
                    cut_a = lo
                # largest suffix start with >= q3 above and >= q4 below
                lo, hi = 0, n
                while lo < hi:
                    mid = (lo + hi + 1) // 2
                    if tot - _six_above(pre, mid, i, j, si_pos, sj_pos,
                                        neg) >= q3:
                        lo = mid
                    else:
                        hi = mid - 1
                cut_b = lo
                lo, hi = 0, n
                while lo < hi:
                    mid = (lo + hi + 1) // 2
                    above = _six_above(pre, mid, i, j, si_pos, sj_pos, neg)
                    if (n - mid) - (tot - above) >= q4:
                        lo = mid
                    else:
                        hi = mid - 1
                if lo < cut_b:
                    cut_b = lo
                if cut_b < cut_a:
                    continue
                mid_above = (
                    _six_above(pre, cut_b, i, j, si_pos, sj_pos, neg)
                    - _six_above(pre, cut_a, i, j, si_pos, sj_pos, neg))
                if mid_above < q2:
                    continue
                if (cut_b - cut_a) - mid_above < q5:
                    continue
                return i, j, panel
    return -1, -1, -1


def _six_scan_py(xs, ys, q1, q2, q3, q4, q5, q6):
    n = len(xs)
    top_min = q1 + q2 + q3
    bot_min = q4 + q5 + q6

    for i in range(n):
        for j in range(i + 1, n):
            a0 = -(ys[j] - ys[i])
            b0 = xs[j] - xs[i]
            c0 = -(a0 * xs[i] + b0 * ys[i])
            pre = [0]
            for t in range(n):
                pre.append(pre[-1] +
                           (1 if a0 * xs[t] + b0 * ys[t] + c0 > 0 else 0))

            def above(t, si_pos, sj_pos, neg):
                a = pre[t]
                pc = (1 if i < t else 0) + (1 if j < t else 0)
                if neg:
                    a = t - pc - a
                if i < t and si_pos:
                    a += 1
                if j < t and sj_pos:
                    a += 1
                return a

            for panel in range(8):
                neg = 1 if panel >= 4 else 0
                si_pos = panel & 1
                sj_pos = (panel >> 1) & 1
                tot = above(n, si_pos, sj_pos, neg)
                if tot < top_min or n - tot < bot_min:
                    continue
                cut_a = None
                for t in range(n + 1):
                    a = above(t, si_pos, sj_pos, neg)
                    if a >= q1 and t - a >= q6:
                        cut_a = t
                        break
                if cut_a is None:
                    continue
                cut_b = None
                for t in range(n, -1, -1):
                    a = tot - above(t, si_pos, sj_pos, neg)
                    if a >= q3 and (n - t) - a >= q4:
                        cut_b = t
                        break
                if cut_b is None or cut_b < cut_a:
                    continue
                mid_above = (above(cut_b, si_pos, sj_pos, neg)
                             - above(cut_a, si_pos, sj_pos, neg))
                if mid_above < q2 or (cut_b - cut_a) - mid_above < q5:
                    continue
                return i, j, panel
    return -1, -1, -1


def six_region_transversal_scan(pts_in_column_order, quotas
                                ) -> Optional[Tuple[int, int, int, int, int]]:
    """Search transversal candidates over all point pairs, any slope.

    Points must arrive sorted by the column direction.  A candidate is a
    pair-line perturbed into one of 8 cells: far points keep or flip the
    base side (orient), and each defining point lands strictly above or
    below independently.  Accepts when greedy column cuts meet all six
    quotas; returns (i, j, orient, si, sj) with i, j positions in the given
    order and orient/si/sj in {+1, -1}, or None.
    """
    q1, q2, q3, q4, q5, q6 = quotas
    if HAS_NUMBA and _coords_ok(pts_in_column_order):
        xs = np.array([p.x for p in pts_in_column_order], dtype=np.int64)
        ys = np.array([p.y for p in pts_in_column_order], dtype=np.int64)
        i, j, panel = _six_scan(xs, ys, q1, q2, q3, q4, q5, q6)
    else:
        xs = [p.x for p in pts_in_column_order]
        ys = [p.y for p in pts_in_column_order]
        i, j, panel = _six_scan_py(xs, ys, q1, q2, q3, q4, q5, q6)
    if i < 0:
        return None
    panel = int(panel)
    orient = -1 if panel >= 4 else 1
    si = 1 if (panel & 1) else -1
    sj = 1 if (panel >> 1) & 1 else -1
    return int(i), int(j), orient, si, sj


# ------------------------------------------------------------ monotone DP

@jit
def _monotone_dp(vals):  # pragma: no cover - compiled
    n = vals.shape[0]
    up = np.ones(n, dtype=np.int64)
    dn = np.ones(n, dtype=np.int64)
    best = 1
    for i in range(n):
        for j in range(i):
            if vals[j] < vals[i] and up[j] + 1 > up[i]:
                up[i] = up[j] + 1
            if vals[j] > vals[i] and dn[j] + 1 > dn[i]:
                dn[i] = dn[j] + 1
        if up[i] > best:
            best = up[i]
        if dn[i] > best:
            best = dn[i]
    return best


def _monotone_dp_py(vals):
    n = len(vals)
    up = [1] * n
    dn = [1] * n
    for i in range(n):
        for j in range(i):
            if vals[j] < vals[i]:
                up[i] = max(up[i], up[j] + 1)
            if vals[j] > vals[i]:
                dn[i] = max(dn[i], dn[j] + 1)
    return max(max(up), max(dn)) if n else 0


def longest_monotone_dp(values) -> int:
    """Length of the longest strictly monotone subsequence, O(n^2) DP."""
    vals = list(values)
    if not vals:
        return 0
    if HAS_NUMBA and all(abs(v) <= 2**62 for v in vals):
        return int(_monotone_dp(np.array(vals, dtype=np.int64)))
    return _monotone_dp_py(vals)


# -------------------------------------------- small-n segment-triple probe

def _sign64(v):
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


@jit
def _k2_triple(xs, ys):  # pragma: no cover - compiled
    n = xs.shape[0]
    m = (n * (n - 1)) // 2
    ea = np.empty(m, dtype=np.int64)
    eb = np.empty(m, dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            ea[k] = i
            eb[k] = j
            k += 1
    adj = np.zeros(m, dtype=np.uint64)
    for s1 in range(m):
        a1, b1 = ea[s1], eb[s1]
        for s2 in range(s1 + 1, m):
            a2, b2 = ea[s2], eb[s2]
            if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
                continue
            d1 = (xs[b2] - xs[a2]) * (ys[a1] - ys[a2]) - \
                 (ys[b2] - ys[a2]) * (xs[a1] - xs[a2])
            d2 = (xs[b2] - xs[a2]) * (ys[b1] - ys[a2]) - \
                 (ys[b2] - ys[a2]) * (xs[b1] - xs[a2])
            d3 = (xs[b1] - xs[a1]) * (ys[a2] - ys[a1]) - \
                 (ys[b1] - ys[a1]) * (xs[a2] - xs[a1])
            d4 = (xs[b1] - xs[a1]) * (ys[b2] - ys[a1]) - \
                 (ys[b1] - ys[a1]) * (xs[b2] - xs[a1])
            if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and \
               ((d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)):
                adj[s1] |= np.uint64(1) << np.uint64(s2)
                adj[s2] |= np.uint64(1) << np.uint64(s1)
    for s1 in range(m):
        m1 = adj[s1]
        if m1 == 0:
            continue
        for s2 in range(s1 + 1, m):
            if (m1 >> np.uint64(s2)) & np.uint64(1):
                if m1 & adj[s2] != 0:
                    return 1
    return 0


def _k2_triple_py(xs, ys):
    n = len(xs)
    segs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(segs)
    adj = [0] * m
    for s1 in range(m):
        a1, b1 = segs[s1]
        for s2 in range(s1 + 1, m):
            a2, b2 = segs[s2]
            if a1 in (a2, b2) or b1 in (a2, b2):
                continue
            d1 = _sign64((xs[b2] - xs[a2]) * (ys[a1] - ys[a2]) -
                         (ys[b2] - ys[a2]) * (xs[a1] - xs[a2]))
            d2 = _sign64((xs[b2] - xs[a2]) * (ys[b1] - ys[a2]) -
                         (ys[b2] - ys[a2]) * (xs[b1] - xs[a2]))
            d3 = _sign64((xs[b1] - xs[a1]) * (ys[a2] - ys[a1]) -
                         (ys[b1] - ys[a1]) * (xs[a2] - xs[a1]))
            d4 = _sign64((xs[b1] - xs[a1]) * (ys[b2] - ys[a1]) -
                         (ys[b1] - ys[a1]) * (xs[b2] - xs[a1]))
            if d1 * d2 < 0 and d3 * d4 < 0:
                adj[s1] |= 1 << s2
                adj[s2] |= 1 << s1
    for s1 in range(m):
        m1 = adj[s1]
        for s2 in range(s1 + 1, m):
            if (m1 >> s2) & 1 and m1 & adj[s2]:
                return 1
    return 0


def has_three_pairwise_crossing_segments(pts) -> bool:
    """True if some three segments on `pts` pairwise cross (n <= 11)."""
    n = len(pts)
    if n > 11:
        raise ValueError("segment-triple probe limited to n <= 11")
    if HAS_NUMBA and _coords_ok(pts):
        xs = np.array([p.x for p in pts], dtype=np.int64)
        ys = np.array([p.y for p in pts], dtype=np.int64)
        return bool(_k2_triple(xs, ys))
    return bool(_k2_triple_py([p.x for p in pts], [p.y for p in pts]))


@jit
def _k2_triple_batch(coords):  # pragma: no cover - compiled
    nb = coords.shape[0]
    out = np.zeros(nb, dtype=np.uint8)
    for r in range(nb):
        out[r] = _k2_triple(coords[r, :, 0], coords[r, :, 1])
    return out


def k2_triple_batch(coords: np.ndarray) -> np.ndarray:
    """Batched probe: coords is (B, n, 2) int64, returns uint8[B]."""
    if coords.ndim != 3 or coords.shape[2] != 2:
        raise ValueError("expected (B, n, 2) array")
    if HAS_NUMBA and np.abs(coords).max(initial=0) <= KERNEL_COORD_LIMIT:
        return _k2_triple_batch(coords)
    out = np.zeros(coords.shape[0], dtype=np.uint8)
    for r in range(coords.shape[0]):
        out[r] = _k2_triple_py(list(coords[r, :, 0]), list(coords[r, :, 1]))
    return out


# ------------------------------------------------- general-position batch

@jit
def _collinear_batch(coords):  # pragma: no cover - compiled
    nb = coords.shape[0]
    n = coords.shape[1]
    out = np.zeros(nb, dtype=np.uint8)
    for r in range(nb):
        hit = 0
        for i in range(n):
            if hit:
                break
            for j in range(i + 1, n):
                if hit:
                    break
                for k in range(j + 1, n):
                    d = (coords[r, j, 0] - coords[r, i, 0]) * \
                        (coords[r, k, 1] - coords[r, i, 1]) - \
                        (coords[r, j, 1] - coords[r, i, 1]) * \
                        (coords[r, k, 0] - coords[r, i, 0])
                    if d == 0:
                        hit = 1
                        break
        out[r] = hit
    return out


def collinear_batch(coords: np.ndarray) -> np.ndarray:
    """uint8[B]: 1 where a record has three collinear points."""
    if coords.ndim != 3 or coords.shape[2] != 2:
        raise ValueError("expected (B, n, 2) array")
    if HAS_NUMBA and np.abs(coords).max(initial=0) <= KERNEL_COORD_LIMIT:
        return _collinear_batch(coords)
    nb, n = coords.shape[0], coords.shape[1]
    out = np.zeros(nb, dtype=np.uint8)
    for r in range(nb):
        hit = 0
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    d = (int(coords[r, j, 0]) - int(coords[r, i, 0])) * \
                        (int(coords[r, k, 1]) - int(coords[r, i, 1])) - \
                        (int(coords[r, j, 1]) - int(coords[r, i, 1])) * \
                        (int(coords[r, k, 0]) - int(coords[r, i, 0]))
                    if d == 0:
                        hit = 1
        out[r] = hit
    return out

"""Exhaustive maximum-family and convex-subset searches on small point sets.

Copies of the pattern are enumerated up front, a pairwise-compatibility
graph is built (vertex-disjoint + crossing, or edge-disjoint +
vertex-or-crossing), and the maximum family is the maximum clique, found
by branch and bound with a greedy-coloring upper bound.  A second,
deliberately unoptimized enumerator (plain DFS over all cliques) serves
as an in-repo oracle; the two share nothing past copy enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .construct import Family
from .geom import (
    GeomError,
    PointSet,
    Subgraph,
    convex_hull,
    subgraphs_cross,
    subgraphs_intersect,
)

EXHAUSTIVE_N = 12
K2_INTERSECTING_N = 9
CONVEX_N = 15


@dataclass
class SolveResult:
    pattern: str
    kind: str
    max_size: int
    witness: Family
    explored: int
    t: Optional[int] = None
    exact: bool = True


def enumerate_copies(ps: PointSet, pattern: str,
                     t: Optional[int] = None) -> List[Subgraph]:
    """All straight-line copies of the pattern on ps, deterministic order."""
    ids = sorted(ps.ids())
    out: List[Subgraph] = []
    if pattern == "K2":
        for a, b in combinations(ids, 2):
            out.append(Subgraph.of("K2", (a, b), ((a, b),)))
    elif pattern == "P3":
        # middle vertex b distinguishes copies; ends unordered
        for b in ids:
            rest = [i for i in ids if i != b]
            for a, c in combinations(rest, 2):
                out.append(Subgraph.of("P3", (a, b, c), ((a, b), (b, c))))
    elif pattern == "K3":
        for tri in combinations(ids, 3):
            out.append(Subgraph.of("K3", tri, tuple(combinations(tri, 2))))
    elif pattern == "K4":
        for quad in combinations(ids, 4):
            out.append(Subgraph.of("K4", quad, tuple(combinations(quad, 2))))
    elif pattern == "Kt":
        if not t or t < 3:
            raise GeomError(f"Kt needs t >= 3, got {t}")
        for verts in combinations(ids, t):
            out.append(Subgraph.of("Kt", verts,
                                   tuple(combinations(verts, 2)), t=t))
    elif pattern == "K1t":
        if not t or t < 1:
            raise GeomError(f"K1t needs t >= 1, got {t}")
        for c in ids:
            rest = [i for i in ids if i != c]
            for leaves in combinations(rest, t):
                out.append(Subgraph.of("K1t", (c,) + leaves,
                                       tuple((c, l) for l in leaves), t=t))
    else:
        raise GeomError(f"unsupported pattern {pattern!r}")
    return out


def _compat_masks(ps: PointSet, copies: Sequence[Subgraph],
                  kind: str) -> List[int]:
    """Adjacency bitmask per copy under the kind's pairwise condition."""
    m = len(copies)
    vsets = [set(g.vertices) for g in copies]
    esets = [set(g.edges) for g in copies]
    masks = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if kind == "crossing":
                ok = not (vsets[i] & vsets[j]) and \
                    subgraphs_cross(copies[i], copies[j], ps)
            else:
                ok = not (esets[i] & esets[j]) and \
                    (bool(vsets[i] & vsets[j])
                     or subgraphs_cross(copies[i], copies[j], ps))
            if ok:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _color_sort(cand: List[int], masks: List[int]
                ) -> Tuple[List[int], List[int]]:
    """Greedy coloring; candidates reordered class by class.

    bounds[i] is the color number of ordered[i] and is non-decreasing,
    which is what lets the branch loop cut everything at or below the
    first index whose bound cannot beat the incumbent.
    """
    members: List[List[int]] = []
    cmask: List[int] = []
    for v in cand:
        for ci, cls in enumerate(cmask):
            if not (masks[v] & cls):
                members[ci].append(v)
                cmask[ci] |= 1 << v
                break
        else:
            members.append([v])
            cmask.append(1 << v)
    ordered: List[int] = []
    bounds: List[int] = []
    for ci, mem in enumerate(members):
        ordered.extend(mem)
        bounds.extend([ci + 1] * len(mem))
    return ordered, bounds


def _max_clique(masks: List[int], limit: Optional[int] = None
                ) -> Tuple[List[int], int, bool]:
    """Branch and bound with greedy coloring.

    Returns (best clique, nodes explored, exact).  With a limit the search
    stops as soon as a clique of that size is found; exact is False then.
    """
    m = len(masks)
    best: List[int] = []
    explored = 0
    capped = False
    # static order by degree helps the coloring
    by_degree = sorted(range(m), key=lambda v: -bin(masks[v]).count("1"))

    def expand(cand: List[int], current: List[int]) -> bool:
        nonlocal best, explored, capped
        explored += 1
        if len(current) > len(best):
            best = list(current)
            if limit is not None and len(best) >= limit:
                capped = True
                return True
        if not cand:
            return False
        ordered, bounds = _color_sort(cand, masks)
        for idx in range(len(ordered) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return False
            v = ordered[idx]
            nxt = [u for u in ordered[:idx] if masks[v] >> u & 1]
            current.append(v)
            stop = expand(nxt, current)
            current.pop()
            if stop:
                return True
        return False

    expand(by_degree, [])
    return best, explored, not capped


def _naive_max_clique(masks: List[int]) -> List[int]:
    """All-cliques DFS, no bounding: the independent oracle path."""
    m = len(masks)
    best: List[int] = []

    def grow(current: List[int], allowed: int):
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        a = allowed
        while a:
            v = (a & -a).bit_length() - 1
            a &= a - 1
            current.append(v)
            grow(current, allowed & masks[v] & ~((1 << (v + 1)) - 1))
            current.pop()

    grow([], (1 << m) - 1)
    return best


def _solve(ps: PointSet, pattern: str, kind: str, t: Optional[int],
           limit: Optional[int], guard: int, naive: bool) -> SolveResult:
    n = len(ps)
    if limit is None and n > guard:
        raise GeomError(
            f"exhaustive {kind} search guarded at n <= {guard}; "
            f"pass a limit for n={n}")
    copies = enumerate_copies(ps, pattern, t)
    masks = _compat_masks(ps, copies, kind)
    if naive:
        clique = _naive_max_clique(masks)
        explored, exact = -1, True
    else:
        clique, explored, exact = _max_clique(masks, limit)
    members = [copies[i] for i in sorted(clique)]
    witness = Family(kind, pattern, members, len(members), t=t,
                     meta={"solver": "naive" if naive else "branch-bound"})
    return SolveResult(pattern=pattern, kind=kind, max_size=len(clique),
                       witness=witness, explored=explored, t=t, exact=exact)


def max_crossing_family(ps: PointSet, pattern: str, t: Optional[int] = None,
                        limit: Optional[int] = None,
                        naive: bool = False) -> SolveResult:
    """Exact maximum crossing family (vertex-disjoint, pairwise crossing)."""
    return _solve(ps, pattern, "crossing", t, limit, EXHAUSTIVE_N, naive)


def max_intersecting_family(ps: PointSet, pattern: str,
                            t: Optional[int] = None,
                            limit: Optional[int] = None,
                            naive: bool = False) -> SolveResult:
    """Exact maximum intersecting family (edge-disjoint, pairwise
    vertex-sharing or crossing)."""
    guard = K2_INTERSECTING_N if pattern == "K2" else EXHAUSTIVE_N
    return _solve(ps, pattern, "intersecting", t, limit, guard, naive)


@dataclass
class ConvexResult:
    size: int
    ids: Tuple[int, ...]


def max_convex_subset(ps: PointSet) -> ConvexResult:
    """Largest subset in convex position, exhaustively (n <= 15)."""
    n = len(ps)
    if n > CONVEX_N:
        raise GeomError(f"convex-subset search guarded at n <= {CONVEX_N}")
    ids = sorted(ps.ids())
    if n <= 2:
        return ConvexResult(n, tuple(ids))
    for size in range(n, 2, -1):
        for sub in combinations(ids, size):
            pts = [ps[i] for i in sub]
            if len(convex_hull(pts)) == size:
                return ConvexResult(size, sub)
    return ConvexResult(2, tuple(ids[:2]))


def family_sizes_consistent(ps: PointSet, fam: Family) -> bool:
    """Constructor output can never beat the exhaustive maximum."""
    if fam.kind == "crossing":
        res = max_crossing_family(ps, fam.pattern, t=fam.t)
    else:
        res = max_intersecting_family(ps, fam.pattern, t=fam.t)
    return fam.size <= res.max_size

"""Exact integer geometry: orientation, crossing, hulls, rank sequences.

Everything here works on integer coordinates with exact arithmetic (Python
ints never overflow), so every predicate is bit-exact.  No floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Optional, Sequence

CCW = 1
CW = -1
COLLINEAR = 0


class Point(NamedTuple):
    id: int
    x: int
    y: int
    color: Optional[str] = None  # "r" | "b" for bipartite inputs


class GeomError(ValueError):
    pass


def orientation(p, q, r) -> int:
    """Sign of the cross product (q-p) x (r-p): CCW, CW or COLLINEAR."""
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


class PointSet:
    """Ordered collection of points with distinct ids and distinct coords.

    General position (no three collinear) is expected by most callers but is
    checked separately via is_general_position(); loaders and generators run
    the check, internal region subsets inherit it from their parent set.
    """

    __slots__ = ("points", "_by_id")

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        by_id = {}
        seen_xy = set()
        for p in pts:
            if p.id in by_id:
                raise GeomError(f"duplicate point id {p.id}")
            xy = (p.x, p.y)
            if xy in seen_xy:
                raise GeomError(f"duplicate coordinates {xy}")
            by_id[p.id] = p
            seen_xy.add(xy)
        self.points = pts
        self._by_id = by_id

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pid):
        return pid in self._by_id

    def __getitem__(self, pid) -> Point:
        return self._by_id[pid]

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __repr__(self):
        return f"PointSet({len(self.points)} points)"

    def ids(self):
        return [p.id for p in self.points]

    def subset(self, ids: Iterable[int]) -> "PointSet":
        return PointSet(self._by_id[i] for i in ids)

    def of_color(self, color: str) -> "PointSet":
        return PointSet(p for p in self.points if p.color == color)


class Segment(NamedTuple):
    """Unordered pair of point ids."""

    a: int
    b: int

    @staticmethod
    def of(a: int, b: int) -> "Segment":
        if a == b:
            raise GeomError(f"degenerate segment ({a},{a})")
        return Segment(a, b) if a < b else Segment(b, a)

    def shares_endpoint(self, other: "Segment") -> bool:
        return self.a in (other.a, other.b) or self.b in (other.a, other.b)


@dataclass(frozen=True)
class Line:
    """The locus a*x + b*y + c = 0; the "left" side is where it is > 0.

    Stored gcd-reduced.  The sign of (a, b, c) is meaningful (it decides
    which side is left), so reduction never flips it.
    """

    a: int
    b: int
    c: int

    @staticmethod
    def of(a: int, b: int, c: int) -> "Line":
        if a == 0 and b == 0:
            raise GeomError("degenerate line (0,0,c)")
        g = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
        return Line(a // g, b // g, c // g)

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        # (a,b) is the left-pointing normal of the direction p->q.
        a = -(q.y - p.y)
        b = q.x - p.x
        c = -(a * p.x + b * p.y)
        return Line.of(a, b, c)

    def side(self, p: Point) -> int:
        v = self.a * p.x + self.b * p.y + self.c
        return CCW if v > 0 else (CW if v < 0 else COLLINEAR)

    def value(self, p: Point) -> int:
        return self.a * p.x + self.b * p.y + self.c


def side_counts(l: Line, ps) -> tuple:
    """Exact (left, right) counts; raises if any point sits on the line."""
    left = right = 0
    for p in ps:
        s = l.side(p)
        if s == COLLINEAR:
            raise GeomError(f"point {p.id} lies on line {l}")
        if s == CCW:
            left += 1
        else:
            right += 1
    return left, right


def segments_cross(s1: Segment, s2: Segment, ps: PointSet) -> bool:
    """True iff the two open segments share exactly one interior point.

    Segments that share an endpoint id never cross.  Degenerate overlap
    cannot happen in general position; we return False defensively anyway.
    """
    if s1.shares_endpoint(s2):
        return False
    p1, p2 = ps[s1.a], ps[s1.b]
    p3, p4 = ps[s2.a], ps[s2.b]
    d1 = orientation(p3, p4, p1)
    d2 = orientation(p3, p4, p2)
    d3 = orientation(p1, p2, p3)
    d4 = orientation(p1, p2, p4)
    if 0 in (d1, d2, d3, d4):
        return False
    return d1 != d2 and d3 != d4


PATTERN_SIZES = {
    # pattern -> (vertex count, edge count); None means t-dependent
    "K2": (2, 1),
    "P3": (3, 2),
    "K3": (3, 3),
    "K4": (4, 6),
    "P4": (4, 3),
    "TwoK2": (4, 2),
    "K1t": (None, None),
    "Kt": (None, None),
}


def pattern_vertex_count(pattern: str, t: Optional[int] = None) -> int:
    if pattern == "K1t":
        return t + 1
    if pattern == "Kt":
        return t
    return PATTERN_SIZES[pattern][0]


def pattern_edge_count(pattern: str, t: Optional[int] = None) -> int:
    if pattern == "K1t":
        return t
    if pattern == "Kt":
        return t * (t - 1) // 2
    return PATTERN_SIZES[pattern][1]


@dataclass(frozen=True)
class Subgraph:
    """A straight-line drawn copy of a small pattern graph."""

    pattern: str
    vertices: tuple
    edges: tuple  # tuple of Segment
    t: Optional[int] = None

    @staticmethod
    def of(pattern, vertices, edges, t=None):
        segs = tuple(sorted(Segment.of(a, b) for a, b in edges))
        return Subgraph(pattern, tuple(vertices), segs, t)

    def validate(self):
        """Check this really is a drawing of its pattern; raise otherwise."""
        nv = pattern_vertex_count(self.pattern, self.t)
        ne = pattern_edge_count(self.pattern, self.t)
        if len(set(self.vertices)) != len(self.vertices):
            raise GeomError(f"repeated vertex in {self.pattern} subgraph")
        if len(self.vertices) != nv:
            raise GeomError(
                f"{self.pattern} needs {nv} vertices, got {len(self.vertices)}")
        if len(set(self.edges)) != len(self.edges):
            raise GeomError(f"repeated edge in {self.pattern} subgraph")
        if len(self.edges) != ne:
            raise GeomError(
                f"{self.pattern} needs {ne} edges, got {len(self.edges)}")
        vset = set(self.vertices)
        deg = {v: 0 for v in self.vertices}
        for e in self.edges:
            if e.a not in vset or e.b not in vset:
                raise GeomError(f"edge {e} leaves the vertex set")
            deg[e.a] += 1
            deg[e.b] += 1
        degs = sorted(deg.values())
        want = _pattern_degrees(self.pattern, self.t)
        if degs != want:
            raise GeomError(
                f"degree sequence {degs} does not match {self.pattern}")
        if self.pattern in ("P3", "P4") and not _is_connected(self.vertices, self.edges):
            raise GeomError(f"{self.pattern} subgraph is not connected")

    def shares_vertex(self, other: "Subgraph") -> bool:
        return bool(set(self.vertices) & set(other.vertices))

    def shares_edge(self, other: "Subgraph") -> bool:
        return bool(set(self.edges) & set(other.edges))


def _pattern_degrees(pattern, t):
    if pattern == "K2":
        return [1, 1]
    if pattern == "P3":
        return [1, 1, 2]
    if pattern == "K3":
        return [2, 2, 2]
    if pattern == "K4":
        return [3, 3, 3, 3]
    if pattern == "P4":
        return [1, 1, 2, 2]
    if pattern == "TwoK2":
        return [1, 1, 1, 1]
    if pattern == "K1t":
        return [1] * t + [t]
    if pattern == "Kt":
        return [t - 1] * t
    raise GeomError(f"unknown pattern {pattern}")


def _is_connected(vertices, edges):
    if not vertices:
        return True
    adj = {v: [] for v in vertices}
    for e in edges:
        adj[e.a].append(e.b)
        adj[e.b].append(e.a)
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def subgraphs_cross(g1: Subgraph, g2: Subgraph, ps: PointSet) -> bool:
    """True iff some edge of g1 properly crosses some edge of g2."""
    for e1 in g1.edges:
        for e2 in g2.edges:
            if segments_cross(e1, e2, ps):
                return True
    return False


def subgraphs_intersect(g1: Subgraph, g2: Subgraph, ps: PointSet) -> bool:
    """Sharing a vertex counts as intersecting, as does crossing."""
    return g1.shares_vertex(g2) or subgraphs_cross(g1, g2, ps)


def is_general_position(ps) -> bool:
    """True iff no three points are collinear.

    Anchored slope hashing: a collinear triple i<j<k shows up as two equal
    normalized directions out of its least-index point.  O(n^2) expected.
    """
    pts = list(ps)
    for i in range(len(pts)):
        seen = set()
        pi = pts[i]
        for j in range(i + 1, len(pts)):
            dx = pts[j].x - pi.x
            dy = pts[j].y - pi.y
            g = math.gcd(abs(dx), abs(dy))
            dx //= g
            dy //= g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                return False
            seen.add((dx, dy))
    return True


def convex_hull(ps) -> list:
    """Counterclockwise hull vertex ids (Andrew's monotone chain, exact)."""
    pts = sorted(ps, key=lambda p: (p.x, p.y))
    if len(pts) <= 2:
        return [p.id for p in pts]

    def build(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) != CCW:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(reversed(pts))
    return [p.id for p in lower[:-1] + upper[:-1]]


def rank_sequence(b: Point, R) -> list:
    """Ids of R sorted counterclockwise around b.

    The angular origin is the clockwise-most direction from b toward R: when
    R fits in an open half-plane cone as seen from b (the case the rank
    machinery needs), that direction is the unique one with every other point
    strictly counterclockwise of it, so the result is a well-defined linear
    order rather than an arbitrary cyclic rotation.
    """
    pts = list(R)
    if len(pts) <= 1:
        return [p.id for p in pts]
    vecs = [(p.x - b.x, p.y - b.y, p.id) for p in pts]

    def cmp(u, v):
        c = _cross(u[0], u[1], v[0], v[1])
        if c > 0:
            return -1
        if c < 0:
            return 1
        # Same ray from b would mean b,u,v collinear; only reachable when
        # general position is violated.  Fall back to distance order.
        return -1 if (u[0] ** 2 + u[1] ** 2) < (v[0] ** 2 + v[1] ** 2) else 1

    vecs.sort(key=cmp_to_key(cmp))
    return [v[2] for v in vecs]


def has_rank_condition(R, B) -> bool:
    """True iff some labeling of R is seen in that order from every b in B."""
    pts_r = list(R)
    if len(pts_r) <= 1 or len(list(B)) == 0:
        return True
    ref = None
    for b in B:
        seq = rank_sequence(b, pts_r)
        if ref is None:
            ref = seq
        elif seq != ref:
            return False
    return True


def avoids(R, B) -> bool:
    """True iff every line through two points of R misses conv(B) entirely.

    Checked exactly: all of B strictly on one side of each such line.
    Vacuously true when |R| < 2.
    """
    pts_r = list(R)
    pts_b = list(B)
    if len(pts_r) < 2 or not pts_b:
        return True
    for i in range(len(pts_r)):
        for j in range(i + 1, len(pts_r)):
            line = Line.through(pts_r[i], pts_r[j])
            first = line.side(pts_b[0])
            if first == COLLINEAR:
                return False
            for q in pts_b[1:]:
                if line.side(q) != first:
                    return False
    return True

"""Generate the committed 64-record test databases (both byte widths).

Record mix per file: a convex polygon, hill-climbed sets with no three
pairwise-crossing segments (the scan tests' genuine violators; random
sets essentially always have a triple), a couple of clustered sets for
variety, rest uniform random in general position.  Brute-force stats are
printed so the planted structure can be eyeballed.
"""
import math
import random
from itertools import combinations
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "tests" / "data"


def orient(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def gp(pts):
    return all(orient(*t) != 0 for t in combinations(pts, 3))


def seg_cross(s, t):
    (a, b), (c, d) = s, t
    if len({a, b, c, d}) < 4:
        return False
    p = lambda i: pts_ref[i]
    d1 = orient(p(c), p(d), p(a)); d2 = orient(p(c), p(d), p(b))
    d3 = orient(p(a), p(b), p(c)); d4 = orient(p(a), p(b), p(d))
    return d1 != d2 and d3 != d4


def has_triple(pts):
    global pts_ref
    pts_ref = pts
    segs = list(combinations(range(len(pts)), 2))
    for s1, s2, s3 in combinations(segs, 3):
        if seg_cross(s1, s2) and seg_cross(s1, s3) and seg_cross(s2, s3):
            return True
    return False


def hull_size(pts):
    P = sorted(set(pts))
    if len(P) <= 2:
        return len(P)
    def half(seq):
        h = []
        for p in seq:
            while len(h) >= 2 and orient(h[-2], h[-1], p) <= 0:
                h.pop()
            h.append(p)
        return h
    return len(half(P)) + len(half(reversed(P))) - 2


def max_convex(pts):
    n = len(pts)
    for size in range(n, 2, -1):
        for sub in combinations(pts, size):
            if hull_size(list(sub)) == size:
                return size
    return min(n, 2)


def rand_gp(rng, n, hi):
    while True:
        pts = [(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(n)]
        if len(set(pts)) == n and gp(pts):
            return pts


def convex_gon(n, hi):
    r = hi // 2 - 2
    cx = cy = hi // 2
    while True:
        pts = []
        for i in range(n):
            a = 2 * math.pi * i / n + 0.3
            pts.append((cx + round(r * math.cos(a)), cy + round(r * math.sin(a))))
        if gp(pts) and hull_size(pts) == n:
            return pts
        r -= 1


def clustered(rng, hi):
    corners = [(hi // 8, hi // 8), (hi - hi // 8, hi // 6), (hi // 2, hi - hi // 8)]
    spread = max(2, hi // 40)
    while True:
        pts = []
        for cx, cy in corners:
            for _ in range(3):
                pts.append((cx + rng.randint(-spread, spread),
                            cy + rng.randint(-spread, spread)))
        if len(set(pts)) == 9 and gp(pts):
            return pts


def build(n, width, hi, fname, planted):
    rng = random.Random(20260822 + n)
    records = list(planted(rng))
    while len(records) < 64:
        records.append(rand_gp(rng, n, hi))
    buf = b""
    dt = "<u1" if width == 1 else "<u2"
    for pts in records:
        arr = np.array(pts, dtype=np.int64)
        assert arr.min() >= 0 and arr.max() <= hi
        buf += arr.astype(dt).tobytes()
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / fname).write_bytes(buf)
    trip = [i for i, pts in enumerate(records) if not has_triple(pts)]
    cvx = {}
    for i, pts in enumerate(records):
        cvx.setdefault(max_convex(pts), []).append(i)
    print(f"{fname}: {len(records)} recs, {len(buf)} bytes")
    print(f"  no-crossing-triple records: {trip}")
    print(f"  max-convex histogram: {{{', '.join(f'{k}: {len(v)}' for k in sorted(cvx) for v in [cvx[k]])}}}")
    print(f"  convex-9 record(s): {cvx.get(n, [])}")


# Hill-climbed sets whose segments admit no three pairwise crossings;
# they give the scan tests genuine violators to find.
NO_TRIPLE_8 = [(169, 255), (255, 0), (15, 0), (182, 129), (207, 17),
               (194, 255), (72, 68), (169, 85)]
NO_TRIPLE_9 = [
    [(48948, 48668), (21352, 1848), (33248, 32169), (28810, 15947),
     (38637, 37700), (5594, 63987), (35224, 34639), (33786, 41990),
     (61772, 61899)],
    [(44769, 906), (0, 26213), (51243, 20925), (45051, 0), (61988, 53305),
     (65535, 55273), (5839, 24071), (38133, 37460), (16613, 25808)],
    [(0, 0), (65535, 35391), (46325, 43246), (32245, 45772), (26615, 31642),
     (30328, 39125), (34779, 50694), (15928, 22298), (41012, 65535)],
]


def planted8(rng):
    yield convex_gon(8, 255)
    yield NO_TRIPLE_8


def planted9(rng):
    yield convex_gon(9, 65535)
    yield from NO_TRIPLE_9
    for _ in range(2):
        yield clustered(rng, 65535)


build(8, 1, 255, "otypes08.b08", planted8)
build(9, 2, 65535, "otypes09.b16", planted9)

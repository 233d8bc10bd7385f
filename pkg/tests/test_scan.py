"""Database scans against per-record brute force on the bundled fixtures.

The oracle layer below re-derives, per record and from scratch, whether
three pairwise-crossing segments exist, the exact maximum crossing
matching, and the largest convex subset.  Scan output in every mode
(kernel shortcut, exact histogram, parallel) is compared to those.
"""
from collections import Counter
from itertools import combinations
from pathlib import Path

import pytest

from crossfam.geom import GeomError
from crossfam.otdb import OrderTypeError, db_filename, open_db, read_batch
from crossfam.scan import ScanReport, scan_order_types

DATA = Path(__file__).parent / "data"


# ---------------------------------------------------------------- oracles

def _ori(p, q, r):
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _cross(pts, s, t):
    if len({*s, *t}) < 4:
        return False
    a, b = pts[s[0]], pts[s[1]]
    c, d = pts[t[0]], pts[t[1]]
    return _ori(c, d, a) != _ori(c, d, b) and _ori(a, b, c) != _ori(a, b, d)


def brute_max_crossing_matching(pts):
    segs = list(combinations(range(len(pts)), 2))
    best = 0

    def grow(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(segs)):
            s = segs[i]
            if all(_cross(pts, s, t) for t in chosen):
                grow(i + 1, chosen + [s])

    grow(0, [])
    return best


def brute_has_triple(pts):
    return brute_max_crossing_matching(pts) >= 3


def brute_max_convex(pts):
    n = len(pts)

    def convex(sub):
        for i in sub:
            rest = [j for j in sub if j != i]
            for tri in combinations(rest, 3):
                a, b, c = pts[tri[0]], pts[tri[1]], pts[tri[2]]
                d1 = _ori(a, b, pts[i])
                d2 = _ori(b, c, pts[i])
                d3 = _ori(c, a, pts[i])
                if d1 == d2 == d3 != 0:
                    return False
        return True

    for size in range(n, 2, -1):
        if any(convex(sub) for sub in combinations(range(n), size)):
            return size
    return min(n, 2)


def fixture_db(n):
    return open_db(DATA / db_filename(n), n)


def fixture_records(n):
    db = fixture_db(n)
    coords = read_batch(db)
    return [[(int(x), int(y)) for x, y in rec] for rec in coords]


# -------------------------------------------------------- violators, n = 9

def test_fast_scan_matches_brute_force_n9():
    db = fixture_db(9)
    rep = scan_order_types(db, "K2", "crossing", 3)
    expected = [i for i, pts in enumerate(fixture_records(9))
                if not brute_has_triple(pts)]
    assert rep.violators == expected
    assert rep.total == 64
    assert rep.histogram == {}      # shortcut mode never sizes families


def test_fixture_has_the_planted_violators():
    rep = scan_order_types(fixture_db(9), "K2", "crossing", 3)
    assert rep.violators == [1, 2, 3]


def test_fast_scan_matches_brute_force_n8():
    rep = scan_order_types(fixture_db(8), "K2", "crossing", 3)
    expected = [i for i, pts in enumerate(fixture_records(8))
                if not brute_has_triple(pts)]
    assert rep.violators == expected == [1]


def test_exact_mode_same_violators_full_histogram():
    db = fixture_db(8)
    fast = scan_order_types(db, "K2", "crossing", 3)
    full = scan_order_types(db, "K2", "crossing", 3, exact_histogram=True)
    assert full.violators == fast.violators
    assert sum(full.histogram.values()) == 64
    oracle = Counter(brute_max_crossing_matching(pts)
                     for pts in fixture_records(8))
    assert full.histogram == dict(oracle)


def test_threshold_shifts_violator_set():
    db = fixture_db(8)
    sizes = [brute_max_crossing_matching(pts) for pts in fixture_records(8)]
    for k in (1, 4, 5):
        rep = scan_order_types(db, "K2", "crossing", k,
                               exact_histogram=True)
        assert rep.violators == [i for i, s in enumerate(sizes) if s < k]


# ------------------------------------------------------------- parallelism

def test_parallel_scan_equals_serial():
    db = fixture_db(9)
    serial = scan_order_types(db, "K2", "crossing", 3)
    for jobs in (2, 3):
        par = scan_order_types(db, "K2", "crossing", 3, jobs=jobs)
        assert par.violators == serial.violators
        assert par.total == serial.total


def test_parallel_histogram_merge():
    db = fixture_db(8)
    serial = scan_order_types(db, "K2", "crossing", 3,
                              exact_histogram=True)
    par = scan_order_types(db, "K2", "crossing", 3, jobs=2,
                           exact_histogram=True)
    assert par.histogram == serial.histogram
    assert par.violators == serial.violators


def test_progress_callback_reaches_total():
    seen = []
    scan_order_types(fixture_db(9), "K2", "crossing", 3, jobs=2,
                     progress=lambda done, total: seen.append((done, total)))
    assert seen[-1] == (64, 64)
    assert [d for d, _ in seen] == sorted(d for d, _ in seen)


# ------------------------------------------------------------ convex scans

def test_convex_scan_matches_brute():
    db = fixture_db(9)
    maxes = [brute_max_convex(pts) for pts in fixture_records(9)]
    for k in (5, 7, 9):
        rep = scan_order_types(db, "convex", "crossing", k)
        assert rep.violators == [i for i, m in enumerate(maxes) if m < k], k


def test_convex_scan_exact_histogram():
    db = fixture_db(8)
    rep = scan_order_types(db, "convex", "crossing", 6,
                           exact_histogram=True)
    oracle = Counter(brute_max_convex(pts) for pts in fixture_records(8))
    assert rep.histogram == dict(oracle)
    assert rep.violators == [
        i for i, pts in enumerate(fixture_records(8))
        if brute_max_convex(pts) < 6]


def test_fixture_contains_one_convex_nine():
    rep = scan_order_types(fixture_db(9), "convex", "crossing", 9)
    assert rep.violators == [i for i in range(64) if i != 0]


# ------------------------------------------------------------ housekeeping

def test_corrupt_db_raises_during_scan(tmp_path):
    # record 1 hides a collinear triple; both modes must refuse it
    good = [(10, 10), (250, 20), (240, 250), (20, 240), (120, 50),
            (200, 120), (130, 220), (60, 130)]
    bad = list(good)
    bad[5] = (140, 70)
    bad[6] = (160, 90)          # collinear with (120, 50)
    buf = bytearray()
    for rec in (good, bad):
        for x, y in rec:
            buf += bytes([x, y])
    path = tmp_path / db_filename(8)
    path.write_bytes(bytes(buf))
    db = open_db(path, 8)
    with pytest.raises(OrderTypeError, match="record 1"):
        scan_order_types(db, "K2", "crossing", 3)
    with pytest.raises(OrderTypeError, match="record 1"):
        scan_order_types(db, "K2", "crossing", 3, exact_histogram=True)


def test_unknown_kind_rejected():
    with pytest.raises(GeomError):
        scan_order_types(fixture_db(8), "K2", "overlapping", 3)


def test_empty_db(tmp_path):
    path = tmp_path / db_filename(8)
    path.write_bytes(b"")
    rep = scan_order_types(open_db(path, 8), "K2", "crossing", 3)
    assert rep.total == 0
    assert rep.violators == []


def test_report_json_shape():
    rep = ScanReport(n=9, pattern="K2", kind="crossing", k=3, total=64,
                     violators=[1, 2], histogram={4: 60, 2: 4})
    d = rep.to_json_dict()
    assert d["violators"] == [1, 2]
    assert list(d["histogram"]) == ["2", "4"]
    assert d["total"] == 64


def test_trivial_threshold_never_violated():
    rep = scan_order_types(fixture_db(8), "K2", "crossing", 1)
    assert rep.violators == []

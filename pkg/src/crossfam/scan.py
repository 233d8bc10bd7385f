"""Whole-database scans: which order types miss a target family size.

The default mode answers only the violator question, using the batched
segment-triple kernel for the K2-crossing case (three pairwise-crossing
segments exist iff the maximum K2-crossing family has size >= 3) and
size-k subset probes for convex scans.  exact_histogram=True runs the
full solver per record and fills the max-size distribution; violators
come out identical either way.

Workers split the record range; each is pure over its slice and the
merge is deterministic (sorted indices, summed histograms).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional

import numpy as np

from . import _kernels
from .geom import GeomError, convex_hull
from .otdb import OrderTypeDb, OrderTypeError, open_db, read_batch, \
    record_points
from .solve import max_convex_subset, max_crossing_family, \
    max_intersecting_family

_CHUNK = 4096


@dataclass
class ScanReport:
    n: int
    pattern: str
    kind: str
    k: int
    total: int
    violators: List[int] = field(default_factory=list)
    histogram: Dict[int, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "pattern": self.pattern, "kind": self.kind,
            "k": self.k, "total": self.total,
            "violators": list(self.violators),
            "histogram": {str(s): c for s, c in sorted(self.histogram.items())},
        }


def _validate_chunk(db: OrderTypeDb, coords: np.ndarray, start: int) -> None:
    bad = _kernels.collinear_batch(coords)
    hits = np.nonzero(bad)[0]
    if hits.size:
        raise OrderTypeError(
            f"{db.path}: record {start + int(hits[0])} has three "
            f"collinear points")


def _has_convex_subset(ps, k: int) -> bool:
    ids = sorted(ps.ids())
    if k <= 2:
        return len(ids) >= k
    for sub in combinations(ids, k):
        if len(convex_hull([ps[i] for i in sub])) == k:
            return True
    return False


def _record_max_size(ps, pattern: str, kind: str) -> int:
    if pattern == "convex":
        return max_convex_subset(ps).size
    if kind == "crossing":
        return max_crossing_family(ps, pattern).max_size
    return max_intersecting_family(ps, pattern).max_size


def _scan_slice(path: str, n: int, pattern: str, kind: str, k: int,
                start: int, stop: int, exact_histogram: bool):
    """One worker's share: (violators, histogram) over [start, stop)."""
    db = open_db(path, n)
    violators: List[int] = []
    histogram: Dict[int, int] = {}
    fast_k2 = (pattern == "K2" and kind == "crossing" and k == 3
               and n <= 11 and not exact_histogram)
    pos = start
    while pos < stop:
        hi = min(pos + _CHUNK, stop)
        coords = read_batch(db, pos, hi)
        _validate_chunk(db, coords, pos)
        if fast_k2:
            found = _kernels.k2_triple_batch(coords)
            for off in np.nonzero(found == 0)[0]:
                violators.append(pos + int(off))
        else:
            for off in range(hi - pos):
                ps = record_points(db, coords[off])
                if exact_histogram:
                    size = _record_max_size(ps, pattern, kind)
                    histogram[size] = histogram.get(size, 0) + 1
                    if size < k:
                        violators.append(pos + off)
                elif pattern == "convex":
                    if not _has_convex_subset(ps, k):
                        violators.append(pos + off)
                else:
                    size = _record_max_size(ps, pattern, kind)
                    if size < k:
                        violators.append(pos + off)
        pos = hi
    return violators, histogram


def scan_order_types(db: OrderTypeDb, pattern: str, kind: str, k: int,
                     jobs: int = 1, exact_histogram: bool = False,
                     progress: Optional[Callable[[int, int], None]] = None
                     ) -> ScanReport:
    """Scan every record; report order types whose maximum size is < k.

    pattern "convex" scans for convex k-subsets (kind is ignored there).
    jobs > 1 distributes record ranges over processes.
    """
    if pattern != "convex" and kind not in ("crossing", "intersecting"):
        raise GeomError(f"unknown family kind {kind!r}")
    total = db.record_count
    report = ScanReport(n=db.n, pattern=pattern, kind=kind, k=k, total=total)
    if total == 0:
        return report
    jobs = max(1, min(jobs, os.cpu_count() or 1))
    if jobs == 1:
        vio, hist = _scan_slice(db.path, db.n, pattern, kind, k,
                                0, total, exact_histogram)
        if progress:
            progress(total, total)
        report.violators = sorted(vio)
        report.histogram = hist
        return report

    step = max(1, (total + jobs * 4 - 1) // (jobs * 4))
    ranges = [(s, min(s + step, total)) for s in range(0, total, step)]
    done = 0
    hist: Dict[int, int] = {}
    vio: List[int] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_scan_slice, db.path, db.n, pattern, kind, k,
                        s, e, exact_histogram)
            for s, e in ranges
        ]
        for (s, e), fut in zip(ranges, futures):
            v, h = fut.result()
            vio.extend(v)
            for size, cnt in h.items():
                hist[size] = hist.get(size, 0) + cnt
            done += e - s
            if progress:
                progress(done, total)
    report.violators = sorted(vio)
    report.histogram = hist
    return report

"""Binary order-type database files: open, validate, iterate, re-encode.

File layout (the published catalog format): records back to back, each
record n points, each point x then y, each coordinate unsigned
little-endian of 1 byte (n <= 8) or 2 bytes (n in {9, 10}).  Nothing in
the header to trust — the structure is validated by the divisibility of
the file size and every decoded record is re-checked for general
position.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .geom import Point, PointSet, is_general_position

ORDER_TYPE_DB_ENV = "ORDER_TYPE_DB_DIR"


class OrderTypeError(ValueError):
    """Structurally invalid or corrupt order-type data."""


def coord_width_for(n: int) -> int:
    if not 3 <= n <= 10:
        raise OrderTypeError(f"no catalog format for n={n}")
    return 1 if n <= 8 else 2


def db_filename(n: int) -> str:
    return f"otypes{n:02d}.b{8 * coord_width_for(n):02d}"


@dataclass(frozen=True)
class OrderTypeDb:
    path: str
    n: int
    coord_width: int
    record_count: int

    @property
    def record_size(self) -> int:
        return self.n * 2 * self.coord_width


@dataclass(frozen=True)
class OrderTypeRecord:
    index: int
    points: PointSet


def open_db(path: str, n: int) -> OrderTypeDb:
    """Validate the file against the fixed record layout for n points."""
    width = coord_width_for(n)
    rec = n * 2 * width
    try:
        size = os.path.getsize(path)
    except OSError as e:
        raise OrderTypeError(f"cannot stat {path}: {e}") from e
    if size % rec != 0:
        raise OrderTypeError(
            f"{path}: size {size} not divisible by record size {rec} "
            f"(n={n}, {width} byte(s) per coordinate)")
    return OrderTypeDb(path=path, n=n, coord_width=width,
                       record_count=size // rec)


def find_db(n: int, directory: Optional[str] = None) -> Optional[OrderTypeDb]:
    """Locate the catalog file for n under `directory` or $ORDER_TYPE_DB_DIR.

    Returns None when the directory is unset or the file is absent; raises
    OrderTypeError only for a present-but-corrupt file.
    """
    directory = directory or os.environ.get(ORDER_TYPE_DB_ENV)
    if not directory:
        return None
    path = os.path.join(directory, db_filename(n))
    if not os.path.exists(path):
        return None
    return open_db(path, n)


def read_batch(db: OrderTypeDb, start: int = 0,
               stop: Optional[int] = None) -> np.ndarray:
    """Decode records [start, stop) into an int64 array of shape (B, n, 2)."""
    stop = db.record_count if stop is None else stop
    if not 0 <= start <= stop <= db.record_count:
        raise OrderTypeError(
            f"range [{start}, {stop}) outside 0..{db.record_count}")
    count = stop - start
    if count == 0:
        return np.empty((0, db.n, 2), dtype=np.int64)
    dtype = np.dtype("<u1") if db.coord_width == 1 else np.dtype("<u2")
    with open(db.path, "rb") as fh:
        fh.seek(start * db.record_size)
        raw = fh.read(count * db.record_size)
    if len(raw) != count * db.record_size:
        raise OrderTypeError(f"{db.path}: short read at record {start}")
    flat = np.frombuffer(raw, dtype=dtype)
    return flat.reshape(count, db.n, 2).astype(np.int64)


def record_points(db: OrderTypeDb, coords_row: np.ndarray) -> PointSet:
    return PointSet(Point(i, int(coords_row[i, 0]), int(coords_row[i, 1]))
                    for i in range(db.n))


def iterate(db: OrderTypeDb, start: int = 0, stop: Optional[int] = None,
            validate: bool = True,
            chunk: int = 2048) -> Iterator[OrderTypeRecord]:
    """Stream records in file order, re-validating general position.

    A collinear triple in the data raises OrderTypeError naming the record
    index (validate=False skips the check for callers that batch it).
    """
    stop = db.record_count if stop is None else stop
    pos = start
    while pos < stop:
        hi = min(pos + chunk, stop)
        coords = read_batch(db, pos, hi)
        for off in range(hi - pos):
            ps = record_points(db, coords[off])
            if validate and not is_general_position(ps):
                raise OrderTypeError(
                    f"{db.path}: record {pos + off} has three "
                    f"collinear points")
            yield OrderTypeRecord(index=pos + off, points=ps)
        pos = hi


def encode_record(db: OrderTypeDb, ps: PointSet) -> bytes:
    """Inverse of decoding: n points, x then y, unsigned little-endian."""
    if len(ps) != db.n:
        raise OrderTypeError(f"expected {db.n} points, got {len(ps)}")
    limit = 1 << (8 * db.coord_width)
    out = bytearray()
    for p in ps:
        for v in (p.x, p.y):
            if not 0 <= v < limit:
                raise OrderTypeError(
                    f"coordinate {v} outside [0, {limit}) for "
                    f"{db.coord_width}-byte encoding")
            out += int(v).to_bytes(db.coord_width, "little")
    return bytes(out)

"""Binary point-set database: layout decoding, validation, env lookup.

The packing oracle here builds record bytes by hand (int.to_bytes, little
endian, x before y) so the decoder is checked against the wire format
itself, not against the module's own encoder.
"""
import os
from pathlib import Path

import numpy as np
import pytest

from crossfam.geom import Point, PointSet, is_general_position
from crossfam.otdb import (
    ORDER_TYPE_DB_ENV,
    OrderTypeError,
    coord_width_for,
    db_filename,
    encode_record,
    find_db,
    iterate,
    open_db,
    read_batch,
    record_points,
)

DATA = Path(__file__).parent / "data"


def pack(records, width):
    """Independent packer: n points, x then y, unsigned LE per coord."""
    out = bytearray()
    for pts in records:
        for x, y in pts:
            out += int(x).to_bytes(width, "little")
            out += int(y).to_bytes(width, "little")
    return bytes(out)


def write_db(tmp_path, n, records, width=None, name=None):
    width = coord_width_for(n) if width is None else width
    path = tmp_path / (name or db_filename(n))
    path.write_bytes(pack(records, width))
    return path


SQUARE8 = [(0, 0), (200, 3), (255, 250), (9, 255), (60, 40), (150, 60),
           (170, 190), (70, 180)]
FAN9 = [(0, 0), (60000, 1000), (59000, 9000), (55000, 20000),
        (47000, 31000), (36000, 41000), (23000, 48000), (11000, 52000),
        (1000, 53000)]


# ------------------------------------------------------------- file naming

def test_coord_width_small_n():
    assert [coord_width_for(n) for n in range(3, 9)] == [1] * 6


def test_coord_width_wide_n():
    assert coord_width_for(9) == 2
    assert coord_width_for(10) == 2


@pytest.mark.parametrize("n", [2, 11, 0, -3])
def test_coord_width_out_of_catalog(n):
    with pytest.raises(OrderTypeError):
        coord_width_for(n)


def test_db_filename_follows_width():
    assert db_filename(8) == "otypes08.b08"
    assert db_filename(9) == "otypes09.b16"
    assert db_filename(3) == "otypes03.b08"
    assert db_filename(10) == "otypes10.b16"


# ------------------------------------------------------------ open + decode

def test_open_db_counts_records(tmp_path):
    path = write_db(tmp_path, 8, [SQUARE8, SQUARE8[::-1]])
    db = open_db(path, 8)
    assert db.n == 8
    assert db.coord_width == 1
    assert db.record_size == 16
    assert db.record_count == 2


def test_open_db_wide_record_size(tmp_path):
    path = write_db(tmp_path, 9, [FAN9])
    db = open_db(path, 9)
    assert db.record_size == 36
    assert db.record_count == 1


def test_open_db_rejects_truncated_file(tmp_path):
    path = write_db(tmp_path, 8, [SQUARE8])
    path.write_bytes(path.read_bytes()[:-3])
    with pytest.raises(OrderTypeError, match="16"):
        open_db(path, 8)


def test_open_db_missing_file(tmp_path):
    with pytest.raises(OrderTypeError):
        open_db(tmp_path / "otypes08.b08", 8)


def test_open_db_empty_file_has_zero_records(tmp_path):
    path = tmp_path / db_filename(8)
    path.write_bytes(b"")
    assert open_db(path, 8).record_count == 0


def test_read_batch_matches_hand_packed_bytes(tmp_path):
    recs = [SQUARE8, [(255, 0)] * 0 + SQUARE8[::-1], SQUARE8]
    db = open_db(write_db(tmp_path, 8, recs), 8)
    got = read_batch(db, 0, 3)
    assert got.shape == (3, 8, 2)
    assert got.dtype == np.int64
    for r in range(3):
        for i, (x, y) in enumerate(recs[r]):
            assert (got[r, i, 0], got[r, i, 1]) == (x, y)


def test_read_batch_two_byte_coords(tmp_path):
    db = open_db(write_db(tmp_path, 9, [FAN9]), 9)
    got = read_batch(db, 0, 1)
    assert got[0, 1, 0] == 60000          # survives byte order
    assert got[0, 8, 1] == 53000


def test_read_batch_range_checked(tmp_path):
    db = open_db(write_db(tmp_path, 8, [SQUARE8]), 8)
    with pytest.raises(OrderTypeError):
        read_batch(db, 0, 2)
    with pytest.raises(OrderTypeError):
        read_batch(db, -1, 1)


def test_record_points_ids_and_coords(tmp_path):
    db = open_db(write_db(tmp_path, 8, [SQUARE8]), 8)
    ps = record_points(db, read_batch(db, 0, 1)[0])
    assert isinstance(ps, PointSet)
    assert sorted(ps.ids()) == list(range(8))
    assert (ps[2].x, ps[2].y) == SQUARE8[2]


# --------------------------------------------------------- iterate/validate

def test_iterate_yields_every_record(tmp_path):
    db = open_db(write_db(tmp_path, 8, [SQUARE8, SQUARE8[::-1]]), 8)
    recs = list(iterate(db))
    assert [r.index for r in recs] == [0, 1]
    assert all(is_general_position(r.points) for r in recs)


def test_iterate_flags_collinear_record(tmp_path):
    bad = list(SQUARE8)
    bad[4] = (100, 100)
    bad[5] = (150, 150)
    bad[6] = (200, 200)
    db = open_db(write_db(tmp_path, 8, [SQUARE8, bad]), 8)
    with pytest.raises(OrderTypeError, match="1"):
        list(iterate(db))
    # opting out of validation lets the degenerate record through
    assert len(list(iterate(db, validate=False))) == 2


def test_iterate_subrange(tmp_path):
    recs = [SQUARE8, SQUARE8[::-1], SQUARE8, SQUARE8[::-1]]
    db = open_db(write_db(tmp_path, 8, recs), 8)
    assert [r.index for r in iterate(db, 1, 3)] == [1, 2]


# ----------------------------------------------------------- encode round

def test_encode_record_inverts_decode(tmp_path):
    path = write_db(tmp_path, 9, [FAN9, FAN9[::-1]])
    db = open_db(path, 9)
    raw = path.read_bytes()
    for rec in iterate(db):
        lo = rec.index * db.record_size
        assert encode_record(db, rec.points) == raw[lo:lo + db.record_size]


def test_encode_record_bounds_checked(tmp_path):
    db = open_db(write_db(tmp_path, 8, [SQUARE8]), 8)
    huge = PointSet(Point(i, x * 10, y) for i, (x, y) in enumerate(SQUARE8))
    with pytest.raises(OrderTypeError):
        encode_record(db, huge)


# -------------------------------------------------------------- env lookup

def test_find_db_unset_env(monkeypatch):
    monkeypatch.delenv(ORDER_TYPE_DB_ENV, raising=False)
    assert find_db(8) is None


def test_find_db_missing_file(monkeypatch, tmp_path):
    monkeypatch.setenv(ORDER_TYPE_DB_ENV, str(tmp_path))
    assert find_db(9) is None


def test_find_db_opens_present_file(monkeypatch, tmp_path):
    write_db(tmp_path, 8, [SQUARE8])
    monkeypatch.setenv(ORDER_TYPE_DB_ENV, str(tmp_path))
    db = find_db(8)
    assert db is not None
    assert db.record_count == 1
    assert find_db(9) is None


def test_find_db_corrupt_file_raises(monkeypatch, tmp_path):
    (tmp_path / db_filename(8)).write_bytes(b"\x01\x02\x03")
    monkeypatch.setenv(ORDER_TYPE_DB_ENV, str(tmp_path))
    with pytest.raises(OrderTypeError):
        find_db(8)


def test_explicit_dir_overrides_env(monkeypatch, tmp_path):
    write_db(tmp_path, 8, [SQUARE8])
    monkeypatch.setenv(ORDER_TYPE_DB_ENV, str(tmp_path / "nowhere"))
    assert find_db(8, directory=tmp_path) is not None


# --------------------------------------------------------- bundled fixture

@pytest.mark.parametrize("n", [8, 9])
def test_bundled_fixture_opens(n):
    db = open_db(DATA / db_filename(n), n)
    assert db.record_count == 64


@pytest.mark.parametrize("n", [8, 9])
def test_bundled_fixture_all_general_position(n):
    db = open_db(DATA / db_filename(n), n)
    count = 0
    for rec in iterate(db):
        count += 1
        assert len(rec.points) == n
    assert count == 64


def test_bundled_fixture_coords_fit_width():
    db = open_db(DATA / db_filename(9), 9)
    coords = read_batch(db)
    assert coords.min() >= 0
    assert coords.max() <= 0xFFFF

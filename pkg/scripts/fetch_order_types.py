#!/usr/bin/env python3
"""Download the published planar order-type catalog files.

The catalog stores one representative integer point set per order type,
back to back: n points, x before y, unsigned little-endian coordinates
of 1 byte (n <= 8) or 2 bytes (n in {9, 10}).  Files land in the
directory named by ORDER_TYPE_DB_DIR (or --dest) under their canonical
names, e.g. otypes08.b08 / otypes09.b16, and are validated structurally
and against the known catalog sizes after download.

The scans and acceptance checks that need these files skip cleanly when
they are absent, so fetching is optional.
"""
import argparse
import os
import sys
import urllib.error
import urllib.request
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from crossfam.otdb import (  # noqa: E402
    ORDER_TYPE_DB_ENV, db_filename, open_db)

DEFAULT_BASE = ("http://www.ist.tugraz.at/staff/aichholzer/research/"
                "rp/triangulations/ordertypes/data/")

# order types of n points in general position, up to the catalog limit
KNOWN_COUNTS = {3: 1, 4: 2, 5: 3, 6: 16, 7: 135, 8: 3315, 9: 158817,
                10: 14309547}


def fetch(n: int, dest: Path, base: str, force: bool) -> bool:
    name = db_filename(n)
    target = dest / name
    if target.exists() and not force:
        print(f"{name}: already present ({target.stat().st_size} bytes), "
              f"skipping (use --force to refetch)")
    else:
        url = base.rstrip("/") + "/" + name
        print(f"{name}: fetching {url}")
        try:
            with urllib.request.urlopen(url, timeout=120) as resp:
                data = resp.read()
        except (urllib.error.URLError, OSError) as exc:
            print(f"{name}: download failed ({exc}); fetch it manually "
                  f"and place it at {target}", file=sys.stderr)
            return False
        tmp = target.with_suffix(target.suffix + ".part")
        tmp.write_bytes(data)
        tmp.replace(target)
    db = open_db(target, n)
    expect = KNOWN_COUNTS[n]
    if db.record_count != expect:
        print(f"{name}: has {db.record_count} records, catalog says "
              f"{expect} -- refusing to keep it", file=sys.stderr)
        target.unlink()
        return False
    print(f"{name}: ok, {db.record_count} order types, "
          f"{db.coord_width * 8}-bit coordinates")
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, nargs="+", default=[8, 9],
                    choices=sorted(KNOWN_COUNTS),
                    help="point counts to fetch (default: 8 9)")
    ap.add_argument("--dest", type=Path,
                    default=os.environ.get(ORDER_TYPE_DB_ENV),
                    help=f"target directory (default: ${ORDER_TYPE_DB_ENV})")
    ap.add_argument("--base-url", default=DEFAULT_BASE,
                    help="catalog base URL")
    ap.add_argument("--force", action="store_true",
                    help="refetch files that already exist")
    args = ap.parse_args()
    if args.dest is None:
        ap.error(f"--dest not given and ${ORDER_TYPE_DB_ENV} is unset")
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    ok = all([fetch(n, dest, args.base_url, args.force) for n in args.n])
    if ok:
        print(f"done; point {ORDER_TYPE_DB_ENV} at {dest}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

"""Rewrite the on-disk terrain catalog from the built-in definitions.

Verifies every entry (surface cleanliness, expected classification,
covering maps) before writing, so a bad edit to the catalog module fails
here instead of producing stale data files.

Run: python3 scripts/regen_catalog.py [--dir catalog]
"""

import argparse
import sys

from binox.catalog import verify_catalog, write_catalog


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dir", default="catalog", help="output directory")
    args = ap.parse_args(argv)

    for line in verify_catalog():
        print(line)
    written = write_catalog(args.dir)
    for path in written:
        print(f"wrote {path}")
    print(f"{len(written)} files in {args.dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

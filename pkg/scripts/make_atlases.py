#!/usr/bin/env python3
"""Write orbit atlases for a list of algebras to files.

Example:
    python scripts/make_atlases.py --out-dir atlases so7 so8 sp6 sl4
    python scripts/make_atlases.py --format json so8
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from orbitres import enumerate_orbits, parse_algebra
from orbitres.report import atlas_csv, atlas_markdown, build_report, report_json


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("algebras", nargs="+", help="algebra names, e.g. so8 sp6 sl5")
    parser.add_argument("--format", choices=("md", "csv", "json"), default="md")
    parser.add_argument("--out-dir", type=Path, default=Path("atlases"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name in args.algebras:
        lie_type = parse_algebra(name)
        reports = [build_report(orbit) for orbit in enumerate_orbits(lie_type)]
        if args.format == "json":
            text = json.dumps([report_json(r) for r in reports], indent=2) + "\n"
        elif args.format == "csv":
            text = atlas_csv(reports)
        else:
            text = atlas_markdown(reports, title=f"nilpotent orbits of {lie_type.name}") + "\n"
        target = args.out_dir / f"{lie_type.name}.{args.format}"
        target.write_text(text, encoding="utf-8")
        print(f"wrote {target} ({len(reports)} orbits)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Tabulate resolution statistics per algebra over a range of matrix sizes.

For each classical algebra up to --max-m, counts how many orbits exist, how
many are even, how many admit a symplectic resolution, and how many are
polarizable without admitting one (degree of every collapsing > 1).  The
last column is where the interesting geometry lives: those orbits are
Richardson but every T*(G/P) over them is a non-birational cover.

Example:
    python scripts/resolution_census.py --max-m 16
"""

from __future__ import annotations

import argparse

from orbitres import (
    Family,
    LieType,
    Verdict,
    admits_symplectic_resolution,
    enumerate_orbits,
    is_even_orbit,
    polarizable,
)


def census(lie_type: LieType) -> tuple[int, int, int, int]:
    total = even = resolved = polarized_unresolved = 0
    for orbit in enumerate_orbits(lie_type):
        total += 1
        even += is_even_orbit(orbit)
        yes = admits_symplectic_resolution(orbit).answer is Verdict.YES
        resolved += yes
        if not yes and orbit.family.is_bcd and polarizable(orbit).polarizable:
            polarized_unresolved += 1
    return total, even, resolved, polarized_unresolved


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=14)
    args = parser.parse_args()

    print(f"{'algebra':>8} {'orbits':>7} {'even':>6} {'resolved':>9} {'pol. w/o res.':>14}")
    rows = []
    for m in range(2, args.max_m + 1):
        rows.append(LieType(Family.SL, m))
        if m % 2 == 0:
            rows.append(LieType(Family.SP, m))
            if m >= 4:
                rows.append(LieType(Family.SO_EVEN, m))
        elif m >= 3:
            rows.append(LieType(Family.SO_ODD, m))
    for lie_type in rows:
        total, even, resolved, pol = census(lie_type)
        print(f"{lie_type.name:>8} {total:>7} {even:>6} {resolved:>9} {pol:>14}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

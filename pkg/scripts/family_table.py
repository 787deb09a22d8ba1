"""Print chi_s, chi, edge count and criticality for the named families.

    python3 scripts/family_table.py --max-n 10
"""

import argparse

from starcrit import families
from starcrit.coloring import chromatic_number, star_chromatic_number
from starcrit.criticality import is_k_critical_direct


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()
    print(f"{'family':12s} {'n':>3s} {'m':>4s} {'chi':>4s} {'chi_s':>6s} critical")
    for family in (families.Family.HORN, families.Family.DOUBLE_HORN, families.Family.CONE_C5):
        for n in range(5, args.max_n + 1):
            g = families.build(family, n)
            chi = chromatic_number(g)[0]
            k = star_chromatic_number(g)[0]
            critical = is_k_critical_direct(g).is_critical
            print(f"{family.value:12s} {n:3d} {g.m:4d} {chi:4d} {k:6d} {critical}")


if __name__ == "__main__":
    main()

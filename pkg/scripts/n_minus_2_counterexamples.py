"""List connected graphs that are free of I4, 2K2+K1 and P3+P2 and contain an
I3 or induced 2K2, yet have chi_s below n - 2.

Each row prints the graph6 code, the edges, an explicit star coloring with
chi_s colors (validated), and the oracle value.

    python3 scripts/n_minus_2_counterexamples.py --max-n 7
"""

import argparse

from starcrit.coloring import is_star_coloring, star_chromatic_number, star_chromatic_number_oracle
from starcrit.criticality import chi_s_equals_n_minus_2, is_k_critical_direct, is_n_minus_2_critical
from starcrit.enumeration import enumerate_connected
from starcrit.graph import encode_graph6


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=7)
    args = parser.parse_args()

    for n in range(5, args.max_n + 1):
        equivalence, criticality = [], []
        for g in enumerate_connected(n):
            verdict = chi_s_equals_n_minus_2(g)
            if not verdict.applicable:
                continue
            k, colors = star_chromatic_number(g)
            if verdict.holds != (k == n - 2):
                assert is_star_coloring(g, colors)
                equivalence.append((g, k, colors))
            report = is_k_critical_direct(g)
            if is_n_minus_2_critical(g).holds != (report.is_critical and report.chi_s == n - 2):
                criticality.append((g, report))
        print(f"n = {n}: {len(equivalence)} equivalence failures, {len(criticality)} criticality failures")
        for g, k, colors in equivalence:
            code = encode_graph6(g).decode()
            oracle = star_chromatic_number_oracle(g)
            print(f"  {code:8s} m={g.m:2d} chi_s={k} oracle={oracle} coloring={colors} edges={g.edges()}")
        for g, report in criticality:
            code = encode_graph6(g).decode()
            print(f"  critical? {code:8s} chi_s={report.chi_s} direct critical={report.is_critical}")


if __name__ == "__main__":
    main()

"""Brute-force s(n,k), f(n,k) and g(n,k) for small n, next to the closed forms.

f is taken over connected graphs. Rows where the closed form for f disagrees
with the exhaustive value are marked with '!' and print the witness graph.

    python demos/extremal_tables.py --n 7
"""

from __future__ import annotations

import argparse

from mpreclusion.analysis.extremal import brute_f, brute_g, brute_s, max_mp
from mpreclusion.analysis.registry import f_closed
from mpreclusion.graph import to_graph6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6, 7])
    args = ap.parse_args()

    for n in args.n:
        print(f"n = {n}")
        print(f"  {'k':>2} {'s':>4} {'f':>4} {'f_cf':>5} {'g':>4}")
        for k in range(max_mp(n) + 1):
            s, f, g = brute_s(n, k), brute_f(n, k), brute_g(n, k)
            closed = f_closed(n, k)
            mark = "!" if closed is not None and closed != f.value else " "
            line = f"  {k:>2} {s.value!s:>4} {f.value:>4} {closed!s:>5} {g.value:>4} {mark}"
            if mark == "!" and f.witness is not None:
                line += f" witness {to_graph6(f.witness)} ({f.witness.m} edges, connected, mp < {k})"
            print(line)


if __name__ == "__main__":
    main()

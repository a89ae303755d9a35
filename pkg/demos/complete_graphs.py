"""How hard is it to break every (almost-)perfect matching of K_n?

Prints mp(K_n) with the certificate the solver returns. Small odd orders do
not follow the large-n formula, which is visible in the last column.

    python demos/complete_graphs.py
"""

from __future__ import annotations

import argparse

from mpreclusion.constructions import complete
from mpreclusion.preclusion import mp


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=13)
    args = ap.parse_args()

    print(f"{'n':>3} {'mp':>4} {'formula':>8}  certificate")
    for n in range(2, args.max_n + 1):
        r = mp(complete(n))
        formula = n - 1 if n % 2 == 0 else 2 * n - 3
        c = r.certificate
        print(f"{n:>3} {r.value:>4} {formula:>8}  |F|={len(c.F)} S={list(c.witness.S)} odd={c.witness.odd_components}")


if __name__ == "__main__":
    main()

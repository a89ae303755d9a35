"""Sum and product of mp(G) and mp(complement G) over all graphs of small order.

    python demos/nordhaus_gaddum.py
"""

from __future__ import annotations

from mpreclusion.analysis.scans import nordhaus_gaddum_scan


def main() -> None:
    print(f"{'n':>3} {'status':>10} {'max sum':>8} {'bound':>6} {'max prod':>9} {'bound':>6}  sums attained")
    for n in range(3, 8):
        rep = nordhaus_gaddum_scan(n)
        d = rep.details
        print(f"{n:>3} {rep.status.value:>10} {d['max_sum']:>8} {d['sum_bound']:>6} "
              f"{d['max_product']:>9} {d['product_bound']!s:>6}  {d['sums_attained']}")


if __name__ == "__main__":
    main()

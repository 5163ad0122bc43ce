"""Print spin Hurwitz numbers in degrees 3 and 4 next to their closed forms.

    python scripts/degree_tables.py --max-genus 6 --max-k 8
"""

import argparse

from spinhurwitz.partitions import Partition
from spinhurwitz.spin import Parity, SpinEngine, SpinQuery, degree3_closed_form, degree4_closed_form


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-genus", type=int, default=5)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args()

    engine = SpinEngine()
    mismatches = 0
    for d, m, form in ((3, Partition([3]), degree3_closed_form), (4, Partition([3, 1]), degree4_closed_form)):
        print(f"degree {d}, profile ({m})^k")
        for h in range(args.max_genus + 1):
            for p in ([Parity.EVEN] if h == 0 else [Parity.EVEN, Parity.ODD]):
                vals = [engine.value(SpinQuery(h, p, d, (m,) * k)) for k in range(args.max_k + 1)]
                ok = all(v == form(h, p, k) for k, v in enumerate(vals))
                mismatches += not ok
                print(f"  h={h} {p.symbol}: " + "  ".join(str(v) for v in vals) + ("" if ok else "   <-- MISMATCH"))
    print(f"{mismatches} rows disagree with the closed forms")


if __name__ == "__main__":
    main()

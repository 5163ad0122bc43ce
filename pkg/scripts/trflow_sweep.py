"""Random sweep of TR-invariant block families: compare the two spectral-flow formulas.

    python scripts/trflow_sweep.py --trials 500 --max-dim 8
"""

import argparse
from collections import Counter

import numpy as np

from spinhurwitz.trflow import make_block_family, sf_by_determinant, sf_by_kernel, vanishing_check
from spinhurwitz.verify import block_specs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--max-dim", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    specs = list(block_specs(args.max_dim))
    tally = Counter()
    worst = 0.0
    for trial in range(args.trials):
        spec = specs[rng.integers(len(specs))]
        f = make_block_family(spec, scale=float(rng.uniform(0.1, 10)), seed=int(rng.integers(2**31)))
        det, ker = sf_by_determinant(f), sf_by_kernel(f)
        worst = max(worst, vanishing_check(f, np.linspace(-3, 3, 7))["max_identity_residual"])
        tally["agree" if det.sign == ker.sign else "disagree"] += 1
        tally[f"kernel_dim={ker.kernel_dim_complex}"] += 1
    for key, n in sorted(tally.items()):
        print(f"{key:>16}: {n}")
    print(f"max vanishing-identity residual: {worst:.2e}")


if __name__ == "__main__":
    main()

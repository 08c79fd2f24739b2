"""Margins of the two-symmetric-band bound, with and without the 1/a factor on Lambda_n.

Prints lambda_2n, the bound Lambda_n / a + (1 - a^2)/(8a^2) and the sharper
variant Lambda_n + (1 - a^2)/(8a^2). The sharper one is not guaranteed and
fails for some (a, n); those rows are flagged.
"""

import argparse

from lebesgue_intervals.lebesgue import chebyshev_system, lebesgue_constant
from lebesgue_intervals.symmetric import SymmetricPairConfig, pair_bound, sharper_bound, symmetric_nodes


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--a", type=float, nargs="+", default=[0.2, 0.5, 0.8, 0.95])
    parser.add_argument("--n", type=int, nargs="+", default=[1, 2, 3, 4, 8, 16, 32, 64])
    args = parser.parse_args()
    print(f"{'a':>5} {'n':>4} {'lambda_2n':>12} {'bound':>12} {'sharper':>12}")
    for a in args.a:
        for n in args.n:
            big = lebesgue_constant(chebyshev_system(n)).constant
            lam = lebesgue_constant(symmetric_nodes(SymmetricPairConfig(a, n))).constant
            sharp = sharper_bound(a, big)
            flag = "  <- sharper bound exceeded" if lam > sharp else ""
            print(f"{a:>5g} {n:>4} {lam:>12.6f} {pair_bound(a, big):>12.6f} {sharp:>12.6f}{flag}")


if __name__ == "__main__":
    main()

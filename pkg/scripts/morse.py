"""M_emp of the golden axis for several budgets and seeds."""
import argparse
from fractions import Fraction

from outerlab.lab.catalog import axis_pair
from outerlab.minima import line_of_minima, make_grid
from outerlab.minima.morse import morse_test


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--K", type=float, default=2.0)
    p.add_argument("--budgets", type=int, nargs="+", default=[50, 100, 200])
    p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = p.parse_args()

    mu, nu = axis_pair("golden", 8)
    line = line_of_minima(mu, nu, Fraction(1, 20), make_grid(-4, 4, Fraction(1, 2)))
    print(f"kappa_emp {line.kappa_emp:.4f}")
    print(f"{'seed':>4} {'budget':>6} {'certified':>9} {'rate':>5} {'M_emp':>7}  per kind")
    for seed in args.seeds:
        for b in args.budgets:
            r = morse_test(line, args.K, b, seed=seed)
            m = "n/a" if r.M_emp is None else f"{r.M_emp:.4f}"
            kinds = {k: round(v, 3) for k, v in sorted(r.per_kind.items())}
            print(f"{seed:>4} {b:>6} {r.certified:>9} {r.rate:>5.2f} {m:>7}  {kinds}")


if __name__ == "__main__":
    main()

"""kappa_emp of the golden axis across grid steps and lamination depths.

    python3 scripts/golden_axis.py --steps 1/2 1/4 --depths 8 10 --csv axis.csv
"""
import argparse
import time
from fractions import Fraction

from outerlab.lab.catalog import axis_pair
from outerlab.lab.report import write_csv
from outerlab.minima import line_of_minima, make_grid


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--steps", nargs="+", default=["1/2", "1/4"])
    p.add_argument("--depths", nargs="+", type=int, default=[8, 10])
    p.add_argument("--span", type=Fraction, default=Fraction(4))
    p.add_argument("--eps", type=Fraction, default=Fraction(1, 20))
    p.add_argument("--csv", help="table of the first line (t, value, systole, d to previous)")
    args = p.parse_args()

    first = None
    print(f"{'depth':>5} {'step':>5} {'points':>6} {'kappa_emp':>10} {'seconds':>8}")
    for m in args.depths:
        mu, nu = axis_pair("golden", m)
        for step in map(Fraction, args.steps):
            t0 = time.perf_counter()
            line = line_of_minima(mu, nu, args.eps, make_grid(-args.span, args.span, step))
            print(f"{m:>5} {str(step):>5} {len(line.grid):>6} {line.kappa_emp:>10.4f} {time.perf_counter() - t0:>8.1f}")
            first = first or line
    if args.csv and first is not None:
        write_csv(first.table(), ("t", "value", "systole", "d_to_previous"), args.csv)


if __name__ == "__main__":
    main()

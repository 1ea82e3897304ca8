"""Contracting certificate at t = 0 and the contraction inequalities along the golden axis.

Prints the violation count at kappa_emp and the smallest kappa clearing the sample.
"""
import argparse
import json
from collections import Counter
from fractions import Fraction

from outerlab.lab.catalog import axis_pair
from outerlab.minima import line_of_minima, make_grid
from outerlab.minima.contracting import contracting_certify
from outerlab.minima.quality import axis_quality


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--B", type=Fraction, default=Fraction(20))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kappa", type=float, nargs="*", default=[], help="extra kappa values to score")
    p.add_argument("--out", help="write both reports as JSON")
    args = p.parse_args()

    mu, nu = axis_pair("golden", 8)
    line = line_of_minima(mu, nu, Fraction(1, 20), make_grid(-4, 4, Fraction(1, 2)))
    rep = contracting_certify(mu, nu, args.B, line.eps, args.samples, seed=args.seed, anchors=line.points)
    print(f"B = {args.B}: ratio {rep.ratio} item1 {rep.item1.verdict}, item2 {rep.item2.verdict} "
          f"(min {float(rep.item2.minimum):.4f}), item3 {rep.item3.verdict}")
    q = axis_quality(line, args.samples, seed=args.seed)
    print(f"kappa_emp {q.kappa:.4f}: {q.violation_count} violations "
          f"{dict(sorted(Counter(v.item for v in q.violations).items()))}; kappa_required {q.kappa_required:.4f}")
    for k in args.kappa:
        r = axis_quality(line, args.samples, seed=args.seed, kappa=k)
        print(f"kappa {k:.4f}: {r.violation_count} violations")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"contracting": rep.to_dict(), "quality": q.to_dict()}, fh, indent=2, default=str)


if __name__ == "__main__":
    main()

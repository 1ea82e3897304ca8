"""Orbit of the golden Schottky group <phi^k, psi^k> in Outer space.

Reports freeness up to L, the fitted lower slope, and the shadow separation in
the free factor graph.  L = 4 at k = 4 takes a couple of minutes.
"""
import argparse
import time

from outerlab.lab import catalog
from outerlab.lab.report import write_csv
from outerlab.lab.schottky import orbit_qi_experiment, schottky_build


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--free-L", type=int, default=6)
    p.add_argument("--L", type=int, default=3)
    p.add_argument("--graph", default="rose-half")
    p.add_argument("--csv", help="per-word distances")
    args = p.parse_args()

    t0 = time.perf_counter()
    spec = schottky_build(catalog.PHI, catalog.PSI, args.k, args.free_L)
    v = spec.verdict
    print(f"k={args.k}: free up to {v.L}: {v.free} ({v.words} words, {v.inner_checks} inner checks, "
          f"relation {v.relation}); fills-certified {spec.fills}")
    if not v.free:
        return
    fit = orbit_qi_experiment(spec, catalog.graph(args.graph), args.L)
    print(f"c = {fit.c:.4f}, c' = {fit.c_prime:.4f}, residual {fit.residual:.4f}, upper slope {fit.upper_slope:.4f}")
    print("min d per length:", {n: round(d, 3) for n, d in sorted(fit.per_length_min.items())})
    print(f"shadow: {fit.shadow_certified}/{fit.shadow_total} certified >= 3 ({fit.shadow_fraction:.1%})")
    print(f"{time.perf_counter() - t0:.1f}s")
    if args.csv:
        write_csv(sorted(fit.distances.items(), key=lambda x: (len(x[0]), x[0])), ("word", "d"), args.csv)


if __name__ == "__main__":
    main()

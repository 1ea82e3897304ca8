"""Command line entry point.  Exit codes: 0 ok, 2 invalid input, 3 verdict failed, 4 inconclusive."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from ..errors import Infeasible, InvalidInput
from ..factorgraph import shadow_along
from ..freegroup.whitehead import common_proper_factor, is_primitive
from ..freegroup.words import ConjClass
from ..laminations import RationalLamination
from ..minima import line_of_minima, make_grid, min_search
from ..minima.contracting import contracting_certify
from ..minima.morse import morse_test
from ..minima.quality import axis_quality
from ..outerspace.graph import MarkedGraph, format_fraction
from ..outerspace.lipschitz import sym_distance
from ..outerspace.loops import candidates
from . import catalog, report
from .config import SCHEMA, ExperimentConfig, load_config
from .schottky import orbit_qi_experiment, schottky_build

OK, INVALID, FAILED, INCONCLUSIVE = 0, 2, 3, 4
log = logging.getLogger("outerlab")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INVALID)


def load_graph(spec):
    """A catalog name, a path to a JSON file, or inline JSON."""
    if spec in catalog.GRAPHS:
        return catalog.graph(spec)
    text = spec
    p = Path(spec)
    if not spec.lstrip().startswith("{") and p.exists():
        text = p.read_text()
    try:
        return MarkedGraph.loads(text)
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise InvalidInput(f"cannot read graph {spec!r}: {e}") from None


def parse_objective(text, rank):
    """'a:1,ab:1/2' -> a lamination."""
    support = []
    for part in text.split(","):
        word, _, w = part.partition(":")
        support.append((word.strip(), w.strip() or "1"))
    return RationalLamination(tuple(support), rank)


def config_of(args):
    cfg = load_config(Path(args.config).read_text()) if args.config else ExperimentConfig()
    if getattr(args, "seed", None) is not None:
        cfg = cfg.replace(seed=args.seed)
    return cfg


def build_axis(cfg):
    mu, nu = catalog.axis_pair(cfg.catalog, cfg.depth)
    return line_of_minima(mu, nu, cfg.eps, make_grid(*cfg.grid))


def cmd_dist(args):
    if args.fixture:
        if args.fixture not in catalog.FIXTURES:
            raise InvalidInput(f"unknown fixture {args.fixture!r}")
        args.S, args.T = catalog.FIXTURES[args.fixture]
    if not (args.S and args.T):
        raise InvalidInput("dist needs two graphs or --fixture")
    S, T = load_graph(args.S), load_graph(args.T)
    sd = sym_distance(S, T)
    body = {
        "forward": sd.forward.value,
        "forward_witness": str(sd.forward.witness),
        "backward": sd.backward.value,
        "backward_witness": str(sd.backward.witness),
        "product": sd.product,
        "d": sd.value,
    }
    return OK, body, None


def cmd_candidates(args):
    g = load_graph(args.graph)
    rows = [(c.tag, c.loop, str(c.cls), g.path_length(c.loop)) for c in candidates(g)]
    return OK, {"candidates": [list(r) for r in rows]}, (("tag", "loop", "class", "length"), rows)


def cmd_min(args):
    lam = parse_objective(args.objective, args.rank)
    seed = load_graph(args.seed_graph) if args.seed_graph else None
    g = min_search(lam, Fraction(args.eps), seed)
    from ..laminations import pairing

    return OK, {"graph": g.to_dict(), "value": pairing(g, lam)}, None


def _axis_rows(line):
    return [(t, v, s, d) for t, v, s, d in line.table()]


def cmd_axis(args):
    cfg = config_of(args)
    line = build_axis(cfg)
    body = {
        "kappa_emp": line.kappa_emp,
        "fills_certified": line.certified_pair,
        "points": [{"t": t, "value": v, "graph": g.to_dict(), "weights": list(w)}
                   for t, v, g, w in zip(line.grid, line.values, line.points, line.weights)],
    }
    return OK, body, (("t", "value", "systole", "d_to_previous"), _axis_rows(line)), cfg


def cmd_contract(args):
    cfg = config_of(args)
    line = build_axis(cfg)
    rep = contracting_certify(line.mu, line.nu, cfg.B, cfg.eps, cfg.samples, seed=cfg.seed,
                              anchors=line.points)
    q = axis_quality(line, cfg.samples, seed=cfg.seed)
    limit = cfg.thresholds["contraction_violations"]
    ok = rep.passed and q.violation_count <= limit
    body = {"contracting": rep.to_dict(), "quality": q.to_dict()}
    return (OK if ok else FAILED), body, None, cfg


def cmd_morse(args):
    cfg = config_of(args)
    line = build_axis(cfg)
    budget = args.budget or cfg.morse_budget
    rep = morse_test(line, cfg.morse_K, budget, seed=cfg.seed)
    body = {"kappa_emp": line.kappa_emp, "morse": rep.to_dict()}
    return (INCONCLUSIVE if rep.inconclusive else OK), body, None, cfg


def cmd_shadow(args):
    cfg = config_of(args)
    line = build_axis(cfg)
    rows = [(r.t, str(r.point.cls), " ".join(r.point.vertex.generators), r.to_previous) for r in shadow_along(line)]
    return OK, {"rows": [list(r) for r in rows]}, (("t", "class", "generators", "verdict"), rows), cfg


def cmd_primitive(args):
    res = is_primitive(ConjClass(args.word, args.rank))
    return OK, {"word": args.word, "primitive": res.primitive, "basis": list(res.basis or ())}, None


def cmd_common(args):
    classes = [ConjClass(w, args.rank) for w in args.words]
    v = common_proper_factor(classes)
    body = {"kind": v.kind, "factor": list(v.factor), "complement": list(v.complement), "reason": v.reason}
    return (INCONCLUSIVE if v.kind == "inconclusive" else OK), body, None


def _schottky(cfg):
    return schottky_build(catalog.automorphism(cfg.catalog), catalog.automorphism(cfg.psi),
                          cfg.schottky_k, cfg.schottky_L)


def cmd_schottky(args):
    cfg = config_of(args)
    spec = _schottky(cfg)
    v = spec.verdict
    body = {"free": v.free, "L": v.L, "words": v.words, "relation": v.relation,
            "inner_checks": v.inner_checks, "fills_certified": spec.fills}
    return (OK if v.free else FAILED), body, None, cfg


def cmd_orbit(args):
    cfg = config_of(args)
    spec = _schottky(cfg)
    if not spec.verdict.free:
        return FAILED, {"free": False, "relation": spec.verdict.relation}, None, cfg
    T = load_graph(args.graph)
    fit = orbit_qi_experiment(spec, T, cfg.orbit_L)
    body = {
        "c": fit.c, "c_prime": fit.c_prime, "residual": fit.residual, "upper_slope": fit.upper_slope,
        "per_length_min": fit.per_length_min, "shadow_fraction": fit.shadow_fraction,
        "shadow_total": fit.shadow_total,
    }
    ok = fit.c > 0 and fit.shadow_fraction >= cfg.thresholds["fills_fraction"]
    rows = [(w, d) for w, d in fit.distances.items()]
    return (OK if ok else FAILED), body, (("word", "d"), rows), cfg


COMMANDS = {
    "dist": cmd_dist,
    "candidates": cmd_candidates,
    "min": cmd_min,
    "axis": cmd_axis,
    "contract-test": cmd_contract,
    "morse-test": cmd_morse,
    "shadow": cmd_shadow,
    "primitive": cmd_primitive,
    "common-factor": cmd_common,
    "schottky": cmd_schottky,
    "orbit": cmd_orbit,
}


def build_parser():
    p = _Parser(prog="outerlab", description="Experiments in Outer space and the free factor graph.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, config=False):
        sp.add_argument("--out", help="write the JSON report here instead of stdout")
        sp.add_argument("--csv", help="also write a CSV table")
        if config:
            sp.add_argument("--config", help="YAML/JSON experiment config; keys: " + ", ".join(SCHEMA))
            sp.add_argument("--seed", type=int)
        return sp

    sp = common(sub.add_parser("dist", help="symmetric Lipschitz distance"))
    sp.add_argument("S", nargs="?")
    sp.add_argument("T", nargs="?")
    sp.add_argument("--fixture")
    sp = common(sub.add_parser("candidates", help="candidate loops of a graph"))
    sp.add_argument("graph")
    sp = common(sub.add_parser("min", help="local minimum of a lamination over the thick part"))
    sp.add_argument("objective", help="e.g. 'a:1,b:1'")
    sp.add_argument("--rank", type=int, default=2)
    sp.add_argument("--eps", default="1/10")
    sp.add_argument("--seed-graph")
    for name in ("axis", "contract-test", "shadow", "schottky"):
        common(sub.add_parser(name), config=True)
    sp = common(sub.add_parser("morse-test"), config=True)
    sp.add_argument("--budget", type=int)
    sp = common(sub.add_parser("orbit"), config=True)
    sp.add_argument("--graph", default="rose-half")
    sp = common(sub.add_parser("primitive"))
    sp.add_argument("word")
    sp.add_argument("--rank", type=int, default=2)
    sp = common(sub.add_parser("common-factor"))
    sp.add_argument("words", nargs="+")
    sp.add_argument("--rank", type=int, default=2)
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out = COMMANDS[args.command](args)
    except (InvalidInput, Infeasible, FileNotFoundError) as e:
        print(f"outerlab: {e}", file=sys.stderr)
        return INVALID
    code, body, table = out[:3]
    cfg = out[3] if len(out) > 3 else None
    verdict = {OK: "ok", FAILED: "failed", INCONCLUSIVE: "inconclusive"}[code]
    rep = report.build(args.command, cfg, body, verdict)
    if args.out:
        report.write(rep, args.out)
    else:
        stdout.write(report.dumps(rep))
    if args.csv and table:
        report.write_csv(table[1], table[0], args.csv)
    return code


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point: ``gbsample <command> [options]``.

Exit codes: 0 success, 1 bad input, 2 escalation budget exhausted,
3 internal round cap hit.
"""

import argparse
import json
import random
import sys
import warnings

from . import __version__
from .bench import scaling_sweep
from .buchberger import buchberger, format_lineage, longest_lineage, minimalize, reduce
from .gbviolator import GroebnerViolatorSpace
from .io import read_ideal, read_matrix, read_polynomials, write_polynomials
from .pipeline import EscalationError, PipelineConfig, run_spark
from .poly import parse_field
from .predictor import (RegressionModel, evaluate, fit, generate_random_binomial_ideals,
                        load_dataset, predict, save_dataset)
from .universe import oracle_universe, prune_universe, toric_universe, universe_size_bound
from .violator import RoundCapExceeded, check_axioms


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", choices=("lex", "grlex", "grevlex"), default=None)
    p.add_argument("--field", default=None, help="QQ or Fp:<p>")
    p.add_argument("--stats", default=None, help="write JSON statistics here")
    p.add_argument("--quiet", action="store_true")
    return p


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="gbsample", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="sample a minimal Groebner basis")
    p.add_argument("--input", required=True)
    p.add_argument("--universe", default="oracle:50", help="oracle:<padding>, toric:<A-file> or file:<path>")
    p.add_argument("--predictor", default="oracle", help="oracle, regression:<model> or constant:<k>[,<m>]")
    p.add_argument("--safety", type=float, default=1.5)
    p.add_argument("--max-escalations", type=int, default=8)
    p.add_argument("--degree-slack", type=int, default=0)

    p = sub.add_parser("buchberger", parents=[common], help="run the Buchberger oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", choices=("first", "normal"), default="first")
    p.add_argument("--criteria", action="store_true")
    p.add_argument("--lineages", action="store_true")
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--reduced", action="store_true")

    p = sub.add_parser("universe", parents=[common], help="build, inspect or prune a universe")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--toric", metavar="A_FILE")
    src.add_argument("--oracle", metavar="IDEAL_FILE")
    src.add_argument("--file", metavar="UNIVERSE_FILE")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--padding", type=int, default=50)
    p.add_argument("--max-terms", type=int, default=None)
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--output", default=None)

    p = sub.add_parser("dataset", parents=[common], help="generate labelled random binomial ideals")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--s", type=int, default=5)
    p.add_argument("--degree", type=int, default=7)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--processes", type=int, default=1)
    p.add_argument("--output", required=True)

    p = sub.add_parser("train", parents=[common], help="fit the regression predictor")
    p.add_argument("--dataset", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--holdout", type=float, default=0.2)

    p = sub.add_parser("predict", parents=[common], help="predict k and m with a trained model")
    p.add_argument("--model", required=True)
    p.add_argument("--input", required=True)

    p = sub.add_parser("axioms", parents=[common], help="test the violator axioms on a universe")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--toric", metavar="A_FILE")
    src.add_argument("--file", metavar="UNIVERSE_FILE")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-size", type=int, default=20)

    p = sub.add_parser("bench", parents=[common], help="primitive-query count against |H|")
    p.add_argument("--sizes", default="100,200,400,800,1600,3200")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--processes", type=int, default=1)
    return parser


def _out(args, *lines):
    if not args.quiet:
        for line in lines:
            print(line)


def _write_stats(args, data):
    if args.stats:
        with open(args.stats, "w") as fh:
            json.dump(data, fh, indent=2)


def _field(args):
    return parse_field(args.field) if args.field else None


def cmd_compute(args):
    config = PipelineConfig(input=args.input, order=args.order, field=_field(args),
                            predictor=args.predictor, universe=args.universe, seed=args.seed,
                            safety_factor=args.safety, max_escalations=args.max_escalations,
                            degree_slack=args.degree_slack, stats_path=args.stats)
    report = run_spark(config)
    _out(args, *report.basis)
    _out(args, f"# size={len(report.basis)} k_used={report.k_used} m_used={report.m_used} "
               f"|H|={report.universe_size} queries={report.primitive_queries} "
               f"escalations={report.escalations} verified={report.verified}")
    return 0


def cmd_buchberger(args):
    F = read_ideal(args.input, args.order, _field(args))
    B = buchberger(F, strategy=args.strategy, criteria=args.criteria)
    longest = longest_lineage(B)
    if args.minimal or args.reduced:
        B = minimalize(B)
    if args.reduced:
        B = reduce(B)
    for p, lin in B.elements:
        _out(args, f"{p}\t{format_lineage(lin)}" if args.lineages else str(p))
    _out(args, f"# elements={len(B)} longest_lineage={longest}")
    _write_stats(args, {"basis": [str(p) for p in B.polynomials],
                        "lineages": [format_lineage(lin) for lin in B.lineages],
                        "longest_lineage": longest, "stats": B.stats})
    return 0


def _universe(args):
    if getattr(args, "toric", None):
        A = read_matrix(args.toric)
        from .poly import PolynomialRing, QQ
        ring = PolynomialRing(A.shape[1], args.order or "grevlex", _field(args) or QQ)
        return toric_universe(A, args.degree, ring=ring)
    if getattr(args, "oracle", None):
        F = read_ideal(args.oracle, args.order, _field(args))
        return oracle_universe(F, args.padding, seed=args.seed)
    ring, polys = read_polynomials(args.file, args.order, _field(args))
    return GroebnerViolatorSpace(polys, ring)


def cmd_universe(args):
    space = _universe(args)
    if args.max_terms is not None or args.degree_cap is not None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            space = prune_universe(space, args.max_terms, args.degree_cap)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
    d = args.degree if args.toric else max((p.total_degree() for p in space.polynomials), default=0)
    bound = universe_size_bound(space.ring.n, max(d, 0))
    _out(args, f"|H| = {len(space)}",
         f"monomials up to degree {d}: {bound['monomials']}; pair bound: {bound['pairs']}")
    if not args.count_only:
        for p in space.polynomials:
            _out(args, str(p))
    if args.output:
        write_polynomials(args.output, space.ring, space.polynomials)
    _write_stats(args, {"universe_size": len(space), "bound": bound})
    return 0


def cmd_dataset(args):
    from .poly import QQ
    data = generate_random_binomial_ideals(args.n, args.s, args.degree, args.count, seed=args.seed,
                                           order=args.order or "grevlex",
                                           field=_field(args) or QQ, processes=args.processes)
    save_dataset(args.output, data)
    _out(args, f"wrote {len(data)} ideals to {args.output}")
    return 0


def cmd_train(args):
    from .poly import QQ
    data = load_dataset(args.dataset, _field(args) or QQ)
    random.Random(args.seed).shuffle(data)
    cut = int(round(len(data) * (1 - args.holdout)))
    train, held = data[:cut], data[cut:]
    model = fit(train, seed=args.seed)
    model.save(args.output)
    result = {"n_train": len(train), "n_heldout": len(held)}
    for target in ("k", "m"):
        try:
            result[f"r2_{target}"] = evaluate(model, held, target) if held else None
        except ValueError:
            result[f"r2_{target}"] = None
    _out(args, json.dumps(result))
    _write_stats(args, result)
    return 0


def cmd_predict(args):
    F = read_ideal(args.input, args.order, _field(args))
    pred = predict(RegressionModel.load(args.model), F)
    _out(args, f"k={pred.k} m={pred.m}")
    return 0


def cmd_axioms(args):
    space = _universe(args)
    report = check_axioms(space, args.trials, random.Random(args.seed), max_size=args.max_size)
    if report.passed:
        _out(args, f"passed {report.trials} trials on |H| = {len(space)}")
    else:
        _out(args, f"FAILED {report.failure} at trial {report.trials}: {report.witness}")
    _write_stats(args, {"passed": report.passed, "trials": report.trials,
                        "failure": report.failure})
    return 0 if report.passed else 1


def cmd_bench(args):
    sizes = [int(x) for x in args.sizes.split(",")]
    result = scaling_sweep(sizes, args.seeds, base_seed=args.seed, processes=args.processes)
    for n, q in zip(result["sizes"], result["mean_queries"]):
        _out(args, f"{n}\t{q:.1f}")
    _out(args, f"# log-log slope {result['slope']:.3f}")
    _write_stats(args, result)
    return 0


COMMANDS = {
    "compute": cmd_compute, "buchberger": cmd_buchberger, "universe": cmd_universe,
    "dataset": cmd_dataset, "train": cmd_train, "predict": cmd_predict,
    "axioms": cmd_axioms, "bench": cmd_bench,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except EscalationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RoundCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

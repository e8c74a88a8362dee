"""Command-line driver.

Exit codes: 0 success, 1 a verification finding (Vizing or Suen-Tarr
violation, failed audit, unlabelled block), 2 usage or input error.
"""

import argparse
import sys
from pathlib import Path

from . import __version__
from .blocks import (audit_trace, certify, default_partitions, verify_observation,
                     audit_witness)
from .errors import VizingError
from .experiments import (COROLLARY_COLUMNS, DEFAULT_SEED, DRYER_COLUMNS,
                          EXHAUSTIVE_COLUMNS, ExperimentConfig, Mode, corollary_sweep,
                          dryer_rows, exhaustive_pairs, rows_to_csv, summarize_sweep)
from .formats import read_graph, write_graph
from .graph import members
from .product import cartesian_product
from .solver import DEFAULT_NODE_BUDGET, gamma_exact
from .verify import check_pair


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(2)


def _graph_args(p, names):
    for name in names:
        p.add_argument(name, help="graph file (.g6 graph6, .el edge list)")
    p.add_argument("--format", choices=["graph6", "edgelist"],
                   help="input format (default: from the file extension)")


def build_parser():
    ap = _Parser(prog="vizing", description=__doc__,
                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                    help="branch-and-bound node budget per solve")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("gamma", help="domination number and canonical witness")
    _graph_args(p, ["file"])

    p = sub.add_parser("product", help="write the Cartesian product of two graphs")
    _graph_args(p, ["file1", "file2"])
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--out-format", choices=["graph6", "edgelist"])

    p = sub.add_parser("check-pair", help="gamma values and all inequality checks")
    _graph_args(p, ["file1", "file2"])
    p.add_argument("--p", type=float, help="edge probability for the order-bound column")

    p = sub.add_parser("certify", help="run the re-partitioning certificate and audit it")
    _graph_args(p, ["file1", "file2"])
    p.add_argument("-o", "--output", help="write the trace JSON here")
    p.add_argument("--all-mds-retry", nargs="?", type=int, const=1000, default=0,
                   metavar="LIMIT",
                   help="on a diagnostic, retry other minimum dominating sets")

    p = sub.add_parser("observation", help="label every block for the canonical D")
    _graph_args(p, ["file1", "file2"])

    for name, helptext in (("dryer", "domination probability of random sets"),
                           ("sweep", "order-bound sweep over random pairs"),
                           ("exhaustive", "all pairs of small graphs")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("-o", "--output", help="CSV path (default: stdout)")
        p.add_argument("--jobs", type=int, default=1)
        if name != "exhaustive":
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)
            p.add_argument("--p", type=float, default=0.5)
            p.add_argument("--trials", type=int, default=1000 if name == "dryer" else 200)
        if name == "dryer":
            p.add_argument("--n", type=int)
            p.add_argument("--n-range", type=int, nargs=2, metavar=("LO", "HI"))
            p.add_argument("--epsilon", type=float, default=0.5)
        elif name == "sweep":
            p.add_argument("--h-range", type=int, nargs=2, metavar=("LO", "HI"),
                           default=[20, 40])
            p.add_argument("--g-cap", type=int, default=60)
            p.add_argument("--product-cap", type=int, default=64)
            p.add_argument("--bucket-width", type=int, default=5)
        else:
            p.add_argument("--max-n", type=int, default=4)
            p.add_argument("--min-n", type=int, default=1)
            p.add_argument("--corpus", help="graph6 file, one graph per line")
            p.add_argument("--product-cap", type=int, default=32)
            p.add_argument("--no-engine", action="store_true",
                           help="skip the re-partitioning run on condition pairs")
    return ap


def _emit(text, output):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_gamma(args):
    g = read_graph(args.file, args.format)
    res = gamma_exact(g, args.budget)
    print(f"gamma={res.gamma}")
    print("witness=" + " ".join(map(str, res.vertices)))
    print(f"canonical={str(res.canonical).lower()}")
    return 0


def _cmd_product(args):
    g = read_graph(args.file1, args.format)
    h = read_graph(args.file2, args.format)
    pg = cartesian_product(g, h)
    write_graph(args.output, pg.graph, args.out_format)
    return 0


def _cmd_check_pair(args):
    g = read_graph(args.file1, args.format)
    h = read_graph(args.file2, args.format)
    rep = check_pair(g, h, p=args.p, budget=args.budget)
    for key, value in vars(rep).items():
        if isinstance(value, bool):
            value = str(value).lower()
        print(f"{key}={'' if value is None else value}")
    if not (rep.vizing_holds and rep.suen_tarr_holds):
        print("finding: inequality violated", file=sys.stderr)
        return 1
    return 0


def _cmd_certify(args):
    g = read_graph(args.file1, args.format)
    h = read_graph(args.file2, args.format)
    trace, pg, attempts = certify(g, h, retry_limit=args.all_mds_retry)
    audit = audit_trace(trace, pg, trace.d)
    if args.output:
        Path(args.output).write_text(trace.to_json() + "\n")
    print(f"outcome={trace.outcome.value}")
    print(f"certified_count={trace.certified_count}")
    print(f"target={trace.target}")
    print(f"swapped={str(trace.swapped).lower()}")
    print(f"attempts={attempts}")
    print(f"audit={'pass' if audit else 'fail'}")
    if trace.diagnostic:
        print(f"diagnostic={trace.diagnostic}")
        print(f"note: procedure stopped at round {trace.diagnostic['round']}: "
              f"{trace.diagnostic['reason']}", file=sys.stderr)
    if not audit:
        print(f"finding: audit failed: {audit.failure}", file=sys.stderr)
        return 1
    return 0


def _cmd_observation(args):
    g = read_graph(args.file1, args.format)
    h = read_graph(args.file2, args.format)
    gg, gh = gamma_exact(g).gamma, gamma_exact(h).gamma
    pg = cartesian_product(g, h)
    d = gamma_exact(pg.graph).witness
    part_g, part_h = default_partitions(g, h, gg, gh)
    res = verify_observation(pg, d, part_g, part_h)
    print("D=" + " ".join(f"({u},{v})" for u, v in map(pg.unflat, members(d))))
    bad = 0
    for lab in res.labels:
        ok_w = lab.witness is None or audit_witness(pg, d, lab, part_g, part_h)
        bad += not ok_w
        print(f"block ({lab.i},{lab.j}) g_cell={str(lab.is_g_cell).lower()} "
              f"h_cell={str(lab.is_h_cell).lower()} witness="
              f"{'-' if lab.witness is None else ('ok' if ok_w else 'bad')}")
    if res.failures or bad:
        print(f"finding: observation failures {res.failures}", file=sys.stderr)
        return 1
    return 0


def _cmd_dryer(args):
    n_range = tuple(args.n_range) if args.n_range else None
    cfg = ExperimentConfig(Mode.DRYER, p=args.p, epsilon=args.epsilon, trials=args.trials,
                           seed=args.seed, n=args.n, n_range=n_range)
    rows = dryer_rows(cfg, jobs=args.jobs)
    _emit(rows_to_csv(rows, DRYER_COLUMNS), args.output)
    return 0


def _cmd_sweep(args):
    cfg = ExperimentConfig(Mode.COROLLARY_SWEEP, p=args.p, trials=args.trials, seed=args.seed,
                           n_range=tuple(args.h_range), g_cap=args.g_cap,
                           product_cap=args.product_cap, bucket_width=args.bucket_width)
    rows = corollary_sweep(cfg, jobs=args.jobs)
    _emit(rows_to_csv(rows, COROLLARY_COLUMNS), args.output)
    violations = 0
    for b in summarize_sweep(rows, args.bucket_width):
        violations += b.vizing_violations
        print(f"bucket {b.lo}-{b.hi}: trials={b.trials} skipped={b.skipped} "
              f"condition_fraction={b.fraction:.6f} vizing_checked={b.vizing_checked} "
              f"violations={b.vizing_violations}", file=sys.stderr)
    if violations:
        print(f"finding: {violations} Vizing violations", file=sys.stderr)
        return 1
    return 0


def _cmd_exhaustive(args):
    rows, s = exhaustive_pairs(args.max_n, args.corpus, args.min_n, args.product_cap,
                               not args.no_engine, jobs=args.jobs)
    _emit(rows_to_csv(rows, EXHAUSTIVE_COLUMNS), args.output)
    outcomes = " ".join(f"{k}={v}" for k, v in sorted(s.outcomes.items()))
    print(f"pairs={s.pairs} vizing_violations={s.vizing_violations} "
          f"suen_tarr_violations={s.suen_tarr_violations} "
          f"condition_pairs={s.condition_pairs} {outcomes}", file=sys.stderr)
    if s.vizing_violations or s.suen_tarr_violations:
        print("finding: inequality violated", file=sys.stderr)
        return 1
    return 0


COMMANDS = {
    "gamma": _cmd_gamma,
    "product": _cmd_product,
    "check-pair": _cmd_check_pair,
    "certify": _cmd_certify,
    "observation": _cmd_observation,
    "dryer": _cmd_dryer,
    "sweep": _cmd_sweep,
    "exhaustive": _cmd_exhaustive,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (VizingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

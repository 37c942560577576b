"""Command-line verification harness.

    nlie verify jacobi --n 4 [--trials 200 --seed 0]
    nlie verify basic-lie|relations|casimir|classification|joseph --n 5
    nlie verify all --max-n 4 [--deep]
    nlie classify --n 3 --basis epsilon|fundamental
    nlie pbw count --n 4 --degree 2

Each check prints one JSON line.  Exit status: 0 all passed, 1 some check
failed, 2 usage error.  NLIE_SEED overrides the default seed;
``--no-timing`` blanks wall_time so reruns are byte-identical.
"""
from __future__ import annotations

import argparse
import sys

from . import highest_weight as hw
from . import report as rp
from . import so_basis as sb


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _n_arg(p):
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nlie", description="exact checks for the simple n-Lie algebra")
    p.add_argument("--no-timing", action="store_true", help="write wall_time as null")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    v = sub.add_parser("verify")
    vs = v.add_subparsers(dest="what", required=True, parser_class=_Parser)
    j = vs.add_parser("jacobi")
    _n_arg(j)
    j.add_argument("--trials", type=int, default=200)
    j.add_argument("--seed", type=int, default=None)
    for name in ("basic-lie", "relations", "casimir", "classification", "joseph", "diagrams"):
        q = vs.add_parser(name)
        _n_arg(q)
    a = vs.add_parser("all")
    a.add_argument("--max-n", type=int, default=6)
    a.add_argument("--deep", action="store_true", help="extend the range to n = 8")

    c = sub.add_parser("classify")
    _n_arg(c)
    c.add_argument("--basis", choices=("epsilon", "fundamental"), default="epsilon")

    b = sub.add_parser("pbw")
    bs = b.add_subparsers(dest="what", required=True, parser_class=_Parser)
    cnt = bs.add_parser("count")
    _n_arg(cnt)
    cnt.add_argument("--degree", type=int, default=2)
    return p


def _classify(n: int, basis: str) -> rp.Report:
    N = sb.rank_of(n)
    fams = []
    for t in range(1, N + 1):
        f = hw.WeightFamily(N, t)
        entry = {"t": t, "epsilon": f.describe()}
        if basis == "fundamental":
            form = hw.to_fundamental_weights(f, n)
            entry["stated"] = form.stated_str()
            entry["from_dynkin_labels"] = form.derived_str()
            entry["stated_matches"] = form.stated_matches
        fams.append(entry)
    return rp.Report("classify", n, "pass", {"basis": basis, "families": fams}, None)


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    def bad_n(n, lo=3):
        if n < lo:
            print(f"nlie: error: n must be >= {lo}", file=sys.stderr)
            return True
        return False

    reports: list[rp.Report] = []

    def emit(r: rp.Report):
        reports.append(r)
        print(r.to_json(timing=not args.no_timing), file=out, flush=True)

    if args.cmd == "classify":
        if bad_n(args.n):
            return 2
        emit(_classify(args.n, args.basis))
    elif args.cmd == "pbw":
        if bad_n(args.n):
            return 2
        if args.degree != 2:
            print("nlie: error: only --degree 2 is supported", file=sys.stderr)
            return 2
        emit(rp.check_pbw_count(args.n, args.degree))
    elif args.what == "all":
        top = 8 if args.deep else args.max_n
        if bad_n(top):
            return 2
        for n in range(3, top + 1):
            for job in rp.battery(n):
                emit(job())
    else:
        n = args.n
        if bad_n(n):
            return 2
        if args.what == "joseph" and n <= 4:
            print("nlie: error: the inclusion argument assumes n > 4", file=sys.stderr)
            return 2
        fn = {
            "jacobi": lambda: rp.check_jacobi(n, args.trials, args.seed),
            "basic-lie": lambda: rp.check_basic_lie(n),
            "relations": lambda: rp.check_relations(n),
            "casimir": lambda: rp.check_casimir(n),
            "classification": lambda: rp.check_classification(n, verma=n <= 6),
            "joseph": lambda: rp.check_joseph(n),
            "diagrams": lambda: rp.check_diagrams(n),
        }[args.what]
        emit(fn())
    return 1 if any(r.status == "fail" for r in reports) else 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()

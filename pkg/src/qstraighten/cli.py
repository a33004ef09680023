"""Command line: ``qstraighten <subcommand> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .combinatorics import (
    Tabloid,
    check_word,
    column_reading,
    conjugate,
    format_word,
    insertion_tableau,
    is_partition,
    parse_word,
    rs,
)
from .crystal import component, shape_component, to_dot, word_graph
from .qmatrix import qdet, qminor
from .straighten import (
    LatticeError,
    expansion_to_json,
    label_to_json,
    q_zero_class,
    straighten_flag,
    verify_theorem1,
)
from . import verify as V

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _shape(text: str) -> tuple[int, ...]:
    try:
        shape = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed shape {text!r}") from None
    if not is_partition(shape):
        raise UsageError(f"{shape} is not a partition")
    return shape


def _word(text: str, n: int | None = None):
    try:
        w = parse_word(text)
        if n is not None:
            check_word(w, n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return w


def _tabloid(text: str, n: int) -> tuple:
    """Columns separated by '|' or '/', e.g. ``15|236``."""
    cols = tuple(_word(c, n) for c in re.split(r"[|/]", text) if c.strip())
    if not cols:
        raise UsageError("empty tabloid")
    return cols


def _caps(args, n: int, degree: int = 0) -> None:
    if n < 1:
        raise UsageError("n must be positive")
    if n > args.max_n:
        raise UsageError(f"n={n} exceeds --max-n {args.max_n}")
    if degree > args.max_degree:
        raise UsageError(f"degree {degree} exceeds --max-degree {args.max_degree}")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_rs(args) -> int:
    w = _word(args.word)
    p, q = rs(w)
    print(_dump({"word": format_word(w), "P": p.to_json(), "Q": q.to_json()}))
    return EXIT_OK


def cmd_plactic(args) -> int:
    w, u = _word(args.word1), _word(args.word2)
    pw, pu = insertion_tableau(w), insertion_tableau(u)
    out = {"equivalent": pw == pu, "P1": pw.to_json(), "P2": pu.to_json()}
    print(_dump(out) if args.json else ("equivalent" if pw == pu else "not equivalent"))
    return EXIT_OK


def cmd_crystal(args) -> int:
    try:
        if args.word_graph:
            if args.m is None:
                raise UsageError("--word-graph needs -m")
            g = word_graph(args.n, args.m)
        elif args.shape:
            g = shape_component(_shape(args.shape), args.n)
        elif args.word is not None:
            g = component(_word(args.word, args.n), args.n)
        else:
            raise UsageError("give a highest word, --shape or --word-graph")
    except UsageError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.dot:
        sys.stdout.write(to_dot(g))
    elif args.json:
        print(g.to_json())
    else:
        print(f"{len(g.vertices)} vertices, {len(g.edges)} edges")
    return EXIT_OK


def _poly_out(p, args) -> None:
    print(_dump(p.to_json()) if args.json else str(p))


def cmd_qdet(args) -> int:
    _caps(args, args.n, args.n)
    _poly_out(qdet(args.n), args)
    return EXIT_OK


def cmd_qminor(args) -> int:
    rows, cols = _word(args.rows, args.n), _word(args.cols, args.n)
    _caps(args, args.n, len(rows))
    try:
        p = qminor(rows, cols, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _poly_out(p, args)
    return EXIT_OK


def cmd_straighten(args) -> int:
    w, u = _word(args.rows, args.n), _word(args.cols, args.n)
    if len(w) != len(u):
        raise UsageError("row and column words must have equal length")
    _caps(args, args.n, len(w))
    r = verify_theorem1(w, u, args.n)
    report = {
        "input": {"rows": format_word(w), "cols": format_word(u), "n": args.n},
        "expansion": expansion_to_json(r["expansion"]),
        "q0_class": label_to_json(r["q0_class"]),
        "rs_prediction": label_to_json(r["rs_prediction"]),
        "match": r["match"],
    }
    if r["error"]:
        report["error"] = r["error"]
    print(_dump(report))
    return EXIT_OK if r["match"] else EXIT_MISMATCH


def cmd_straighten_flag(args) -> int:
    cols = _tabloid(args.tabloid, args.n)
    _caps(args, args.n, sum(map(len, cols)))
    exp = straighten_flag(cols, args.n)
    lam = conjugate(sorted(map(len, cols), reverse=True))
    report = {"input": {"columns": [list(c) for c in cols], "n": args.n},
              "expansion": expansion_to_json(exp)}
    ok = True
    try:
        report["q0_class"] = label_to_json(q_zero_class(exp))
    except LatticeError as e:
        report["q0_class"], report["error"] = None, str(e)
        ok = False
    if all(a < b for c in cols for a, b in zip(c, c[1:])):
        p = insertion_tableau(column_reading(Tabloid(cols)))
        expected = p.to_json() if p.shape == lam else None
        report["expected"] = expected
        ok = ok and report["q0_class"] == expected
    report["match"] = ok
    print(_dump(report))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    reports = V.run_suite(args.suite, args.n, args.k, args.jobs, args.seed)
    ok = all(r.ok for r in reports)
    if args.json:
        print(_dump({"ok": ok, "suites": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            status = "PASS" if r.ok else "FAIL"
            print(f"{status} {r.suite} {params} cases={r.cases} failed={r.failed}".rstrip())
            for f in r.failures:
                print(f"  counterexample: {_dump(f) if not isinstance(f, str) else f}")
        print(f"{'ok' if ok else 'MISMATCH'} ({time.perf_counter() - t0:.1f}s)", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qstraighten", description=__doc__.splitlines()[0])
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-n", type=int, default=4, help="largest matrix size accepted (default 4)")
    caps.add_argument("--max-degree", type=int, default=6, help="largest degree accepted (default 6)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rs", help="Robinson-Schensted pair of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("plactic", help="test plactic equivalence of two words")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plactic)

    p = sub.add_parser("crystal", help="crystal graph of a component, a shape or all words")
    p.add_argument("word", nargs="?", help="Yamanouchi highest-weight word")
    p.add_argument("--shape", help="partition, e.g. 2,1")
    p.add_argument("--word-graph", action="store_true", help="graph on all words of length m")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("qdet", parents=[caps], help="quantum determinant in normal form")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_qdet)

    p = sub.add_parser("qminor", parents=[caps], help="quantum minor on rows I, columns J")
    p.add_argument("rows")
    p.add_argument("cols")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_qminor)

    p = sub.add_parser("straighten", parents=[caps], help="expand a monomial on bitableaux and compare with RS")
    p.add_argument("rows", help="row word w")
    p.add_argument("cols", help="column word u")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("straighten-flag", parents=[caps], help="expand a quantum tabloid on quantum tableaux")
    p.add_argument("tabloid", help="columns bottom to top separated by '|', e.g. 15|236")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_straighten_flag)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=V.SUITES)
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: ``expand`` (series dumps), ``map`` (bijections and
conjugations), ``enumerate`` (object listings), ``verify`` (the check
battery), ``tableau`` (ASCII renderings).  Exit codes: 0 success, 1
verification failure, 2 flag error, 3 parse or validity error.  Output is
deterministic; ``verify --timing`` writes elapsed time to stderr only so
stdout stays byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import buffered as bf
from . import verify as vf
from .frobenius import (
    f1_to_overpartition,
    f2_to_overpartition,
    js2_inverse,
    js2_map,
    js_inverse,
    js_map,
    overpartition_to_f1,
    overpartition_to_f2,
    parse_symbol,
)
from .partitions import parse_overpartition, parse_partition
from .qbuilders import (
    build_r2k_multi,
    build_rk,
    build_rk_multi,
    f1_rank_series,
    f2_rank_series,
    mk_slice_series,
    substitute_roots,
)
from .tableau import render_overpartition, render_rep

PARSE_ERROR = 3


class ParseFailure(Exception):
    pass


def _read_input(args) -> str:
    if args.input is not None:
        return args.input
    return sys.stdin.read().strip()


# ---------------------------------------------------------------------------
# expand


def cmd_expand(args) -> int:
    k, N = args.k, args.N
    if args.series == "Rk":
        s = build_rk(k, N)
    elif args.series == "Rk-multi":
        s = build_rk_multi(k, N)
    elif args.series == "R2k-multi":
        s = build_r2k_multi(k, N)
    elif args.series == "f1":
        s = f1_rank_series(N)
    elif args.series == "f2":
        s = f2_rank_series(N)
    elif args.series == "mk-slice":
        if args.m is None:
            raise SystemExit(2)
        s = mk_slice_series(k, args.m, N)
    if args.subst_roots:
        if args.series not in ("Rk-multi", "R2k-multi"):
            print("--subst-roots requires a multivariate series", file=sys.stderr)
            return 2
        s = substitute_roots(s, k)
    print(s.dump())
    return 0


# ---------------------------------------------------------------------------
# map


def _trace_f1_fwd(trace: list) -> list[str]:
    lines = ["step | remaining top | remaining bottom | lam1 | lam2"]
    for step, (tops, bots, lam1, lam2) in enumerate(trace):
        bot_s = ",".join(f"{v}~" if o else str(v) for v, o in bots)
        lines.append(
            f"{step} | {','.join(map(str, tops))} | {bot_s}"
            f" | {','.join(map(str, lam1))} | {','.join(map(str, lam2))}"
        )
    return lines


def _trace_f2_fwd(trace: list) -> list[str]:
    lines = ["step | top row | bottom row"]
    for step, entry in enumerate(trace):
        if not isinstance(entry, tuple):
            lines.append(f"{step} | result {entry} |")
            continue
        alpha, beta = entry
        top_s = ",".join(f"{v}~" if o else str(v) for v, o in alpha)
        lines.append(f"{step} | {top_s} | {','.join(map(str, beta))}")
    return lines


def _trace_f2_inv(trace: list) -> list[str]:
    lines = ["step | even~ | even | odd~ | odd | a | top | bottom"]
    for step, entry in enumerate(trace):
        if len(entry) != 7:
            continue
        pe_over, pe, po_over, po, a, alpha, beta = entry
        top_s = ",".join(f"{v}~" if o else str(v) for v, o in alpha)
        lines.append(
            f"{step} | {','.join(map(str, pe_over))} | {','.join(map(str, pe))}"
            f" | {','.join(map(str, po_over))} | {','.join(map(str, po))}"
            f" | {a} | {top_s} | {','.join(map(str, beta))}"
        )
    return lines


def _trace_js(op: str, base, marks, trace: list) -> list[str]:
    from .partitions import (
        Overpartition,
        cl_rank,
        over_bracket,
        second_bracket,
        second_rank,
    )

    desc = sorted(marks, reverse=True)
    if op == "js":
        states = [tuple((v, False) for v in base.parts)] + trace
        lines = ["step | lambda | marks | sigma_bar | cl_rank"]
        for i, parts in enumerate(states):
            o = Overpartition(tuple(parts))
            lines.append(
                f"{i} | {o} | [{','.join(map(str, desc[i:]))}]"
                f" | {over_bracket(o)} | {cl_rank(o)}"
            )
    else:
        from .partitions import Partition

        states = [base.parts] + trace
        lines = ["step | lambda | marks | sigma2 | r2"]
        for i, parts in enumerate(states):
            p = Partition(tuple(parts))
            lines.append(
                f"{i} | {p} | [{','.join(map(str, desc[i:]))}]"
                f" | {second_bracket(p)} | {second_rank(p)}"
            )
    return lines


def _split_pair(text: str) -> tuple[str, str]:
    if ";" not in text:
        raise ParseFailure(f"expected 'BASE;MARKS' input, got {text!r}")
    a, b = text.split(";", 1)
    return a.strip(), b.strip()


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseFailure(f"expected a bracketed list, got {text!r}")
    body = text[1:-1].strip()
    return [int(t) for t in body.split(",")] if body else []


def cmd_map(args) -> int:
    text = _read_input(args)
    op = args.op
    trace: list | None = [] if args.trace else None
    out_lines: list[str] = []
    if op == "f1-fwd":
        sym = parse_symbol(text)
        result = f1_to_overpartition(sym, trace)
        if trace is not None:
            out_lines += _trace_f1_fwd(trace)
        out_lines.append(str(result))
    elif op == "f1-inv":
        part = parse_overpartition(text)
        sym = overpartition_to_f1(part)
        if trace is not None:
            # the inverse retraces the forward steps in reverse order
            f1_to_overpartition(sym, trace)
            out_lines += _trace_f1_fwd(list(reversed(trace)))
        out_lines.append(str(sym))
    elif op == "f2-fwd":
        sym = parse_symbol(text)
        result = f2_to_overpartition(sym, trace)
        if trace is not None:
            out_lines += _trace_f2_fwd(trace)
        out_lines.append(str(result))
    elif op == "f2-inv":
        part = parse_overpartition(text)
        sym = overpartition_to_f2(part, trace)
        if trace is not None:
            out_lines += _trace_f2_inv(trace)
        out_lines.append(str(sym))
    elif op in ("js", "js2"):
        base_txt, marks_txt = _split_pair(text)
        base = parse_partition(base_txt)
        marks = _parse_int_list(marks_txt)
        result = (js_map if op == "js" else js2_map)(base, marks, trace=trace)
        if trace is not None:
            out_lines += _trace_js(op, base, marks, trace)
        out_lines.append(str(result))
    elif op == "js-inv":
        base, marks = js_inverse(parse_overpartition(text))
        out_lines.append(f"{base};[{','.join(map(str, marks))}]")
    elif op == "js2-inv":
        base, marks = js2_inverse(parse_partition(text))
        out_lines.append(f"{base};[{','.join(map(str, marks))}]")
    elif op in ("conj", "full-conj", "jigsaw"):
        rep = bf.parse_rep(text)
        problems = rep.validate()
        if problems:
            raise ParseFailure("invalid representation: " + "; ".join(problems))
        if op == "conj":
            if args.index is None:
                print("--op conj requires --index", file=sys.stderr)
                return 2
            out_lines.append(bf.format_rep(bf.conjugate(rep, args.index)))
        elif op == "full-conj":
            out_lines.append(bf.format_rep(bf.full_conjugate(rep)))
        else:
            out_lines.append(str(bf.jigsaw(rep)))
    print("\n".join(line.rstrip() for line in out_lines))
    return 0


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    from .frobenius import FIRST, SECOND, enumerate_symbols
    from .partitions import Constraints, enumerate_parts

    n = args.n
    if args.kind == "overpartition":
        items = [str(o) for o in enumerate_parts(n, Constraints(overlines=True))]
    elif args.kind == "f1":
        items = [str(s) for s in enumerate_symbols(n, FIRST)]
    elif args.kind == "f2":
        items = [str(s) for s in enumerate_symbols(n, SECOND)]
    else:
        kind = bf.B1 if args.kind == "b1" else bf.B2
        items = [bf.format_rep(r) for r in bf.enumerate_reps(n, args.kmax, kind)]
    for line in items:
        print(line)
    print(f"total: {len(items)}")
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    start = time.monotonic()
    if args.suite in ("all", "battery"):
        reports = vf.run_battery()
    elif args.suite in vf.SUITES:
        reports = [vf.SUITES[args.suite](args.k, args.N)]
    else:
        print(f"unknown suite {args.suite!r}; available: "
              + ", ".join(sorted(vf.SUITES) + ["all"]), file=sys.stderr)
        return 2
    print(vf.to_json(reports) if args.format == "json" else vf.to_table(reports))
    if args.timing:
        print(f"elapsed: {time.monotonic() - start:.2f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# tableau


def cmd_tableau(args) -> int:
    text = _read_input(args)
    if not text:
        print("")
        return 0
    if text.split(":", 1)[0] in ("B1", "B2", "G"):
        rep = bf.parse_rep(text)
        problems = rep.validate()
        if problems:
            raise ParseFailure("invalid representation: " + "; ".join(problems))
        print(render_rep(rep))
    else:
        row = parse_overpartition(text) if "~" in text else parse_partition(text)
        print(render_overpartition(row))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="overfrob", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("expand", help="print a truncated series")
    pe.add_argument("--series", required=True,
                    choices=["Rk", "Rk-multi", "R2k-multi", "f1", "f2", "mk-slice"])
    pe.add_argument("--k", type=int, default=1)
    pe.add_argument("--N", type=int, required=True)
    pe.add_argument("--m", type=int)
    pe.add_argument("--subst-roots", action="store_true")
    pe.set_defaults(func=cmd_expand)

    pm = sub.add_parser("map", help="apply a bijection or conjugation")
    pm.add_argument("--op", required=True,
                    choices=["f1-fwd", "f1-inv", "f2-fwd", "f2-inv",
                             "js", "js-inv", "js2", "js2-inv",
                             "conj", "full-conj", "jigsaw"])
    pm.add_argument("--index", type=int)
    pm.add_argument("--trace", action="store_true")
    pm.add_argument("input", nargs="?")
    pm.set_defaults(func=cmd_map)

    pn = sub.add_parser("enumerate", help="list objects of a given weight")
    pn.add_argument("--kind", required=True,
                    choices=["overpartition", "f1", "f2", "b1", "b2"])
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--kmax", type=int, default=3)
    pn.set_defaults(func=cmd_enumerate)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True)
    pv.add_argument("--k", type=int, default=1)
    pv.add_argument("--N", type=int, default=8)
    pv.add_argument("--format", choices=["json", "table"], default="table")
    pv.add_argument("--timing", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("tableau", help="render an ASCII tableau")
    pt.add_argument("input", nargs="?")
    pt.set_defaults(func=cmd_tableau)

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ParseFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())

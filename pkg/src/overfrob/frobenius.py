"""Frobenius-style symbols for overpartitions and the maps between them.

Two kinds of symbol, both written as two rows of equal length whose total
(weight) is the weight of the corresponding overpartition:

* first kind (``F1``): top row a partition into distinct positive parts,
  bottom row an overpartition into nonnegative parts;
* second kind (``F2``): top row an overpartition into odd positive parts,
  bottom row a partition into nonnegative parts with distinct odd parts.

The forward maps to overpartitions, their inverses, and the Joichi-Stanton
style mark insertion maps ``js_map``/``js2_map`` live here.  Every map
conserves weight and the pair of maps for each kind is a bijection on each
weight class (exercised exhaustively in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import (
    Constraints,
    Overpartition,
    Partition,
    as_over,
    cl_rank,
    enumerate_parts,
    format_parts,
    over_bracket,
    parse_overpartition,
)

FIRST = "F1"
SECOND = "F2"


@dataclass(frozen=True)
class FrobeniusSymbol:
    kind: str
    top: Overpartition
    bottom: Overpartition

    def __post_init__(self):
        if self.kind not in (FIRST, SECOND):
            raise ValueError(f"unknown symbol kind {self.kind!r}")

    @property
    def width(self) -> int:
        return self.top.num_parts

    @property
    def weight(self) -> int:
        return self.top.weight + self.bottom.weight

    def validate(self) -> list[str]:
        """Clause-by-clause validity report; empty list means valid."""
        problems = []
        if self.top.num_parts != self.bottom.num_parts:
            problems.append(
                f"rows differ in length: {self.top.num_parts} vs {self.bottom.num_parts}"
            )
        if self.kind == FIRST:
            if self.top.overlined_values:
                problems.append("top row of a first-kind symbol may not be overlined")
            vals = self.top.values
            if len(set(vals)) != len(vals):
                problems.append("top row parts must be distinct")
            if any(v <= 0 for v in vals):
                problems.append("top row parts must be positive")
        else:
            if any(v % 2 == 0 or v <= 0 for v in self.top.values):
                problems.append("top row parts must be odd and positive")
            if self.bottom.overlined_values:
                problems.append("bottom row of a second-kind symbol may not be overlined")
            odds = [v for v in self.bottom.values if v % 2 == 1]
            if len(odds) != len(set(odds)):
                problems.append("bottom row odd parts must be distinct")
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.validate()

    def __str__(self) -> str:
        return f"{self.kind}:[{format_parts(self.top.parts)[1:-1]};{format_parts(self.bottom.parts)[1:-1]}]"


_SYM_KINDS = (FIRST, SECOND)


def parse_symbol(text: str) -> FrobeniusSymbol:
    text = text.strip()
    kind = None
    for k in _SYM_KINDS:
        if text.startswith(k + ":"):
            kind, text = k, text[len(k) + 1 :].strip()
        elif text.startswith("kind:" + k):
            kind, text = k, text[len("kind:" + k) :].strip()
    if kind is None:
        raise ValueError(f"symbol must start with 'F1:' or 'F2:': {text!r}")
    if not (text.startswith("[") and text.endswith("]")) or ";" not in text:
        raise ValueError(f"cannot parse symbol body: {text!r}")
    top_txt, bot_txt = text[1:-1].split(";", 1)
    top = parse_overpartition(f"[{top_txt.strip()}]")
    bottom = parse_overpartition(f"[{bot_txt.strip()}]")
    sym = FrobeniusSymbol(kind, top, bottom)
    problems = sym.validate()
    if problems:
        raise ValueError(f"invalid {kind} symbol {text!r}: " + "; ".join(problems))
    return sym


def _require_valid(sym: FrobeniusSymbol, kind: str) -> None:
    if sym.kind != kind:
        raise ValueError(f"expected a {kind} symbol, got {sym.kind}")
    problems = sym.validate()
    if problems:
        raise ValueError(f"invalid symbol {sym}: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# first kind <-> overpartitions


def f1_to_overpartition(
    sym: FrobeniusSymbol, trace: list | None = None
) -> Overpartition:
    """Column-peeling map from a first-kind symbol to an overpartition.

    Columns are consumed right to left.  At column i the running partition
    lam1 is re-read as a partition into b_i nonnegative parts and every part
    is increased by 1 (adding b_i to the weight); then a_i joins lam1 if b_i
    was overlined, and otherwise joins the pool lam2 of eventually-overlined
    parts.
    """
    _require_valid(sym, FIRST)
    tops = list(sym.top.values)
    bots = list(sym.bottom.parts)
    lam1: list[int] = []
    lam2: list[int] = []
    if trace is not None:
        trace.append((tuple(tops), tuple(bots), tuple(lam1), tuple(lam2)))
    for i in range(len(tops) - 1, -1, -1):
        a = tops[i]
        b, b_over = bots[i]
        if len(lam1) > b:
            raise ValueError(
                f"column {i + 1}: cannot pad {len(lam1)} parts into {b} nonnegative parts"
            )
        lam1 = [p + 1 for p in lam1] + [1] * (b - len(lam1))
        if b_over:
            lam1.append(a)
            lam1.sort(reverse=True)
        else:
            lam2.append(a)
        if trace is not None:
            trace.append((tuple(tops[:i]), tuple(bots[:i]), tuple(lam1), tuple(lam2)))
    return Overpartition.make(lam1 + lam2, lam2)


def overpartition_to_f1(op: Overpartition) -> FrobeniusSymbol:
    """Inverse of :func:`f1_to_overpartition`.

    Reconstructs columns left to right by undoing the peeling steps.  Each
    column either returns the largest pooled overlined part (bottom entry
    plain) or extracts a part of lam1 (bottom entry overlined); validity of
    the partially built rows prunes the search and exactly one full
    reconstruction survives.
    """
    lam1 = sorted((v for v, o in op.parts if not o), reverse=True)
    lam2 = sorted((v for v, o in op.parts if o), reverse=True)

    solutions: list[list[tuple[int, int, bool]]] = []

    def bottom_ok(cols: list[tuple[int, int, bool]], b: int, b_over: bool) -> bool:
        if not cols:
            return True
        _, pb, pover = cols[-1]
        if b > pb:
            return False
        if b == pb and b_over:
            return False  # overlined copy must precede the plain one, once
        return True

    def rec(lam1: list[int], lam2: list[int], cols: list[tuple[int, int, bool]]):
        if solutions:
            return
        if not lam1 and not lam2:
            solutions.append(list(cols))
            return
        prev_a = cols[-1][0] if cols else None
        # bottom entry was plain: a_i is the largest pooled overlined part
        if lam2:
            a = lam2[0]
            b = len(lam1)
            if (prev_a is None or a < prev_a) and bottom_ok(cols, b, False):
                rec([p - 1 for p in lam1 if p > 1], lam2[1:], cols + [(a, b, False)])
        # bottom entry was overlined: a_i was appended to lam1
        if lam1:
            b = len(lam1) - 1
            if bottom_ok(cols, b, True):
                for a in sorted(set(lam1), reverse=True):
                    if prev_a is not None and a >= prev_a:
                        continue
                    rest = list(lam1)
                    rest.remove(a)
                    rec([p - 1 for p in rest if p > 1], lam2, cols + [(a, b, True)])

    rec(lam1, lam2, [])
    if not solutions:
        raise ValueError(f"no first-kind symbol maps to {op}")
    cols = solutions[0]
    top = Overpartition.make([a for a, _, _ in cols])
    bottom = Overpartition(tuple((b, o) for _, b, o in cols))
    sym = FrobeniusSymbol(FIRST, top, bottom)
    _require_valid(sym, FIRST)
    return sym


# ---------------------------------------------------------------------------
# second kind <-> overpartitions


def f2_to_overpartition(
    sym: FrobeniusSymbol, trace: list | None = None
) -> Overpartition:
    """Map from a second-kind symbol to an overpartition.

    For every odd n below the largest top entry with no overlined copy of n
    in the top row, an overlined n is inserted and -n appended to the bottom
    row.  The bottom row is then reordered (odd entries increasing, even
    entries decreasing) and the rows are added columnwise; an even bottom
    entry copies the top entry's marking, an odd one flips it.
    """
    _require_valid(sym, SECOND)
    alpha = list(sym.top.parts)
    beta = [v for v, _ in sym.bottom.parts]
    if trace is not None:
        trace.append((tuple(alpha), tuple(beta)))
    a1 = alpha[0][0] if alpha else 0
    overlined = {v for v, o in alpha if o}
    for n in range(1, a1, 2):
        if n not in overlined:
            alpha.append((n, True))
            beta.append(-n)
    alpha.sort(key=lambda vo: (-vo[0], not vo[1]))
    if trace is not None:
        trace.append((tuple(alpha), tuple(beta)))
    odds = sorted(b for b in beta if b % 2)
    evens = sorted((b for b in beta if b % 2 == 0), reverse=True)
    beta = odds + evens
    if trace is not None:
        trace.append((tuple(alpha), tuple(beta)))
    parts = []
    for (a, a_over), b in zip(alpha, beta):
        val = a + b
        over = a_over if b % 2 == 0 else not a_over
        if val <= 0:
            raise ValueError(f"column ({a},{b}) of {sym} collapses to {val}")
        parts.append((val, over))
    out = Overpartition.make([v for v, _ in parts], [v for v, o in parts if o])
    if trace is not None:
        trace.append(out)
    return out


def overpartition_to_f2(
    op: Overpartition, trace: list | None = None
) -> FrobeniusSymbol:
    """Inverse of :func:`f2_to_overpartition` via parity dissection.

    The overpartition is split into overlined/plain even and odd parts.  Odd
    parts are consumed in increasing order (plain before overlined on ties):
    a plain part l contributes a plain odd counter value a with bottom entry
    l - a, an overlined part contributes an overlined a and then advances the
    counter by 2.  Even parts are consumed in decreasing order (plain first
    on ties): a plain part contributes an overlined a and advances the
    counter, an overlined part contributes a plain a.  Finally every inserted
    pair (overlined n, bottom entry -n) is cancelled.
    """
    pe_over = sorted((v for v, o in op.parts if o and v % 2 == 0), reverse=True)
    pe = sorted((v for v, o in op.parts if not o and v % 2 == 0), reverse=True)
    po_over = sorted(v for v, o in op.parts if o and v % 2 == 1)
    po = sorted(v for v, o in op.parts if not o and v % 2 == 1)
    a = 1
    alpha: list[tuple[int, bool]] = []
    beta: list[int] = []

    def snapshot():
        if trace is not None:
            trace.append(
                (
                    tuple(sorted(pe_over, reverse=True)),
                    tuple(sorted(pe, reverse=True)),
                    tuple(sorted(po_over, reverse=True)),
                    tuple(sorted(po, reverse=True)),
                    a,
                    tuple(sorted(alpha, key=lambda vo: (-vo[0], not vo[1]))),
                    tuple(beta),
                )
            )

    snapshot()
    while po or po_over:
        if po and (not po_over or po[0] <= po_over[0]):
            ell = po.pop(0)
            alpha.append((a, False))
            beta.append(ell - a)
        else:
            ell = po_over.pop(0)
            alpha.append((a, True))
            beta.append(ell - a)
            a += 2
        snapshot()
    while pe or pe_over:
        if pe and (not pe_over or pe[0] >= pe_over[0]):
            ell = pe.pop(0)
            alpha.append((a, True))
            beta.append(ell - a)
            a += 2
        else:
            ell = pe_over.pop(0)
            alpha.append((a, False))
            beta.append(ell - a)
        snapshot()
    # cancel inserted pairs (overlined n in the top, -n in the bottom)
    for b in [x for x in beta if x < 0]:
        if (-b, True) not in alpha:
            raise ValueError(f"stray bottom entry {b} while dissecting {op}")
        alpha.remove((-b, True))
        beta.remove(b)
    if any(b < 0 for b in beta):
        raise ValueError(f"negative bottom entries remain while dissecting {op}")
    snapshot()
    top = Overpartition(tuple(sorted(alpha, key=lambda vo: (-vo[0], not vo[1]))))
    bottom = Overpartition.make(beta)
    sym = FrobeniusSymbol(SECOND, top, bottom)
    _require_valid(sym, SECOND)
    return sym


# ---------------------------------------------------------------------------
# Joichi-Stanton style mark insertion


def js_map(
    base: Partition,
    marks: Sequence[int],
    scale: int = 1,
    trace: list | None = None,
) -> Overpartition:
    """Fold distinct marks into a partition, producing an overpartition.

    ``base`` has n nonnegative parts; ``marks`` are distinct multiples of
    ``scale`` below scale*n, processed in decreasing order: a mark scale*m
    adds ``scale`` to the first m parts and overlines part m+1.  With
    scale=1 this is the classic mark-insertion bijection; scale=2 is the
    even-step variant used by the second-kind first-column conjugation.
    """
    n = base.num_parts
    parts: list[tuple[int, bool]] = [(v, False) for v in base.parts]
    seen = set()
    for mark in sorted(marks, reverse=True):
        if mark % scale or not (0 <= mark < scale * n) or mark in seen:
            raise ValueError(f"bad mark {mark} for {n} parts at scale {scale}")
        seen.add(mark)
        m = mark // scale
        parts = [(v + scale, o) for v, o in parts[:m]] + [(parts[m][0], True)] + parts[m + 1 :]
        if trace is not None:
            trace.append(tuple(parts))
    out = Overpartition(tuple(parts))
    if len(out.overlined_values) != len(set(marks)):
        raise ValueError(f"marks collided applying {sorted(marks)} to {base}")
    return out


def js_inverse(op: Overpartition, scale: int = 1) -> tuple[Partition, tuple[int, ...]]:
    """Undo :func:`js_map`: repeatedly strip the overline of smallest index j,
    recording mark scale*(j-1) and subtracting ``scale`` from the first j-1
    parts."""
    parts = list(op.parts)
    marks: list[int] = []
    while True:
        idx = next((i for i, (_, o) in enumerate(parts) if o), None)
        if idx is None:
            break
        marks.append(scale * idx)
        parts = [(v - scale, o) for v, o in parts[:idx]] + [(parts[idx][0], False)] + parts[idx + 1 :]
    base = Partition(tuple(v for v, _ in parts))
    return base, tuple(marks)


def js2_map(
    base: Partition, marks: Sequence[int], trace: list | None = None
) -> Partition:
    """Fold distinct odd marks below 2n into a partition with n even
    nonnegative parts: mark 2s+1 adds 2 to the first s parts and 1 to part
    s+1.  The result has distinct odd parts at the marked positions."""
    n = base.num_parts
    if any(v % 2 for v in base.parts):
        raise ValueError(f"base parts must be even: {base}")
    parts = list(base.parts)
    seen = set()
    for mark in sorted(marks, reverse=True):
        if mark % 2 == 0 or not (0 < mark < 2 * n) or mark in seen:
            raise ValueError(f"bad odd mark {mark} for {n} parts")
        seen.add(mark)
        s = (mark - 1) // 2
        parts = [v + 2 for v in parts[:s]] + [parts[s] + 1] + parts[s + 1 :]
        if trace is not None:
            trace.append(tuple(parts))
    return Partition(tuple(parts))


def js2_inverse(p: Partition) -> tuple[Partition, tuple[int, ...]]:
    """Undo :func:`js2_map`: repeatedly take the odd part of smallest index j,
    record mark 2(j-1)+1, subtract 1 from it and 2 from the first j-1 parts."""
    parts = list(p.parts)
    marks: list[int] = []
    while True:
        idx = next((i for i, v in enumerate(parts) if v % 2), None)
        if idx is None:
            break
        marks.append(2 * idx + 1)
        parts = [v - 2 for v in parts[:idx]] + [parts[idx] - 1] + parts[idx + 1 :]
    return Partition(tuple(parts)), tuple(marks)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_symbols(n: int, kind: str) -> list[FrobeniusSymbol]:
    """All valid symbols of the given kind and weight n, width-major order."""
    out = []
    if n == 0:
        out.append(FrobeniusSymbol(kind, Overpartition(), Overpartition()))
    max_width = n if kind == SECOND else int((2 * n) ** 0.5) + 1
    for w in range(1, max_width + 1):
        if kind == FIRST:
            top_c = Constraints(distinct=True)
            bottom_c = Constraints(num_parts=w, nonnegative=True, overlines=True)
        else:
            top_c = Constraints(odd_only=True, overlines=True)
            bottom_c = Constraints(num_parts=w, nonnegative=True, odd_distinct=True)
        min_top = w * (w + 1) // 2 if kind == FIRST else w
        for wa in range(min_top, n + 1):
            tops = [t for t in enumerate_parts(wa, top_c) if t.num_parts == w]
            if not tops:
                continue
            bottoms = enumerate_parts(n - wa, bottom_c)
            for t in tops:
                for b in bottoms:
                    out.append(FrobeniusSymbol(kind, as_over(t), as_over(b)))
    return out

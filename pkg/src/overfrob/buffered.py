"""Buffered Frobenius representations.

A buffered representation is an ordered list of columns, each holding a top
entry and a bottom entry (partitions or overpartitions, zero-padded to a
declared length) plus two independent hat flags.  The two families B1 and B2
generalize the first- and second-kind Frobenius symbols: collapsing the
columns with :func:`jigsaw` recovers an ordinary symbol, while per-column
rank components and conjugations live only at the buffered level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .frobenius import FIRST, SECOND, FrobeniusSymbol, js_inverse, js_map, js2_inverse, js2_map
from .partitions import (
    Constraints,
    Overpartition,
    Partition,
    Row,
    as_over,
    bracket,
    cl_rank,
    dyson_rank,
    enumerate_parts,
    format_parts,
    occurrences_of_largest,
    over_bracket,
    parse_overpartition,
    parse_partition,
    second_bracket,
    second_over_bracket,
    second_over_rank,
    second_rank,
)

B1 = "B1"
B2 = "B2"
GENERIC = "generic"


@dataclass(frozen=True)
class Column:
    top: Row
    bottom: Row
    top_hat: bool = False
    bottom_hat: bool = False

    @property
    def weight(self) -> int:
        return self.top.weight + self.bottom.weight

    @property
    def chi(self) -> int:
        if self.top_hat and not self.bottom_hat:
            return 1
        if self.bottom_hat and not self.top_hat:
            return -1
        return 0


@dataclass(frozen=True)
class BufferedRep:
    kind: str
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        if self.kind not in (B1, B2, GENERIC):
            raise ValueError(f"unknown representation kind {self.kind!r}")
        object.__setattr__(self, "columns", tuple(self.columns))

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def weight(self) -> int:
        return sum(c.weight for c in self.columns)

    @property
    def hat_count(self) -> int:
        return sum(int(c.top_hat) + int(c.bottom_hat) for c in self.columns)

    def chi(self, i: int) -> int:
        """+1 if only the top of column i (1-based) is hatted, -1 if only the
        bottom, 0 otherwise (including out-of-range i)."""
        if not 1 <= i <= self.width:
            return 0
        return self.columns[i - 1].chi

    def validate(self) -> list[str]:
        return validate_rep(self)

    def is_valid(self) -> bool:
        return not self.validate()

    def __str__(self) -> str:
        return format_rep(self)


# ---------------------------------------------------------------------------
# validity


def _num_parts(row: Row) -> int:
    return row.num_parts


def _has_overlines(row: Row) -> bool:
    return isinstance(row, Overpartition) and any(o for _, o in row.parts)


def _structural_problems(rep: BufferedRep) -> list[str]:
    problems = []
    k = rep.width
    for i, col in enumerate(rep.columns, start=1):
        if _num_parts(col.top) != _num_parts(col.bottom):
            problems.append(f"column {i}: top and bottom part counts differ")
        if i > 1 and _num_parts(col.top) > _num_parts(rep.columns[i - 2].top):
            problems.append(f"column {i}: part count exceeds column {i - 1}")
        if _num_parts(col.top) == 0:
            problems.append(f"column {i}: empty column")
    if k and (rep.columns[-1].top_hat or rep.columns[-1].bottom_hat):
        problems.append("last column carries a hat")
    return problems


def _b1_problems(rep: BufferedRep) -> list[str]:
    problems = []
    k = rep.width
    tops = [c.top for c in rep.columns]
    bottoms = [c.bottom for c in rep.columns]
    for i, top in enumerate(tops, start=1):
        if _has_overlines(top):
            problems.append(f"column {i}: overline in the top row")
        vals = top.values if isinstance(top, Overpartition) else top.parts
        if any(v <= 0 for v in vals):
            problems.append(f"column {i}: nonpositive top part")
    if k:
        try:
            top1 = tops[0] if isinstance(tops[0], Partition) else tops[0].to_partition()
            if len(set(top1.parts)) != len(top1.parts):
                problems.append("column 1: top parts not distinct")
        except ValueError:
            top1 = None
        width2 = _num_parts(tops[1]) if k >= 2 else 0
        if top1 is not None and width2 > bracket(top1):
            problems.append("column 2: part count exceeds the top-1 bracket")
        for i in range(3, k + 1):
            if _num_parts(tops[i - 1]) > occurrences_of_largest(tops[i - 2]):
                problems.append(
                    f"column {i}: part count exceeds the largest-part run of top {i - 1}"
                )
        b1 = as_over(bottoms[0])
        if b1.parts and over_bracket(b1) < width2:
            problems.append("column 1: bottom bracket smaller than the width of top 2")
        for i in range(2, k + 1):
            bot = bottoms[i - 1]
            if _has_overlines(bot):
                problems.append(f"column {i}: overline in the bottom row")
            if i < k:
                need = _num_parts(tops[i])
                if occurrences_of_largest(bot) < need:
                    problems.append(
                        f"column {i}: bottom largest-part run smaller than the width of top {i + 1}"
                    )
    return problems


def _b2_problems(rep: BufferedRep) -> list[str]:
    problems = []
    k = rep.width
    tops = [c.top for c in rep.columns]
    bottoms = [c.bottom for c in rep.columns]
    if k:
        t1 = tops[0]
        if any(v % 2 == 0 for v in (t1.values if isinstance(t1, Overpartition) else t1.parts)):
            problems.append("column 1: even part in the top row")
        for i in range(2, k + 1):
            top = tops[i - 1]
            if _has_overlines(top):
                problems.append(f"column {i}: overline in the top row")
            vals = top.values if isinstance(top, Overpartition) else top.parts
            if any(v <= 0 or v % 2 for v in vals):
                problems.append(f"column {i}: top parts must be even and positive")
        width2 = _num_parts(tops[1]) if k >= 2 else 0
        if width2 > second_over_bracket(as_over(t1)):
            problems.append("column 2: part count exceeds the top-1 bracket")
        for i in range(3, k + 1):
            if _num_parts(tops[i - 1]) > occurrences_of_largest(tops[i - 2]):
                problems.append(
                    f"column {i}: part count exceeds the largest-part run of top {i - 1}"
                )
        b1 = bottoms[0]
        if _has_overlines(b1):
            problems.append("column 1: overline in the bottom row")
        vals = b1.values if isinstance(b1, Overpartition) else b1.parts
        odds = [v for v in vals if v % 2]
        if len(odds) != len(set(odds)):
            problems.append("column 1: repeated odd part in the bottom row")
        else:
            bp = Partition(vals)
            if bp.parts and second_bracket(bp) < width2:
                problems.append("column 1: bottom bracket smaller than the width of top 2")
        for i in range(2, k + 1):
            bot = bottoms[i - 1]
            if _has_overlines(bot):
                problems.append(f"column {i}: overline in the bottom row")
            bvals = bot.values if isinstance(bot, Overpartition) else bot.parts
            if any(v % 2 for v in bvals):
                problems.append(f"column {i}: odd part in the bottom row")
            if i < k:
                need = _num_parts(tops[i])
                if occurrences_of_largest(bot) < need:
                    problems.append(
                        f"column {i}: bottom largest-part run smaller than the width of top {i + 1}"
                    )
    return problems


def validate_rep(rep: BufferedRep) -> list[str]:
    """Clause-by-clause validity report; an empty list means valid."""
    problems = _structural_problems(rep)
    if rep.kind == B1:
        problems += _b1_problems(rep)
    elif rep.kind == B2:
        problems += _b2_problems(rep)
    return problems


# ---------------------------------------------------------------------------
# ranks


def rank_component(rep: BufferedRep, i: int) -> int:
    """The i-th rank component (1-based); 0 beyond the column count."""
    if not 1 <= i <= rep.width:
        return 0
    col = rep.columns[i - 1]
    chi = col.chi
    if i == 1:
        if rep.kind == B2:
            return second_over_rank(as_over(col.top)) - second_rank(_plain(col.bottom)) + chi
        top1 = col.top if isinstance(col.top, Partition) else col.top.to_partition()
        return dyson_rank(top1) - (cl_rank(as_over(col.bottom)) + 1) + chi
    lt, lb = col.top.largest, col.bottom.largest
    if rep.kind == B2:
        if lt % 2 or lb % 2:
            raise ValueError(f"column {i} of a B2 representation must be even")
        return (lt // 2 - 1) - lb // 2 + chi
    return (lt - 1) - lb + chi


def rank_vector(rep: BufferedRep) -> tuple[int, ...]:
    return tuple(rank_component(rep, i) for i in range(1, rep.width + 1))


def full_rank(rep: BufferedRep) -> int:
    return sum(rank_vector(rep))


def _plain(row: Row) -> Partition:
    return row if isinstance(row, Partition) else row.to_partition()


# ---------------------------------------------------------------------------
# jigsaw collapse


def jigsaw(rep: BufferedRep) -> FrobeniusSymbol:
    """Collapse a buffered representation to an ordinary Frobenius symbol:
    pad every column to the width of the first, sum positionwise, discard
    hats, and copy overlines from the first column."""
    if not rep.columns:
        return FrobeniusSymbol(SECOND if rep.kind == B2 else FIRST, Overpartition(), Overpartition())
    width = _num_parts(rep.columns[0].top)

    def padded(row: Row) -> list[int]:
        vals = list(row.values if isinstance(row, Overpartition) else row.parts)
        return vals + [0] * (width - len(vals))

    top_sum = [0] * width
    bottom_sum = [0] * width
    for col in rep.columns:
        for j, v in enumerate(padded(col.top)):
            top_sum[j] += v
        for j, v in enumerate(padded(col.bottom)):
            bottom_sum[j] += v

    def overmask(row: Row) -> list[bool]:
        if isinstance(row, Overpartition):
            return [o for _, o in row.parts] + [False] * (width - row.num_parts)
        return [False] * width

    top = Overpartition(tuple(zip(top_sum, overmask(rep.columns[0].top))))
    bottom = Overpartition(tuple(zip(bottom_sum, overmask(rep.columns[0].bottom))))
    return FrobeniusSymbol(SECOND if rep.kind == B2 else FIRST, top, bottom)


# ---------------------------------------------------------------------------
# conjugations


def _staircase(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def _conjugate_first_column_b1(col: Column) -> Column:
    m = _num_parts(col.top)
    stair = _staircase(m)
    top1 = _plain(col.top)
    destaired = Partition(tuple(v - s for v, s in zip(top1.parts, stair)))
    base, marks = js_inverse(as_over(col.bottom))
    new_top = Partition(tuple(v + s for v, s in zip(base.parts, stair)))
    new_bottom = js_map(destaired, marks)
    return Column(new_top, new_bottom, col.bottom_hat, col.top_hat)


def _conjugate_first_column_b2(col: Column) -> Column:
    top1 = as_over(col.top)
    lowered = Overpartition(tuple((v - 1, o) for v, o in top1.parts))
    alpha, beta = js_inverse(lowered, scale=2)
    gamma, delta = js2_inverse(_plain(col.bottom))
    raised = js_map(gamma, beta, scale=2)
    new_top = Overpartition(tuple((v + 1, o) for v, o in raised.parts))
    new_bottom = js2_map(alpha, delta)
    return Column(new_top, new_bottom, col.bottom_hat, col.top_hat)


def conjugate(rep: BufferedRep, i: int) -> BufferedRep:
    """The i-th column conjugation (1-based); identity beyond the width.
    Negates exactly the i-th rank component."""
    if not 1 <= i <= rep.width:
        return rep
    col = rep.columns[i - 1]
    if i == 1:
        new_col = (
            _conjugate_first_column_b2(col) if rep.kind == B2 else _conjugate_first_column_b1(col)
        )
    else:
        step = 2 if rep.kind == B2 else 1
        tvals = col.top.values if isinstance(col.top, Overpartition) else col.top.parts
        bvals = col.bottom.values if isinstance(col.bottom, Overpartition) else col.bottom.parts
        new_col = Column(
            Partition(tuple(v + step for v in bvals)),
            Partition(tuple(v - step for v in tvals)),
            col.bottom_hat,
            col.top_hat,
        )
    columns = list(rep.columns)
    columns[i - 1] = new_col
    return replace(rep, columns=tuple(columns))


def full_conjugate(rep: BufferedRep) -> BufferedRep:
    """Composition of every per-column conjugation; negates the full rank."""
    for i in range(1, rep.width + 1):
        rep = conjugate(rep, i)
    return rep


# ---------------------------------------------------------------------------
# text form: B1:^[3,2,1]|[2,2,1]|[3];[4~,4,3~]|^[1,0,0]|[0]


def format_rep(rep: BufferedRep) -> str:
    tag = {B1: "B1", B2: "B2", GENERIC: "G"}[rep.kind]

    def entry(row: Row, hat: bool) -> str:
        parts = row.parts if isinstance(row, Overpartition) else [(v, False) for v in row.parts]
        return ("^" if hat else "") + format_parts(parts)

    tops = "|".join(entry(c.top, c.top_hat) for c in rep.columns)
    bottoms = "|".join(entry(c.bottom, c.bottom_hat) for c in rep.columns)
    return f"{tag}:{tops};{bottoms}" if rep.columns else f"{tag}:"


def parse_rep(text: str) -> BufferedRep:
    text = text.strip()
    tag, _, body = text.partition(":")
    kind = {"B1": B1, "B2": B2, "G": GENERIC}.get(tag.strip())
    if kind is None:
        raise ValueError(f"unknown representation tag {tag!r}")
    if not body.strip():
        return BufferedRep(kind)
    top_text, _, bottom_text = body.partition(";")
    tops = [t.strip() for t in top_text.split("|")]
    bottoms = [b.strip() for b in bottom_text.split("|")]
    if len(tops) != len(bottoms):
        raise ValueError(f"top and bottom column counts differ in {text!r}")

    def entry(tok: str) -> tuple[Row, bool]:
        hat = tok.startswith("^")
        if hat:
            tok = tok[1:]
        if "~" in tok:
            return parse_overpartition(tok), hat
        return parse_partition(tok), hat

    columns = []
    for ttok, btok in zip(tops, bottoms):
        top, th = entry(ttok)
        bottom, bh = entry(btok)
        columns.append(Column(top, bottom, th, bh))
    return BufferedRep(kind, tuple(columns))


# ---------------------------------------------------------------------------
# enumeration


def _top_choices(kind: str, index: int, weight: int, prev_top: Row | None) -> list[Row]:
    """Nonempty top entries of the given weight admissible at this column,
    given the previous column's top (None for the first column)."""
    if index == 1:
        if kind == B2:
            cons = Constraints(odd_only=True, overlines=True)
        else:
            cons = Constraints(distinct=True)
        return [row for row in enumerate_parts(weight, cons) if row.num_parts]
    assert prev_top is not None
    if index == 2:
        cap = second_over_bracket(as_over(prev_top)) if kind == B2 else bracket(_plain(prev_top))
    else:
        cap = occurrences_of_largest(prev_top)
    if cap <= 0:
        return []
    cons = Constraints(even_only=True) if kind == B2 else Constraints()
    out = []
    for row in enumerate_parts(weight, cons):
        if 1 <= row.num_parts <= cap:
            out.append(row)
    return out


def _bottom_choices(kind: str, index: int, k: int, weight: int, width: int, next_width: int) -> list[Row]:
    """Bottom entries of the given weight for a column of the given width;
    ``next_width`` is the part count of the following top (0 for the last)."""
    if index == 1:
        if kind == B2:
            cons = Constraints(
                num_parts=width,
                nonnegative=True,
                odd_distinct=True,
                bracket="sigma2" if next_width else None,
                min_bracket=next_width,
            )
        else:
            cons = Constraints(
                num_parts=width,
                nonnegative=True,
                overlines=True,
                bracket="sigma_bar" if next_width else None,
                min_bracket=next_width,
            )
    else:
        cons = Constraints(
            num_parts=width,
            nonnegative=True,
            even_only=(kind == B2),
            min_largest_run=next_width if index < k else 0,
        )
    return list(enumerate_parts(weight, cons))


def _hat_states(k: int) -> Iterator[tuple[tuple[bool, bool], ...]]:
    if k == 0:
        yield ()
        return
    free = [(False, False), (True, False), (False, True), (True, True)]
    for combo in itertools.product(free, repeat=k - 1):
        yield combo + (((False, False)),)


def enumerate_reps(n: int, k_max: int, kind: str) -> Iterator[BufferedRep]:
    """Every valid representation of weight n with at most k_max columns,
    including all hat assignments, exactly once."""
    if kind not in (B1, B2):
        raise ValueError("enumeration is defined for kinds B1 and B2")
    if n == 0:
        yield BufferedRep(kind)
    for k in range(1, k_max + 1):
        yield from _reps_with_k_columns(n, k, kind)


def _reps_with_k_columns(n: int, k: int, kind: str) -> Iterator[BufferedRep]:
    def choose_tops(index: int, remaining: int, acc: list[Row]) -> Iterator[list[Row]]:
        if index > k:
            yield list(acc)
            return
        prev = acc[-1] if acc else None
        for w in range(0, remaining + 1):
            for top in _top_choices(kind, index, w, prev):
                acc.append(top)
                yield from choose_tops(index + 1, remaining - w, acc)
                acc.pop()

    def choose_bottoms(tops: list[Row], index: int, remaining: int, acc: list[Row]) -> Iterator[list[Row]]:
        if index > k:
            if remaining == 0:
                yield list(acc)
            return
        width = tops[index - 1].num_parts
        next_width = tops[index].num_parts if index < k else 0
        weights = [remaining] if index == k else range(0, remaining + 1)
        for w in weights:
            for bottom in _bottom_choices(kind, index, k, w, width, next_width):
                acc.append(bottom)
                yield from choose_bottoms(tops, index + 1, remaining - w, acc)
                acc.pop()

    for tops in choose_tops(1, n, []):
        spent = sum(t.weight for t in tops)
        for bottoms in choose_bottoms(tops, 1, n - spent, []):
            for hats in _hat_states(k):
                columns = tuple(
                    Column(t, b, th, bh)
                    for t, b, (th, bh) in zip(tops, bottoms, hats)
                )
                yield BufferedRep(kind, columns)

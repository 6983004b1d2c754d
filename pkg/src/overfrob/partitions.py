"""Partitions, overpartitions, their statistics, conjugation and enumeration.

A partition is a nonincreasing tuple of nonnegative integers.  Zero parts are
allowed so that padded rows such as ``[3,3]@5`` = (3,3,0,0,0) can be treated
uniformly; weight and largest part are insensitive to padding, the part count
is not.

An overpartition is a partition in which the first occurrence of a value may
be overlined (written ``4~`` in text form).  Canonical order lists the
overlined copy first among equal values.  A zero part may be overlined too
(``0~``), and it sorts before a plain 0.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence


# ---------------------------------------------------------------------------
# core types


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not nonincreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def positive(self) -> "Partition":
        """Drop zero padding."""
        return Partition(tuple(p for p in self.parts if p > 0))

    def __str__(self) -> str:
        return format_parts([(p, False) for p in self.parts])


@dataclass(frozen=True)
class Overpartition:
    # each part is (value, overlined)
    parts: tuple[tuple[int, bool], ...] = ()

    def __post_init__(self):
        parts = tuple((int(v), bool(o)) for v, o in self.parts)
        object.__setattr__(self, "parts", parts)
        for (v1, o1), (v2, o2) in zip(parts, parts[1:]):
            if v1 < v2:
                raise ValueError(f"parts not nonincreasing: {parts}")
            if v1 == v2 and o2 and not o1:
                raise ValueError(f"overlined copy must come first: {parts}")
            if v1 == v2 and o1 and o2:
                raise ValueError(f"value {v1} overlined twice: {parts}")
        if parts and parts[-1][0] < 0:
            raise ValueError(f"negative part in {parts}")

    @classmethod
    def make(cls, values: Sequence[int], overlined: Sequence[int] = ()) -> "Overpartition":
        """Canonicalize: sort descending, overline first copy of each marked value."""
        over = set(overlined)
        vals = sorted(values, reverse=True)
        if not over <= set(vals):
            raise ValueError(f"overlined values {sorted(over)} not among parts {vals}")
        parts = []
        for v in vals:
            if v in over:
                parts.append((v, True))
                over.discard(v)
            else:
                parts.append((v, False))
        return cls(tuple(parts))

    @classmethod
    def plain(cls, p: Partition) -> "Overpartition":
        return cls(tuple((v, False) for v in p.parts))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    @property
    def overlined_values(self) -> tuple[int, ...]:
        return tuple(v for v, o in self.parts if o)

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0][0] if self.parts else 0

    def to_partition(self) -> Partition:
        if any(o for _, o in self.parts):
            raise ValueError(f"overlines present in {self}")
        return Partition(self.values)

    def __str__(self) -> str:
        return format_parts(self.parts)


Row = Partition | Overpartition


def as_over(row: Row) -> Overpartition:
    return row if isinstance(row, Overpartition) else Overpartition.plain(row)


# ---------------------------------------------------------------------------
# text form: [4~,4,2,1], [] and padded [3,3]@5

_PARTS_RE = re.compile(r"^\[([^\[\]]*)\](?:@(\d+))?$")


def format_parts(parts: Sequence[tuple[int, bool]]) -> str:
    return "[" + ",".join(f"{v}~" if o else str(v) for v, o in parts) + "]"


def _parse_entries(text: str) -> list[tuple[int, bool]]:
    m = _PARTS_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse part list: {text!r}")
    body, pad = m.groups()
    entries: list[tuple[int, bool]] = []
    if body.strip():
        for tok in body.split(","):
            tok = tok.strip()
            over = tok.endswith("~")
            if over:
                tok = tok[:-1]
            if not tok.isdigit():
                raise ValueError(f"bad part {tok!r} in {text!r}")
            entries.append((int(tok), over))
    if pad is not None:
        n = int(pad)
        if n < len(entries):
            raise ValueError(f"padding @{n} shorter than {len(entries)} parts: {text!r}")
        entries.extend((0, False) for _ in range(n - len(entries)))
    return entries


def parse_partition(text: str) -> Partition:
    entries = _parse_entries(text)
    if any(o for _, o in entries):
        raise ValueError(f"overline not allowed in a plain partition: {text!r}")
    return Partition(tuple(v for v, _ in entries))


def parse_overpartition(text: str) -> Overpartition:
    return Overpartition(tuple(_parse_entries(text)))


# ---------------------------------------------------------------------------
# statistics


def dyson_rank(p: Partition) -> int:
    """Largest part minus number of parts."""
    return p.largest - p.num_parts


def dyson_rank_over(op: Overpartition) -> int:
    """Dyson rank of an overpartition: largest part minus number of parts."""
    return op.largest - op.num_parts


def m2_rank_over(op: Overpartition) -> int:
    """M2-rank: ceil(l/2) - #parts + #(non-overlined odd parts) - chi,
    where chi = 1 iff the largest part is odd and non-overlined."""
    ell = op.largest
    n_odd_plain = sum(1 for v, o in op.parts if v % 2 == 1 and not o)
    chi = 1 if op.parts and op.parts[0][0] % 2 == 1 and not op.parts[0][1] else 0
    return -(-ell // 2) - op.num_parts + n_odd_plain - chi


def cl_rank(op: Overpartition) -> int:
    """Corteel-Lovejoy overpartition rank: l - 1 - #(overlined parts < l)."""
    ell = op.largest
    smaller = sum(1 for v, o in op.parts if o and v < ell)
    return ell - 1 - smaller


def second_rank(p: Partition) -> int:
    """Second rank of a partition whose odd parts are distinct:
    floor(l/2) - #(odd parts < l)."""
    odds = [v for v in p.parts if v % 2 == 1]
    if len(odds) != len(set(odds)):
        raise ValueError(f"odd parts repeat in {p}")
    ell = p.largest
    return ell // 2 - sum(1 for v in odds if v < ell)


def second_over_rank(op: Overpartition) -> int:
    """Second overpartition rank of an overpartition into odd parts:
    (l-1)/2 - #(overlined parts < l)."""
    if any(v % 2 == 0 for v, _ in op.parts):
        raise ValueError(f"even part in {op}")
    ell = op.largest
    if not op.parts:
        return 0
    return (ell - 1) // 2 - sum(1 for v, o in op.parts if o and v < ell)


def bracket(p: Partition) -> int:
    """Length of the longest initial run with l_i = l_(i+1) + 1."""
    run = 1 if p.parts else 0
    for a, b in zip(p.parts, p.parts[1:]):
        if a == b + 1:
            run += 1
        else:
            break
    return run


def over_bracket(op: Overpartition) -> int:
    """Longest initial run where consecutive parts are equal, or differ by 1
    with the smaller of the two overlined.

    The smaller-part condition is what makes the statistic agree with the
    number of occurrences of the largest part of the mark-insertion base
    (see :func:`overfrob.frobenius.js_inverse`), which is the invariant the
    series identities rely on.
    """
    run = 1 if op.parts else 0
    for (v1, _), (v2, o2) in zip(op.parts, op.parts[1:]):
        if v1 == v2 or (v1 == v2 + 1 and o2):
            run += 1
        else:
            break
    return run


def second_bracket(p: Partition) -> int:
    """Longest initial run where consecutive parts differ by at most 1, or by
    exactly 2 with both parts odd.

    The odd-odd step-2 clause makes the statistic agree with the number of
    occurrences of the largest part of the odd-mark-insertion base (see
    :func:`overfrob.frobenius.js2_inverse`), the invariant behind the series
    identities for partitions without repeated odd parts.
    """
    run = 1 if p.parts else 0
    for a, b in zip(p.parts, p.parts[1:]):
        if a - b < 2 or (a - b == 2 and a % 2 == 1 and b % 2 == 1):
            run += 1
        else:
            break
    return run


def second_over_bracket(op: Overpartition) -> int:
    """Longest initial run where consecutive parts are equal, or differ by 2
    with the smaller of the two overlined (the scale-2 analogue of
    :func:`over_bracket`)."""
    run = 1 if op.parts else 0
    for (v1, _), (v2, o2) in zip(op.parts, op.parts[1:]):
        if v1 == v2 or (v1 == v2 + 2 and o2):
            run += 1
        else:
            break
    return run


_BRACKETS = {
    "sigma": lambda row: bracket(row if isinstance(row, Partition) else row.to_partition()),
    "sigma_bar": lambda row: over_bracket(as_over(row)),
    "sigma2": lambda row: second_bracket(row if isinstance(row, Partition) else row.to_partition()),
    "sigma2_bar": lambda row: second_over_bracket(as_over(row)),
}


def bracket_stat(name: str, row: Row) -> int:
    try:
        fn = _BRACKETS[name]
    except KeyError:
        raise ValueError(f"unknown bracket statistic {name!r}") from None
    return fn(row)


def occurrences_of_largest(row: Row) -> int:
    values = row.values if isinstance(row, Overpartition) else row.parts
    if not values:
        return 0
    return sum(1 for v in values if v == values[0])


# ---------------------------------------------------------------------------
# conjugation


def conjugate(p: Partition) -> Partition:
    """Ordinary conjugate (transpose of the Young diagram); positive parts only."""
    if any(v == 0 for v in p.parts):
        raise ValueError("conjugate undefined with zero parts")
    if not p.parts:
        return Partition(())
    out = tuple(sum(1 for x in p.parts if x >= v) for v in range(1, p.largest + 1))
    return Partition(tuple(sorted(out, reverse=True)))


def conjugate_over(op: Overpartition) -> Overpartition:
    """Overpartition conjugate: transpose the dotted Young tableau.

    The dot of an overlined value v sits on the rightmost cell of the last
    row of size v; after transposing, that dot lands on the rightmost cell of
    the row of length #(parts >= v), so that length becomes overlined.
    """
    if any(v == 0 for v, _ in op.parts):
        raise ValueError("conjugate undefined with zero parts")
    vals = op.values
    conj_vals = [sum(1 for x in vals if x >= v) for v in range(1, op.largest + 1)]
    over = {sum(1 for x in vals if x >= v) for v in op.overlined_values}
    return Overpartition.make(conj_vals, over)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class Constraints:
    """Restrictions understood by :func:`enumerate_parts`.

    num_parts       exact number of parts (zero padding significant)
    nonnegative     allow zero parts (requires num_parts)
    distinct        all parts distinct
    odd_only        every part odd
    even_only       every part even
    odd_distinct    odd parts may not repeat (even parts free)
    overlines       produce overpartitions instead of partitions
    min_largest_run minimum number of occurrences of the largest part
    bracket         name of a bracket statistic ('sigma', 'sigma_bar',
                    'sigma2', 'sigma2_bar') bounded below by min_bracket
    """

    num_parts: int | None = None
    nonnegative: bool = False
    distinct: bool = False
    odd_only: bool = False
    even_only: bool = False
    odd_distinct: bool = False
    overlines: bool = False
    min_largest_run: int = 0
    bracket: str | None = None
    min_bracket: int = 0


def _value_tuples(n: int, c: Constraints) -> Iterator[tuple[int, ...]]:
    """Nonincreasing value tuples of weight n obeying the local constraints."""
    if c.nonnegative and c.num_parts is None:
        raise ValueError("nonnegative parts need an exact part count")
    lo = 0 if c.nonnegative else 1

    def rec(remaining: int, max_part: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if c.num_parts is not None and len(acc) == c.num_parts:
            if remaining == 0:
                yield tuple(acc)
            return
        if remaining == 0 and c.num_parts is None:
            yield tuple(acc)
            return
        slots_left = None if c.num_parts is None else c.num_parts - len(acc)
        hi = min(remaining, max_part) if not (c.nonnegative and remaining == 0) else min(remaining, max_part)
        for v in range(hi, lo - 1, -1):
            if c.odd_only and v % 2 == 0:
                continue
            if c.even_only and v % 2 == 1:
                continue
            if slots_left is not None and remaining - v > (slots_left - 1) * v:
                continue  # cannot absorb the rest with parts <= v
            if slots_left is None and remaining - v > 0 and v == 0:
                continue
            next_max = v - 1 if c.distinct else v
            yield from rec(remaining - v, next_max, acc + [v])

    if c.num_parts == 0 or (c.num_parts is None and n == 0):
        if n == 0:
            yield ()
        return
    yield from rec(n, n, [])


def _passes_filters(row: Row, c: Constraints) -> bool:
    values = row.values if isinstance(row, Overpartition) else row.parts
    if c.odd_distinct:
        odds = [v for v in values if v % 2 == 1]
        if len(odds) != len(set(odds)):
            return False
    if c.min_largest_run and occurrences_of_largest(row) < c.min_largest_run:
        return False
    if c.bracket is not None and bracket_stat(c.bracket, row) < c.min_bracket:
        return False
    return True


def enumerate_parts(n: int, c: Constraints = Constraints()) -> list[Row]:
    """All partitions (or overpartitions) of n satisfying the constraints,
    in deterministic lexicographic order."""
    out: list[Row] = []
    for values in _value_tuples(n, c):
        if not c.overlines:
            row: Row = Partition(values)
            if _passes_filters(row, c):
                out.append(row)
            continue
        distinct_vals = sorted(set(values), reverse=True)
        for r in range(len(distinct_vals) + 1):
            for marked in itertools.combinations(distinct_vals, r):
                op = Overpartition.make(values, marked)
                if _passes_filters(op, c):
                    out.append(op)
    return out


def count_overpartitions(n: int) -> int:
    """Number of overpartitions of n (positive parts)."""
    return len(enumerate_parts(n, Constraints(overlines=True)))

"""ASCII Young-tableau renderings.

Plain overpartitions render as left-aligned rows of ``#`` cells; an
overlined value puts a ``*`` after the rightmost cell of the last row of
that size (the same dot convention the conjugation uses).  Buffered
representations render as two blocks (tops above a rule, bottoms below):
cells are lettered ``a``, ``b``, ... by originating column, and every hat
contributes a one-cell buffer column of ``.`` after its column's segment.
"""

from __future__ import annotations

from .buffered import BufferedRep
from .partitions import Overpartition, Partition, Row, as_over


def _row_strings(op: Overpartition, cell: str = "#") -> list[str]:
    """One string per part; `*` appended to the last row of each overlined size."""
    vals = op.values
    starred = {
        max(i for i, x in enumerate(vals) if x == v) for v in op.overlined_values
    }
    return [cell * v + ("*" if i in starred else "") for i, v in enumerate(vals)]


def render_overpartition(row: Row) -> str:
    return "\n".join(_row_strings(as_over(row)))


def render_rep(rep: BufferedRep) -> str:
    """Two lettered blocks separated by a rule; hats become `.` columns."""
    if not rep.columns:
        return ""

    def block(rows_of, hat_of) -> list[str]:
        height = max((rows_of(c).num_parts for c in rep.columns), default=0)
        segments: list[list[str]] = [[] for _ in range(height)]
        for j, col in enumerate(rep.columns):
            letter = chr(ord("a") + j)
            strs = _row_strings(as_over(rows_of(col)), cell=letter)
            for r in range(height):
                segments[r].append(strs[r] if r < len(strs) else "")
                if hat_of(col):
                    segments[r].append(".")
        return ["".join(seg) for seg in segments]

    top = block(lambda c: c.top, lambda c: c.top_hat)
    bottom = block(lambda c: c.bottom, lambda c: c.bottom_hat)
    rule_len = max((len(r) for r in top + bottom), default=0)
    return "\n".join(top + ["-" * max(rule_len, 1)] + bottom)


def render(obj: Row | BufferedRep) -> str:
    if isinstance(obj, BufferedRep):
        return render_rep(obj)
    if isinstance(obj, (Partition, Overpartition)):
        return render_overpartition(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")

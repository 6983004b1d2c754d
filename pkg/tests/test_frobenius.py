import pytest

from overfrob.frobenius import (
    FIRST,
    SECOND,
    FrobeniusSymbol,
    enumerate_symbols,
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
from overfrob.partitions import (
    Constraints,
    count_overpartitions,
    enumerate_parts,
    occurrences_of_largest,
    over_bracket,
    parse_overpartition,
    parse_partition,
    second_bracket,
)


def test_parse_symbol():
    sym = parse_symbol("F1:[3,2,1;4~,4,3~]")
    assert sym.kind == FIRST and sym.weight == 17
    assert str(sym) == "F1:[3,2,1;4~,4,3~]"
    with pytest.raises(ValueError):
        parse_symbol("[3;2]")  # missing kind tag
    with pytest.raises(ValueError):
        parse_symbol("F1:[1,2;0,0]")  # top row not distinct/decreasing


def test_f1_worked_example():
    sym = parse_symbol("F1:[3,2,1;4~,4,3~]")
    out = f1_to_overpartition(sym)
    assert str(out) == "[3,3,3,3,3,2~]"
    assert overpartition_to_f1(out) == sym


def test_f2_worked_example():
    sym = parse_symbol("F2:[5,1~;6,5]")
    out = f2_to_overpartition(sym)
    assert str(out) == "[8,7~,2~]"
    assert overpartition_to_f2(out) == sym


@pytest.mark.parametrize("kind,fwd,inv", [
    (FIRST, f1_to_overpartition, overpartition_to_f1),
    (SECOND, f2_to_overpartition, overpartition_to_f2),
])
def test_symbol_counts_and_round_trips(kind, fwd, inv):
    for n in range(11):
        syms = enumerate_symbols(n, kind)
        assert len(syms) == count_overpartitions(n)
        images = set()
        for sym in syms:
            op = fwd(sym)
            assert op.weight == n
            assert inv(op) == sym
            images.add(op)
        # the forward map is a bijection onto overpartitions of n
        assert images == set(enumerate_parts(n, Constraints(overlines=True)))


def test_js_round_trip_exhaustive():
    # every overpartition into at most 6 nonnegative parts, weight <= 12
    for n in range(13):
        for t in range(1, 7):
            for op in enumerate_parts(n, Constraints(num_parts=t, nonnegative=True, overlines=True)):
                base, marks = js_inverse(op)
                assert js_map(base, marks) == op
                # the run statistic equals the multiplicity of the base's largest part
                assert over_bracket(op) == occurrences_of_largest(base)


def test_js_forward_then_inverse():
    for n in range(10):
        for t in range(1, 5):
            for base in enumerate_parts(n, Constraints(num_parts=t, nonnegative=True)):
                for mark in range(t):
                    op = js_map(base, [mark])
                    b2, m2 = js_inverse(op)
                    assert (b2, set(m2)) == (base, {mark})


def test_js_scale_two():
    base = parse_partition("[4,2,0]")
    op = js_map(base, [0, 2], scale=2)
    assert js_inverse(op, scale=2) == (base, (0, 2))


def test_js_rejects_bad_marks():
    with pytest.raises(ValueError):
        js_map(parse_partition("[3,2,1]"), [3])  # mark >= number of parts
    with pytest.raises(ValueError):
        js_map(parse_partition("[3,2,1]"), [1, 1])  # repeated mark


def test_js2_round_trip_exhaustive():
    # every partition into at most 6 nonnegative parts with distinct odd
    # parts, weight <= 12
    for n in range(13):
        for t in range(1, 7):
            for p in enumerate_parts(n, Constraints(num_parts=t, nonnegative=True, odd_distinct=True)):
                base, marks = js2_inverse(p)
                assert js2_map(base, marks) == p
                assert all(v % 2 == 0 for v in base.parts)
                # the run statistic equals the multiplicity of the base's largest part
                assert second_bracket(p) == occurrences_of_largest(base)


def test_js2_worked():
    base = parse_partition("[4,2,0,0]")
    p = js2_map(base, [1, 5])
    assert js2_inverse(p) == (base, (1, 5))
    with pytest.raises(ValueError):
        js2_map(parse_partition("[3,2]"), [1])  # base must be even
    with pytest.raises(ValueError):
        js2_map(parse_partition("[4,2]"), [2])  # marks must be odd


def test_symbol_str_round_trip():
    for n in range(7):
        for kind in (FIRST, SECOND):
            for sym in enumerate_symbols(n, kind):
                assert parse_symbol(str(sym)) == sym

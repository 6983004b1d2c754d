from collections import Counter
from fractions import Fraction

import pytest

from overfrob.frobenius import FIRST, SECOND, enumerate_symbols, f1_to_overpartition, f2_to_overpartition
from overfrob.partitions import (
    Constraints,
    count_overpartitions,
    dyson_rank_over,
    enumerate_parts,
    m2_rank_over,
)
from overfrob.qbuilders import (
    andrews_sides,
    bracket_series,
    build_r2k_multi,
    build_rk,
    build_rk_multi,
    f1_rank_series,
    f2_rank_series,
    lemma_reduce_sides,
    mk_slice_series,
    overpartition_prefactor,
    rank_slice,
    rhs_first,
    rhs_second,
    substitute_roots,
)
from overfrob.series import CyclotomicRing, IntRing


def test_prefactor_counts_overpartitions():
    pre = overpartition_prefactor(IntRing(), 10)
    for n in range(11):
        assert pre.coeff(n) == count_overpartitions(n)


@pytest.mark.parametrize("k,stat", [(1, dyson_rank_over), (2, m2_rank_over)])
def test_rank_series_against_enumeration(k, stat):
    s = build_rk(k, 9)
    for n in range(10):
        counts = Counter(stat(o) for o in enumerate_parts(n, Constraints(overlines=True)))
        for m in range(-n - 1, n + 2):
            assert rank_slice(s, m, n) == counts.get(m, 0)


@pytest.mark.parametrize("kind,series,stat,convert", [
    (FIRST, f1_rank_series, dyson_rank_over, f1_to_overpartition),
    (SECOND, f2_rank_series, m2_rank_over, f2_to_overpartition),
])
def test_symbol_rank_series(kind, series, stat, convert):
    s = series(9)
    for n in range(10):
        counts = Counter(stat(convert(sym)) for sym in enumerate_symbols(n, kind))
        for m in range(-n - 1, n + 2):
            assert rank_slice(s, m, n) == counts.get(m, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_first_transformation(k):
    assert build_rk_multi(k, 12) == rhs_first(k, 12)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_second_transformation(k):
    assert build_r2k_multi(k, 12) == rhs_second(k, 12)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_root_substitution_collapses_to_single_variable(k):
    cyc = CyclotomicRing(k)
    assert substitute_roots(build_rk_multi(k, 8), k) == build_rk(k, 8, denom=k, base=cyc)
    assert substitute_roots(build_r2k_multi(k, 8), k) == build_rk(2 * k, 8, denom=k, base=cyc)


@pytest.mark.parametrize("which,cons,stat", [
    ("overrun", "sigma_bar", None),
    ("frob2a", "sigma2", None),
    ("frob2b", "sigma2_bar", None),
])
def test_bracket_series_small(which, cons, stat):
    from overfrob.partitions import bracket_stat, cl_rank, second_over_rank, second_rank

    s, t, N = 2, 3, 8
    series = bracket_series(which, s, t, N)
    extra = {
        "overrun": dict(nonnegative=True, overlines=True),
        "frob2a": dict(nonnegative=True, odd_distinct=True),
        "frob2b": dict(odd_only=True, overlines=True),
    }[which]
    rank = {
        "overrun": lambda r: cl_rank(r) + 1,
        "frob2a": second_rank,
        "frob2b": second_over_rank,
    }[which]
    for n in range(N + 1):
        rows = enumerate_parts(n, Constraints(num_parts=t, bracket=cons, min_bracket=s, **extra))
        counts = Counter(rank(r) for r in rows)
        for m in range(-n - 1, n + 2):
            assert rank_slice(series, m, n) == counts.get(m, 0)


def test_bracket_series_initrun():
    from overfrob.partitions import bracket, dyson_rank

    s, t, N = 2, 3, 9
    series = bracket_series("initrun", s, t, N)
    for n in range(N + 1):
        rows = [p for p in enumerate_parts(n, Constraints(distinct=True))
                if p.num_parts == t and bracket(p) >= s]
        counts = Counter(dyson_rank(p) for p in rows)
        for m in range(-n - 1, n + 2):
            assert rank_slice(series, m, n) == counts.get(m, 0)


def test_bracket_series_rejects_bad_params():
    with pytest.raises(ValueError):
        bracket_series("initrun", 3, 2, 5)
    with pytest.raises(ValueError):
        bracket_series("nope", 1, 1, 5)


@pytest.mark.parametrize("k,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_mk_slice_matches_rank_series(k, m):
    sl = mk_slice_series(k, m, 10)
    rk = build_rk(k, 10)
    for n in range(11):
        assert sl.coeff(n) == rank_slice(rk, m, n)


@pytest.mark.parametrize("m,n,e", [(1, 1, 1), (2, 1, 1), (1, 2, 2), (3, 2, 1)])
def test_lemma_reduce(m, n, e):
    lhs, rhs = lemma_reduce_sides(m, n, e, 12)
    assert lhs == rhs


@pytest.mark.parametrize("corollary", [False, True])
@pytest.mark.parametrize("k,a,bs,cs", [
    (1, Fraction(4), [Fraction(2)], [Fraction(3)]),
    (2, Fraction(9), [Fraction(3), Fraction(2)], [Fraction(2), Fraction(5)]),
    (2, Fraction(1, 4), [Fraction(1, 2), Fraction(1, 2)], [Fraction(3), Fraction(1, 3)]),
])
def test_andrews_transformation(k, a, bs, cs, corollary):
    for n_param in range(3):
        lhs, rhs = andrews_sides(k, n_param, a, bs, cs, trunc=8, corollary=corollary)
        assert lhs == rhs

"""Builders for the rank generating series and hypergeometric identities.

Everything returns a :class:`~overfrob.series.Series` truncated at a given
q-order, with coefficients in an exact ring: integer Laurent polynomials in a
rank variable z (possibly with fractional exponents z^(p/k)), in several
variables x1..xk, or cyclotomic integers after a root-of-unity substitution.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .series import (
    CyclotomicRing,
    FracRing,
    IntRing,
    LaurentRing,
    Series,
    poch,
)


def overpartition_prefactor(ring, trunc: int) -> Series:
    """(-q;q)_inf / (q;q)_inf, the overpartition counting series."""
    minus = poch(ring, trunc, ring.neg(ring.one()), 1, 1)  # (-q;q)_inf inverted below
    plain = poch(ring, trunc, ring.one(), 1, 1)  # (q;q)_inf
    return minus * plain.inverse()


def _pair_factor(ring, trunc: int, x, x_inv, exp: int) -> Series:
    """(1 - x q^exp)(1 - x^{-1} q^exp) as a series, to be inverted."""
    a = Series.one(ring, trunc) + Series.monomial(ring, trunc, ring.neg(x), exp)
    b = Series.one(ring, trunc) + Series.monomial(ring, trunc, ring.neg(x_inv), exp)
    return a * b


def build_rk(k: int, trunc: int, denom: int = 1, base=None) -> Series:
    """The k-th rank generating series over Z[z, z^-1].

    With ``denom`` > 1 the z-exponent grid is refined to steps of 1/denom so
    the result can be compared against root-of-unity substitutions; ``base``
    may replace the integer coefficients (e.g. with a cyclotomic ring).
    """
    ring = LaurentRing(("z",), (denom,), base)
    z = ring.gen(0)
    z_inv = ring.gen(0, -1)
    num = ring.mul(ring.add(ring.one(), ring.neg(z)), ring.add(ring.one(), ring.neg(z_inv)))
    total = Series.one(ring, trunc)
    n = 1
    while n * n + k * n <= trunc:
        term = Series.monomial(ring, trunc, num, n * n + k * n)
        term = term * _pair_factor(ring, trunc, z, z_inv, k * n).inverse()
        if n % 2:
            term = -term
        total = total + term + term
        n += 1
    return overpartition_prefactor(ring, trunc) * total


def _multi_ring(k: int) -> LaurentRing:
    return LaurentRing(tuple(f"x{i}" for i in range(1, k + 1)))


def build_rk_multi(k: int, trunc: int) -> Series:
    """Multivariate rank series over Z[x1..xk]: the left side of the first
    buffered-representation transformation theorem."""
    ring = _multi_ring(k)
    total = Series.one(ring, trunc)
    n = 1
    while n * n + k * n <= trunc:
        num = ring.one()
        den = Series.one(ring, trunc)
        for i in range(k):
            x, x_inv = ring.gen(i), ring.gen(i, -1)
            num = ring.mul(num, ring.mul(ring.add(ring.one(), ring.neg(x)), ring.add(ring.one(), ring.neg(x_inv))))
            den = den * _pair_factor(ring, trunc, x, x_inv, n)
        term = Series.monomial(ring, trunc, num, n * n + k * n) * den.inverse()
        if n % 2:
            term = -term
        total = total + term + term
        n += 1
    return overpartition_prefactor(ring, trunc) * total


def build_r2k_multi(k: int, trunc: int) -> Series:
    """Multivariate second rank series over Z[x1..xk] (exponents n^2+2kn,
    denominator shifts q^(2n))."""
    ring = _multi_ring(k)
    total = Series.one(ring, trunc)
    n = 1
    while n * n + 2 * k * n <= trunc:
        num = ring.one()
        den = Series.one(ring, trunc)
        for i in range(k):
            x, x_inv = ring.gen(i), ring.gen(i, -1)
            num = ring.mul(num, ring.mul(ring.add(ring.one(), ring.neg(x)), ring.add(ring.one(), ring.neg(x_inv))))
            den = den * _pair_factor(ring, trunc, x, x_inv, 2 * n)
        term = Series.monomial(ring, trunc, num, n * n + 2 * k * n) * den.inverse()
        if n % 2:
            term = -term
        total = total + term + term
        n += 1
    return overpartition_prefactor(ring, trunc) * total


def substitute_roots(s: Series, k: int) -> Series:
    """Map x_i -> zeta_k^(i-1) * z^(1/k) in a multivariate series.

    The result lives over Z[zeta_k] with z-exponents on the 1/k grid.
    """
    src = s.ring
    if not isinstance(src, LaurentRing) or len(src.names) != k:
        raise ValueError(f"expected a series in {k} variables")
    cyc = CyclotomicRing(k)
    ring = LaurentRing(("z",), (k,), cyc)
    out = Series(ring, s.trunc)
    for e in range(s.offset, min(s.trunc, s.offset + len(s.coeffs) - 1) + 1):
        poly = s.coeff(e)
        acc = ring.zero()
        for exps, c in poly.items():
            zexp = sum(exps)  # already in 1/k units
            root = cyc.zeta(sum((i) * ei for i, ei in enumerate(exps)))
            mono = {(zexp,): cyc.mul(cyc.from_int(c), root)}
            acc = ring.add(acc, mono)
        out = out + Series.monomial(ring, s.trunc, acc, e)
    return out


# ---------------------------------------------------------------------------
# right-hand sides of the two transformation theorems


def rhs_first(k: int, trunc: int) -> Series:
    """Multisum side of the first transformation theorem over Z[x1..xk]."""
    ring = _multi_ring(k)
    total = Series(ring, trunc)

    def term_degree(ns: list[int]) -> int:
        # minimal q-degree with the remaining indices set to zero
        Nk = sum(ns)
        Ns = [sum(ns[: i + 1]) for i in range(len(ns))]
        Ns += [Nk] * (k - len(ns))
        return Nk * (Nk - 1) // 2 + sum(Ns)

    def rec(ns: list[int]):
        nonlocal total
        if len(ns) == k:
            Nk = sum(ns)
            term = poch(ring, trunc, ring.from_int(-1), 0, 1, Nk)
            term = term.shifted(Nk * (Nk - 1) // 2)
            for i in range(1, k + 1):
                xi = k - i + 1  # variable index (1-based)
                x, x_inv = ring.gen(xi - 1), ring.gen(xi - 1, -1)
                N_prev = sum(ns[: i - 1])
                N_i = sum(ns[:i])
                n_i = ns[i - 1]
                if N_prev == 0:
                    den = poch(ring, trunc, x, 1, 1, n_i) * poch(ring, trunc, x_inv, 1, 1, n_i)
                    term = term.shifted(N_i) * den.inverse()
                else:
                    num = ring.mul(
                        ring.add(ring.one(), ring.neg(x)), ring.add(ring.one(), ring.neg(x_inv))
                    )
                    den = poch(ring, trunc, x, N_prev, 1, n_i + 1) * poch(
                        ring, trunc, x_inv, N_prev, 1, n_i + 1
                    )
                    term = term.scaled(num).shifted(N_i) * den.inverse()
            total = total + term
            return
        n = 0
        while term_degree(ns + [n]) <= trunc:
            rec(ns + [n])
            n += 1

    rec([])
    return total


def rhs_second(k: int, trunc: int) -> Series:
    """Multisum side of the second transformation theorem over Z[x1..xk]."""
    ring = _multi_ring(k)
    total = Series(ring, trunc)

    def term_degree(ns: list[int]) -> int:
        Nk = sum(ns)
        Ns = [sum(ns[: i + 1]) for i in range(len(ns))]
        Ns += [Nk] * (k - len(ns))
        return 2 * sum(Ns) - Nk

    def rec(ns: list[int]):
        nonlocal total
        if len(ns) == k:
            Nk = sum(ns)
            term = poch(ring, trunc, ring.from_int(-1), 0, 1, 2 * Nk).shifted(-Nk)
            for i in range(1, k + 1):
                xi = k - i + 1
                x, x_inv = ring.gen(xi - 1), ring.gen(xi - 1, -1)
                N_prev = sum(ns[: i - 1])
                N_i = sum(ns[:i])
                n_i = ns[i - 1]
                if N_prev == 0:
                    den = poch(ring, trunc, x, 2, 2, n_i) * poch(ring, trunc, x_inv, 2, 2, n_i)
                    term = term.shifted(2 * N_i) * den.inverse()
                else:
                    num = ring.mul(
                        ring.add(ring.one(), ring.neg(x)), ring.add(ring.one(), ring.neg(x_inv))
                    )
                    den = poch(ring, trunc, x, 2 * N_prev, 2, n_i + 1) * poch(
                        ring, trunc, x_inv, 2 * N_prev, 2, n_i + 1
                    )
                    term = term.scaled(num).shifted(2 * N_i) * den.inverse()
            total = total + term
            return
        n = 0
        while term_degree(ns + [n]) <= trunc:
            rec(ns + [n])
            n += 1

    rec([])
    return total


# ---------------------------------------------------------------------------
# symbol rank series and bracket lemma series


def f1_rank_series(trunc: int) -> Series:
    """Rank series of first-kind symbols over Z[z, z^-1]."""
    ring = LaurentRing(("z",))
    z, z_inv = ring.gen(0), ring.gen(0, -1)
    total = Series(ring, trunc)
    n = 0
    while n * (n + 1) // 2 <= trunc:
        term = poch(ring, trunc, ring.from_int(-1), 0, 1, n).shifted(n * (n + 1) // 2)
        den = poch(ring, trunc, z, 1, 1, n) * poch(ring, trunc, z_inv, 1, 1, n)
        total = total + term * den.inverse()
        n += 1
    return total


def f2_rank_series(trunc: int, variant: str = "q") -> Series:
    """Rank series of second-kind symbols over Z[z, z^-1].

    ``variant`` selects the numerator Pochhammer base: "q" for (-1;q)_{2n}
    (the reading confirmed by enumeration) or "q2" for (-1;q^2)_{2n}.
    """
    if variant not in ("q", "q2"):
        raise ValueError(f"unknown variant {variant!r}")
    ring = LaurentRing(("z",))
    z, z_inv = ring.gen(0), ring.gen(0, -1)
    total = Series(ring, trunc)
    for n in range(trunc + 1):
        step = 1 if variant == "q" else 2
        term = poch(ring, trunc, ring.from_int(-1), 0, step, 2 * n).shifted(n)
        den = poch(ring, trunc, z, 2, 2, n) * poch(ring, trunc, z_inv, 2, 2, n)
        total = total + term * den.inverse()
    return total


def bracket_series(which: str, s: int, t: int, trunc: int) -> Series:
    """Generating series of the four bracket lemmas over Z[z, z^-1].

    which = 'initrun'  : distinct-part partitions, t parts, sigma >= s, z^rank
            'overrun'  : overpartitions, t nonnegative parts, sigmabar >= s,
                         z^(cl_rank+1)
            'frob2a'   : partitions, t nonnegative parts, odd parts distinct,
                         sigma2 >= s, z^second_rank
            'frob2b'   : overpartitions into t odd parts, sigma2bar >= s,
                         z^second_over_rank
    Requires 1 <= s <= t.
    """
    if not 1 <= s <= t:
        raise ValueError("need 1 <= s <= t")
    ring = LaurentRing(("z",))
    z = ring.gen(0)
    if which == "initrun":
        num = Series.one(ring, trunc).shifted(t * (t + 1) // 2)
        den = poch(ring, trunc, z, s, 1, t - s + 1)
    elif which == "overrun":
        num = poch(ring, trunc, ring.from_int(-1), 0, 1, t)
        den = poch(ring, trunc, z, s, 1, t - s + 1)
    elif which == "frob2a":
        num = poch(ring, trunc, ring.from_int(-1), 1, 2, t)
        den = poch(ring, trunc, z, 2 * s, 2, t - s + 1)
    elif which == "frob2b":
        num = poch(ring, trunc, ring.from_int(-1), 0, 2, t).shifted(t)
        den = poch(ring, trunc, z, 2 * s, 2, t - s + 1)
    else:
        raise ValueError(f"unknown bracket lemma {which!r}")
    return num * den.inverse()


def mk_slice_series(k: int, m: int, trunc: int) -> Series:
    """Conjectural single-slice series: 2 * prefactor * sum over n >= 1 of
    (-1)^(n+1) q^(n^2+k|m|n) (1-q^(kn))/(1+q^(kn))."""
    ring = IntRing()
    total = Series(ring, trunc)
    n = 1
    while n * n + k * abs(m) * n <= trunc:
        num = Series.one(ring, trunc) - Series.monomial(ring, trunc, 1, k * n)
        den = Series.one(ring, trunc) + Series.monomial(ring, trunc, 1, k * n)
        term = num * den.inverse()
        term = term.shifted(n * n + k * abs(m) * n)
        if n % 2 == 0:
            term = -term
        total = total + term
        n += 1
    return (overpartition_prefactor(ring, trunc) * total).scaled(2) + Series(ring, trunc)


def rank_slice(series: Series, m: int, n: int):
    """Integer coefficient of z^m q^n in a z-Laurent series."""
    ring = series.ring
    return ring.coeff(series.coeff(n), (m * ring.denoms[0],))


# ---------------------------------------------------------------------------
# Pochhammer quotient reduction identity


def lemma_reduce_sides(m: int, n: int, e: int, trunc: int) -> tuple[Series, Series]:
    """Both sides of (a;q)_m / (aq;q)_{m+n} with a = z q^e, e >= 1:
    1/(aq;q)_n when m = 0, else (1-a)/(a q^m;q)_{n+1}."""
    if e < 1 or m < 0 or n < 0:
        raise ValueError("need e >= 1 and m, n >= 0")
    ring = LaurentRing(("z",))
    z = ring.gen(0)
    lhs = poch(ring, trunc, z, e, 1, m) * poch(ring, trunc, z, e + 1, 1, m + n).inverse()
    if m == 0:
        rhs = poch(ring, trunc, z, e + 1, 1, n).inverse()
    else:
        one_minus_a = Series.one(ring, trunc) + Series.monomial(ring, trunc, ring.neg(z), e)
        rhs = one_minus_a * poch(ring, trunc, z, e + m, 1, n + 1).inverse()
    return lhs, rhs


# ---------------------------------------------------------------------------
# terminating hypergeometric transformation checker


def _sqrt_fraction(a: Fraction) -> Fraction:
    import math

    num, den = a.numerator, a.denominator
    if num < 0:
        raise ValueError("parameter a must be a nonnegative square")
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ValueError(f"parameter a = {a} is not the square of a rational")
    return Fraction(rn, rd)


def _poch_param(ring, trunc: int, coef: Fraction, qexp: int, n: int) -> Series:
    """(coef * q^qexp; q)_n as a rational Laurent series in q."""
    return poch(ring, trunc, Fraction(coef), qexp, 1, n)


def _check_pole(coef: Fraction, qexp: int, what: str) -> None:
    if qexp == 0 and coef == 1:
        raise ValueError(f"pole: factor (1 - {what}) vanishes identically")


def andrews_sides(
    k: int,
    n_param: int,
    a: Fraction,
    bs: Sequence[Fraction],
    cs: Sequence[Fraction],
    trunc: int,
    corollary: bool = False,
) -> tuple[Series, Series]:
    """Both sides of the k-fold terminating transformation, as exact rational
    Laurent series in q (negative exponents from q^(-N) are tracked).

    ``corollary`` evaluates the index-permuted form (identical for k <= 2).
    """
    a = Fraction(a)
    bs = [Fraction(b) for b in bs]
    cs = [Fraction(c) for c in cs]
    if len(bs) != k or len(cs) != k:
        raise ValueError(f"need exactly {k} parameters b and c")
    s = _sqrt_fraction(a)
    N = n_param
    ring = FracRing()
    # factors like (q^{-N};q)_n reach exponent -N^2 and each multiplication
    # by a negative-offset series shrinks the trustworthy window, so build
    # everything with enough headroom and cut back down at the end
    want = trunc
    trunc = trunc + 2 * N * N + (k + 2) * N + 4

    upper = [(a, 0), (s, 1), (-s, 1)] + [(b, 0) for b in bs] + [(c, 0) for c in cs] + [(Fraction(1), -N)]
    lower = [(s, 0), (-s, 0)]
    for b, c in zip(bs, cs):
        if b == 0 or c == 0:
            raise ValueError("parameters b, c must be nonzero")
        lower += [(a / b, 1), (a / c, 1)]
    lower += [(a, N + 1)]
    for coef, qexp in lower:
        _check_pole(coef, qexp, f"{coef}*q^{qexp}")

    z_coef = a**k / Fraction(
        __import__("math").prod(b * c for b, c in zip(bs, cs))
    )
    z_exp = k + N

    lhs = Series(ring, trunc)
    for n in range(N + 1):
        term = Series.monomial(ring, trunc, z_coef**n, z_exp * n)
        for coef, qexp in upper:
            term = term * _poch_param(ring, trunc, coef, qexp, n)
        den = _poch_param(ring, trunc, Fraction(1), 1, n)  # (q;q)_n
        for coef, qexp in lower:
            den = den * _poch_param(ring, trunc, coef, qexp, n)
        lhs = lhs + term * den.inverse()

    # theorem indices, or the permuted form for the corollary
    if corollary:
        perm = list(range(k - 1, 0, -1)) + [k]  # 1..k-1 reversed, k fixed
        bs = [bs[p - 1] for p in perm]
        cs = [cs[p - 1] for p in perm]

    pre = (
        _poch_param(ring, trunc, a, 1, N)
        * _poch_param(ring, trunc, a / (bs[-1] * cs[-1]), 1, N)
        * (_poch_param(ring, trunc, a / bs[-1], 1, N) * _poch_param(ring, trunc, a / cs[-1], 1, N)).inverse()
    )

    total = Series(ring, trunc)

    def rec(ns: list[int]):
        nonlocal total
        if len(ns) == k - 1:
            Ns = [sum(ns[: i + 1]) for i in range(k - 1)]
            term = Series.one(ring, trunc)
            for i in range(1, k):  # 1-based
                n_i = ns[i - 1]
                term = term * _poch_param(ring, trunc, a / (bs[i - 1] * cs[i - 1]), 1, n_i)
                term = term * _poch_param(ring, trunc, Fraction(1), 1, n_i).inverse()
            for i in range(1, k):
                Ni = Ns[i - 1]
                term = term * _poch_param(ring, trunc, bs[i], 0, Ni) * _poch_param(ring, trunc, cs[i], 0, Ni)
                term = term * (
                    _poch_param(ring, trunc, a / bs[i - 1], 1, Ni)
                    * _poch_param(ring, trunc, a / cs[i - 1], 1, Ni)
                ).inverse()
            Nk1 = Ns[-1] if Ns else 0
            term = term * _poch_param(ring, trunc, Fraction(1), -N, Nk1)
            term = term * _poch_param(ring, trunc, bs[-1] * cs[-1] / a, -N, Nk1).inverse()
            scal = a ** sum(Ns[: k - 2]) if k >= 2 else Fraction(1)
            for i in range(1, k - 1):
                scal /= (bs[i] * cs[i]) ** Ns[i - 1]
            term = term.scaled(Fraction(scal)).shifted(sum(Ns[: k - 2]) + Nk1)
            total = total + term
            return
        for n in range(N - sum(ns) + 1):
            rec(ns + [n])

    rec([])
    rhs = pre * total
    return lhs.restricted(want), rhs.restricted(want)

"""Truncated formal power/Laurent series in q over pluggable exact rings.

No floating point anywhere: coefficients are Python ints, Fractions, sparse
integer Laurent polynomials in auxiliary variables (with optional fractional
exponent granularity, e.g. powers of z in steps of 1/k), or elements of the
cyclotomic integers Z[zeta_k].

A :class:`Series` tracks coefficients of q^e for offset <= e <= trunc.  The
offset may be negative (needed for terminating basic hypergeometric sums that
involve q^(-N)); all arithmetic is exact on the tracked window.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


# ---------------------------------------------------------------------------
# coefficient rings


class IntRing:
    """Plain integers."""

    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ValueError(f"{a} is not invertible in Z")

    def to_str(self, a) -> str:
        return str(a)


class FracRing(IntRing):
    """Rational numbers."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def inv(self, a):
        if a == 0:
            raise ValueError("division by zero in Q")
        return 1 / Fraction(a)

    def to_str(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def cyclotomic_poly(k: int) -> list[int]:
    """Coefficients (low degree first) of the k-th cyclotomic polynomial,
    computed by exact division of x^k - 1 by the proper-divisor factors."""
    num = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for d in range(1, k):
        if k % d:
            continue
        phi_d = cyclotomic_poly(d)
        # exact polynomial division num / phi_d
        out = [0] * (len(num) - len(phi_d) + 1)
        rem = list(num)
        for i in range(len(out) - 1, -1, -1):
            c = rem[i + len(phi_d) - 1]
            out[i] = c
            for j, p in enumerate(phi_d):
                rem[i + j] -= c * p
        if any(rem[len(out) - 1 + len(phi_d) - 1 :]) or any(rem[: len(phi_d) - 1][:0]):
            raise ArithmeticError("inexact cyclotomic division")
        num = out
    return num


class CyclotomicRing:
    """Z[zeta_k] as Z[x] modulo the k-th cyclotomic polynomial.

    Elements are integer tuples of length deg(Phi_k), low degree first.
    """

    def __init__(self, k: int):
        self.k = k
        self.modulus = cyclotomic_poly(k)
        self.degree = len(self.modulus) - 1
        self.name = f"Z[zeta_{k}]"

    def zero(self):
        return (0,) * self.degree

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        return (n,) + (0,) * (self.degree - 1)

    def zeta(self, power: int = 1):
        """zeta_k^power as a ring element."""
        coeffs = [0] * (self.k)
        coeffs[power % self.k] = 1
        return self._reduce(coeffs)

    def _reduce(self, coeffs: list[int]):
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, self.degree - 1, -1):
            c = coeffs[i]
            if c:
                for j, p in enumerate(self.modulus):
                    coeffs[i - self.degree + j] -= c * p
        coeffs = coeffs[: self.degree]
        coeffs += [0] * (self.degree - len(coeffs))
        return tuple(coeffs)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        out = [0] * (2 * self.degree)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self._reduce(out)

    def is_zero(self, a) -> bool:
        return not any(a)

    def inv(self, a):
        if a == self.one():
            return a
        if a == self.neg(self.one()):
            return a
        raise ValueError(f"inversion of general {self.name} elements is unsupported")

    def to_str(self, a) -> str:
        terms = []
        for j, c in enumerate(a):
            if not c:
                continue
            if j == 0:
                terms.append((c, "1"))
            elif j == 1:
                terms.append((c, f"zeta_{self.k}"))
            else:
                terms.append((c, f"zeta_{self.k}^{j}"))
        if not terms:
            return "0"
        out = ""
        for i, (c, mono) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if (mag == 1 and mono != "1") else (str(mag) if mono == "1" else f"{mag}*{mono}")
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += f" {sign} {body}"
        return out


class LaurentRing:
    """Sparse integer-coefficient Laurent polynomials in named variables.

    ``denoms[i]`` gives the exponent granularity of variable i: a stored
    exponent e means the variable is raised to the power e/denoms[i].
    ``base`` supplies the coefficient arithmetic (ints by default, or a
    cyclotomic ring after root-of-unity substitution).
    """

    def __init__(self, names: Sequence[str], denoms: Sequence[int] | None = None, base=None):
        self.names = tuple(names)
        self.denoms = tuple(denoms) if denoms is not None else (1,) * len(self.names)
        if len(self.denoms) != len(self.names):
            raise ValueError("one denominator per variable required")
        self.base = base if base is not None else IntRing()
        self.name = f"{self.base.name}[{','.join(self.names)}]"

    def zero(self):
        return {}

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        c = self.base.from_int(n)
        return {} if self.base.is_zero(c) else {(0,) * len(self.names): c}

    def monomial(self, coeff, exps: Sequence[int]):
        """coeff * prod(var_i ^ (exps[i]/denoms[i])); exps in stored units."""
        c = self.base.from_int(coeff) if isinstance(coeff, int) else coeff
        if self.base.is_zero(c):
            return {}
        return {tuple(exps): c}

    def gen(self, i: int = 0, power: int = 1):
        """var_i ^ power (power in whole units, stored scaled by denoms[i])."""
        exps = [0] * len(self.names)
        exps[i] = power * self.denoms[i]
        return {tuple(exps): self.base.one()}

    def add(self, a, b):
        out = dict(a)
        for e, c in b.items():
            s = self.base.add(out.get(e, self.base.zero()), c)
            if self.base.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return out

    def neg(self, a):
        return {e: self.base.neg(c) for e, c in a.items()}

    def mul(self, a, b):
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = self.base.add(out.get(e, self.base.zero()), self.base.mul(c1, c2))
                if self.base.is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return out

    def is_zero(self, a) -> bool:
        return not a

    def inv(self, a):
        if len(a) != 1:
            raise ValueError("only monomials are invertible in a Laurent ring")
        (e, c), = a.items()
        return {tuple(-x for x in e): self.base.inv(c)}

    def coeff(self, a, exps: Sequence[int]):
        """Base coefficient at the stored exponent vector."""
        return a.get(tuple(exps), self.base.zero())

    def _mono_str(self, exps) -> str:
        factors = []
        for name, e, d in zip(self.names, exps, self.denoms):
            if e == 0:
                continue
            if e % d == 0:
                factors.append(name if e == d else f"{name}^{e // d}")
            else:
                g = __import__("math").gcd(abs(e), d)
                factors.append(f"{name}^{{{e // g}/{d // g}}}")
        return "*".join(factors)

    def to_str(self, a) -> str:
        if not a:
            return "0"
        out = ""
        for exps in sorted(a):
            c = a[exps]
            mono = self._mono_str(exps)
            cs = self.base.to_str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if " " in cs or "+" in cs:  # composite base element: parenthesize
                cs, neg = "(" + self.base.to_str(c) + ")", False
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += f" {'-' if neg else '+'} {body}"
        return out


# ---------------------------------------------------------------------------
# truncated series


class Series:
    """Coefficients of q^e for offset <= e <= trunc over a coefficient ring."""

    __slots__ = ("ring", "trunc", "offset", "coeffs")

    def __init__(self, ring, trunc: int, coeffs=None, offset: int = 0):
        self.ring = ring
        self.trunc = trunc
        self.offset = offset
        if coeffs is None:
            coeffs = []
        self.coeffs = list(coeffs)
        if offset + len(self.coeffs) - 1 > trunc:
            del self.coeffs[trunc - offset + 1 :]
        self._normalize()

    def _normalize(self):
        while self.coeffs and self.ring.is_zero(self.coeffs[0]):
            self.coeffs.pop(0)
            self.offset += 1
        while self.coeffs and self.ring.is_zero(self.coeffs[-1]):
            self.coeffs.pop()
        if not self.coeffs:
            self.offset = 0

    @classmethod
    def const(cls, ring, trunc: int, c) -> "Series":
        return cls(ring, trunc, [c], 0)

    @classmethod
    def one(cls, ring, trunc: int) -> "Series":
        return cls.const(ring, trunc, ring.one())

    @classmethod
    def monomial(cls, ring, trunc: int, c, exp: int) -> "Series":
        return cls(ring, trunc, [c], exp)

    def coeff(self, e: int):
        i = e - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Series") -> "Series":
        trunc = min(self.trunc, other.trunc)
        if self.is_zero():
            return Series(other.ring, trunc, other.coeffs, other.offset)
        if other.is_zero():
            return Series(self.ring, trunc, self.coeffs, self.offset)
        off = min(self.offset, other.offset)
        hi = min(trunc, max(self.offset + len(self.coeffs), other.offset + len(other.coeffs)) - 1)
        coeffs = [
            self.ring.add(self.coeff(e), other.coeff(e)) for e in range(off, hi + 1)
        ]
        return Series(self.ring, trunc, coeffs, off)

    def __neg__(self) -> "Series":
        return Series(self.ring, self.trunc, [self.ring.neg(c) for c in self.coeffs], self.offset)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        # the product coefficient at e needs self up to e - other.offset and
        # vice versa, so a factor with negative offset shrinks the window
        trunc = min(
            self.trunc,
            other.trunc,
            self.trunc + other.offset,
            other.trunc + self.offset,
        )
        if self.is_zero() or other.is_zero():
            return Series(self.ring, trunc)
        off = self.offset + other.offset
        size = min(trunc - off, len(self.coeffs) + len(other.coeffs) - 2) + 1
        if size <= 0:
            return Series(self.ring, trunc)
        out = [self.ring.zero()] * size
        for i, a in enumerate(self.coeffs):
            if self.ring.is_zero(a):
                continue
            jmax = min(len(other.coeffs), size - i)
            for j in range(jmax):
                b = other.coeffs[j]
                if not self.ring.is_zero(b):
                    out[i + j] = self.ring.add(out[i + j], self.ring.mul(a, b))
        return Series(self.ring, trunc, out, off)

    def restricted(self, trunc: int) -> "Series":
        """The same series with the knowledge window cut down to ``trunc``."""
        if trunc >= self.trunc:
            return self
        keep = max(0, trunc - self.offset + 1)
        return Series(self.ring, trunc, list(self.coeffs[:keep]), self.offset)

    def scaled(self, c) -> "Series":
        return Series(self.ring, self.trunc, [self.ring.mul(c, x) for x in self.coeffs], self.offset)

    def shifted(self, e: int) -> "Series":
        return Series(self.ring, self.trunc, self.coeffs, self.offset + e)

    def inverse(self) -> "Series":
        """Multiplicative inverse; the lowest tracked coefficient must be a
        unit of the coefficient ring."""
        if self.is_zero():
            raise ValueError("cannot invert the zero series")
        c0 = self.coeffs[0]
        c0_inv = self.ring.inv(c0)
        m = self.offset
        # coefficients of self are known on [m, trunc], so the inverse is
        # determined on [-m, trunc - 2m]; shrink the window when m > 0
        out_trunc = self.trunc - 2 * m if m > 0 else self.trunc
        size = out_trunc - (-m) + 1
        if size <= 0:
            raise ValueError("truncation window too small to invert")
        out = [self.ring.zero()] * size
        out[0] = c0_inv
        for i in range(1, len(out)):
            acc = self.ring.zero()
            for j in range(1, min(i, len(self.coeffs) - 1) + 1):
                acc = self.ring.add(acc, self.ring.mul(self.coeffs[j], out[i - j]))
            out[i] = self.ring.neg(self.ring.mul(c0_inv, acc))
        return Series(self.ring, out_trunc, out, -m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        lo = min(self.offset, other.offset)
        hi = min(self.trunc, other.trunc)
        for e in range(lo, hi + 1):
            a, b = self.coeff(e), other.coeff(e)
            if not self.ring.is_zero(self.ring.add(a, self.ring.neg(b))):
                return False
        return True

    def __hash__(self):
        raise TypeError("Series is unhashable")

    def dump(self, lo: int | None = None) -> str:
        """'q^n : coeff' lines for each tracked exponent."""
        if lo is None:
            lo = min(self.offset, 0)
        lines = []
        for e in range(lo, self.trunc + 1):
            lines.append(f"q^{e} : {self.ring.to_str(self.coeff(e))}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Series({self.ring.name}, trunc={self.trunc}, offset={self.offset})"


def poch(ring, trunc: int, c, e0: int, step: int, n: int | None = None) -> Series:
    """Truncated Pochhammer-style product prod_i (1 - c * q^(e0 + step*i)).

    ``c`` is a coefficient-ring element.  With ``n`` given the product has
    exactly n factors (exponents may be negative); with ``n=None`` it runs
    over all i >= 0, which requires step >= 1 so that only finitely many
    factors differ from 1 below the truncation order.
    """
    if n is None and step < 1:
        raise ValueError("infinite products need a positive exponent step")
    out = Series.one(ring, trunc)
    i = 0
    while True:
        if n is not None and i >= n:
            break
        e = e0 + step * i
        if n is None and e > trunc:
            break
        factor = Series.const(ring, trunc, ring.one()) + Series.monomial(ring, trunc, ring.neg(c), e)
        out = out * factor
        i += 1
    return out

"""Exact truncated power series in one and two grading variables.

A `RationalSeries` is a truncated power series sum(c_i x^i, i <= K) with
exact rational coefficients.  The truncation order K is explicit and
arithmetic never extends it silently: combining series of different
truncations truncates to the smaller K.  No floating point anywhere.

The coefficient helpers at the bottom (`seq_mul`, `seq_exp`, `seq_log`)
are duck-typed over the coefficient ring: they are reused with
polynomial-valued coefficients for formal resummation identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .laurent import Laurent1

_ZERO = Fraction(0)


def seq_mul(a: list, b: list, K: int, zero=_ZERO) -> list:
    out = [zero for _ in range(K + 1)]
    for i, ca in enumerate(a[: K + 1]):
        if ca == zero:
            continue
        for j, cb in enumerate(b[: K + 1 - i]):
            if cb == zero:
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def seq_exp(a: list, K: int, zero=_ZERO, one=Fraction(1)) -> list:
    """exp of a series with vanishing constant term."""
    if a and a[0] != zero:
        raise ValueError("exp requires a vanishing constant term")
    out = [zero for _ in range(K + 1)]
    out[0] = one
    term = [zero for _ in range(K + 1)]
    term[0] = one
    for k in range(1, K + 1):
        term = seq_mul(term, a, K, zero=zero)
        inv = Fraction(1, factorial(k))
        for i in range(K + 1):
            if term[i] != zero:
                out[i] = out[i] + term[i] * inv
    return out


def seq_log(a: list, K: int, zero=_ZERO, one=Fraction(1)) -> list:
    """log of a series with constant term one."""
    if not a or a[0] != one:
        raise ValueError("log requires constant term one")
    u = [zero if i == 0 else (a[i] if i < len(a) else zero) for i in range(K + 1)]
    out = [zero for _ in range(K + 1)]
    term = [zero for _ in range(K + 1)]
    term[0] = one
    for k in range(1, K + 1):
        term = seq_mul(term, u, K, zero=zero)
        coeff = Fraction((-1) ** (k + 1), k)
        for i in range(K + 1):
            if term[i] != zero:
                out[i] = out[i] + term[i] * coeff
    return out


@dataclass(frozen=True)
class RationalSeries:
    """Truncated power series in x over exact rationals."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[: order + 1] + [_ZERO] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([_ZERO], order=order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls([Fraction(1)], order=order)

    @classmethod
    def x(cls, order: int) -> "RationalSeries":
        return cls([_ZERO, Fraction(1)], order=order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if i < len(self.coeffs) else _ZERO

    def _common_order(self, other: "RationalSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalSeries([other], order=self.order)
        K = self._common_order(other)
        return RationalSeries([self[i] + other[i] for i in range(K + 1)])

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalSeries([other], order=self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalSeries([c * other for c in self.coeffs])
        K = self._common_order(other)
        return RationalSeries(seq_mul(list(self.coeffs), list(other.coeffs), K))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalSeries":
        out = RationalSeries.one(self.order)
        for _ in range(n):
            out = out * self
        return out

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self.coeffs, order=order)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def exp_series(s: RationalSeries) -> RationalSeries:
    """Exponential of a series with zero constant term, exact to order K."""
    if s[0] != 0:
        raise ValueError("exp_series requires zero constant term")
    return RationalSeries(seq_exp(list(s.coeffs), s.order))


def log_series(s: RationalSeries) -> RationalSeries:
    """Logarithm of a series with constant term 1, exact to order K."""
    if s[0] != 1:
        raise ValueError("log_series requires constant term 1")
    return RationalSeries(seq_log(list(s.coeffs), s.order))


def substitute_exponential(p: Laurent1, order: int,
                           scale: Fraction = Fraction(1)) -> RationalSeries:
    """Replace the variable of a Laurent polynomial by exp(scale*x).

    Each term q*t^m contributes q*exp(m*scale*x); the result is the exact
    truncated series of the substituted polynomial.
    """
    coeffs = [_ZERO] * (order + 1)
    for m, q in p.coeffs.items():
        rate = m * scale
        power = Fraction(1)
        for k in range(order + 1):
            coeffs[k] += q * power
            power = power * rate / (k + 1)
    return RationalSeries(coeffs)


@dataclass(frozen=True)
class BivariateSeries:
    """Truncated power series in two variables x, x' (total degree <= K)."""

    order: int
    coeffs: tuple  # sorted tuple of ((i, j), Fraction)

    def __init__(self, coeffs, order: int):
        cleaned = {}
        for (i, j), c in dict(coeffs).items():
            c = Fraction(c)
            if c != 0 and i + j <= order:
                cleaned[(i, j)] = c
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(sorted(cleaned.items())))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.coeffs)

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        return cls({(0, 0): Fraction(1)}, order)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.as_dict().get(key, _ZERO)

    def __add__(self, other):
        K = min(self.order, other.order)
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, _ZERO) + c
        return BivariateSeries(out, K)

    def __neg__(self):
        return BivariateSeries({e: -c for e, c in self.coeffs}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariateSeries({e: c * other for e, c in self.coeffs},
                                   self.order)
        K = min(self.order, other.order)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs:
            for (i2, j2), c2 in other.coeffs:
                i, j = i1 + i2, j1 + j2
                if i + j <= K:
                    out[(i, j)] = out.get((i, j), _ZERO) + c1 * c2
        return BivariateSeries(out, K)

    __rmul__ = __mul__

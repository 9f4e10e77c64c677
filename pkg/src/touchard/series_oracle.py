"""Truncated power series over exact rationals, used as an EGF oracle."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .exact_core import StirlingKind, rstirling

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "TransformMismatch",
    "egf_rbell",
    "egf_rstirling",
    "stirling_transform",
    "derangement_shifted_egf",
]

DEFAULT_ORDER = 32


class TransformMismatch(ArithmeticError):
    """The two routes of a Stirling transform disagree."""

    def __init__(self, index: int, direct: int, via_series):
        super().__init__(f"Stirling transform mismatch at n={index}: sum={direct}, series={via_series}")
        self.index = index
        self.direct = direct
        self.via_series = via_series


class PowerSeries:
    """Power series truncated to ``order`` coefficients (t^0 .. t^(order-1)).

    Immutable; every operation returns a new series at the smaller of the two
    operand orders.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order <= 0:
                raise ValueError("truncation order must be positive")
            cs = (cs + [Fraction(0)] * order)[:order]
        if not cs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER, scale=1) -> "PowerSeries":
        return cls([0, scale], order)

    @classmethod
    def exponential(cls, order: int = DEFAULT_ORDER, rate=1) -> "PowerSeries":
        """exp(rate * t)."""
        rate = Fraction(rate)
        return cls([rate**n / factorial(n) for n in range(order)], order)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order > 6 else ""
        return f"PowerSeries([{shown}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def egf_coefficient(self, n: int) -> Fraction:
        """n! times the coefficient of t^n."""
        return self.coeffs[n] * factorial(n)

    def egf_values(self) -> list:
        return [self.egf_coefficient(n) for n in range(self.order)]

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries([c * a for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.reciprocal() ** (-k)
        result = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "PowerSeries":
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        n = self.order
        out = [Fraction(0)] * n
        out[0] = 1 / a[0]
        for i in range(1, n):
            s = sum(a[j] * out[i - j] for j in range(1, i + 1))
            out[i] = -s / a[0]
        return PowerSeries(out)

    def __truediv__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self * (1 / Fraction(other))
        return self * other.reciprocal()

    def derivative(self) -> "PowerSeries":
        """Term-wise derivative; the result loses one order of precision."""
        if self.order == 1:
            raise ValueError("cannot differentiate an order-1 series")
        return PowerSeries([i * self.coeffs[i] for i in range(1, self.order)])

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(t)); ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = PowerSeries(inner.coeffs[:n])
        # Horner: a0 + g (a1 + g (a2 + ...))
        acc = PowerSeries.constant(self.coeffs[n - 1], n)
        for c in reversed(self.coeffs[: n - 1]):
            acc = acc * inner + c
        return acc

    def exp(self) -> "PowerSeries":
        """exp(self) for a series with zero constant term, via f' = f g'."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a zero constant term to stay rational")
        n = self.order
        dg = [i * self.coeffs[i] for i in range(n)]
        out = [Fraction(0)] * n
        out[0] = Fraction(1)
        for i in range(1, n):
            out[i] = sum(dg[j] * out[i - j] for j in range(1, i + 1)) / i
        return PowerSeries(out)

    def log(self) -> "PowerSeries":
        """log(self) for a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        n = self.order
        quotient = PowerSeries([i * self.coeffs[i] for i in range(n)]) / self
        return PowerSeries([Fraction(0)] + [quotient.coeffs[i] / i for i in range(1, n)])


def _exp_minus_one(order: int) -> PowerSeries:
    return PowerSeries.exponential(order) - 1


def egf_rbell(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """exp(e^t - 1 + r t)."""
    return (_exp_minus_one(order) + PowerSeries.variable(order, r)).exp()


def egf_rstirling(kind: StirlingKind, k: int, r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """EGF of column k of the r-Stirling triangle of the given kind."""
    if k < 0 or r < 0:
        raise ValueError("egf_rstirling needs k >= 0 and r >= 0")
    if kind is StirlingKind.SECOND:
        base = PowerSeries.exponential(order, r) * _exp_minus_one(order) ** k
    else:
        one_minus = PowerSeries([1, -1], order)
        log_term = -(one_minus.log())  # ln(1/(1-t))
        base = one_minus.reciprocal() ** r * log_term**k
    return base / factorial(k)


def stirling_transform(a: Sequence[int], r: int = 0) -> list:
    """b_n = sum_{k=0}^n {n k}_r a_k, computed directly and through e^{rt} A(e^t - 1).

    With a_0 = 0 this is the k >= 1 form of the transform. Raises
    TransformMismatch at the first index where the two routes disagree.
    """
    n_terms = len(a)
    if n_terms == 0:
        return []
    direct = [sum(rstirling(StirlingKind.SECOND, n, k, r) * a[k] for k in range(n + 1)) for n in range(n_terms)]
    egf_a = PowerSeries([Fraction(a[k], factorial(k)) for k in range(n_terms)])
    via = PowerSeries.exponential(n_terms, r) * egf_a.compose(_exp_minus_one(n_terms))
    for n in range(n_terms):
        if via.egf_coefficient(n) != direct[n]:
            raise TransformMismatch(n, direct[n], via.egf_coefficient(n))
    return direct


def derangement_shifted_egf(s: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """s-th derivative of e^t/(1+t); n! [t^n] equals (-1)^(n+s) D_(n+s)."""
    if s < 0:
        raise ValueError("derivative order must be >= 0")
    work = order + s
    f = PowerSeries.exponential(work) / PowerSeries([1, 1], work)
    for _ in range(s):
        f = f.derivative()
    return f

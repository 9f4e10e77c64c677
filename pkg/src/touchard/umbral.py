"""Integer polynomials with the Bell umbra evaluation x^j -> B_j."""

from __future__ import annotations

import enum
from typing import Iterable

from .exact_core import StirlingKind, bell, derangement, rbell, rstirling

__all__ = [
    "UmbralPoly",
    "ExpansionKind",
    "falling_factorial",
    "rising_factorial",
    "umbral_eval",
    "check_umbral_lemma",
    "check_umbral_shift",
    "check_stirling_expansion",
    "orthogonality_sums",
    "check_orthogonality",
]


class ExpansionKind(enum.Enum):
    FALLING = "falling"
    RISING = "rising"


class UmbralPoly:
    """Polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UmbralPoly is immutable")

    @classmethod
    def x(cls) -> "UmbralPoly":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: int) -> "UmbralPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        return f"UmbralPoly({list(self.coeffs)})"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UmbralPoly.constant(other)
        if not isinstance(other, UmbralPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "UmbralPoly":
        return other if isinstance(other, UmbralPoly) else UmbralPoly.constant(other)

    def __add__(self, other) -> "UmbralPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UmbralPoly((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "UmbralPoly":
        return UmbralPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UmbralPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UmbralPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UmbralPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UmbralPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return UmbralPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UmbralPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = UmbralPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc


def falling_factorial(k: int, shift: int = 0) -> UmbralPoly:
    """(x+shift)(x+shift-1)...(x+shift-k+1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    p = UmbralPoly.constant(1)
    x = UmbralPoly.x()
    for j in range(k):
        p = p * (x + (shift - j))
    return p


def rising_factorial(k: int, shift: int = 0) -> UmbralPoly:
    """(x+shift)(x+shift+1)...(x+shift+k-1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    p = UmbralPoly.constant(1)
    x = UmbralPoly.x()
    for j in range(k):
        p = p * (x + (shift + j))
    return p


def umbral_eval(p: UmbralPoly) -> int:
    """Replace x^j by the Bell number B_j."""
    return sum(c * bell(j) for j, c in enumerate(p.coeffs))


def check_umbral_lemma(k: int) -> bool:
    """(B-1)(B-2)...(B-k) evaluates to (-1)^k D_k."""
    return umbral_eval(falling_factorial(k, -1)) == (-1) ** k * derangement(k)


def check_umbral_shift(n: int, m: int) -> bool:
    """(B+m)^n evaluates to B_{n,m}, for m of either sign."""
    return umbral_eval((UmbralPoly.x() + m) ** n) == rbell(n, m)


def check_stirling_expansion(kind: ExpansionKind, n: int, r: int) -> bool:
    """(x+r)^n against the falling-factorial basis, or (x+r)^{rising n} against powers of x."""
    x = UmbralPoly.x()
    if kind is ExpansionKind.FALLING:
        lhs = (x + r) ** n
        rhs = sum((rstirling(StirlingKind.SECOND, n, k, r) * falling_factorial(k) for k in range(n + 1)), UmbralPoly())
    else:
        lhs = rising_factorial(n, r)
        rhs = UmbralPoly(rstirling(StirlingKind.FIRST, n, k, r) for k in range(n + 1))
    return lhs == rhs


def orthogonality_sums(n: int, m: int, r: int) -> tuple:
    """The two alternating first-by-second and second-by-first kind convolutions.

    Both factors carry the same r; with r-free inner factors the relation fails
    as soon as r >= 1 (e.g. n=1, m=0, r=1).
    """
    first, second = StirlingKind.FIRST, StirlingKind.SECOND
    a = sum(rstirling(first, n, k, r) * rstirling(second, k, m, r) * (-1) ** k for k in range(m, n + 1))
    b = sum(rstirling(second, n, k, r) * rstirling(first, k, m, r) * (-1) ** k for k in range(m, n + 1))
    return a, b


def check_orthogonality(n: int, m: int, r: int) -> bool:
    if m > n:
        raise ValueError("orthogonality check needs m <= n")
    expected = (-1) ** n if m == n else 0
    a, b = orthogonality_sums(n, m, r)
    return a == b == expected

"""Residues modulo a prime: Touchard-recurrence sequences and Berlekamp-Massey."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np

from .exact_core import rbell

__all__ = [
    "MAX_PRIME",
    "PrimeModulus",
    "is_prime",
    "mod_inverse",
    "ResidueSeq",
    "residue_seq",
    "rbell_residues",
    "LinearRecurrence",
    "minimal_recurrence",
]

MAX_PRIME = 10**6


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for n <= 10^12."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise TypeError(f"modulus must be an int, got {type(self.p).__name__}")
        if not 2 <= self.p <= MAX_PRIME:
            raise ValueError(f"modulus {self.p} outside [2, {MAX_PRIME}]")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __int__(self) -> int:
        return self.p


def _as_prime(p) -> int:
    if isinstance(p, PrimeModulus):
        return p.p
    return PrimeModulus(p).p


def mod_inverse(a: int, p) -> int:
    p = _as_prime(p)
    if a % p == 0:
        raise ZeroDivisionError(f"{a} is not invertible modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class ResidueSeq:
    """B_{n,r} mod p for n < len(values)."""

    p: int
    r: int
    values: tuple

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def residue_seq(p, r: int, horizon: int) -> ResidueSeq:
    """B_{n,r} mod p for n < horizon.

    The first p terms come from exact r-Bell numbers; the rest follow
    s[n+p] = s[n+1] + s[n] (mod p).
    """
    return ResidueSeq(_as_prime(p), r, _residue_values(_as_prime(p), r, horizon))


@lru_cache(maxsize=64)
def _residue_values(p: int, r: int, horizon: int) -> tuple:
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    seed = [rbell(n, r) % p for n in range(min(p, horizon))]
    if horizon <= p:
        return tuple(seed)
    values = seed + [0] * (horizon - p)
    for n in range(horizon - p):
        values[n + p] = (values[n + 1] + values[n]) % p
    return tuple(values)


@lru_cache(maxsize=256)
def _rbell_residue_table(p: int, r: int, count: int) -> tuple:
    values = np.zeros(count, dtype=np.int64)
    values[0] = 1
    row = np.ones(1, dtype=np.int64)  # binomial row C(n, .) mod p
    shift = r % p
    for n in range(count - 1):
        # B_{n+1,r} = sum_k C(n,k) B_{k,r} + r B_{n,r}
        values[n + 1] = (int(np.dot(row, values[: n + 1]) % p) + shift * int(values[n])) % p
        nxt = np.empty(n + 2, dtype=np.int64)
        nxt[0] = 1
        nxt[-1] = 1
        np.add(row[:-1], row[1:], out=nxt[1:-1])
        row = nxt % p
    return tuple(int(v) for v in values)


def rbell_residues(p, r: int, count: int) -> tuple:
    """B_{n,r} mod p for n < count via the EGF-derivative recurrence reduced mod p.

    Shares nothing with the Touchard recurrence, so congruence checks built on it
    are not circular.
    """
    p = _as_prime(p)
    if count <= 0:
        raise ValueError("count must be positive")
    # serve shorter requests from a cached longer table
    size = 1 << max(6, (count - 1).bit_length())
    return _rbell_residue_table(p, r, size)[:count]


@dataclass(frozen=True)
class LinearRecurrence:
    """s[n+L] = sum_i coeffs[i] * s[n+i] over GF(p), L = len(coeffs)."""

    p: int
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def characteristic(self) -> tuple:
        """Monic characteristic polynomial x^L - sum_i coeffs[i] x^i, lowest degree first, reduced mod p."""
        return tuple((-c) % self.p for c in self.coeffs) + (1,)

    def satisfied_by(self, seq) -> bool:
        L = self.order
        return all(
            seq[n + L] % self.p == sum(c * seq[n + i] for i, c in enumerate(self.coeffs)) % self.p
            for n in range(len(seq) - L)
        )


def minimal_recurrence(seq, max_order: int, p=None) -> LinearRecurrence:
    """Shortest linear recurrence over GF(p) generating ``seq`` (Berlekamp-Massey).

    ``seq`` may be a ResidueSeq or a plain sequence together with ``p``.
    Raises ValueError when the prefix is shorter than 2*max_order or the
    recurrence found is longer than max_order, since neither certifies the order.
    """
    if isinstance(seq, ResidueSeq):
        p = seq.p
        values = list(seq.values)
    else:
        if p is None:
            raise ValueError("p is required for a plain sequence")
        p = _as_prime(p)
        values = [v % p for v in seq]
    if max_order <= 0:
        raise ValueError("max_order must be positive")
    if len(values) < 2 * max_order:
        raise ValueError(f"need at least {2 * max_order} terms to certify order <= {max_order}, got {len(values)}")

    # connection polynomial C(x) = 1 + c1 x + ... ; s[n] + sum c_i s[n-i] = 0
    conn = [1]
    prev = [1]
    length = 0
    gap = 1
    last_disc = 1
    for n, s in enumerate(values):
        disc = s
        for i in range(1, length + 1):
            disc = (disc + conn[i] * values[n - i]) % p
        if disc == 0:
            gap += 1
            continue
        factor = disc * pow(last_disc, -1, p) % p
        new = conn + [0] * max(0, len(prev) + gap - len(conn))
        for i, c in enumerate(prev):
            new[i + gap] = (new[i + gap] - factor * c) % p
        if 2 * length <= n:
            prev, length, last_disc, gap = conn, n + 1 - length, disc, 1
        else:
            gap += 1
        conn = new
    if length > max_order:
        raise ValueError(f"shortest recurrence has order {length} > max_order {max_order}")
    conn = (conn + [0] * (length + 1))[: length + 1]
    # s[n+L] = -sum_{i=1}^{L} c_i s[n+L-i]
    coeffs = tuple((-conn[length - i]) % p for i in range(length))
    return LinearRecurrence(p, coeffs)

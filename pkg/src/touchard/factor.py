"""Integer factorisation by trial division and Pollard's rho (Brent variant)."""

from __future__ import annotations

import random
from math import gcd

__all__ = ["is_probable_prime", "factorize", "divisors", "TRIAL_LIMIT"]

TRIAL_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with these bases."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, seed: int = 0) -> dict:
    """Prime factorisation {prime: exponent}; the product is checked before returning."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    factors: dict = {}
    rest = n
    d = 2
    while d * d <= rest and d <= TRIAL_LIMIT:
        while rest % d == 0:
            factors[d] = factors.get(d, 0) + 1
            rest //= d
        d += 1 if d == 2 else 2
    rng = random.Random(seed)
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _brent(m, rng)
        stack.extend((g, m // g))
    check = 1
    for q, e in factors.items():
        check *= q**e
    if check != n:
        raise ArithmeticError(f"factorisation of {n} does not multiply back")
    return dict(sorted(factors.items()))


def divisors(n: int, factors: dict | None = None) -> list:
    """All positive divisors of n in increasing order."""
    factors = factorize(n) if factors is None else factors
    divs = [1]
    for q, e in factors.items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)

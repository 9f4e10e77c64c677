"""Periods of B_{n,r} modulo a prime p.

A period P means s[n+P] == s[n] for every n >= 0 inside the horizon; the
sequences are purely periodic because the recurrence s[n+p] = s[n+1] + s[n]
is invertible.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from math import comb

from .exact_core import rbell
from .factor import divisors, factorize
from .modular import PrimeModulus, residue_seq

__all__ = [
    "DEFAULT_BUDGET",
    "PeriodAnalysis",
    "DigitSumReport",
    "compute_np",
    "lower_bound",
    "is_period",
    "divisor_form_ok",
    "minimal_period",
    "shift_offset",
    "verify_shift_corollary",
    "digit_sum_falsifier",
    "low_digit_sum_candidates",
    "hall_recovery_links",
    "hall_recovery_check",
]

DEFAULT_BUDGET = 2_000_000
EXHAUSTIVE_PRIMES = (2, 3, 5)


def _prime(p) -> int:
    return p.p if isinstance(p, PrimeModulus) else PrimeModulus(p).p


def compute_np(p) -> int:
    """(p^p - 1)/(p - 1) = 1 + p + ... + p^(p-1)."""
    p = _prime(p)
    return (p**p - 1) // (p - 1)


def lower_bound(p) -> int:
    """C(2p, p)/2 + p, the conjectured lower bound for the minimal period."""
    p = _prime(p)
    return comb(2 * p, p) // 2 + p


def is_period(p, r: int, period: int, horizon: int) -> bool:
    """True iff B_{n+P,r} == B_{n,r} (mod p) for all 0 <= n < horizon - P."""
    p = _prime(p)
    if period <= 0:
        raise ValueError("period must be positive")
    if horizon < period + 2 * p:
        raise ValueError(f"horizon {horizon} < P + 2p = {period + 2 * p}")
    values = residue_seq(p, r, horizon).values
    return values[period:] == values[: horizon - period]


def divisor_form_ok(p, divs) -> bool:
    """Every divisor d > 1 satisfies d == 1 (mod 2p)."""
    p = _prime(p)
    return all(d % (2 * p) == 1 for d in divs if d > 1)


@dataclass
class PeriodAnalysis:
    p: int
    n_p: int
    factorization: dict
    divisors: list
    minimal_period: int | None
    divisor_form_ok: bool
    lower_bound: int
    exceeds_lower_bound: bool | None
    horizon: int | None
    r: int = 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["n_p"] = str(self.n_p)
        out["factorization"] = {str(q): e for q, e in self.factorization.items()}
        out["divisors"] = [str(d) for d in self.divisors]
        out["minimal_period"] = "UNKNOWN" if self.minimal_period is None else str(self.minimal_period)
        out["lower_bound"] = str(self.lower_bound)
        return out


def minimal_period(p, budget: int = DEFAULT_BUDGET, r: int = 0) -> PeriodAnalysis:
    """Least divisor of N_p that is a period of B_{n,r} mod p.

    Divisors are confirmed over a horizon of 2*N_p + 50 terms. When that exceeds
    ``budget`` the minimal period is left unknown.
    """
    p = _prime(p)
    n_p = compute_np(p)
    factors = factorize(n_p)
    divs = divisors(n_p, factors)
    horizon = 2 * n_p + 50
    found = None
    if horizon <= budget:
        for d in divs:
            if is_period(p, r, d, horizon):
                found = d
                break
        if found is None:
            raise ArithmeticError(f"N_{p} = {n_p} is not a period of B_(n,{r}) mod {p}")
    else:
        horizon = None
    bound = lower_bound(p)
    return PeriodAnalysis(
        p=p,
        n_p=n_p,
        factorization=factors,
        divisors=divs,
        minimal_period=found,
        divisor_form_ok=divisor_form_ok(p, divs),
        lower_bound=bound,
        exceeds_lower_bound=None if found is None else found > bound,
        horizon=horizon,
        r=r,
    )


def shift_offset(p, r: int) -> int:
    """K = p + p^2 + ... + p^((-r) mod p)."""
    p = _prime(p)
    return sum(p**k for k in range(1, (-r) % p + 1))


def verify_shift_corollary(p, r: int, horizon: int) -> bool:
    """B_{n,r} == B_{n-K} (mod p) for K <= n < horizon."""
    p = _prime(p)
    K = shift_offset(p, r)
    if horizon <= K:
        raise ValueError(f"horizon {horizon} must exceed K = {K}")
    shifted = residue_seq(p, r, horizon).values
    base = residue_seq(p, 0, horizon).values
    return shifted[K:] == base[: horizon - K]


def _digit_sum(value: int, p: int) -> int:
    total = 0
    while value:
        value, d = divmod(value, p)
        total += d
    return total


def low_digit_sum_candidates(p) -> list:
    """All 0 < P < p^(p-1) whose base-p digit sum is at most p."""
    p = _prime(p)
    out = []

    def rec(pos: int, budget: int, value: int):
        if pos == p - 1:
            if value:
                out.append(value)
            return
        for d in range(min(p - 1, budget) + 1):
            rec(pos + 1, budget - d, value + d * p**pos)

    rec(0, p, 0)
    return sorted(out)


@dataclass
class DigitSumReport:
    p: int
    mode: str
    candidates_examined: int
    periods_found: list = field(default_factory=list)
    horizon: int = 0
    seed: int | None = None

    @property
    def status(self) -> str:
        return "PASS" if not self.periods_found else "FAIL"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "mode": self.mode,
            "digit_sum_at_most": self.p,
            "candidates_examined": self.candidates_examined,
            "periods_found": [str(v) for v in self.periods_found],
            "horizon": self.horizon,
            "seed": self.seed,
            "status": self.status,
        }


def digit_sum_falsifier(
    p, mode: str = "exhaustive", samples: int = 200, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> DigitSumReport:
    """Check that no P < p^(p-1) with base-p digit sum <= p is a period of B_n mod p.

    ``exhaustive`` covers every such candidate and accepts p in {2, 3, 5}.
    ``sampled`` draws ``samples`` candidates (with a seeded RNG) among those
    small enough to fit half the budget.
    """
    p = _prime(p)
    candidates = low_digit_sum_candidates(p)
    if mode == "exhaustive":
        if p not in EXHAUSTIVE_PRIMES:
            raise ValueError(f"exhaustive mode supports p in {EXHAUSTIVE_PRIMES}; use mode='sampled'")
        chosen = candidates
        used_seed = None
    elif mode == "sampled":
        fitting = [c for c in candidates if c <= budget // 2]
        if not fitting:
            raise ValueError("no candidate fits the budget")
        rng = random.Random(seed)
        chosen = sorted(rng.sample(fitting, min(samples, len(fitting))))
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}")
    # long enough to cover a full true period beyond the largest candidate
    slack = min(2 * compute_np(p) + 50, budget - max(chosen))
    horizon = max(chosen) + max(slack, 2 * p)
    found = [P for P in chosen if is_period(p, 0, P, horizon)]
    return DigitSumReport(p, mode, len(chosen), found, horizon, used_seed)


def hall_recovery_links(p, horizon: int) -> dict:
    """Each link of B_{n-N_p} = B_{n-1-S} == B_{n-1,1-p} == B_{n-1,1} = B_n, S = p + ... + p^(p-1).

    Links are checked on mod-p residue sequences for every admissible index below
    ``horizon``; the last equality is also checked exactly for small indices.
    """
    p = _prime(p)
    n_p = compute_np(p)
    if horizon <= n_p:
        raise ValueError(f"horizon {horizon} must exceed N_p = {n_p}")
    S = sum(p**k for k in range(1, p))
    bell_mod = residue_seq(p, 0, horizon).values
    neg = residue_seq(p, 1 - p, horizon).values
    one = residue_seq(p, 1, horizon).values
    # j = n - 1 runs over S <= j <= horizon - 2
    return {
        "index_identity": n_p == 1 + S,
        "prop_sum": all(bell_mod[j - S] == neg[j] for j in range(S, horizon - 1)),
        "r_period_shift": neg == one,
        "bell_shift": one[: horizon - 1] == bell_mod[1:]
        and all(rbell(j, 1) == rbell(j + 1, 0) for j in range(min(horizon - 1, 60))),
        "chain": bell_mod[: horizon - n_p] == bell_mod[n_p:],
    }


def hall_recovery_check(p, horizon: int) -> bool:
    return all(hall_recovery_links(p, horizon).values())

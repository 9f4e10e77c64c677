"""Sweep harness for the Bell / r-Bell congruences and identities.

Each check kind has a fixed parameter tuple, side conditions, and a left and
right side. Congruence kinds compare residues modulo ``p``; identity kinds
(COR1, REC_NM, REC_MR, THM_SUMD_BINOMIAL) compare exact integers. THM_SUMD and
THM_BTD keep their sides as exact integers and compare them modulo ``p``;
whether they also agree exactly is tallied in the report notes.

THM_SUMD, SZ_NEW and THM_BTD use the factorial-weighted sum
sum_k (-1)^k k! B_(n,-k-1) in its literal form. That sum only matches the other
expressions for r = 0 and m <= 2, so those kinds report failures on the full
grids. THM_SUMD_BINOMIAL checks the binomially weighted replacement.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Mapping

from .exact_core import StirlingKind, derangement, rbell, rstirling
from .modular import is_prime, rbell_residues

__all__ = [
    "CheckKind",
    "Mutation",
    "SideConditionError",
    "EmptyGridError",
    "GridError",
    "Evaluation",
    "Failure",
    "CongruenceReport",
    "CANONICAL_GRIDS",
    "evaluate",
    "run_check",
    "counterexample_probe",
    "expand_grid",
    "sum_derangement_side",
    "stirling_bell_side",
    "factorial_bell_side",
    "binomial_factorial_bell_side",
]

FIRST, SECOND = StirlingKind.FIRST, StirlingKind.SECOND
MAX_SZ_POWER = 2400


class CheckKind(enum.Enum):
    TOUCHARD = "TOUCHARD"
    R_TOUCHARD = "R_TOUCHARD"
    R_PERIOD_SHIFT = "R_PERIOD_SHIFT"
    SUN_ZAGIER = "SUN_ZAGIER"
    SZ_GENERAL = "SZ_GENERAL"
    THM_SUMD = "THM_SUMD"
    COR1 = "COR1"
    SZ_NEW = "SZ_NEW"
    REC_NM = "REC_NM"
    REC_MR = "REC_MR"
    BACKWARD_PROP = "BACKWARD_PROP"
    BTC = "BTC"
    PROP_SUM = "PROP_SUM"
    THM_BTD = "THM_BTD"
    AUX3 = "AUX3"
    THM_SUMD_BINOMIAL = "THM_SUMD_BINOMIAL"


class Mutation(enum.Enum):
    """Deliberate corruptions used to show the harness can see a violation."""

    DROP_SIGN = "DROP_SIGN"  # right side negated
    OFF_BY_ONE_INDEX = "OFF_BY_ONE_INDEX"  # left side's main index shifted by one
    WRONG_COEFF = "WRONG_COEFF"  # right side doubled


class SideConditionError(ValueError):
    """The point lies outside the kind's hypotheses; never counted as a failure."""


class GridError(ValueError):
    pass


class EmptyGridError(GridError):
    pass


@dataclass(frozen=True)
class Evaluation:
    lhs: object
    rhs: object  # an int, or a tuple for kinds with several right sides
    equal: bool
    modulus: int | None = None
    exact_equal: bool | None = None


@dataclass(frozen=True)
class Failure:
    point: dict
    lhs: object
    rhs: object


@dataclass
class CongruenceReport:
    kind: CheckKind
    grid: dict
    tested: int
    skipped: int
    failures: list = field(default_factory=list)
    mutation: Mutation | None = None
    notes: dict = field(default_factory=dict)
    points: list | None = None

    @property
    def status(self) -> str:
        return "PASS" if not self.failures else "FAIL"

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "grid": {k: list(v) for k, v in self.grid.items()},
            "tested": self.tested,
            "skipped": self.skipped,
            "failures": [
                {"point": f.point, "lhs": _jsonable(f.lhs), "rhs": _jsonable(f.rhs)} for f in self.failures
            ],
            "status": self.status,
        }
        if self.mutation is not None:
            out["mutation"] = self.mutation.value
        if self.notes:
            out["notes"] = dict(self.notes)
        return out


def _jsonable(value):
    if isinstance(value, tuple):
        return [str(v) for v in value]
    return str(value)


# --- value sources ----------------------------------------------------------------

_residue_tables: dict = {}


def _res(p: int, r: int, n: int) -> int:
    """B_{n,r} mod p from the independent mod-p table."""
    if n < 0:
        raise IndexError(f"negative Bell index {n}")
    table = _residue_tables.get((p, r))
    if table is None or len(table) <= n:
        table = rbell_residues(p, r, max(2 * n + 2, 512))
        _residue_tables[(p, r)] = table
    return table[n]


def _signed_derangement(j: int) -> int:
    return -derangement(j) if j % 2 else derangement(j)


@lru_cache(maxsize=None)
def sum_derangement_side(n: int, m: int, r: int) -> int:
    """sum_k {n k}_r (-1)^(k+m+r-1) D_(k+m+r-1); zero Stirling factors are skipped."""
    total = 0
    for k in range(n + 1):
        s = rstirling(SECOND, n, k, r)
        if s:
            total += s * _signed_derangement(k + m + r - 1)
    return total


@lru_cache(maxsize=None)
def stirling_bell_side(n: int, m: int, r: int) -> int:
    """sum_{k<=m, i<=r} [m k][r i] (-1)^(r-i) B_(n+k+i-1, -m) with classical Stirling numbers."""
    total = 0
    for k in range(m + 1):
        a = rstirling(FIRST, m, k, 0)
        if not a:
            continue
        for i in range(r + 1):
            b = rstirling(FIRST, r, i, 0)
            if b:
                term = a * b * rbell(n + k + i - 1, -m)
                total += -term if (r - i) % 2 else term
    return total


@lru_cache(maxsize=None)
def factorial_bell_side(n: int, m: int, r: int) -> int:
    """sum_{k=0}^{m+r-1} (-1)^k k! B_(n, -k-1)."""
    return sum((-1) ** k * factorial(k) * rbell(n, -k - 1) for k in range(m + r))


@lru_cache(maxsize=None)
def binomial_factorial_bell_side(n: int, m: int, r: int) -> int:
    """sum_{i=0}^{s} C(s,i) (-1)^i i! B_(n, r-1-i) with s = m+r-1.

    Comes from the full Leibniz expansion of the s-th derivative of e^t/(1+t)
    followed by the r-Stirling transform. It reduces to factorial_bell_side only
    when r = 0 and s <= 1.
    """
    s = m + r - 1
    return sum(comb(s, i) * (-1) ** i * factorial(i) * rbell(n, r - 1 - i) for i in range(s + 1))


def _alt_inverse_sum(p: int, m: int, r: int, start: int, stop: int, offset: int) -> int:
    """sum_{i=start}^{stop} B_(offset+i, r) / (-m)^i reduced mod p."""
    inv = pow((-m) % p, -1, p)
    total, w = 0, pow(inv, start, p)
    for i in range(start, stop + 1):
        total += _res(p, r, offset + i) * w
        w = w * inv % p
    return total % p


# --- catalogue ----------------------------------------------------------------------


@dataclass(frozen=True)
class _Spec:
    params: tuple
    exact: bool  # sides are exact integers
    side: Callable  # point -> reason string or None
    lhs: Callable  # (point, offset) -> value
    rhs: Callable  # point -> value or tuple
    modular: bool = True  # compare modulo p


def _require(*conds):
    for ok, reason in conds:
        if not ok:
            return reason
    return None


def _pt(pt, *names):
    return tuple(pt[n] for n in names)


def _touchard_lhs(pt, off):
    p, m, n = _pt(pt, "p", "m", "n")
    return _res(p, 0, n + p**m + off)


def _touchard_rhs(pt):
    p, m, n = _pt(pt, "p", "m", "n")
    return (m * _res(p, 0, n) + _res(p, 0, n + 1)) % p


def _r_touchard_lhs(pt, off):
    p, a, r, n = _pt(pt, "p", "a", "r", "n")
    return _res(p, r, n + p**a + off)


def _r_touchard_rhs(pt):
    p, a, r, n = _pt(pt, "p", "a", "r", "n")
    return (_res(p, r, n + 1) + a * _res(p, r, n)) % p


def _period_shift_lhs(pt, off):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, r + p, n + off)


def _period_shift_rhs(pt):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, r, n)


def _sun_zagier_lhs(pt, off):
    p, m = _pt(pt, "p", "m")
    return _alt_inverse_sum(p, m, 0, 1, p - 1, off)


def _sun_zagier_rhs(pt):
    p, m = _pt(pt, "p", "m")
    return _signed_derangement(m - 1) % p


def _sz_side(pt):
    p, a, m, r, n = _pt(pt, "p", "a", "m", "r", "n")
    return _require(
        (m >= 1, "m >= 1"),
        (a >= 1, "a >= 1"),
        (r >= 0, "r >= 0"),
        (n >= 0, "n >= 0"),
        (m % p != 0, "p does not divide m"),
        (p**a - 1 <= MAX_SZ_POWER, f"p^a - 1 <= {MAX_SZ_POWER}"),
    )


def _sz_lhs(pt, off):
    p, a, m, r, n = _pt(pt, "p", "a", "m", "r", "n")
    return _alt_inverse_sum(p, m, r, 1, p**a - 1, n + off)


def _sz_general_rhs(pt):
    p, a, m, r, n = _pt(pt, "p", "a", "m", "r", "n")
    return a * sum_derangement_side(n, m, r) % p


def _sz_new_rhs(pt):
    p, a, m, r, n = _pt(pt, "p", "a", "m", "r", "n")
    return (a * stirling_bell_side(n, m, r) % p, a * factorial_bell_side(n, m, r) % p)


def _sumd_side(pt):
    m, r, n = _pt(pt, "m", "r", "n")
    return _require((m >= 0 and r >= 0, "m, r >= 0"), (m + r >= 1, "m + r >= 1"), (n >= 0, "n >= 0"))


def _sumd_lhs(pt, off):
    m, r, n = _pt(pt, "m", "r", "n")
    return sum_derangement_side(n + off, m, r)


def _sumd_rhs(pt):
    m, r, n = _pt(pt, "m", "r", "n")
    return (stirling_bell_side(n, m, r), factorial_bell_side(n, m, r))


def _sumd_binomial_rhs(pt):
    m, r, n = _pt(pt, "m", "r", "n")
    return (stirling_bell_side(n, m, r), binomial_factorial_bell_side(n, m, r))


def _cor1_lhs(pt, off):
    n, r = _pt(pt, "n", "r")
    return sum_derangement_side(n + off, 0, r)


def _cor1_rhs(pt):
    n, r = _pt(pt, "n", "r")
    return rbell(n - 1, r)


def _rec_nm_lhs(pt, off):
    n, m, r = _pt(pt, "n", "m", "r")
    return rbell(n + m + off, r)


def _rec_nm_rhs(pt):
    n, m, r = _pt(pt, "n", "m", "r")
    return sum(rstirling(SECOND, m, k, r) * rbell(n, k + r) for k in range(m + 1))


def _rec_mr_lhs(pt, off):
    n, m, r = _pt(pt, "n", "m", "r")
    return rbell(n + off, r + m)


def _rec_mr_rhs(pt):
    n, m, r = _pt(pt, "n", "m", "r")
    return sum((-1) ** (m - k) * rstirling(FIRST, m, k, r) * rbell(n + k, r) for k in range(m + 1))


def _backward_lhs(pt, off):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, -r, n + p**r + off)


def _backward_rhs(pt):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, -r + 1, n)


def _btc_lhs(pt, off):
    p, n = _pt(pt, "p", "n")
    return _res(p, 0, n - p + off)


def _btc_rhs(pt):
    p, n = _pt(pt, "p", "n")
    return _res(p, -1, n)


def _power_sum(p: int, r: int) -> int:
    return sum(p**k for k in range(1, r + 1))


def _prop_sum_lhs(pt, off):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, 0, n - _power_sum(p, r) + off)


def _prop_sum_rhs(pt):
    p, r, n = _pt(pt, "p", "r", "n")
    return _res(p, -r, n)


def _btd_side(pt):
    p, m, r, n = _pt(pt, "p", "m", "r", "n")
    return _require(
        (m >= 1, "m >= 1"),
        (r >= 0, "r >= 0"),
        (m % p != 0, "p does not divide m"),
        (n >= p**m, "n >= p^m"),
    )


def _btd_lhs(pt, off):
    p, m, r, n = _pt(pt, "p", "m", "r", "n")
    return rbell(n - p**m + off, r)


def _btd_rhs(pt):
    m, r, n = _pt(pt, "m", "r", "n")
    return (sum_derangement_side(n, m, r), stirling_bell_side(n, m, r), factorial_bell_side(n, m, r))


def _aux3_lhs(pt, off):
    p, m, r, n, N = _pt(pt, "p", "m", "r", "n", "N")
    return pow(m, N, p) * _res(p, r, n + off) % p


def _aux3_rhs(pt):
    p, m, r, n, N = _pt(pt, "p", "m", "r", "n", "N")
    total = sum((-1) ** k * pow(m, N - 1 - k, p) * _res(p, r, n + p**m + k) for k in range(N))
    total += (-1) ** N * _res(p, r, n + N)
    return total % p


_CATALOGUE: dict = {
    CheckKind.TOUCHARD: _Spec(
        ("p", "m", "n"),
        False,
        lambda pt: _require((pt["m"] >= 0, "m >= 0"), (pt["n"] >= 0, "n >= 0")),
        _touchard_lhs,
        _touchard_rhs,
    ),
    CheckKind.R_TOUCHARD: _Spec(
        ("p", "a", "r", "n"),
        False,
        lambda pt: _require((pt["a"] >= 0, "a >= 0"), (pt["n"] >= 0, "n >= 0")),
        _r_touchard_lhs,
        _r_touchard_rhs,
    ),
    CheckKind.R_PERIOD_SHIFT: _Spec(
        ("p", "r", "n"), False, lambda pt: _require((pt["n"] >= 0, "n >= 0")), _period_shift_lhs, _period_shift_rhs
    ),
    CheckKind.SUN_ZAGIER: _Spec(
        ("p", "m"),
        False,
        lambda pt: _require((pt["m"] >= 1, "m >= 1"), (pt["m"] % pt["p"] != 0, "p does not divide m")),
        _sun_zagier_lhs,
        _sun_zagier_rhs,
    ),
    CheckKind.SZ_GENERAL: _Spec(("p", "a", "m", "r", "n"), False, _sz_side, _sz_lhs, _sz_general_rhs),
    CheckKind.SZ_NEW: _Spec(("p", "a", "m", "r", "n"), False, _sz_side, _sz_lhs, _sz_new_rhs),
    CheckKind.THM_SUMD: _Spec(("p", "m", "r", "n"), True, _sumd_side, _sumd_lhs, _sumd_rhs),
    CheckKind.COR1: _Spec(
        ("n", "r"),
        True,
        lambda pt: _require((pt["n"] >= 1, "n >= 1"), (pt["r"] >= 0, "r >= 0")),
        _cor1_lhs,
        _cor1_rhs,
        modular=False,
    ),
    CheckKind.REC_NM: _Spec(
        ("n", "m", "r"),
        True,
        lambda pt: _require((min(pt.values()) >= 0, "n, m, r >= 0")),
        _rec_nm_lhs,
        _rec_nm_rhs,
        modular=False,
    ),
    CheckKind.REC_MR: _Spec(
        ("n", "m", "r"),
        True,
        lambda pt: _require((min(pt.values()) >= 0, "n, m, r >= 0")),
        _rec_mr_lhs,
        _rec_mr_rhs,
        modular=False,
    ),
    CheckKind.BACKWARD_PROP: _Spec(
        ("p", "r", "n"),
        False,
        lambda pt: _require((pt["r"] >= 0, "r >= 0"), (pt["n"] >= 0, "n >= 0")),
        _backward_lhs,
        _backward_rhs,
    ),
    CheckKind.BTC: _Spec(
        ("p", "n"), False, lambda pt: _require((pt["n"] >= pt["p"], "n >= p")), _btc_lhs, _btc_rhs
    ),
    CheckKind.PROP_SUM: _Spec(
        ("p", "r", "n"),
        False,
        lambda pt: _require(
            (pt["r"] >= 0, "r >= 0"), (pt["n"] >= _power_sum(pt["p"], pt["r"]), "n >= p + p^2 + ... + p^r")
        ),
        _prop_sum_lhs,
        _prop_sum_rhs,
    ),
    CheckKind.THM_BTD: _Spec(("p", "m", "r", "n"), True, _btd_side, _btd_lhs, _btd_rhs),
    CheckKind.AUX3: _Spec(
        ("p", "m", "r", "n", "N"),
        False,
        lambda pt: _require((pt["m"] >= 1, "m >= 1"), (pt["n"] >= 0, "n >= 0"), (pt["N"] >= 1, "N >= 1")),
        _aux3_lhs,
        _aux3_rhs,
    ),
    CheckKind.THM_SUMD_BINOMIAL: _Spec(("m", "r", "n"), True, _sumd_side, _sumd_lhs, _sumd_binomial_rhs, modular=False),
}

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

# inclusive [lo, hi] ranges except "p", which lists primes
CANONICAL_GRIDS: dict = {
    CheckKind.TOUCHARD: {"p": _SMALL_PRIMES, "m": (1, 3), "n": (0, 200)},
    CheckKind.R_TOUCHARD: {"p": _SMALL_PRIMES, "a": (1, 2), "r": (-3, 3), "n": (0, 200)},
    CheckKind.R_PERIOD_SHIFT: {"p": _SMALL_PRIMES, "r": (-3, 3), "n": (0, 200)},
    CheckKind.SUN_ZAGIER: {"p": _SMALL_PRIMES, "m": (1, 12)},
    CheckKind.SZ_GENERAL: {"p": (3, 5, 7), "a": (1, 2), "m": (1, 6), "r": (0, 3), "n": (0, 20)},
    CheckKind.SZ_NEW: {"p": (3, 5, 7), "a": (1, 2), "m": (1, 6), "r": (0, 3), "n": (0, 20)},
    CheckKind.THM_SUMD: {"p": (2, 3, 5, 7), "m": (0, 4), "r": (0, 4), "n": (0, 20)},
    CheckKind.COR1: {"n": (1, 40), "r": (0, 6)},
    CheckKind.REC_NM: {"n": (0, 12), "m": (0, 12), "r": (0, 4)},
    CheckKind.REC_MR: {"n": (0, 12), "m": (0, 12), "r": (0, 4)},
    CheckKind.BACKWARD_PROP: {"p": (2, 3, 5), "r": (0, 3), "n": (0, 150)},
    CheckKind.BTC: {"p": _SMALL_PRIMES, "n": (0, 150)},
    CheckKind.PROP_SUM: {"p": (2, 3, 5), "r": (0, 3), "n": (0, 300)},
    CheckKind.THM_BTD: {"p": (2, 3, 5, 7), "m": (1, 4), "r": (0, 3), "n": (0, 200)},
    CheckKind.AUX3: {"p": (2, 3, 5, 7), "m": (1, 3), "r": (-2, 3), "n": (0, 40), "N": (1, 8)},
    CheckKind.THM_SUMD_BINOMIAL: {"m": (0, 4), "r": (0, 4), "n": (0, 20)},
}


def params_of(kind: CheckKind) -> tuple:
    return _CATALOGUE[kind].params


def is_exact_identity(kind: CheckKind) -> bool:
    return not _CATALOGUE[kind].modular


def expand_grid(kind: CheckKind, grid: Mapping) -> dict:
    """Normalise a grid to {param: tuple of values} in the kind's parameter order.

    "p" is an explicit list of primes; every other parameter is an inclusive
    [lo, hi] pair.
    """
    spec = _CATALOGUE[kind]
    missing = [name for name in spec.params if name not in grid]
    extra = [name for name in grid if name not in spec.params]
    if missing or extra:
        raise GridError(f"{kind.value} takes parameters {spec.params}; missing {missing}, unexpected {extra}")
    out = {}
    for name in spec.params:
        raw = grid[name]
        if name == "p":
            values = tuple(int(v) for v in raw)
            bad = [v for v in values if not is_prime(v)]
            if bad:
                raise GridError(f"{kind.value}: p values {bad} are not prime")
        else:
            if len(raw) != 2:
                raise GridError(f"{kind.value}: {name} must be an inclusive [lo, hi] range, got {list(raw)}")
            lo, hi = int(raw[0]), int(raw[1])
            values = tuple(range(lo, hi + 1))
        if not values:
            raise EmptyGridError(f"{kind.value}: empty range for {name}")
        out[name] = values
    return out


def _check_point(kind: CheckKind, point: Mapping) -> dict:
    spec = _CATALOGUE[kind]
    if set(point) != set(spec.params):
        raise ValueError(f"{kind.value} takes parameters {spec.params}, got {sorted(point)}")
    pt = {name: int(point[name]) for name in spec.params}
    if "p" in pt and not is_prime(pt["p"]):
        raise SideConditionError(f"p = {pt['p']} is not prime")
    reason = spec.side(pt)
    if reason is not None:
        raise SideConditionError(f"{kind.value} at {pt}: requires {reason}")
    return pt


def _mutate_rhs(rhs, mutation: Mutation | None):
    if mutation is Mutation.DROP_SIGN:
        f = lambda v: -v
    elif mutation is Mutation.WRONG_COEFF:
        f = lambda v: 2 * v
    else:
        return rhs
    return tuple(f(v) for v in rhs) if isinstance(rhs, tuple) else f(rhs)


def evaluate(kind: CheckKind, point: Mapping, mutation: Mutation | None = None) -> Evaluation:
    """Evaluate both sides of ``kind`` at ``point``.

    Raises SideConditionError when the point violates the kind's hypotheses.
    """
    pt = _check_point(kind, point)
    spec = _CATALOGUE[kind]
    offset = 1 if mutation is Mutation.OFF_BY_ONE_INDEX else 0
    lhs = spec.lhs(pt, offset)
    rhs = _mutate_rhs(spec.rhs(pt), mutation)
    values = rhs if isinstance(rhs, tuple) else (rhs,)
    p = pt["p"] if spec.modular else None
    if p is None:
        equal = all(v == lhs for v in values)
    else:
        if not spec.exact:
            lhs = lhs % p
            values = tuple(v % p for v in values)
            rhs = values if isinstance(rhs, tuple) else values[0]
        equal = all((lhs - v) % p == 0 for v in values)
    exact_equal = all(v == lhs for v in values) if spec.exact and p is not None else None
    return Evaluation(lhs, rhs, equal, p, exact_equal)


def _points(kind: CheckKind, grid: dict):
    names = _CATALOGUE[kind].params
    for combo in itertools.product(*(grid[name] for name in names)):
        yield dict(zip(names, combo))


def run_check(
    kind: CheckKind,
    grid: Mapping | None = None,
    mutation: Mutation | None = None,
    record_points: bool = False,
) -> CongruenceReport:
    """Evaluate every grid point; points violating side conditions are skipped and counted."""
    raw = CANONICAL_GRIDS[kind] if grid is None else grid
    values = expand_grid(kind, raw)
    echo = {name: list(raw[name]) for name in _CATALOGUE[kind].params}
    report = CongruenceReport(kind, echo, 0, 0, mutation=mutation, points=[] if record_points else None)
    exact_same = exact_diff = 0
    per_side: list | None = None
    for pt in _points(kind, values):
        try:
            ev = evaluate(kind, pt, mutation)
        except SideConditionError:
            report.skipped += 1
            continue
        report.tested += 1
        if record_points:
            report.points.append((pt, ev))
        if not ev.equal:
            report.failures.append(Failure(pt, ev.lhs, ev.rhs))
        if isinstance(ev.rhs, tuple):
            if per_side is None:
                per_side = [0] * len(ev.rhs)
            for i, v in enumerate(ev.rhs):
                same = (ev.lhs - v) % ev.modulus == 0 if ev.modulus else ev.lhs == v
                per_side[i] += not same
        if ev.exact_equal is not None:
            if ev.exact_equal:
                exact_same += 1
            else:
                exact_diff += 1
    if report.tested == 0:
        raise EmptyGridError(f"{kind.value}: every grid point was skipped ({report.skipped} skipped)")
    if _CATALOGUE[kind].exact and _CATALOGUE[kind].modular:
        report.notes["exact_agreements"] = exact_same
        report.notes["exact_disagreements"] = exact_diff
    if per_side is not None:
        report.notes["failures_per_rhs_expression"] = per_side
    return report


def counterexample_probe(kind: CheckKind, mutation: Mutation, grid: Mapping | None = None) -> CongruenceReport:
    """Run ``kind`` with a corrupted formula; a sound harness reports FAIL."""
    return run_check(kind, grid, mutation=mutation)

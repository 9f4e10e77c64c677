"""Exact integer sequences: binomials, derangements, r-Stirling and r-Bell numbers.

Index convention for the r-Stirling numbers is the shifted one: ``rstirling(SECOND,
n, k, r)`` counts partitions of an (n+r)-set into k+r blocks with the first r
elements in distinct blocks (Broder writes this as {n+r, k+r}_r).

The module also carries brute-force enumeration oracles that share no code with
the recurrences.
"""

from __future__ import annotations

import enum
import itertools
import threading
from functools import lru_cache
from math import comb

__all__ = [
    "StirlingKind",
    "OracleKind",
    "TableKind",
    "SeqTable",
    "binomial",
    "derangement",
    "rstirling",
    "rbell",
    "bell",
    "rbell_row",
    "enumerate_oracle",
    "shift_identity_check",
    "ENUMERATION_BOUND",
]

ENUMERATION_BOUND = 12


class StirlingKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


class OracleKind(enum.Enum):
    PARTITIONS = "partitions"
    PARTITIONS_NO_SINGLETON = "partitions_no_singleton"
    DERANGEMENTS = "derangements"
    RSTIRLING1 = "rstirling1"
    RSTIRLING2 = "rstirling2"


class TableKind(enum.Enum):
    RSTIRLING1 = "rstirling1"
    RSTIRLING2 = "rstirling2"
    RBELL = "rbell"
    DERANGEMENT = "derangement"
    BINOMIAL = "binomial"


class SeqTable:
    """Append-only memo table of one integer sequence family.

    Rows are extended on demand under a lock; values already stored are never
    rewritten, so readers may share a table freely.
    """

    def __init__(self, kind: TableKind, r: int = 0):
        if kind in (TableKind.RSTIRLING1, TableKind.RSTIRLING2) and r < 0:
            raise ValueError(f"r-Stirling numbers need r >= 0, got r={r}")
        self.kind = kind
        self.r = r
        self._rows: list = []
        self._lock = threading.Lock()
        self._extend = {
            TableKind.RSTIRLING1: self._next_stirling1,
            TableKind.RSTIRLING2: self._next_stirling2,
            TableKind.RBELL: self._next_rbell,
            TableKind.DERANGEMENT: self._next_derangement,
            TableKind.BINOMIAL: self._next_binomial,
        }[kind]

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, n: int):
        """Return row ``n`` (a list for triangles, an int for sequences)."""
        if n < 0:
            raise IndexError(n)
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(self._extend(len(self._rows)))
        return self._rows[n]

    def entries(self) -> dict:
        """Snapshot of all computed entries keyed by index tuple."""
        out = {}
        for n, row in enumerate(list(self._rows)):
            if isinstance(row, list):
                for k, v in enumerate(row):
                    out[(n, k)] = v
            else:
                out[(n,)] = row
        return out

    # (x+r)^{rising n+1} = (x+r)^{rising n} (x + r + n)
    def _next_stirling1(self, n: int) -> list:
        if n == 0:
            return [1]
        prev = self._rows[n - 1]
        c = n - 1 + self.r
        row = [0] * (n + 1)
        for k in range(n + 1):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k < n else 0
            row[k] = left + c * here
        return row

    # new element joins one of the k+r blocks or opens a new one
    def _next_stirling2(self, n: int) -> list:
        if n == 0:
            return [1]
        prev = self._rows[n - 1]
        row = [0] * (n + 1)
        for k in range(n + 1):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k < n else 0
            row[k] = left + (k + self.r) * here
        return row

    # d/dt exp(e^t - 1 + r t) = (e^t + r) exp(...)
    def _next_rbell(self, n: int) -> int:
        if n == 0:
            return 1
        m = n - 1
        binom = _binomial_table.row(m)
        total = self.r * self._rows[m]
        for k in range(m + 1):
            total += binom[k] * self._rows[k]
        return total

    def _next_derangement(self, n: int) -> int:
        if n == 0:
            return 1
        return n * self._rows[n - 1] + (-1 if n % 2 else 1)

    def _next_binomial(self, n: int) -> list:
        if n == 0:
            return [1]
        prev = self._rows[n - 1]
        return [1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1]


_binomial_table = SeqTable(TableKind.BINOMIAL)
_derangement_table = SeqTable(TableKind.DERANGEMENT)
_tables: dict = {}
_tables_lock = threading.Lock()


def _table(kind: TableKind, r: int) -> SeqTable:
    key = (kind, r)
    table = _tables.get(key)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(key, SeqTable(kind, r))
    return table


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return comb(n, k)


def derangement(n: int) -> int:
    """Number of fixed-point-free permutations of n elements."""
    if n < 0:
        raise ValueError(f"derangement index must be >= 0, got {n}")
    return _derangement_table.row(n)


def rstirling(kind: StirlingKind, n: int, k: int, r: int = 0) -> int:
    """Unsigned r-Stirling number of the first kind or r-Stirling number of the second kind.

    Out-of-triangle entries (k < 0 or k > n) are 0.
    """
    if r < 0:
        raise ValueError(f"r-Stirling numbers need r >= 0, got r={r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    tkind = TableKind.RSTIRLING1 if kind is StirlingKind.FIRST else TableKind.RSTIRLING2
    return _table(tkind, r).row(n)[k]


def rbell(n: int, r: int = 0) -> int:
    """r-Bell number B_{n,r} for any integer r (EGF exp(e^t - 1 + r t))."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _table(TableKind.RBELL, r).row(n)


def bell(n: int) -> int:
    return rbell(n, 0)


def rbell_row(r: int, count: int) -> list:
    """[B_{0,r}, ..., B_{count-1,r}]."""
    table = _table(TableKind.RBELL, r)
    if count > 0:
        table.row(count - 1)
    return [table.row(n) for n in range(count)]


def shift_identity_check(n: int, r: int, m: int) -> bool:
    """Binomial shift of the r-Bell numbers: sum_k C(n,k) B_{k,r} m^(n-k) == B_{n,r+m}."""
    lhs = sum(comb(n, k) * rbell(k, r) * m ** (n - k) for k in range(n + 1))
    return lhs == rbell(n, r + m)


# --- enumeration oracles -------------------------------------------------------


def _set_partitions(size: int):
    """Yield restricted growth strings of length ``size`` (block label per element)."""
    if size == 0:
        yield ()
        return
    labels = [0] * size

    def rec(i: int, blocks: int):
        if i == size:
            yield tuple(labels)
            return
        for b in range(blocks + 1):
            labels[i] = b
            yield from rec(i + 1, max(blocks, b + 1))

    yield from rec(1, 1)


@lru_cache(maxsize=None)
def _partition_census(size: int) -> dict:
    """Map (r, blocks, has_singleton) -> count, over all partitions of range(size).

    ``r`` runs over every prefix length for which elements 0..r-1 sit in distinct
    blocks.
    """
    census: dict = {}
    for rgs in _set_partitions(size):
        blocks = (max(rgs) + 1) if rgs else 0
        sizes = [0] * blocks
        for b in rgs:
            sizes[b] += 1
        has_singleton = 1 in sizes
        seen = set()
        r = 0
        while True:
            key = (r, blocks, has_singleton)
            census[key] = census.get(key, 0) + 1
            if r == size or rgs[r] in seen:
                break
            seen.add(rgs[r])
            r += 1
    return census


@lru_cache(maxsize=None)
def _permutation_census(size: int) -> dict:
    """Map (r, cycles, is_derangement) -> count over all permutations of range(size)."""
    census: dict = {}
    for perm in itertools.permutations(range(size)):
        label = [-1] * size
        cycles = 0
        for start in range(size):
            if label[start] < 0:
                j = start
                while label[j] < 0:
                    label[j] = cycles
                    j = perm[j]
                cycles += 1
        fixed_free = all(perm[i] != i for i in range(size))
        # distinct cycle labels over a prefix <=> the prefix labels are 0..r-1
        # since cycles are numbered by their smallest element
        r = 0
        while True:
            key = (r, cycles, fixed_free)
            census[key] = census.get(key, 0) + 1
            if r == size or label[r] != r:
                break
            r += 1
    return census


def enumerate_oracle(kind: OracleKind, n: int, k: int | None = None, r: int | None = None) -> int:
    """Count combinatorial objects by exhaustive generation.

    PARTITIONS and PARTITIONS_NO_SINGLETON count set partitions of an n-set,
    DERANGEMENTS counts fixed-point-free permutations, RSTIRLING1/RSTIRLING2 count
    permutations/partitions of an (n+r)-set with k+r cycles/blocks and the first
    r elements separated.
    """
    r = 0 if r is None else r
    if n < 0 or r < 0:
        raise ValueError("enumeration needs n >= 0 and r >= 0")
    if n + r > ENUMERATION_BOUND:
        raise ValueError(f"n + r = {n + r} exceeds the enumeration bound {ENUMERATION_BOUND}")
    if kind is OracleKind.PARTITIONS:
        return sum(c for (rr, _, _), c in _partition_census(n).items() if rr == 0)
    if kind is OracleKind.PARTITIONS_NO_SINGLETON:
        return sum(c for (rr, _, single), c in _partition_census(n).items() if rr == 0 and not single)
    if kind is OracleKind.DERANGEMENTS:
        return sum(c for (rr, _, dfree), c in _permutation_census(n).items() if rr == 0 and dfree)
    if k is None:
        raise ValueError(f"{kind.name} needs k")
    if kind is OracleKind.RSTIRLING2:
        census = _partition_census(n + r)
    elif kind is OracleKind.RSTIRLING1:
        census = _permutation_census(n + r)
    else:
        raise ValueError(f"unknown oracle kind {kind!r}")
    return sum(c for (rr, parts, _), c in census.items() if rr == r and parts == k + r)

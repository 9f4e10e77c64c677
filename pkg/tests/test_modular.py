import random

import pytest
from hypothesis import given, strategies as st

from touchard.exact_core import rbell
from touchard.modular import (
    LinearRecurrence,
    PrimeModulus,
    is_prime,
    minimal_recurrence,
    mod_inverse,
    rbell_residues,
    residue_seq,
)

SMALL_PRIMES = (2, 3, 5, 7, 11)


def test_prime_modulus_validation():
    assert PrimeModulus(7).p == 7
    assert PrimeModulus(999983).p == 999983
    for bad in (1, 4, 91, 10**6 + 3):
        with pytest.raises(ValueError):
            PrimeModulus(bad)


def test_is_prime_against_sieve():
    limit = 3000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    assert [n for n in range(limit) if is_prime(n)] == [n for n in range(limit) if sieve[n]]


def test_mod_inverse_examples():
    assert mod_inverse(1, 13) == 1
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(4, 7) == 2
    with pytest.raises(ZeroDivisionError):
        mod_inverse(14, 7)


@given(st.sampled_from([2, 3, 5, 7, 11, 13, 101, 7919]), st.integers(1, 10**9))
def test_mod_inverse_property(p, a):
    if a % p:
        assert a * mod_inverse(a, p) % p == 1


def test_residue_seq_examples():
    assert residue_seq(2, 0, 6).values == (1, 1, 0, 1, 1, 0)
    assert residue_seq(3, 0, 5).values == (1, 1, 2, 2, 0)
    assert all(residue_seq(p, r, 3)[0] == 1 for p in SMALL_PRIMES for r in range(-3, 4))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_residue_seq_agrees_with_exact(p):
    for r in range(-3, 4):
        seq = residue_seq(p, r, 300)
        assert seq.values == tuple(rbell(n, r) % p for n in range(300))
        assert seq.values == rbell_residues(p, r, 300)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_residue_seq_recurrence_invariant(p):
    values = residue_seq(p, 2, 500).values
    assert all(values[n + p] == (values[n + 1] + values[n]) % p for n in range(500 - p))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_r_period_shift_on_residues(p):
    for r in range(-3, 4):
        assert residue_seq(p, r, 400).values == residue_seq(p, r + p, 400).values


def test_rbell_residues_short_requests():
    assert rbell_residues(5, -1, 6) == (1, 0, 1, 1, 4, 1)
    with pytest.raises(ValueError):
        rbell_residues(4, 0, 10)


def test_minimal_recurrence_examples():
    bell2 = minimal_recurrence(residue_seq(2, 0, 8), 4)
    assert bell2.order == 2 and bell2.coeffs == (1, 1)
    const = minimal_recurrence([4] * 10, 5, p=7)
    assert const.order == 1 and const.coeffs == (1,)
    bell5 = minimal_recurrence(residue_seq(5, 0, 20), 10)
    assert bell5.order == 5
    assert bell5.characteristic() == (4, 4, 0, 0, 0, 1)  # x^5 - x - 1


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_bell_recurrence_has_order_p(p):
    rec = minimal_recurrence(residue_seq(p, 0, 8 * p), 4 * p)
    assert rec.order == p
    expected = [0] * (p + 1)
    expected[0] = expected[1] = p - 1
    expected[p] = 1
    assert list(rec.characteristic()) == expected


def test_minimal_recurrence_certification_errors():
    with pytest.raises(ValueError):
        minimal_recurrence(residue_seq(5, 0, 9), 5)
    rng = random.Random(1)
    noise = [rng.randrange(11) for _ in range(20)]
    with pytest.raises(ValueError):
        minimal_recurrence(noise, 3, p=11)
    with pytest.raises(ValueError):
        minimal_recurrence([1, 2, 3], 1)


@given(
    st.sampled_from([2, 3, 5, 7, 13]),
    st.lists(st.integers(0, 12), min_size=1, max_size=6),
    st.lists(st.integers(0, 12), min_size=6, max_size=6),
)
def test_berlekamp_massey_recovers_lfsr(p, taps, seed):
    taps = [t % p for t in taps]
    L = len(taps)
    values = [s % p for s in seed[:L]]
    while len(values) < 4 * L + 4:
        n = len(values) - L
        values.append(sum(c * values[n + i] for i, c in enumerate(taps)) % p)
    rec = minimal_recurrence(values, 2 * L + 2, p=p)
    assert rec.order <= L
    assert rec.satisfied_by(values)


def test_linear_recurrence_satisfied_by():
    fib = LinearRecurrence(2, (1, 1))
    assert fib.satisfied_by([1, 1, 0, 1, 1, 0])
    assert not fib.satisfied_by([1, 1, 1])

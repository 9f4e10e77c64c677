from math import comb, factorial

import pytest

from touchard.congruences import (
    CANONICAL_GRIDS,
    CheckKind,
    EmptyGridError,
    GridError,
    Mutation,
    SideConditionError,
    binomial_factorial_bell_side,
    counterexample_probe,
    evaluate,
    factorial_bell_side,
    run_check,
    stirling_bell_side,
    sum_derangement_side,
)
from touchard.exact_core import bell, derangement, rbell

# kinds whose stated congruence holds on the whole canonical grid
SOUND_KINDS = [
    k for k in CheckKind if k not in (CheckKind.THM_SUMD, CheckKind.SZ_NEW, CheckKind.THM_BTD)
]


class TestEvaluateExamples:
    def test_touchard(self):
        ev = evaluate(CheckKind.TOUCHARD, {"p": 5, "m": 1, "n": 2})
        assert bell(7) == 877 and bell(2) + bell(3) == 7
        assert ev.lhs == 877 % 5 == 2 and ev.rhs == 2 and ev.equal

    def test_integer_inequality_probe(self):
        ev = evaluate(CheckKind.THM_BTD, {"p": 2, "m": 1, "r": 0, "n": 4})
        assert ev.lhs == 2 and ev.rhs[0] == 4
        assert ev.equal and ev.exact_equal is False

    def test_sumd_small_case(self):
        ev = evaluate(CheckKind.THM_SUMD, {"p": 5, "m": 2, "r": 0, "n": 2})
        assert ev.lhs == -1 and ev.rhs == (-1, -1)
        assert ev.equal and ev.exact_equal
        # hand expansion: S(2,1)(-1)^2 D_2 + S(2,2)(-1)^3 D_3 = 1 - 2
        assert derangement(2) - derangement(3) == -1
        # first-kind row [2 k] = (0, 1, 1): B_{2,-2} + B_{3,-2}
        assert rbell(2, -2) + rbell(3, -2) == -1
        # B_{2,-1} - B_{2,-2}
        assert rbell(2, -1) - rbell(2, -2) == -1

    def test_smallest_touchard_grid(self):
        rep = run_check(CheckKind.TOUCHARD, {"p": [2], "m": [1, 1], "n": [0, 0]})
        assert rep.status == "PASS" and rep.tested == 1

    def test_purity(self):
        pt = {"p": 7, "m": 2, "r": 1, "n": 60}
        assert evaluate(CheckKind.THM_BTD, pt) == evaluate(CheckKind.THM_BTD, dict(pt))


class TestSideConditions:
    @pytest.mark.parametrize(
        "kind, point",
        [
            (CheckKind.SUN_ZAGIER, {"p": 3, "m": 6}),
            (CheckKind.SZ_GENERAL, {"p": 5, "a": 1, "m": 5, "r": 0, "n": 0}),
            (CheckKind.THM_BTD, {"p": 3, "m": 1, "r": 0, "n": 2}),
            (CheckKind.THM_BTD, {"p": 2, "m": 2, "r": 0, "n": 10}),
            (CheckKind.BTC, {"p": 5, "n": 4}),
            (CheckKind.PROP_SUM, {"p": 3, "r": 2, "n": 11}),
            (CheckKind.COR1, {"n": 0, "r": 1}),
            (CheckKind.THM_SUMD, {"p": 3, "m": 0, "r": 0, "n": 3}),
            (CheckKind.TOUCHARD, {"p": 4, "m": 1, "n": 0}),
        ],
    )
    def test_violation_raises(self, kind, point):
        with pytest.raises(SideConditionError):
            evaluate(kind, point)

    def test_skips_are_counted(self):
        rep = run_check(CheckKind.BTC, {"p": [5], "n": [0, 9]})
        assert rep.skipped == 5 and rep.tested == 5 and rep.status == "PASS"

    def test_all_skipped_is_an_error(self):
        with pytest.raises(EmptyGridError):
            run_check(CheckKind.BTC, {"p": [7], "n": [0, 6]})

    def test_empty_range_is_an_error(self):
        with pytest.raises(EmptyGridError):
            run_check(CheckKind.BTC, {"p": [7], "n": [9, 8]})

    def test_grid_validation(self):
        with pytest.raises(GridError):
            run_check(CheckKind.BTC, {"p": [4], "n": [0, 10]})
        with pytest.raises(GridError):
            run_check(CheckKind.BTC, {"p": [5], "n": [0, 10], "m": [1, 1]})
        with pytest.raises(GridError):
            run_check(CheckKind.BTC, {"p": [5], "n": [0, 1, 2]})


class TestAgainstExactIntegers:
    """Residue-valued kinds recomputed from exact r-Bell numbers on small grids."""

    def test_touchard(self):
        for p in (2, 3, 5):
            for m in (1, 2):
                for n in range(15):
                    assert (bell(n + p**m) - m * bell(n) - bell(n + 1)) % p == 0
                    assert evaluate(CheckKind.TOUCHARD, {"p": p, "m": m, "n": n}).lhs == bell(n + p**m) % p

    def test_btc(self):
        for p in (2, 3, 5, 7):
            for n in range(p, 40):
                assert (bell(n - p) - rbell(n, -1)) % p == 0
                ev = evaluate(CheckKind.BTC, {"p": p, "n": n})
                assert (ev.lhs, ev.rhs) == (bell(n - p) % p, rbell(n, -1) % p)

    def test_sun_zagier(self):
        for p in (3, 5, 7):
            for m in range(1, 10):
                if m % p == 0:
                    continue
                inv = pow(-m, -1, p)
                lhs = sum(bell(k) * inv**k for k in range(1, p)) % p
                ev = evaluate(CheckKind.SUN_ZAGIER, {"p": p, "m": m})
                assert ev.lhs == lhs and ev.rhs == (-1) ** (m - 1) * derangement(m - 1) % p


class TestSumDerangementSides:
    def test_first_two_sides_agree_exactly(self):
        for m in range(5):
            for r in range(5):
                if m + r == 0:
                    continue
                for n in range(21):
                    assert sum_derangement_side(n, m, r) == stirling_bell_side(n, m, r)

    def test_corollary_case_m0(self):
        for r in range(7):
            for n in range(1, 41):
                assert sum_derangement_side(n, 0, r) == rbell(n - 1, r)

    def test_binomial_weighted_side_is_exact(self):
        for m in range(5):
            for r in range(5):
                if m + r == 0:
                    continue
                for n in range(21):
                    assert binomial_factorial_bell_side(n, m, r) == sum_derangement_side(n, m, r)

    def test_literal_factorial_side_only_matches_for_r0_small_m(self):
        agree = {
            (m, r)
            for m in range(5)
            for r in range(5)
            if m + r
            and all(factorial_bell_side(n, m, r) == sum_derangement_side(n, m, r) for n in range(12))
        }
        assert agree == {(1, 0), (2, 0)}

    def test_counterexample_to_literal_side(self):
        # m = 0, r = 1, n = 1: sum side is B_{0,1} = 1, literal factorial side is V_1 = 0
        assert sum_derangement_side(1, 0, 1) == 1
        assert factorial_bell_side(1, 0, 1) == 0
        assert binomial_factorial_bell_side(1, 0, 1) == 1

    def test_binomial_side_definition(self):
        n, m, r = 3, 2, 2
        s = m + r - 1
        expected = sum(comb(s, i) * (-1) ** i * factorial(i) * rbell(n, r - 1 - i) for i in range(s + 1))
        assert binomial_factorial_bell_side(n, m, r) == expected


class TestReports:
    @pytest.mark.parametrize("kind", SOUND_KINDS, ids=lambda k: k.value)
    def test_canonical_grid_passes(self, kind):
        rep = run_check(kind)
        assert rep.status == "PASS", rep.failures[:3]
        assert rep.tested > 0

    @pytest.mark.parametrize("kind", [CheckKind.THM_SUMD, CheckKind.SZ_NEW, CheckKind.THM_BTD], ids=lambda k: k.value)
    def test_literal_factorial_side_is_the_only_failure(self, kind):
        rep = run_check(kind)
        per_side = rep.notes["failures_per_rhs_expression"]
        assert per_side[-1] > 0
        assert all(v == 0 for v in per_side[:-1])

    def test_exactness_is_recorded(self):
        rep = run_check(CheckKind.THM_SUMD, {"p": [5], "m": [1, 2], "r": [0, 0], "n": [0, 20]})
        assert rep.status == "PASS"
        assert rep.notes["exact_agreements"] == rep.tested

    def test_deterministic(self):
        a = run_check(CheckKind.AUX3, {"p": [3], "m": [1, 2], "r": [-1, 1], "n": [0, 5], "N": [1, 3]})
        b = run_check(CheckKind.AUX3, {"p": [3], "m": [1, 2], "r": [-1, 1], "n": [0, 5], "N": [1, 3]})
        assert a.to_dict() == b.to_dict()

    def test_report_serialises_big_integers_as_strings(self):
        rep = run_check(CheckKind.THM_BTD, {"p": [2], "m": [1, 1], "r": [2, 2], "n": [3, 3]})
        d = rep.to_dict()
        assert d["status"] == "FAIL"
        assert d["failures"][0]["lhs"] == "3"
        assert d["failures"][0]["rhs"] == ["7", "7", "-22"]

    def test_record_points(self):
        rep = run_check(CheckKind.COR1, {"n": [1, 3], "r": [0, 1]}, record_points=True)
        assert len(rep.points) == rep.tested == 6


class TestMutations:
    def test_spec_examples(self):
        assert counterexample_probe(CheckKind.TOUCHARD, Mutation.DROP_SIGN).status == "FAIL"
        assert counterexample_probe(CheckKind.BTC, Mutation.OFF_BY_ONE_INDEX).status == "FAIL"
        assert counterexample_probe(CheckKind.COR1, Mutation.WRONG_COEFF).status == "FAIL"

    def test_drop_sign_is_invisible_mod_2(self):
        rep = counterexample_probe(CheckKind.TOUCHARD, Mutation.DROP_SIGN, {"p": [2], "m": [1, 3], "n": [0, 50]})
        assert rep.status == "PASS"

    @pytest.mark.parametrize("kind", list(CheckKind), ids=lambda k: k.value)
    def test_every_mutation_detected(self, kind):
        for mutation in Mutation:
            rep = counterexample_probe(kind, mutation)
            assert rep.status == "FAIL" and rep.mutation is mutation


def test_canonical_grids_cover_catalogue():
    assert set(CANONICAL_GRIDS) == set(CheckKind)

# Area: Enumerators
# PRD: docs/prd-qweight.md
"""Tests for weight distributions, closed forms, transforms and code_check."""
from fractions import Fraction

import numpy as np
import pytest

from qweight.enumerators import (
    CodeParams,
    WeightDistribution,
    WeightKind,
    code_check,
    dual_unitary,
    log_exact,
    macwilliams_dual,
    negative_entries,
    qmds_sl,
    qmds_unitary,
    shadow,
    shadow_poly,
    sl_from_unitary,
    sl_from_unitary_poly,
    unitary_from_sl,
)
from qweight.shared.errors import DomainError, InconsistencyError

HEXACODE_UNITARY = [1, 3, Fraction(15, 4), Fraction(5, 2), Fraction(15, 4), 3, 1]
SHOR_A = [4, 0, 36, 0, 108, 0, 300, 0, 576, 0]
SHOR_B = [2, 0, 18, 78, 54, 414, 150, 666, 288, 378]
REDUCED_SHOR_A = [16, 0, 112, 0, 240, 0, 400, 0, 256]
REDUCED_SHOR_B = [4, 8, 80, 152, 520, 568, 1136, 808, 820]


def sl_pair(D, trace, a_values, b_values):
    A = WeightDistribution.build(D, WeightKind.SL_PRIMARY, trace, a_values)
    B = WeightDistribution.build(D, WeightKind.SL_DUAL, trace, b_values)
    return A, B


def qmds_parameter_sets(max_n, D):
    for n in range(1, max_n + 1):
        for k in range(n % 2, n + 1, 2):
            yield CodeParams.qmds(n, k, D)


class TestCodeParams:
    def test_qmds_constructor(self):
        p = CodeParams.qmds(5, 1, 2)
        assert (p.n, p.k, p.d, p.D) == (5, 1, 3, 2)
        assert p.is_qmds
        assert p.alpha == 3
        assert p.n_plus_k == 6
        assert p.K == 2
        assert str(p) == "[[5,1,3]]_2"

    def test_qmds_requires_even_n_minus_k(self):
        with pytest.raises(DomainError):
            CodeParams.qmds(5, 0, 2)

    def test_family_member(self):
        assert CodeParams.family_member(3, 4, 2) == CodeParams.qmds(6, 0, 2)
        assert CodeParams.family_member(6, 3, 3) == CodeParams.qmds(8, 4, 3)

    def test_ame(self):
        p = CodeParams.ame(5, 2)
        assert p.d == 3
        assert p.is_ame
        assert not p.is_qmds

    def test_from_dimension(self):
        assert CodeParams.from_dimension(5, 2, 3, 2).k == 1
        assert CodeParams.from_dimension(3, 2, 2, 4).k == Fraction(1, 2)
        odd = CodeParams.from_dimension(3, 3, 2, 2)
        assert odd.k is None
        assert odd.K == 3
        assert odd.label == "((3,3,2))"
        with pytest.raises(DomainError):
            odd.alpha

    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            CodeParams(4, Fraction(0), 5, 2)
        with pytest.raises(DomainError):
            CodeParams(4, Fraction(5), 1, 2)
        with pytest.raises(DomainError):
            CodeParams(4, Fraction(0), 3, 1)

    def test_log_exact(self):
        assert log_exact(1, 7) == 0
        assert log_exact(27, 3) == 3
        assert log_exact(2, 4) == Fraction(1, 2)
        assert log_exact(6, 2) is None


class TestWeightDistribution:
    def test_primary_requires_trace_squared(self):
        with pytest.raises(DomainError):
            WeightDistribution.build(2, WeightKind.SL_PRIMARY, 2, [1, 0, 3])

    def test_dual_has_no_trace_constraint(self):
        w = WeightDistribution.build(2, WeightKind.SL_DUAL, 2, [2, 0, 6])
        assert w.n == 2
        assert w.total() == 8

    def test_kinds(self):
        assert WeightKind.SL_DUAL.is_sl
        assert WeightKind.UNITARY_DUAL.is_unitary
        assert not WeightKind.SHADOW.is_primary


class TestClosedForms:
    def test_hexacode_unitary(self):
        assert list(qmds_unitary(CodeParams.qmds(6, 0, 2)).values) == HEXACODE_UNITARY

    def test_five_qubit_unitary(self):
        w = qmds_unitary(CodeParams.qmds(5, 1, 2))
        assert list(w.values) == [4, 10, 10, 5, 5, 2]
        assert w.trace == 2

    def test_full_space(self):
        for D in (2, 3, 5):
            assert qmds_unitary(CodeParams.qmds(4, 4, D)).values[0] == D ** 8

    def test_odd_ame_unitary(self):
        w = qmds_unitary(CodeParams.ame(5, 2))
        assert list(w.values) == [1, Fraction(5, 2), Fraction(5, 2), Fraction(5, 2), Fraction(5, 2), 1]

    def test_hexacode_shor_laflamme(self):
        assert list(qmds_sl(CodeParams.qmds(6, 0, 2)).values) == [1, 0, 0, 0, 45, 0, 18]

    def test_five_qubit_shor_laflamme(self):
        assert list(qmds_sl(CodeParams.qmds(5, 1, 2)).values) == [4, 0, 0, 0, 60, 0]

    def test_first_entry_is_trace_squared(self):
        for p in qmds_parameter_sets(10, 3):
            assert qmds_sl(p).values[0] == 3 ** (2 * int(p.k))

    def test_non_qmds_rejected(self):
        with pytest.raises(DomainError):
            qmds_unitary(CodeParams(7, Fraction(1), 3, 2))

    def test_purity_below_distance(self):
        for D in (2, 3, 4, 5):
            for p in qmds_parameter_sets(20, D):
                values = qmds_sl(p).values
                assert all(values[j] == 0 for j in range(1, p.d))

    def test_negative_entries(self):
        w = WeightDistribution.build(2, WeightKind.SHADOW, 1, [Fraction(-1, 2), 0, 9, -3])
        assert negative_entries(w) == [(0, Fraction(-1, 2)), (3, Fraction(-3))]
        assert negative_entries(qmds_sl(CodeParams.qmds(6, 0, 2))) == []


class TestTransforms:
    def test_single_pure_system(self):
        A = WeightDistribution.build(2, WeightKind.SL_PRIMARY, 1, [1, 1])
        assert list(unitary_from_sl(A).values) == [1, 1]

    def test_bell_pair(self):
        A = WeightDistribution.build(2, WeightKind.SL_PRIMARY, 1, [1, 0, 3])
        unitary = unitary_from_sl(A)
        assert unitary.kind is WeightKind.UNITARY_PRIMARY
        assert list(unitary.values) == [1, 1, 1]

    def test_hexacode_unitary_from_sl(self):
        p = CodeParams.qmds(6, 0, 2)
        assert unitary_from_sl(qmds_sl(p)) == qmds_unitary(p)

    def test_sl_from_unitary_examples(self):
        for p in (CodeParams.qmds(6, 0, 2), CodeParams.qmds(5, 1, 2)):
            assert sl_from_unitary(qmds_unitary(p)) == qmds_sl(p)

    def test_round_trip_random(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            n = int(rng.integers(1, 11))
            D = int(rng.integers(2, 6))
            trace = int(rng.integers(1, 5))
            values = [trace ** 2] + [
                Fraction(int(rng.integers(0, 50)), int(rng.integers(1, 8))) for _ in range(n)
            ]
            kind = WeightKind.SL_PRIMARY if rng.integers(0, 2) else WeightKind.SL_DUAL
            w = WeightDistribution.build(D, kind, trace, values)
            assert sl_from_unitary(unitary_from_sl(w)) == w

    def test_wrong_kind_rejected(self):
        A = WeightDistribution.build(2, WeightKind.SL_PRIMARY, 1, [1, 0, 3])
        with pytest.raises(DomainError):
            shadow(A)
        with pytest.raises(DomainError):
            sl_from_unitary(A)

    def test_dual_unitary(self):
        hexa = qmds_unitary(CodeParams.qmds(6, 0, 2))
        assert list(dual_unitary(hexa).values) == HEXACODE_UNITARY
        five = dual_unitary(qmds_unitary(CodeParams.qmds(5, 1, 2)))
        assert five.kind is WeightKind.UNITARY_DUAL
        assert list(five.values) == [2, 5, 5, 10, 10, 4]
        single = WeightDistribution.build(2, WeightKind.UNITARY_PRIMARY, 1, [1, 1])
        assert list(dual_unitary(single).values) == [1, 1]

    def test_shadow_examples(self):
        ame4 = shadow(qmds_unitary(CodeParams.qmds(4, 0, 2)))
        assert list(ame4.values) == [Fraction(-1, 2), 0, 9, 0, Fraction(15, 2)]
        five = shadow(qmds_unitary(CodeParams.qmds(5, 1, 2)))
        assert list(five.values) == [2, 0, 0, 60, 30, 36]
        single = WeightDistribution.build(2, WeightKind.UNITARY_PRIMARY, 1, [1, 1])
        assert list(shadow(single).values) == [0, 2]

    def test_macwilliams_dual(self):
        A, B = sl_pair(2, 2, SHOR_A, SHOR_B)
        assert macwilliams_dual(A) == B
        five_b = macwilliams_dual(qmds_sl(CodeParams.qmds(5, 1, 2)))
        assert list(five_b.values) == [2, 0, 0, 60, 30, 36]

    @pytest.mark.parametrize("D", [2, 3, 4, 5])
    def test_substitution_paths_agree(self, D):
        for p in qmds_parameter_sets(20, D):
            unitary = qmds_unitary(p)
            assert sl_from_unitary_poly(unitary) == qmds_sl(p)
            assert sl_from_unitary(unitary) == qmds_sl(p)
            assert shadow_poly(unitary) == shadow(unitary)


class TestCodeCheck:
    def test_shor(self):
        A, B = sl_pair(2, 2, SHOR_A, SHOR_B)
        result = code_check(A, B, 2)
        assert result.distance == 3
        assert not result.pure

    def test_reduced_shor(self):
        A, B = sl_pair(2, 4, REDUCED_SHOR_A, REDUCED_SHOR_B)
        assert code_check(A, B, 4).distance == 1

    def test_hexacode(self):
        values = [1, 0, 0, 0, 45, 0, 18]
        A, B = sl_pair(2, 1, values, values)
        result = code_check(A, B, 1)
        assert result.distance == 4
        assert result.pure

    def test_state_without_weights_has_distance_n_plus_one(self):
        A, B = sl_pair(2, 1, [1, 0, 0], [1, 0, 0])
        assert code_check(A, B, 1).distance == 3

    def test_inconsistent_pair(self):
        A, B = sl_pair(2, 1, [1, 1], [1, 0])
        with pytest.raises(InconsistencyError):
            code_check(A, B, 1)

    def test_kind_and_shape_checked(self):
        A, B = sl_pair(2, 1, [1, 0, 3], [1, 0, 3])
        with pytest.raises(DomainError):
            code_check(B, A, 1)
        _, short = sl_pair(2, 1, [1, 1], [1, 1])
        with pytest.raises(DomainError):
            code_check(A, short, 1)
        with pytest.raises(DomainError):
            code_check(A, B, 0)

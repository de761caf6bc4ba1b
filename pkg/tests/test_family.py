# Area: Feasibility
# PRD: docs/prd-qweight.md
"""Tests for family scans: chain order, pairing, propagation and upper members."""
from fractions import Fraction

import pytest

from qweight.enumerators import CodeParams, qmds_unitary, shadow
from qweight.feasibility import (
    FeasibilityVerdict,
    Reason,
    Status,
    Witness,
    family_scan,
    qubit_max_distance,
)
from qweight.feasibility.family import _pair_purification, _propagate
from qweight.shared.errors import DomainError


def member(alpha, d, D, status=Status.NOT_EXCLUDED, reason=None):
    return FeasibilityVerdict(CodeParams.family_member(alpha, d, D), status, reason)


def sweep(D):
    for total in range(4, 2 * (D ** 2 - 1) + 5, 2):
        yield family_scan(total, D)


class TestFamilyScan:
    @pytest.mark.parametrize("total,D,upper", [
        (4, 2, "[[3,1,2]]"),
        (6, 2, "[[6,0,4]]"),
        (8, 2, "[[5,3,2]]"),
        (4, 3, "[[4,0,3]]"),
        (8, 3, "[[6,2,3]]"),
        (10, 3, "[[10,0,6]]"),
        (12, 3, "[[8,4,3]]"),
        (14, 3, "[[11,3,5]]"),
        (16, 3, "[[11,5,4]]"),
        (12, 4, "[[10,2,5]]"),
        (26, 4, "[[23,3,11]]"),
        (28, 5, "[[26,2,13]]"),
    ])
    def test_upper_member(self, total, D, upper):
        assert family_scan(total, D).upper.label == upper

    def test_chain_order(self):
        scan = family_scan(12, 3)
        assert [v.params.d for v in scan.verdict_chain] == [7, 6, 5, 4, 3, 2, 1]
        assert all(v.params.n_plus_k == 12 for v in scan.verdict_chain)

    def test_qutrit_family_twelve(self):
        scan = family_scan(12, 3)
        for d in (4, 5, 6, 7):
            verdict = scan.verdict_for(d)
            assert verdict.reason is Reason.SHADOW
            assert verdict.witness.index == 0
        assert scan.verdict_for(3).status is Status.NOT_EXCLUDED
        assert scan.verdict_for(2).status is Status.TRIVIAL
        assert scan.verdict_for(1).status is Status.TRIVIAL

    def test_qutrit_family_fourteen_witnesses(self):
        scan = family_scan(14, 3)
        assert scan.verdict_for(6).witness.index == 1
        assert scan.verdict_for(8).witness.index == 2

    def test_qubit_families(self):
        four = family_scan(4, 2)
        assert four.verdict_for(3).witness == Witness(0, Fraction(-1, 2))
        assert four.upper_verdict.status is Status.TRIVIAL
        eight = family_scan(8, 2)
        assert eight.verdict_for(5).reason is Reason.LENGTH_BOUND

    def test_five_family_twenty_eight(self):
        scan = family_scan(28, 5)
        assert scan.verdict_for(15).reason is Reason.SHADOW
        assert scan.verdict_for(14).reason is Reason.SHADOW
        assert scan.upper == CodeParams.qmds(26, 2, 5)

    def test_invalid_family(self):
        with pytest.raises(DomainError):
            family_scan(11, 3)
        with pytest.raises(DomainError):
            family_scan(2, 3)
        with pytest.raises(DomainError):
            family_scan(8, 1)

    def test_verdict_for_unknown_distance(self):
        with pytest.raises(StopIteration):
            family_scan(8, 3).verdict_for(9)


class TestScanInvariants:
    @pytest.mark.parametrize("D", [2, 3, 4, 5])
    def test_excluded_set_is_upward_closed(self, D):
        for scan in sweep(D):
            analyzed = [v for v in scan.verdict_chain if v.params.d >= 3]
            excluded = [v.params.d for v in analyzed if v.excluded]
            if excluded:
                assert all(v.excluded for v in analyzed if v.params.d > min(excluded))
            assert scan.upper.d == max(v.params.d for v in scan.verdict_chain if not v.excluded)

    @pytest.mark.parametrize("D", [2, 3, 4, 5])
    def test_top_pair_agrees(self, D):
        for scan in sweep(D):
            chain = scan.verdict_chain
            if chain[1].params.d >= 3:
                assert chain[0].excluded == chain[1].excluded

    @pytest.mark.parametrize("D", [2, 3, 4, 5])
    def test_shadow_witnesses_reproduce(self, D):
        for scan in sweep(D):
            for v in scan.verdict_chain:
                if v.reason is not Reason.SHADOW:
                    continue
                values = shadow(qmds_unitary(v.params)).values
                assert values[v.witness.index] == v.witness.value
                assert all(s >= 0 for s in values[:v.witness.index])

    @pytest.mark.parametrize("D", [2, 3, 4, 5, 6, 7])
    def test_nothing_survives_beyond_length_limit(self, D):
        limit = 2 * (D ** 2 - 1)
        for total in (limit + 2, limit + 4):
            scan = family_scan(total, D)
            assert all(v.excluded for v in scan.verdict_chain if v.params.d >= 3)
            assert scan.upper.d == 2

    def test_qubit_upper_respects_shadow_bounds(self):
        for total in range(4, 41, 2):
            for v in family_scan(total, 2).verdict_chain:
                if v.params.d >= 3 and not v.excluded:
                    assert v.params.d <= qubit_max_distance(v.params.n, v.params.k == 0)


class TestChainRules:
    def test_pairing_excludes_second_member(self):
        chain = [member(4, 5, 3, Status.EXCLUDED, Reason.LENGTH_BOUND), member(4, 4, 3), member(4, 3, 3)]
        _pair_purification(chain)
        assert chain[1].reason is Reason.PURIFICATION
        assert not chain[2].excluded

    def test_pairing_excludes_top_member(self):
        chain = [member(4, 5, 3), member(4, 4, 3, Status.EXCLUDED, Reason.LENGTH_BOUND)]
        _pair_purification(chain)
        assert chain[0].reason is Reason.PURIFICATION

    def test_pairing_skipped_for_distance_two(self):
        chain = [member(2, 3, 3, Status.EXCLUDED, Reason.LENGTH_BOUND), member(2, 2, 3, Status.TRIVIAL)]
        _pair_purification(chain)
        assert chain[1].status is Status.TRIVIAL

    def test_propagation(self):
        chain = [member(5, d, 3) for d in (6, 5, 4, 3)]
        chain[2] = member(5, 4, 3, Status.EXCLUDED, Reason.LENGTH_BOUND)
        _propagate(chain)
        assert [v.reason for v in chain] == [
            Reason.PROPAGATION, Reason.PROPAGATION, Reason.LENGTH_BOUND, None,
        ]

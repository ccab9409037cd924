from fractions import Fraction

import pytest

from elicit.exceptions import InvalidArgumentError, NotComputableError
from elicit.profiles.core import CandidateSet, pairwise_matrix
from elicit.profiles.generators import random_profile
from elicit.queries.session import QuerySession
from elicit.rules.presets import preset, resolve_vector
from elicit.scoring.basis import BasisFamily, basis_vector, minimal_query_size, span_membership
from elicit.scoring.scores import (
    borda_from_pairwise,
    score,
    score_via_queries,
    scores,
    winner_via_queries,
    winners,
)
from elicit.scoring.separation import separating_index
from elicit.scoring.simplex import compositions, simplex_coordinates, simplex_grid
from elicit.scoring.vectors import ScoringVector
from elicit.utils.helpers import binomial


class TestScoringVector:
    def test_parse_and_format(self):
        alpha = ScoringVector.parse("1/2, 0 ,-1/2")
        assert alpha.m == 3
        assert alpha.format() == "1/2,0/1,-1/2"

    def test_affine(self):
        assert ScoringVector.of([1, 0]).affine(2, 1) == ScoringVector.of([3, 1])

    def test_presets(self):
        assert preset("plurality", 3) == ScoringVector.of([1, 0, 0])
        assert preset("borda", 3) == ScoringVector.of([2, 1, 0])
        assert preset("veto", 3) == ScoringVector.of([0, 0, -1])
        assert resolve_vector("3,2,1,0", 4) == preset("borda", 4)
        with pytest.raises(InvalidArgumentError):
            preset("copeland", 3)


class TestBasis:
    def test_basis_vectors(self):
        assert basis_vector(4, 2, 1) == ScoringVector.of([3, 2, 1, 0])
        assert basis_vector(4, 2, 2) == ScoringVector.of([0, 1, 2, 3])
        assert basis_vector(3, 1, 1) == ScoringVector.of([1, 1, 1])

    def test_plurality_is_outside_below_m(self):
        decision = span_membership(preset("plurality", 4), 3)
        assert not decision.member
        assert decision.residual is not None and any(decision.residual)
        assert decision.coefficients is None

    def test_borda_is_inside_at_two(self):
        decision = span_membership(preset("borda", 5), 2)
        assert decision.member
        assert BasisFamily.build(5, 2).combine(decision.coefficients) == preset("borda", 5)

    def test_full_query_size_contains_everything(self):
        assert span_membership(preset("plurality", 4), 4).member

    @pytest.mark.parametrize(
        "alpha, expected",
        [("1,1,1,1", 1), ("3,2,1,0", 2), ("1,0,0,0", 4), ("1,0,-1", 2), ("0,0,-1", 3), ("9,4,1,0", 3)],
    )
    def test_minimal_query_size(self, alpha, expected):
        assert minimal_query_size(ScoringVector.parse(alpha)) == expected


class TestScores:
    def test_direct_scores(self, split_profile):
        assert scores(split_profile, preset("plurality", 3)) == (Fraction(1, 2), 0, Fraction(1, 2))
        assert winners(split_profile, preset("plurality", 3)) == ["a", "c"]
        assert score(split_profile, preset("borda", 3), "b") == 1

    def test_borda_from_pairwise(self):
        profile = random_profile(CandidateSet.letters(5), seed=4)
        assert borda_from_pairwise(profile) == scores(profile, preset("borda", 5))

    def test_signed_borda_identity_for_three_candidates(self):
        profile = random_profile(CandidateSet.letters(3), seed=9)
        matrix = pairwise_matrix(profile)
        p1, p2, p3 = matrix[0][1], matrix[1][2], matrix[2][0]
        alpha = ScoringVector.of([1, 0, -1])
        assert scores(profile, alpha) == (p1 - p3, p2 - p1, p3 - p2)

    @pytest.mark.parametrize("m, t", [(3, 2), (4, 2), (4, 3), (5, 3)])
    def test_scores_via_queries(self, m, t):
        profile = random_profile(CandidateSet.letters(m), seed=m * 10 + t)
        alpha = BasisFamily.build(m, t).combine(tuple(Fraction(k + 1, 2) for k in range(t)))
        session = QuerySession(profile, t)
        for c in range(m):
            assert score_via_queries(session, alpha, c) == score(profile, alpha, c)
        assert winner_via_queries(session, alpha) == winners(profile, alpha)
        assert session.query_count == binomial(m, t)

    def test_borda_via_pairwise_queries(self, three_cycle):
        session = QuerySession(three_cycle, 2)
        assert winner_via_queries(session, preset("borda", 3)) == ["a", "b", "c"]
        assert session.query_count == 3

    def test_plurality_is_not_computable_below_m(self, three_cycle):
        with pytest.raises(NotComputableError):
            winner_via_queries(QuerySession(three_cycle, 2), preset("plurality", 3))


class TestSeparation:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_plurality_certificate(self, m):
        certificate = separating_index(preset("plurality", m), m - 1)
        assert certificate.index == 1
        assert certificate.gap == Fraction(1, 2 ** (m - 2))
        assert certificate.inner == list(CandidateSet.letters(m).labels)
        assert certificate.outer == []

    def test_triangular_differences(self):
        certificate = separating_index(preset("plurality", 5), 2)
        for i, s in enumerate(certificate.differences, start=1):
            assert all(x == 0 for x in s[: i - 1])
            assert s[i - 1] != 0

    def test_members_have_no_certificate(self):
        with pytest.raises(InvalidArgumentError):
            separating_index(preset("borda", 4), 2)


class TestSimplex:
    def test_compositions(self):
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]

    def test_coordinates(self):
        assert simplex_coordinates(ScoringVector.of([3, 2, 1, 0])) == tuple(Fraction(k, 6) for k in (3, 2, 1, 0))
        assert simplex_coordinates(ScoringVector.of([2, 2])) is None

    def test_grid(self):
        rows = simplex_grid(3, 3)
        assert len(rows) == 10
        constant = [r for r in rows if r.constant]
        assert len(constant) == 1 and constant[0].tstar == 1
        assert all(1 <= r.tstar <= 3 for r in rows)

from fractions import Fraction

import pytest

from elicit.exceptions import InvalidArgumentError
from elicit.profiles.core import CandidateSet, Profile
from elicit.profiles.generators import random_profile
from elicit.queries.session import QuerySession
from elicit.rules.condorcet import condorcet_query_bound, condorcet_via_queries, condorcet_winner
from elicit.rules.presets import plurality_score, preset
from elicit.rules.stv import plurality_on, stv_winners
from elicit.rules.three_candidate import guess_success, one_query_success, two_query_success
from elicit.scoring.vectors import ScoringVector


class TestPresets:
    def test_antiborda_negates_borda(self):
        assert preset("antiborda", 4) == ScoringVector.of([-3, -2, -1, 0])

    def test_names_are_case_insensitive(self):
        assert preset(" Borda ", 3) == preset("borda", 3)

    def test_plurality_score(self, split_profile):
        assert plurality_score(split_profile, "c") == Fraction(1, 2)

    def test_candidate_count_must_be_positive(self):
        with pytest.raises(InvalidArgumentError):
            preset("plurality", 0)


class TestStv:
    def test_cycle_has_every_candidate_as_winner(self, three_cycle):
        result = stv_winners(three_cycle)
        assert result.winners == ["a", "b", "c"]
        assert [trace.winner for trace in result.traces] == ["a", "b", "c"]

    def test_traces_follow_valid_eliminations(self, three_cycle):
        trace = stv_winners(three_cycle).traces[0]
        assert [step.eliminated for step in trace.steps] == ["c", "b"]
        assert trace.steps[0].plurality == {"a": Fraction(1, 3), "b": Fraction(1, 3), "c": Fraction(1, 3)}

    def test_point_mass(self, abc):
        result = stv_winners(Profile.point_mass(abc, ("a", "b", "c")))
        assert result.winners == ["a"]

    def test_single_candidate(self):
        candidates = CandidateSet.letters(1)
        result = stv_winners(Profile.point_mass(candidates, ("a",)))
        assert result.winners == ["a"]
        assert result.traces[0].steps == []

    def test_plurality_on_remaining(self, three_cycle):
        assert plurality_on(three_cycle, (1, 2)) == {1: Fraction(2, 3), 2: Fraction(1, 3)}


class TestCondorcet:
    @pytest.mark.parametrize("m, bound", [(2, 1), (3, 3), (4, 4), (5, 6), (8, 11), (16, 26)])
    def test_query_bound(self, m, bound):
        assert condorcet_query_bound(m) == bound

    def test_cycle_has_no_winner(self, three_cycle):
        run = condorcet_via_queries(QuerySession(three_cycle, 2))
        assert run.winner is None
        assert run.champion == "c"
        assert run.queries_used == 3
        assert condorcet_winner(three_cycle) is None

    def test_point_mass_winner(self, abc):
        profile = Profile.point_mass(abc, ("b", "c", "a"))
        run = condorcet_via_queries(QuerySession(profile, 2))
        assert run.winner == "b"
        assert condorcet_winner(profile) == "b"

    @pytest.mark.parametrize("m", [2, 5, 7, 12, 16])
    def test_matches_brute_force_within_bound(self, m):
        candidates = CandidateSet.letters(m)
        for seed in range(5):
            profile = random_profile(candidates, seed=seed, support=3)
            run = condorcet_via_queries(QuerySession(profile, 2))
            assert run.winner == condorcet_winner(profile)
            assert run.queries_used <= condorcet_query_bound(m)

    def test_needs_pairwise_queries(self, three_cycle):
        with pytest.raises(InvalidArgumentError):
            condorcet_via_queries(QuerySession(three_cycle, 1))


class TestThreeCandidateAlgorithms:
    def test_point_mass(self, abc):
        profile = Profile.point_mass(abc, ("a", "b", "c"))
        assert guess_success(profile) == Fraction(1, 3)
        assert one_query_success(profile) == Fraction(2, 3)
        assert two_query_success(profile) == Fraction(2, 3)

    def test_every_candidate_wins_the_cycle(self, three_cycle):
        assert guess_success(three_cycle) == 1
        assert one_query_success(three_cycle) == 1
        assert two_query_success(three_cycle) == 1

    def test_three_candidates_only(self):
        profile = random_profile(CandidateSet.letters(4), seed=0)
        with pytest.raises(InvalidArgumentError):
            guess_success(profile)

from fractions import Fraction

import pytest

from elicit.constructions.ambiguity import ambiguity_hypothesis
from elicit.constructions.embedding import embedded_profile
from elicit.constructions.fibonacci import (
    fibonacci_consistent_set,
    fibonacci_instance,
    fibonacci_success_bound,
    in_event,
    margins_to_profile,
    scale,
    scaled_margins,
    shifted_fibonacci,
)
from elicit.constructions.parity import parity_pair
from elicit.constructions.query_complexity import (
    bound_curve,
    bound_success_probability,
    deceive_deterministic,
    first_uncovered,
    query_complexity_instance,
    uniform_grid,
)
from elicit.constructions.stv_family import stv_family, stv_parameters
from elicit.constructions.winner_family import winner_family
from elicit.exceptions import InvalidArgumentError
from elicit.profiles.core import (
    CandidateSet,
    Profile,
    pairwise_matrix,
    restrict_profile,
    uniform_over,
    uniform_profile,
)
from elicit.queries.verifier import indistinguishable
from elicit.rules.presets import plurality_score, preset
from elicit.rules.stv import plurality_on, stv_winners
from elicit.scoring.scores import winners
from elicit.scoring.vectors import ScoringVector


class TestParityPair:
    def test_three_candidates(self, abc):
        pair = parity_pair(abc, "a", "b")
        assert pair.profile == Profile(abc, {("a", "b", "c"): "1/2", ("c", "b", "a"): "1/2"})
        assert plurality_score(pair.profile, "a") == Fraction(1, 2)

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_plurality_gap_halves_with_each_candidate(self, m):
        pair = parity_pair(CandidateSet.letters(m), "a", "b")
        assert plurality_score(pair.profile, "a") == Fraction(1, 2 ** (m - 2))
        assert plurality_score(pair.profile, "b") == 0
        assert pair.profile.total() == 1

    def test_distinct_candidates_required(self, abc):
        with pytest.raises(InvalidArgumentError):
            parity_pair(abc, "a", "a")


class TestEmbedding:
    def test_prefix_and_suffix(self):
        candidates = CandidateSet.letters(4)
        inner = Profile.point_mass(candidates.subset([0, 1]), ("b", "a"))
        profile = embedded_profile(candidates, ["a", "b"], ["d", "c"], 2, inner)
        assert profile == Profile.point_mass(candidates, ("d", "b", "a", "c"))

    def test_partition_required(self):
        candidates = CandidateSet.letters(4)
        inner = Profile.point_mass(candidates.subset([0, 1]), ("a", "b"))
        with pytest.raises(InvalidArgumentError):
            embedded_profile(candidates, ["a", "b"], ["c"], 1, inner)


class TestWinnerFamily:
    def test_every_candidate_wins_its_profile(self, abc):
        pair = parity_pair(abc, "a", "b")
        plurality = preset("plurality", 3)
        family = winner_family(pair.profile, "a", "b", plurality)
        assert family.uniform == uniform_profile(abc)
        for label, profile in family.profiles.items():
            assert winners(profile, plurality) == [label]
            assert indistinguishable(profile, family.uniform, 2).result

    def test_labels_swap_when_b_scores_higher(self, abc):
        pair = parity_pair(abc, "a", "b")
        family = winner_family(pair.profile, "b", "a", preset("plurality", 3))
        assert (family.a, family.b) == ("a", "b")

    def test_equal_scores_rejected(self, split_profile):
        with pytest.raises(InvalidArgumentError):
            winner_family(split_profile, "a", "c", preset("plurality", 3))

    def test_distinguishable_transposition_rejected(self, abc):
        profile = Profile.point_mass(abc, ("a", "b", "c"))
        with pytest.raises(InvalidArgumentError):
            winner_family(profile, "a", "b", preset("plurality", 3))

    def test_ambiguity_hypothesis_holds(self, abc):
        plurality = preset("plurality", 3)
        pair = parity_pair(abc, "a", "b")
        family = winner_family(pair.profile, "a", "b", plurality)
        check = ambiguity_hypothesis(family.profiles, 2, lambda p: winners(p, plurality))
        assert check.passed
        assert check.pairs_checked == 3

    def test_ambiguity_hypothesis_reports_shared_winner(self, abc, split_profile):
        profiles = {"a": Profile.point_mass(abc, ("a", "b", "c")), "c": split_profile}
        check = ambiguity_hypothesis(profiles, 2, lambda p: winners(p, preset("plurality", 3)))
        assert not check.passed
        assert "profile c" in check.witness


class TestStvFamily:
    def test_parameters(self, abc):
        params = stv_parameters(abc)
        assert params.epsilon == Fraction(1, 9)
        assert sorted(params.rankings) == [(0, 2, 1), (1, 0, 2), (2, 1, 0)]
        assert params.next(2) == 0

    @pytest.mark.parametrize("epsilon", ["1/5", "0", "-1/10"])
    def test_epsilon_range(self, abc, epsilon):
        with pytest.raises(InvalidArgumentError):
            stv_parameters(abc, epsilon)

    def test_two_candidates_rejected(self):
        with pytest.raises(InvalidArgumentError):
            stv_parameters(CandidateSet.letters(2))

    def test_unique_stv_winners(self, abc):
        profiles = stv_family(abc)
        for label, profile in profiles.items():
            assert stv_winners(profile).winners == [label]
        assert indistinguishable(profiles["a"], profiles["b"], 2).result

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_next_eliminated_trails_in_uniform_part(self, m):
        candidates = CandidateSet.letters(m)
        params = stv_parameters(candidates)
        weighted = 1 - params.epsilon
        spread = uniform_over(candidates, params.rankings)
        for c in range(m):
            order = [params.next(c)]
            while len(order) < m - 1:
                order.append(params.next(order[-1]))
            # after the first elimination the uniform part alone fixes who goes next
            for k in range(1, m - 1):
                remaining = tuple(x for x in range(m) if x not in order[:k])
                totals = plurality_on(spread, remaining)
                trailing = order[k]
                gap = weighted / (m * (len(remaining) - 1))
                for other in remaining:
                    if other != trailing:
                        assert weighted * (totals[other] - totals[trailing]) == gap


class TestQueryComplexity:
    def test_borda_instance(self, abc):
        borda = preset("borda", 3)
        instance = query_complexity_instance(borda)
        assert instance.tstar == 2
        assert instance.inner == (0, 1)
        assert winners(instance.profile, borda) == [instance.winner]
        uniform_ac = uniform_profile(abc.subset([0, 2]))
        assert restrict_profile(instance.profile, ["a", "c"]) == uniform_ac

    def test_constant_vector_rejected(self):
        with pytest.raises(InvalidArgumentError):
            query_complexity_instance(ScoringVector.of([1, 1, 1]))

    def test_tstar_must_be_minimal(self):
        with pytest.raises(InvalidArgumentError):
            query_complexity_instance(preset("borda", 3), tstar=3)

    def test_first_uncovered(self):
        assert first_uncovered(3, 2, [(0, 1)]) == (0, 2)
        assert first_uncovered(3, 2, [(0, 1, 2)]) is None

    def test_deception(self, abc):
        borda = preset("borda", 3)
        instance = query_complexity_instance(borda)
        deception = deceive_deterministic(instance, [["a", "b"]], "a")
        assert deception.uncovered == (0, 2)
        assert deception.winner == "c"
        assert winners(deception.profile, borda) == ["c"]
        assert restrict_profile(deception.profile, ["a", "b"]) == uniform_profile(abc.subset([0, 1]))

    def test_covering_queries_cannot_be_deceived(self):
        instance = query_complexity_instance(preset("borda", 3))
        with pytest.raises(InvalidArgumentError):
            deceive_deterministic(instance, [["a", "b"], ["a", "c"], ["b", "c"]], "a")

    @pytest.mark.parametrize(
        "delta, expected",
        [("0", Fraction(1, 3)), ("1/3", Fraction(2, 3)), ("2/3", Fraction(5, 6)), ("1", Fraction(1))],
    )
    def test_bound(self, delta, expected):
        assert bound_success_probability(delta, 3, 2) == expected

    def test_bound_curve_carries_known_optima(self):
        rows = bound_curve(3, 2, uniform_grid(3))
        assert [r.optimal for r in rows] == [Fraction(1, 3), Fraction(1, 3), Fraction(1, 2), Fraction(1)]
        assert all(r.baseline == Fraction(1, 3) for r in rows)
        assert all(r.optimal <= r.bound for r in rows)
        assert bound_curve(4, 2, ["1/2"])[0].optimal is None

    def test_delta_range(self):
        with pytest.raises(InvalidArgumentError):
            bound_success_probability("3/2", 3, 2)


class TestFibonacci:
    def test_shifted_sequence(self):
        assert [shifted_fibonacci(k) for k in range(1, 11)] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
        assert scale(8) == 801

    @pytest.mark.parametrize("r, winner", [(1, "a"), (2, "c"), (3, "b"), (4, "a"), (5, "c"), (6, "b")])
    def test_winner_table(self, r, winner):
        instance = fibonacci_instance(8, 4, 300, r)
        assert instance.winner == winner
        assert winners(instance.profile, ScoringVector.of([1, 0, -1])) == [winner]

    def test_margins_match_profile(self):
        instance = fibonacci_instance(8, 4, 300, 5)
        assert instance.scaled == (300, 305, 313)
        matrix = pairwise_matrix(instance.profile)
        assert (matrix[0][1], matrix[1][2], matrix[2][0]) == instance.margins
        assert instance.margins[0] == Fraction(1, 3) + Fraction(300, 3 * 801)

    def test_margins_must_stay_in_range(self):
        with pytest.raises(InvalidArgumentError):
            margins_to_profile("1/4", "1/2", "1/2")

    def test_parameter_ranges(self):
        with pytest.raises(InvalidArgumentError):
            scaled_margins(8, 9, 300, 1)
        with pytest.raises(InvalidArgumentError):
            scaled_margins(8, 4, 300, 7)

    def test_event(self):
        assert in_event(8, 4, 300)
        assert not in_event(8, 2, 300)
        assert not in_event(8, 4, 88)

    def test_one_observed_margin(self):
        consistent = fibonacci_consistent_set(8, {1: 300}, i=4)
        assert [p.s for p in consistent] == [287, 287, 295, 292, 300, 300]
        assert [p.winner for p in consistent] == ["a", "c", "b", "a", "c", "b"]
        assert fibonacci_success_bound(consistent) == Fraction(1, 3)

    def test_two_observed_margins(self):
        consistent = fibonacci_consistent_set(8, {1: 300, 2: 292})
        assert [(p.i, p.s, p.r, p.winner) for p in consistent] == [(3, 292, 1, "a"), (3, 292, 2, "c")]
        assert fibonacci_success_bound(consistent) == Fraction(1, 2)

    def test_every_consistent_choice_reproduces_the_observation(self):
        observed = {1: 300, 2: 308}
        consistent = fibonacci_consistent_set(8, observed)
        assert len(consistent) == 4
        for p in consistent:
            scaled = scaled_margins(8, p.i, p.s, p.r)
            assert all(scaled[j - 1] == v for j, v in observed.items())

    def test_observation_keys(self):
        with pytest.raises(InvalidArgumentError):
            fibonacci_consistent_set(8, {4: 300})

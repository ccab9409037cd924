from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from elicit.constructions.parity import parity_pair
from elicit.exceptions import QueryTooLargeError
from elicit.profiles.core import (
    CandidateSet,
    Permutation,
    Profile,
    permute_profile,
    restrict_profile,
    uniform_profile,
)
from elicit.profiles.generators import random_profile
from elicit.queries.session import QuerySession, SampledSession, open_session, pairwise_preference, query, query_count
from elicit.queries.verifier import indistinguishable


class TestQuerySession:
    def test_answers_are_exact_restrictions(self, three_cycle):
        session = open_session(three_cycle, 2)
        assert query(session, ["b", "a"]) == restrict_profile(three_cycle, ["a", "b"])
        assert query_count(session) == 1
        assert session.log == [(0, 1)]

    def test_oversized_query_is_rejected_and_not_logged(self, three_cycle):
        session = QuerySession(three_cycle, 2)
        with pytest.raises(QueryTooLargeError) as excinfo:
            session.query(["a", "b", "c"])
        assert excinfo.value.size == 3
        assert excinfo.value.max_size == 2
        assert session.query_count == 0

    def test_lookup_reuses_answers(self, three_cycle):
        session = QuerySession(three_cycle, 2)
        session.lookup(["a", "c"])
        session.lookup(["c", "a"])
        assert session.query_count == 1
        session.query(["a", "c"])
        assert session.query_count == 2

    def test_transcript(self, split_profile):
        session = QuerySession(split_profile, 2)
        session.query(["a", "b"])
        transcript = session.transcript().model_dump(mode="json")
        assert transcript["max_size"] == 2
        assert transcript["queries"][0]["query"] == ["a", "b"]
        assert transcript["queries"][0]["response"]["rankings"] == [
            {"ranking": ["a", "b"], "probability": "1/2"},
            {"ranking": ["b", "a"], "probability": "1/2"},
        ]

    def test_pairwise_preference_orientation(self, three_cycle):
        session = QuerySession(three_cycle, 2)
        assert pairwise_preference(session, 0, 1) == Fraction(2, 3)
        assert pairwise_preference(session, 1, 0) == Fraction(1, 3)
        assert pairwise_preference(session, 2, 0) == Fraction(2, 3)


class TestSampledSession:
    def test_same_seed_same_samples(self, three_cycle):
        first = SampledSession(three_cycle, 2, seed=11).sample(["a", "b"], 50)
        second = SampledSession(three_cycle, 2, seed=11).sample(["a", "b"], 50)
        assert first == second
        assert sum(first.counts.values()) == 50

    def test_draw_index_advances(self, three_cycle):
        session = SampledSession(three_cycle, 2, seed=0)
        session.sample(["a", "b"], 10)
        report = session.sample(["a", "b"], 10)
        assert report.draw_index == 1
        assert session.query_count == 2

    def test_point_mass_samples_exactly(self, abc):
        profile = Profile.point_mass(abc, ("b", "c", "a"))
        report = SampledSession(profile, 3, seed=5).sample(["a", "b", "c"], 20)
        assert report.counts == {"b>c>a": 20}
        assert report.tv_distance == 0

    def test_tv_distance_is_a_probability(self, three_cycle):
        report = SampledSession(three_cycle, 3, seed=2).sample(["a", "b", "c"], 7)
        assert 0 <= report.tv_distance <= 1

    def test_mean_tv_distance_shrinks_with_sample_size(self, abc):
        profile = uniform_profile(abc)
        means = []
        for n in (10, 100, 1000):
            reports = [SampledSession(profile, 3, seed=seed).sample(["a", "b", "c"], n) for seed in range(20)]
            means.append(sum(r.tv_distance for r in reports) / len(reports))
        assert means[0] > means[1] > means[2]

    def test_size_limit_applies(self, three_cycle):
        with pytest.raises(QueryTooLargeError):
            SampledSession(three_cycle, 2).sample(["a", "b", "c"], 5)


class TestIndistinguishable:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_parity_pair_boundary(self, m):
        pair = parity_pair(CandidateSet.letters(m), "a", "b")
        assert indistinguishable(pair.profile, pair.transposed, m - 1).result
        report = indistinguishable(pair.profile, pair.transposed, m)
        assert not report.result
        assert len(report.witness.query) == m
        assert report.witness.first != report.witness.second

    def test_profile_matches_itself(self, three_cycle):
        report = indistinguishable(three_cycle, three_cycle, 3)
        assert report.result
        assert report.queries_checked == 1

    def test_witness_is_first_failing_query(self, three_cycle, split_profile):
        report = indistinguishable(three_cycle, split_profile, 2)
        assert not report.result
        assert report.witness.query == ["a", "b"]

    def test_workers_find_the_same_witness(self):
        candidates = CandidateSet.letters(5)
        first, second = random_profile(candidates, seed=1), random_profile(candidates, seed=2)
        serial = indistinguishable(first, second, 3, workers=1)
        threaded = indistinguishable(first, second, 3, workers=4)
        assert serial == threaded

    @hyp_settings(derandomize=True, deadline=None, max_examples=30)
    @given(st.integers(min_value=3, max_value=5), st.data())
    def test_relabeling_keeps_pairs_hidden(self, m, data):
        candidates = CandidateSet.letters(m)
        pi = Permutation(candidates, tuple(data.draw(st.permutations(range(m)))))
        pair = parity_pair(candidates, "a", "b")
        first, second = permute_profile(pair.profile, pi), permute_profile(pair.transposed, pi)
        assert indistinguishable(first, second, m - 1).result
        assert not indistinguishable(first, second, m).result

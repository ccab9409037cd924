"""
Rankings, candidate sets, permutations and exact preference profiles.

A ranking is a tuple of candidate indices, position 0 holding the most
preferred candidate. Every profile carries its CandidateSet; all algebra runs
on indices and labels are only used at the edges (documents, CLI, API).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from elicit.exceptions import InvalidArgumentError
from elicit.utils.helpers import RationalLike, parse_rational
from elicit.utils.logger import get_logger
from elicit.utils.validators import require, validate_candidate_count

logger = get_logger(__name__)

Ranking = Tuple[int, ...]
Candidate = Union[int, str]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class CandidateSet:
    """Ordered, distinct candidate labels; the input order is the canonical order"""

    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, "labels", labels)
        require(len(labels) >= 1, "a candidate set needs at least one candidate")
        require(len(set(labels)) == len(labels), f"candidate labels must be distinct: {list(labels)}")

    @classmethod
    def letters(cls, m: int) -> "CandidateSet":
        """Default labels a, b, c, ... (c1, c2, ... past 26 candidates)"""
        require(m >= 1, f"candidate count must be positive, got {m}")
        if m <= len(_LETTERS):
            return cls(tuple(_LETTERS[:m]))
        return cls(tuple(f"c{i + 1}" for i in range(m)))

    @property
    def m(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def index(self, candidate: Candidate) -> int:
        """Resolve a label or an index to an index"""
        if isinstance(candidate, bool):
            raise InvalidArgumentError(f"not a candidate: {candidate!r}")
        if isinstance(candidate, int):
            if 0 <= candidate < self.m:
                return candidate
            raise InvalidArgumentError(f"candidate index {candidate} outside 0..{self.m - 1}")
        try:
            return self.labels.index(str(candidate))
        except ValueError:
            raise InvalidArgumentError(f"unknown candidate {candidate!r}; candidates are {list(self.labels)}")

    def label(self, index: int) -> str:
        return self.labels[index]

    def resolve_subset(self, subset: Iterable[Candidate]) -> Tuple[int, ...]:
        """Sorted distinct indices of a nonempty candidate subset"""
        indices = sorted({self.index(c) for c in subset})
        require(len(indices) >= 1, "subset must be nonempty")
        return tuple(indices)

    def subset(self, indices: Sequence[int]) -> "CandidateSet":
        """Candidate set of the given indices, kept in canonical order"""
        return CandidateSet(tuple(self.labels[i] for i in sorted(indices)))

    def format_ranking(self, ranking: Ranking, separator: str = ">") -> str:
        return separator.join(self.labels[c] for c in ranking)

    def ranking_labels(self, ranking: Ranking) -> List[str]:
        return [self.labels[c] for c in ranking]

    def parse_ranking(self, order: Sequence[Candidate]) -> Ranking:
        """Ranking from a sequence of labels or indices; must rank every candidate once"""
        ranking = tuple(self.index(c) for c in order)
        check_ranking(ranking, self.m)
        return ranking

    def all_rankings(self) -> Iterator[Ranking]:
        """L(C) in canonical lexicographic order; refused past MAX_CANDIDATES"""
        validate_candidate_count(self.m)
        return permutations(range(self.m))


def check_ranking(ranking: Ranking, m: int):
    require(
        len(ranking) == m and sorted(ranking) == list(range(m)),
        f"ranking {ranking} is not a permutation of {m} candidates",
    )


@dataclass(frozen=True)
class Permutation:
    """A bijection of a candidate set onto itself; images[i] is pi(i)"""

    candidates: CandidateSet
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        require(
            sorted(images) == list(range(self.candidates.m)),
            f"permutation images {images} are not a bijection on {self.candidates.m} candidates",
        )

    @classmethod
    def identity(cls, candidates: CandidateSet) -> "Permutation":
        return cls(candidates, tuple(range(candidates.m)))

    @classmethod
    def transposition(cls, candidates: CandidateSet, a: Candidate, b: Candidate) -> "Permutation":
        """pi^{ab}: swaps a and b, fixes everything else"""
        ia, ib = candidates.index(a), candidates.index(b)
        require(ia != ib, "a transposition needs two distinct candidates")
        images = list(range(candidates.m))
        images[ia], images[ib] = ib, ia
        return cls(candidates, tuple(images))

    def __call__(self, candidate: int) -> int:
        return self.images[candidate]

    def inverse(self) -> "Permutation":
        inverse = [0] * len(self.images)
        for source, target in enumerate(self.images):
            inverse[target] = source
        return Permutation(self.candidates, tuple(inverse))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other"""
        require(self.candidates == other.candidates, "cannot compose permutations of different candidate sets")
        return Permutation(self.candidates, tuple(self.images[other.images[i]] for i in range(len(self.images))))

    def fixes(self, indices: Iterable[int]) -> bool:
        return all(self.images[i] == i for i in indices)


def all_permutations(candidates: CandidateSet) -> Iterator[Permutation]:
    """All m! permutations, images in lexicographic order"""
    validate_candidate_count(candidates.m)
    for images in permutations(range(candidates.m)):
        yield Permutation(candidates, images)


class Profile:
    """
    Exact probability distribution over rankings of one candidate set.
    Only the support is stored; masses are positive Fractions summing to exactly 1.
    """

    __slots__ = ("candidates", "_mass")

    def __init__(self, candidates: CandidateSet, mass: Mapping[Sequence[Candidate], RationalLike]):
        support: Dict[Ranking, Fraction] = {}
        for order, probability in mass.items():
            ranking = candidates.parse_ranking(order)
            value = parse_rational(probability)
            require(value >= 0, f"negative probability {value} on {candidates.format_ranking(ranking)}")
            require(ranking not in support, f"duplicate ranking {candidates.format_ranking(ranking)}")
            if value:
                support[ranking] = value
        total = sum(support.values(), Fraction(0))
        require(total == 1, f"probabilities must sum to exactly 1, got {total}")
        self.candidates = candidates
        self._mass = support

    @classmethod
    def _trusted(cls, candidates: CandidateSet, mass: Dict[Ranking, Fraction]) -> "Profile":
        """Wrap an already-normalized support map without re-validating it"""
        profile = cls.__new__(cls)
        profile.candidates = candidates
        profile._mass = {ranking: value for ranking, value in mass.items() if value}
        return profile

    @classmethod
    def point_mass(cls, candidates: CandidateSet, order: Sequence[Candidate]) -> "Profile":
        return cls(candidates, {tuple(order): Fraction(1)})

    @classmethod
    def from_pairs(
        cls, candidates: CandidateSet, pairs: Iterable[Tuple[Sequence[Candidate], RationalLike]]
    ) -> "Profile":
        """Build from (ranking, probability) pairs, merging repeated rankings"""
        merged: Dict[Ranking, Fraction] = {}
        for order, probability in pairs:
            ranking = candidates.parse_ranking(order)
            _accumulate(merged, ranking, parse_rational(probability))
        return cls(candidates, merged)

    @property
    def m(self) -> int:
        return self.candidates.m

    def mass(self, ranking: Sequence[Candidate]) -> Fraction:
        return self._mass.get(self.candidates.parse_ranking(ranking), Fraction(0))

    @property
    def support(self) -> Tuple[Ranking, ...]:
        return tuple(sorted(self._mass))

    def items(self) -> List[Tuple[Ranking, Fraction]]:
        """Support entries in canonical lexicographic ranking order"""
        return sorted(self._mass.items())

    def total(self) -> Fraction:
        return sum(self._mass.values(), Fraction(0))

    def __len__(self) -> int:
        return len(self._mass)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self.candidates == other.candidates and self._mass == other._mass

    def __hash__(self) -> int:
        return hash((self.candidates, frozenset(self._mass.items())))

    def __repr__(self) -> str:
        body = " + ".join(
            f"{value}({self.candidates.format_ranking(ranking)})" for ranking, value in self.items()
        )
        return f"Profile[{','.join(self.candidates.labels)}]({body})"


def _accumulate(target: Dict[Ranking, Fraction], ranking: Ranking, weight: Fraction):
    value = target.get(ranking, Fraction(0)) + weight
    if value:
        target[ranking] = value
    else:
        target.pop(ranking, None)


def restrict_ranking(ranking: Ranking, subset: Iterable[int]) -> Ranking:
    """
    Order of the members of subset as they appear in ranking, re-indexed to
    the subset's canonical order (smallest index becomes 0).
    """
    members = sorted(set(subset))
    require(len(members) >= 1, "subset must be nonempty")
    require(
        all(0 <= c < len(ranking) for c in members),
        f"subset {members} contains candidates foreign to a ranking of {len(ranking)}",
    )
    new_index = {c: i for i, c in enumerate(members)}
    return tuple(new_index[c] for c in ranking if c in new_index)


def permute_ranking(pi: Permutation, ranking: Ranking) -> Ranking:
    """Position j holds pi(sigma(j))"""
    require(
        len(ranking) == pi.candidates.m,
        f"ranking over {len(ranking)} candidates cannot be permuted by a permutation of {pi.candidates.m}",
    )
    check_ranking(ranking, pi.candidates.m)
    return tuple(pi.images[c] for c in ranking)


def restrict_profile(profile: Profile, subset: Iterable[Candidate]) -> Profile:
    """Distribution of sigma|_S for sigma drawn from profile"""
    members = profile.candidates.resolve_subset(subset)
    if len(members) == profile.m:
        return profile
    new_index = {c: i for i, c in enumerate(members)}
    restricted: Dict[Ranking, Fraction] = {}
    for ranking, value in profile._mass.items():
        _accumulate(restricted, tuple(new_index[c] for c in ranking if c in new_index), value)
    return Profile._trusted(profile.candidates.subset(members), restricted)


def permute_profile(profile: Profile, pi: Permutation) -> Profile:
    """pi o profile: every support ranking relabeled through pi"""
    require(pi.candidates == profile.candidates, "permutation and profile have different candidate sets")
    images = pi.images
    return Profile._trusted(
        profile.candidates,
        {tuple(images[c] for c in ranking): value for ranking, value in profile._mass.items()},
    )


def transpose_profile(profile: Profile, a: Candidate, b: Candidate) -> Profile:
    """sigma^{a<->b}: a and b swapped in every ballot"""
    return permute_profile(profile, Permutation.transposition(profile.candidates, a, b))


def mix(parts: Sequence[Tuple[Profile, RationalLike]]) -> Profile:
    """Exact mixture; weights must be nonnegative and sum to exactly 1"""
    require(len(parts) >= 1, "a mixture needs at least one part")
    candidates = parts[0][0].candidates
    weights = [parse_rational(w) for _, w in parts]
    require(all(w >= 0 for w in weights), f"mixture weights must be nonnegative, got {weights}")
    total = sum(weights, Fraction(0))
    require(total == 1, f"mixture weights must sum to exactly 1, got {total}")
    mixed: Dict[Ranking, Fraction] = {}
    for (profile, _), weight in zip(parts, weights):
        require(profile.candidates == candidates, "all mixture parts must share one candidate set")
        if not weight:
            continue
        for ranking, value in profile._mass.items():
            _accumulate(mixed, ranking, weight * value)
    return Profile._trusted(candidates, mixed)


def pos_vector(profile: Profile, candidate: Candidate) -> Tuple[Fraction, ...]:
    """Entry j is Pr[sigma(j) = candidate]"""
    c = profile.candidates.index(candidate)
    vector = [Fraction(0)] * profile.m
    for ranking, value in profile._mass.items():
        vector[ranking.index(c)] += value
    return tuple(vector)


def uniform_profile(candidates: CandidateSet) -> Profile:
    """Unif(L(C))"""
    value = Fraction(1, factorial(candidates.m))
    return Profile._trusted(candidates, {ranking: value for ranking in candidates.all_rankings()})


def uniform_over(candidates: CandidateSet, rankings: Iterable[Sequence[Candidate]]) -> Profile:
    """Unif(R) for a nonempty set of rankings R"""
    distinct = {candidates.parse_ranking(order) for order in rankings}
    require(len(distinct) >= 1, "cannot build a uniform distribution over an empty ranking set")
    value = Fraction(1, len(distinct))
    return Profile._trusted(candidates, {ranking: value for ranking in distinct})


def pairwise_matrix(profile: Profile) -> Tuple[Tuple[Fraction, ...], ...]:
    """Entry [x][y] is Pr[x ranked above y]; the diagonal is zero"""
    m = profile.m
    matrix = [[Fraction(0)] * m for _ in range(m)]
    for ranking, value in profile._mass.items():
        for i, x in enumerate(ranking):
            for y in ranking[i + 1:]:
                matrix[x][y] += value
    return tuple(tuple(row) for row in matrix)

"""Profile documents: JSON text form with exact "p/q" probabilities."""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from elicit.exceptions import InvalidArgumentError
from elicit.models.documents import ProfileDocument, RankingMass
from elicit.profiles.core import CandidateSet, Profile
from elicit.utils.logger import get_logger

logger = get_logger(__name__)


def profile_to_document(profile: Profile) -> ProfileDocument:
    candidates = profile.candidates
    return ProfileDocument(
        candidates=list(candidates.labels),
        rankings=[
            RankingMass(ranking=candidates.ranking_labels(ranking), probability=value)
            for ranking, value in profile.items()
        ],
    )


def profile_from_document(document: ProfileDocument) -> Profile:
    candidates = CandidateSet(tuple(document.candidates))
    return Profile(candidates, {tuple(entry.ranking): entry.probability for entry in document.rankings})


def dumps_profile(profile: Profile, indent: int = 2) -> str:
    return profile_to_document(profile).model_dump_json(indent=indent)


def loads_profile(text: str) -> Profile:
    try:
        document = ProfileDocument.model_validate_json(text)
    except ValidationError as e:
        raise InvalidArgumentError(f"malformed profile document: {e}") from e
    return profile_from_document(document)


def save_profile(profile: Profile, path: Union[str, Path]):
    Path(path).write_text(dumps_profile(profile) + "\n", encoding="utf-8")
    logger.info(f"Wrote profile with {len(profile)} support rankings to {path}")


def load_profile(path: Union[str, Path]) -> Profile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidArgumentError(f"cannot read profile file {path}: {e}") from e
    return loads_profile(text)

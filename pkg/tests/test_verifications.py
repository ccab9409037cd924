import pytest

from elicit.config import VERIFICATION_ORDER
from elicit.exceptions import InvalidArgumentError
from elicit.verifications.base_verification import BaseVerification, CheckContext
from elicit.verifications.characterization_verification import CharacterizationVerification
from elicit.verifications.fibonacci_verification import FibonacciVerification
from elicit.verifications.verification_manager import VerificationManager


class AlwaysFails(BaseVerification):
    sizes = range(2, 4)

    def get_name(self) -> str:
        return "always-fails"

    def get_description(self) -> str:
        return "fails on m=3"

    def check_size(self, m: int, context: CheckContext):
        context.expect(True, "never")
        context.expect(m != 3, f"m={m}: refused")


class RaisesLibraryError(AlwaysFails):
    def check_size(self, m: int, context: CheckContext):
        raise InvalidArgumentError("bad input")


@pytest.fixture
def manager() -> VerificationManager:
    return VerificationManager()


class TestBaseVerification:
    def test_sizes_capped_by_max_m(self):
        verification = CharacterizationVerification()
        assert verification.select_sizes(max_m=4) == [2, 3, 4]
        assert verification.select_sizes(m=7) == [7]

    def test_failed_assertion_becomes_witness(self):
        result = AlwaysFails().run(max_m=5)
        assert not result.passed
        assert result.witness == "m=3: refused"
        assert result.checks == 4

    def test_library_error_becomes_witness(self):
        result = RaisesLibraryError().run()
        assert not result.passed
        assert result.witness == "InvalidArgumentError: bad input"


class TestVerificationManager:
    def test_registered_in_report_order(self, manager):
        assert list(manager.verifications) == VERIFICATION_ORDER
        status = manager.get_status()
        assert status["parity-pair"]["sizes"] == [3, 4, 5, 6]

    def test_unknown_name(self, manager):
        with pytest.raises(InvalidArgumentError):
            manager.run("plurality-is-fine")

    def test_single_size(self, manager):
        result = manager.run("parity-pair", m=4)
        assert result.passed
        assert result.details["sizes"] == [4]
        assert result.details["plurality_a_m4"] == "1/4"

    def test_alias_runs_the_named_verification(self, manager):
        result = manager.run("lemma1", m=4)
        assert result.name == "parity-pair"
        assert result.details["plurality_a_m4"] == "1/4"

    @pytest.mark.parametrize(
        "name", ["score-computation", "characterization", "separation", "covering", "query-complexity"]
    )
    def test_small_runs_pass(self, manager, name):
        result = manager.run(name, max_m=4, instances=10)
        assert result.passed, result.witness
        assert result.checks > 0

    def test_winner_family_and_stv(self, manager):
        for name in ("winner-family", "stv"):
            result = manager.run(name, max_m=3)
            assert result.passed, result.witness

    def test_condorcet(self, manager):
        result = manager.run("condorcet", max_m=8, instances=10)
        assert result.passed, result.witness

    def test_same_seed_same_result(self, manager):
        first = manager.run("properties", max_m=3, seed=3)
        second = manager.run("properties", max_m=3, seed=3)
        assert first == second
        assert first.passed, first.witness

    @pytest.mark.slow
    def test_fibonacci_smallest_n(self):
        result = FibonacciVerification(n=5).run()
        assert result.passed, result.witness
        assert {"worst_one_query_success", "worst_two_query_success"} <= set(result.details)

    @pytest.mark.slow
    def test_run_all(self, manager):
        results = manager.run_all(max_m=3, instances=5)
        assert [r.name for r in results] == VERIFICATION_ORDER
        assert all(r.passed for r in results), [r.witness for r in results if not r.passed]

import json
import logging

import pytest

from elicit.cli import run
from elicit.profiles.io import save_profile


@pytest.fixture(autouse=True)
def restore_logging():
    """The command line reconfigures the root logger; put pytest's handlers back"""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def profile_file(tmp_path, three_cycle):
    path = tmp_path / "cycle.json"
    save_profile(three_cycle, path)
    return str(path)


def _lines(capsys):
    return capsys.readouterr().out.splitlines()


class TestVerify:
    def test_parity_pair_passes(self, capsys):
        assert run(["verify", "parity-pair", "--m", "4"]) == 0
        (line,) = _lines(capsys)
        assert line.startswith('command="verify parity-pair" outcome=pass')
        assert '"plurality_a_m4":"1/4"' in line

    def test_alias_name(self, capsys):
        assert run(["verify", "lemma1", "--m", "4"]) == 0
        (line,) = _lines(capsys)
        assert line.startswith('command="verify parity-pair" outcome=pass')
        assert '"plurality_a_m4":"1/4"' in line

    def test_json_report(self, capsys):
        assert run(["verify", "characterization", "--max-m", "3", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["outcome"] == "pass"
        assert report["value"]["sizes"] == [2, 3]
        assert "wall_time" not in report

    def test_timings_are_opt_in(self, capsys):
        assert run(["verify", "parity-pair", "--m", "3", "--json", "--timings"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["wall_time"] >= 0
        assert report["memory_mb"] > 0


class TestValueCommands:
    def test_span_non_member(self, capsys):
        assert run(["span", "--alpha", "1,0,0,0", "--t", "3"]) == 0
        out = capsys.readouterr().out
        assert "outcome=value" in out
        assert '"verdict":"not member"' in out

    def test_span_with_preset(self, capsys):
        assert run(["span", "--alpha", "borda", "--m", "4", "--t", "2", "--json"]) == 0
        value = json.loads(capsys.readouterr().out)["value"]
        assert value["member"] is True
        assert value["verdict"] == "member"

    def test_tstar(self, capsys):
        assert run(["tstar", "--alpha", "plurality", "--m", "5", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["value"]["tstar"] == 5

    def test_winners_through_queries(self, capsys, profile_file):
        assert run(["winners", "--profile", profile_file, "--alpha", "borda", "--t", "2", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["value"]["winners"] == ["a", "b", "c"]
        assert report["query_count"] == 3

    def test_condorcet(self, capsys, profile_file):
        assert run(["condorcet", "--profile", profile_file, "--json"]) == 0
        value = json.loads(capsys.readouterr().out)["value"]
        assert value.get("winner") is None
        assert value.get("brute_force") is None
        assert value["champion"] == "c"

    def test_fibonacci_observation(self, capsys):
        assert run(["fibonacci", "--observe", "1=300,2=292", "--json"]) == 0
        value = json.loads(capsys.readouterr().out)["value"]
        assert len(value["consistent"]) == 2
        assert value["success"] == "1/2"

    def test_sample_is_deterministic(self, capsys, profile_file):
        argv = ["sample", "--profile", profile_file, "--query", "a,b", "--n", "40", "--seed", "7"]
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first


class TestCsvCommands:
    def test_simplex(self, capsys):
        assert run(["simplex", "--m", "3", "--grid", "3"]) == 0
        lines = _lines(capsys)
        assert lines[0] == "alpha_1,alpha_2,alpha_3,x_1,x_2,x_3,tstar"
        assert len(lines) == 11
        assert "1/3,1/3,1/3,,,,1" in lines

    def test_bound_curve(self, capsys):
        assert run(["bound-curve", "--m", "3", "--tstar", "2", "--grid", "6"]) == 0
        lines = _lines(capsys)
        assert lines[0] == "delta,bound,baseline,optimal"
        assert "2/3,5/6,1/3,1/2" in lines
        assert lines[-1] == "1/1,1/1,1/3,1/1"

    def test_cover_listing(self, capsys):
        assert run(["cover", "--max-m", "4", "--exact"]) == 0
        lines = _lines(capsys)
        assert lines[0] == "m,t,tstar,lower_bound,rational_bound,greedy,exact"
        assert "4,3,2,2,2/1,3,3" in lines

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "curve.csv"
        assert run(["bound-curve", "--m", "3", "--tstar", "2", "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert "2/3,5/6,1/3,1/2" in target.read_text().splitlines()


class TestErrors:
    def test_rejected_argument_exits_with_two(self, capsys):
        assert run(["span", "--alpha", "1,0", "--t", "3"]) == 2
        out = capsys.readouterr().out
        assert "outcome=error" in out
        assert "InvalidArgumentError" in out

    def test_refused_candidate_count(self, capsys):
        assert run(["parity-pair", "--m", "9"]) == 2
        assert "RefusedError" in capsys.readouterr().out

    def test_missing_flag(self, capsys):
        assert run(["bound-curve", "--m", "3"]) == 2
        assert "--tstar" in capsys.readouterr().out

    def test_plurality_through_small_queries(self, capsys, profile_file):
        assert run(["winners", "--profile", profile_file, "--alpha", "plurality", "--t", "2"]) == 2
        assert "NotComputableError" in capsys.readouterr().out

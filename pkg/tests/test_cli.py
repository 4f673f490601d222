"""End-to-end checks of the command-line interface.

Each test drives ``main`` directly with an argv list and inspects the exit
code plus whatever was printed -- the same contract shell scripts see.  One
test additionally goes through a real subprocess to prove the module is
runnable on its own.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from wildflowers.cli import main

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestEval:
    def test_text_output(self, capsys):
        code, out, err = run_cli(capsys, "eval", "* + *2")
        assert code == 0
        assert err == ""
        lines = out.splitlines()
        assert "input: * + *2" in lines
        assert "play: normal" in lines
        assert "outcome: N" in lines

    def test_json_output(self, capsys):
        code, payload, _ = run_json(capsys, "eval", "* + *2")
        assert code == 0
        assert payload == {"input": "* + *2", "play": "normal", "outcome": "N"}

    def test_misere_play_flag(self, capsys):
        code, payload, _ = run_json(
            capsys, "eval", "*2 + *3", "--play", "misere")
        assert code == 0
        assert payload == {"input": "*2 + *3", "play": "misere",
                           "outcome": "N"}

    def test_empty_position_prints_as_zero(self, capsys):
        code, payload, _ = run_json(capsys, "eval", "0", "--play", "misere")
        assert code == 0
        assert payload == {"input": "0", "play": "misere", "outcome": "N"}

    def test_parse_error_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "eval", "1 + @")
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")
        assert "unexpected character '@'" in err
        assert "offset 4" in err


class TestCanonical:
    def test_nim_sum_folds_to_one_heap(self, capsys):
        code, payload, _ = run_json(capsys, "canonical", "* + *2")
        assert code == 0
        assert payload == {"input": "* + *2", "canonical": "*3"}

    def test_number_arithmetic(self, capsys):
        code, payload, _ = run_json(capsys, "canonical", "1 + 1")
        assert code == 0
        assert payload["canonical"] == "2"

    def test_conjugate_sprigs_cancel(self, capsys):
        code, payload, _ = run_json(capsys, "canonical", "*:1 + ~(*:1)")
        assert code == 0
        assert payload == {"input": "*:1 + *:-1", "canonical": "0"}


class TestGenus:
    def test_nim_heap(self, capsys):
        code, payload, _ = run_json(capsys, "genus", "*2")
        assert code == 0
        assert payload == {
            "input": "*2",
            "genus": {"g_plus": 2, "g_minus": 2},
            "display": "2^2",
        }

    def test_partizan_input_is_an_error(self, capsys):
        code, out, err = run_cli(capsys, "genus", "1")
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")
        assert "impartial" in err


class TestClassify:
    def test_mixed_components(self, capsys):
        code, payload, _ = run_json(capsys, "classify", "*2:1 + *2")
        assert code == 0
        assert payload["input"] == "*2 + *2:1"
        heap, flower = payload["components"]

        assert heap["form"] == "*2"
        assert heap["impartial"] is True
        assert heap["genus"] == "2^2"
        assert heap["tameness"] == "firm"
        assert heap["restricted_fickle"] is False
        assert heap["restricted_firm"] is True
        assert heap["kernel_class"] == "restricted-firm"

        assert flower["form"] == "*2:1"
        assert flower["impartial"] is False
        assert flower["wildflower"] == {
            "base": "*2",
            "top": "1",
            "color": "blue",
            "height": 2,
            "head": [0, 1],
            "top_value": {"num": 1, "den_exp": 0},
            "member": True,
        }
        assert flower["kernel_class"] == "restricted-firm"

    def test_unclassifiable_component(self, capsys):
        code, payload, _ = run_json(capsys, "classify", "{1|0}")
        assert code == 0
        (comp,) = payload["components"]
        assert comp["impartial"] is False
        assert "wildflower" not in comp
        assert comp["kernel_class"] is None


class TestTwin:
    def test_wildflower_sum_is_verified(self, capsys):
        code, payload, _ = run_json(
            capsys, "twin", "*:1 + *2:1", "--family", "wildflowers")
        assert code == 0
        assert payload == {
            "input": "*:1 + *2:1",
            "family": "wildflowers",
            "kernel_member": True,
            "twin": "*:1 + *2:1",
            "normal_outcomes": ["L", "L"],
            "misere_outcomes": ["L", "L"],
            "verified": True,
        }

    def test_out_of_family_position_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "twin", "1", "--family", "sprigs")
        assert code == 2
        assert err.startswith("error: ")
        assert "sum of sprigs" in err


class TestCheck:
    def test_sprig_sweep(self, capsys):
        code, payload, _ = run_json(capsys, "check", "sprigs", "--bound", "1")
        assert code == 0
        assert payload == {
            "family": "sprigs",
            "bound": 1,
            "instances": 6,
            "failures": [],
            "ok": True,
        }

    def test_tame_sweep(self, capsys):
        code, payload, _ = run_json(capsys, "check", "tame", "--bound", "2")
        assert code == 0
        assert payload["instances"] == 4
        assert payload["ok"] is True


class TestReduce:
    def test_bundled_instance(self, capsys):
        code, payload, _ = run_json(capsys, "reduce", str(DATA / "omega.cnf"))
        assert code == 0
        assert payload["tovey"]["ok"] is True
        assert payload["satisfiable"] is True
        assert payload["witness"] == {
            "choices": [2, 20, 8],
            "assignment": [True, False, False],
        }
        assert payload["trace"] == {"N_i": [30, 28, 8, 0]}

        gadgets = payload["gadgets"]
        assert gadgets["tail"] == 30
        assert gadgets["y_count"] == 3
        assert gadgets["y_form"] == "*:1"
        assert len(gadgets["vars"]) == 3
        assert gadgets["vars"][0] == {
            "index": 1, "r": 1, "s": 3, "t": 4,
            "a": 2, "b": 24, "c": 8, "d": 16, "big": 32,
            "form": "{0,*,*2,*8,*16,*24,*32}:-1",
        }

    def test_oracle_verification(self, capsys):
        code, payload, _ = run_json(
            capsys, "reduce", str(DATA / "omega.cnf"), "--verify", "oracle")
        assert code == 0
        assert payload["verify"] == {"mode": "oracle", "ok": True}

    def test_non_tovey_input_reports_and_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.cnf"
        bad.write_text("p cnf 2 2\n1 2 0\n-1 -2 0\n")
        code, payload, _ = run_json(capsys, "reduce", str(bad))
        assert code == 2
        assert sorted(payload) == ["file", "tovey"]
        assert payload["tovey"]["ok"] is False
        problems = payload["tovey"]["problems"]
        assert any("variable count 2 is even" in p for p in problems)
        assert any("variable 1 occurs" in p for p in problems)

    def test_malformed_dimacs_exits_2(self, capsys, tmp_path):
        mal = tmp_path / "mal.cnf"
        mal.write_text("p cnf x 1\n1 0\n")
        code, out, err = run_cli(capsys, "reduce", str(mal))
        assert code == 2
        assert err.startswith("error: ")
        assert "malformed DIMACS" in err

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, out, err = run_cli(capsys, "reduce", str(tmp_path / "no.cnf"))
        assert code == 2
        assert err.startswith("error: ")


class TestSubprocessEntry:
    def test_module_is_runnable(self):
        proc = subprocess.run(
            [sys.executable, "-m", "wildflowers.cli",
             "eval", "*", "--format", "json"],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {
            "input": "*", "play": "normal", "outcome": "N",
        }

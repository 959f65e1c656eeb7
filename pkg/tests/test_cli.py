import json
import math
import os

import numpy as np
import pytest

from knapgreedy.cli import main

FIXTURE = os.path.join(os.path.dirname(__file__), "..", "fixtures", "worked_example.json")


def write_instance(tmp_path, doc, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


class TestSolve:
    def test_fixture_value(self, capsys):
        code = main(["solve", "--instance", FIXTURE, "--lambda", "1.0"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == 3.25
        assert doc["chosen"] == [4, 0]
        assert doc["which"] == "greedy-sigma"

    def test_json_out_file(self, tmp_path, capsys):
        out = str(tmp_path / "r.json")
        code = main(["solve", "--instance", FIXTURE, "--lambda", "1.0", "--json-out", out])
        assert code == 0
        doc = json.loads(open(out).read())
        assert doc["value"] == 3.25

    def test_scripted_updates(self, tmp_path, capsys):
        stream = tmp_path / "updates.json"
        stream.write_text(json.dumps([{"at_call": 30, "weights": [3.0]}]))
        code = main(
            ["solve", "--instance", FIXTURE, "--lambda", "1.0", "--updates", str(stream)]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["value"] == 4.0

    def test_malformed_json_exit_2(self, tmp_path, capsys):
        p = tmp_path / "broken.json"
        p.write_text("{not json")
        assert main(["solve", "--instance", str(p), "--lambda", "1.0"]) == 2

    def test_missing_file_exit_2(self, capsys):
        assert main(["solve", "--instance", "/nonexistent.json", "--lambda", "1.0"]) == 2

    def test_lambda_out_of_range_exit_2(self, capsys):
        assert main(["solve", "--instance", FIXTURE, "--lambda", "0.5"]) == 2

    def test_degenerate_instance_exit_3(self, tmp_path, capsys):
        path = write_instance(
            tmp_path,
            {
                "n": 2,
                "k": 1,
                "costs": [[5.0, 5.0]],
                "weights": [1.0],
                "objective": {"kind": "modular", "values": [1.0, 1.0]},
            },
        )
        assert main(["solve", "--instance", path, "--lambda", "1.0"]) == 3


class TestSimulate:
    def test_zero_noise_run(self, tmp_path, capsys):
        out = str(tmp_path / "trace.csv")
        code = main(
            [
                "simulate", "--instance", FIXTURE, "--tau", "100", "--sigma", "0.0",
                "--updates", "50", "--seed", "3", "--lambda", "1.0", "--out", out,
            ]
        )
        assert code == 0
        lines = open(out).read().splitlines()
        assert lines[0].startswith("update,weight_0,")
        assert len(lines) == 51
        summary = json.loads(open(out + ".summary.json").read())
        assert summary["dgreedy"]["mean"] == pytest.approx(3.25)
        assert summary["config"]["seed"] == 3

    def test_rerun_byte_identical(self, tmp_path, capsys):
        outs = []
        for tag in ("a", "b"):
            out = tmp_path / ("trace_%s.csv" % tag)
            code = main(
                [
                    "simulate", "--instance", FIXTURE, "--tau", "50", "--sigma", "0.1",
                    "--updates", "20", "--seed", "9", "--lambda", "1.0",
                    "--initial-fraction", "0.4", "--out", str(out),
                ]
            )
            assert code == 0
            outs.append(out)
        assert outs[0].read_bytes() == outs[1].read_bytes()
        a = (tmp_path / "trace_a.csv.summary.json").read_bytes()
        b = (tmp_path / "trace_b.csv.summary.json").read_bytes()
        assert a == b

    def test_bad_tau_exit_2(self, tmp_path, capsys):
        out = str(tmp_path / "t.csv")
        code = main(
            ["simulate", "--instance", FIXTURE, "--tau", "0", "--sigma", "0.1", "--out", out]
        )
        assert code == 2


class TestOracle:
    def test_fixture_exact(self, capsys):
        code = main(["oracle", "--instance", FIXTURE, "--lambda", "1.0"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["opt_value"] == 3.25
        assert doc["opt_set"] == [0, 4]
        assert doc["ratio"] == pytest.approx(1.0)
        assert doc["alpha"] == 0.0
        assert doc["bound"] == pytest.approx((1 - math.exp(-1)) / 3)
        assert doc["passed"] is True

    def test_asserted_low_value_exit_1(self, capsys):
        code = main(
            ["oracle", "--instance", FIXTURE, "--lambda", "1.0", "--assert-value", "0.01"]
        )
        assert code == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["passed"] is False

    def test_too_large_exit_2(self, tmp_path, capsys):
        n = 25
        path = write_instance(
            tmp_path,
            {
                "n": n,
                "k": 1,
                "costs": [[1.0] * n],
                "weights": [5.0],
                "objective": {"kind": "modular", "values": [1.0] * n},
            },
        )
        assert main(["oracle", "--instance", path, "--lambda", "1.0"]) == 2


class TestCurvature:
    def test_modular_zero(self, capsys):
        code = main(["curvature", "--instance", FIXTURE])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["alpha"] == 0.0

    def test_cut_three_cycle_hand_value(self, tmp_path, capsys):
        # witness: adding 2 to {} gains 0.5 but to {0, 1} loses 2,
        # so alpha = 1 - (-2)/0.5 = 5
        path = write_instance(
            tmp_path,
            {
                "n": 3,
                "k": 1,
                "costs": [[1.0, 1.0, 1.0]],
                "weights": [2.0],
                "objective": {"kind": "cut", "arcs": [[0, 1, 1.0], [1, 2, 2.0], [2, 0, 0.5]]},
            },
        )
        code = main(["curvature", "--instance", path])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["alpha"] == 5.0

    def test_entropy_reports_spectral_bound(self, tmp_path, capsys):
        rng = np.random.default_rng(12)
        A = rng.normal(size=(4, 4))
        Sigma = (A @ A.T / 4 + np.eye(4)).tolist()
        path = write_instance(
            tmp_path,
            {
                "n": 4,
                "k": 1,
                "costs": [[1.0] * 4],
                "weights": [2.0],
                "objective": {"kind": "entropy", "Sigma": Sigma},
            },
        )
        code = main(["curvature", "--instance", path])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["alpha"] <= doc["entropy_upper_bound"] + 1e-6

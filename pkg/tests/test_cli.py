"""Command-line surface: config resolution, reports, exit codes."""

import json

import pytest

from triggaudin import cli
from triggaudin.kernels import sparse_matmul, sparse_add
from triggaudin.rationals import parse_rational
from triggaudin.reports import report_bytes
from triggaudin.suites import run_suite


def run(argv):
    return cli.main(argv)


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


class TestConfig:
    def test_file_then_flag_override(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "# sample run\n"
            "n = 2\n"
            "sites = 2\n"
            "points = 1, 3\n"
            "m-max = 1\n"
        )
        out = tmp_path / "fam.json"
        code = run(
            [
                "hamiltonians",
                "--config",
                str(cfg),
                "--m-max",
                "2",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        doc = load(out)
        assert doc["kind"] == "operator-family"
        assert doc["N"] == 2
        assert doc["m_max"] == 2
        assert doc["points"] == ["1", "3"]

    def test_unknown_config_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("sites = 2\nflavour = strange\n")
        assert run(["verify", "--config", str(cfg)]) == 2

    def test_duplicate_points_rejected(self):
        assert run(["verify", "--points", "1,1"]) == 2

    def test_zero_point_rejected(self):
        assert run(["verify", "--points", "0,2"]) == 2

    def test_malformed_point_rejected(self):
        assert run(["verify", "--points", "abc,2"]) == 2

    def test_point_count_mismatch(self):
        assert run(["verify", "--points", "1,2,3", "--sites", "2"]) == 2

    def test_unknown_suite(self):
        assert run(["verify", "--suite", "everything"]) == 2


class TestHamiltonians:
    def test_operators_commute_after_reload(self, tmp_path):
        out = tmp_path / "fam.json"
        code = run(
            ["hamiltonians", "--points", "1,3", "--m-max", "2", "--out", str(out)]
        )
        assert code == 0
        doc = load(out)
        ops = []
        for op in doc["operators"]:
            assert op["dim"] == 4
            entries = {
                (r, c): parse_rational(v) for r, c, v in op["entries"]
            }
            ops.append(entries)
        assert len(ops) >= 2
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                ab = sparse_matmul(ops[i], ops[j])
                ba = sparse_matmul(ops[j], ops[i])
                comm = sparse_add(ab, {k: -v for k, v in ba.items()})
                assert comm == {}

    def test_locations_are_json_friendly(self, tmp_path):
        out = tmp_path / "fam.json"
        assert run(["hamiltonians", "--out", str(out)]) == 0
        for op in load(out)["operators"]:
            kind = op["location"][0]
            assert kind in ("pole", "poly")


class TestVerify:
    def test_ybe_suite_passes(self, tmp_path):
        out = tmp_path / "report.json"
        code = run(["verify", "--suite", "ybe", "--out", str(out)])
        assert code == 0
        doc = load(out)
        assert doc["pass"] is True
        assert doc["suite"] == "ybe"
        assert all(c["status"] == "pass" for c in doc["checks"])

    def test_worker_count_does_not_change_bytes(self):
        parser = cli.build_parser()
        args = parser.parse_args(["verify", "--suite", "ybe"])
        cfg = cli.resolve_config(args)
        serial = report_bytes(run_suite("ybe", cfg, 1))
        parallel = report_bytes(run_suite("ybe", cfg, 2))
        assert serial == parallel


class TestQlimit:
    def test_report_carries_note(self, tmp_path):
        out = tmp_path / "qlimit.json"
        code = run(["qlimit", "--m", "1", "--out", str(out)])
        assert code == 0
        doc = load(out)
        assert doc["pass"] is True
        assert "note" in doc

    def test_m_bound(self):
        assert run(["qlimit", "--m", "4"]) == 2

import json
import pathlib
import subprocess
import sys

import pytest

from planarsig.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"

THREE_CYCLES_DOC = {
    "boundary_components": 3,
    "vanishing_cycles": [
        {"encloses": [1]},
        {"encloses": [2]},
        {"encloses": [1, 2]},
    ],
}


def run_compute(capsys, doc, *flags):
    code = main(["compute", "-", *flags])
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def feed_stdin(monkeypatch):
    import io

    def feed(payload):
        text = payload if isinstance(payload, str) else json.dumps(payload)
        monkeypatch.setattr(sys, "stdin", io.StringIO(text))

    return feed


class TestCompute:
    def test_three_cycles(self, capsys, feed_stdin):
        feed_stdin(THREE_CYCLES_DOC)
        code, out = run_compute(capsys, THREE_CYCLES_DOC)
        assert code == 0
        report = json.loads(out)
        assert report["sigma"] == -1
        assert report["b2"] == 1
        assert report["definiteness"] == "negative-definite"
        assert report["oracle_agrees"] is True
        assert report["intersection_form"] == [0, 1, 0]
        assert report["wall"]["correction_triple"] == [2, 0, 0]
        assert report["schema_version"] == "1"

    def test_all_pairs_of_three(self, capsys, feed_stdin):
        doc = {
            "boundary_components": 4,
            "vanishing_cycles": [
                {"encloses": [1, 2]},
                {"encloses": [1, 3]},
                {"encloses": [2, 3]},
            ],
        }
        feed_stdin(doc)
        code, out = run_compute(capsys, doc)
        assert code == 0
        assert json.loads(out)["sigma"] == 0

    def test_empty_cycle_list(self, capsys, feed_stdin):
        doc = {"boundary_components": 4, "vanishing_cycles": []}
        feed_stdin(doc)
        code, out = run_compute(capsys, doc)
        assert code == 0
        report = json.loads(out)
        assert report["sigma"] == 0
        assert report["definiteness"] == "zero-form"

    def test_reads_file(self, capsys, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(THREE_CYCLES_DOC))
        assert main(["compute", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["sigma"] == -1

    def test_missing_file(self, capsys):
        assert main(["compute", "/no/such/file.json"]) == 2
        assert "error" in capsys.readouterr().err

    def test_table_format(self, capsys, feed_stdin):
        feed_stdin(THREE_CYCLES_DOC)
        code = main(["compute", "-", "--format", "table"])
        out = capsys.readouterr().out
        assert code == 0
        assert "signature" in out
        assert "-1" in out
        assert "boundary map" in out

    def test_byte_identical_output(self, capsys, feed_stdin):
        feed_stdin(THREE_CYCLES_DOC)
        main(["compute", "-"])
        first = capsys.readouterr().out
        feed_stdin(THREE_CYCLES_DOC)
        main(["compute", "-"])
        second = capsys.readouterr().out
        assert first == second

    def test_matches_golden_file(self, capsys, feed_stdin):
        feed_stdin(THREE_CYCLES_DOC)
        assert main(["compute", "-"]) == 0
        out = capsys.readouterr().out
        assert out == (GOLDEN / "three_cycles_report.json").read_text()

    def test_explicit_class_vectors(self, capsys, feed_stdin):
        doc = {
            "boundary_components": 3,
            "vanishing_cycles": [{"class": [1, 1]}, {"class": [2, -1]}],
        }
        feed_stdin(doc)
        code, out = run_compute(capsys, doc)
        assert code == 0
        assert json.loads(out)["d"] == 2


class TestEchoRoundTrip:
    def test_enclosed_sets_canonicalized(self, capsys, feed_stdin):
        doc = {
            "boundary_components": 4,
            "vanishing_cycles": [{"encloses": [1, 0]}, {"encloses": [3, 2]}],
        }
        feed_stdin(doc)
        code, out = run_compute(capsys, doc)
        assert code == 0
        echo = json.loads(out)["input"]
        assert echo["vanishing_cycles"] == [
            {"encloses": [2, 3]},
            {"encloses": [2, 3]},
        ]

    def test_echo_is_a_fixed_point(self, capsys, feed_stdin):
        doc = {
            "boundary_components": 4,
            "vanishing_cycles": [
                {"encloses": [0, 2]},
                {"class": [1, 0, -1]},
                {"encloses": [3]},
            ],
        }
        feed_stdin(doc)
        code, out = run_compute(capsys, doc)
        assert code == 0
        first = json.loads(out)
        feed_stdin(first["input"])
        code, out = run_compute(capsys, first["input"])
        assert code == 0
        second = json.loads(out)
        assert second["input"] == first["input"]
        for key in ("m", "r", "d", "sigma", "b1", "b2", "euler"):
            assert second[key] == first[key]


class TestValidation:
    @pytest.mark.parametrize(
        "payload, fragment",
        [
            ("{not json", "invalid JSON"),
            ("[1, 2]", "object"),
            ({"vanishing_cycles": []}, "boundary_components"),
            ({"boundary_components": 0, "vanishing_cycles": []}, "boundary_components"),
            ({"boundary_components": True, "vanishing_cycles": []}, "boundary_components"),
            ({"boundary_components": 3, "vanishing_cycles": {}}, "vanishing_cycles"),
            (
                {"boundary_components": 3, "vanishing_cycles": [{"encloses": [5]}]},
                "out of range",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [{"encloses": []}]},
                "nonempty",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [{"encloses": [0, 1, 2]}]},
                "proper subset",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [{"encloses": [1, 1]}]},
                "distinct",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [{"class": [1]}]},
                "length",
            ),
            (
                {
                    "boundary_components": 3,
                    "vanishing_cycles": [{"encloses": [1], "class": [1, 0]}],
                },
                "exactly one",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [], "bogus": 1},
                "unknown key",
            ),
            (
                {"boundary_components": 3, "vanishing_cycles": [7]},
                "vanishing_cycles[0]",
            ),
        ],
    )
    def test_invalid_documents_exit_two(self, capsys, feed_stdin, payload, fragment):
        feed_stdin(payload)
        assert main(["compute", "-"]) == 2
        err = capsys.readouterr().err
        assert fragment in err

    def test_null_homologous_without_force(self, capsys, feed_stdin):
        doc = {"boundary_components": 3, "vanishing_cycles": [{"class": [0, 0]}]}
        feed_stdin(doc)
        assert main(["compute", "-"]) == 3
        assert "null-homologous" in capsys.readouterr().err

    def test_null_homologous_with_force(self, capsys, feed_stdin):
        doc = {"boundary_components": 3, "vanishing_cycles": [{"class": [0, 0]}]}
        feed_stdin(doc)
        code = main(["compute", "-", "--force"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out)
        assert report["allowable"] is False
        assert report["oracle_agrees"] is True

    def test_force_flag_in_document(self, capsys, feed_stdin):
        doc = {
            "boundary_components": 3,
            "vanishing_cycles": [{"class": [0, 0]}],
            "force_non_allowable": True,
        }
        feed_stdin(doc)
        assert main(["compute", "-"]) == 0


class TestExamples:
    def test_pair_family(self, capsys):
        assert main(["examples", "--family", "y1", "--r", "3"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["report"]["sigma"] == -2
        assert out["expected_sigma"] == -2
        assert out["document"] == out["report"]["input"]

    def test_parallel_family(self, capsys):
        assert main(["examples", "--family", "y2", "--r", "4"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["report"]["sigma"] == -11

    def test_small_parameter_rejected(self, capsys):
        assert main(["examples", "--family", "y1", "--r", "1"]) == 2
        assert "error" in capsys.readouterr().err

    def test_families_report_equal_boundary_maps(self, capsys):
        main(["examples", "--family", "y1", "--r", "3"])
        first = json.loads(capsys.readouterr().out)
        main(["examples", "--family", "y2", "--r", "3"])
        second = json.loads(capsys.readouterr().out)
        assert first["report"]["boundary_map"] == second["report"]["boundary_map"]
        assert first["report"]["sigma"] != second["report"]["sigma"]

    def test_table_format(self, capsys):
        assert main(["examples", "--family", "y1", "--r", "2", "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert "expected signature 0" in out


class TestFuzz:
    def test_small_run_passes(self, capsys):
        code = main(
            ["fuzz", "--seed", "1", "--count", "25", "--max-r", "4", "--max-m", "8"]
        )
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["ok"] is True
        assert out["checks_failed"] == 0
        assert out["checks_run"] > 0

    def test_zero_count_vacuous(self, capsys):
        assert main(["fuzz", "--count", "0"]) == 0
        out = json.loads(capsys.readouterr().out)
        assert out["ok"] is True
        assert out["checks_run"] == 0

    def test_seed_determinism(self, capsys):
        args = ["fuzz", "--seed", "9", "--count", "10", "--max-r", "3", "--max-m", "6"]
        main(args)
        first = capsys.readouterr().out
        main(args)
        second = capsys.readouterr().out
        assert first == second

    def test_negative_bounds_rejected(self, capsys):
        assert main(["fuzz", "--count", "-1"]) == 2


class TestEntryPoint:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "planarsig" in capsys.readouterr().out

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "planarsig.cli", "--version"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "planarsig" in proc.stdout

    def test_module_compute_pipe(self):
        proc = subprocess.run(
            [sys.executable, "-m", "planarsig.cli", "compute", "-"],
            input=json.dumps(THREE_CYCLES_DOC),
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["sigma"] == -1

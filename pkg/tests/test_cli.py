"""
Tests for the dowkit command line.
"""

import json

from dowkit import __version__
from dowkit.cli import main, stats_path


def _read(path):
    return json.loads(path.read_text(encoding="utf-8"))


def _write(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


class TestTopLevel:
    """Tests for dispatch and usage errors."""

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert capsys.readouterr().out.strip() == f"dowkit {__version__}"

    def test_no_arguments(self, capsys):
        assert main([]) == 2
        assert "Subcommands" in capsys.readouterr().err

    def test_unknown_argument(self):
        assert main(["--frobnicate"]) == 2

    def test_bad_subcommand_argument(self, example1_file):
        assert main(["dowker", str(example1_file), "--side", "up"]) == 2

    def test_stats_path(self, tmp_path):
        assert stats_path("-") is None
        assert stats_path(str(tmp_path / "b.json")) == tmp_path / "b.stats.json"


class TestComplexCommands:
    """Tests for dowker, biclique, rectangle and homology."""

    def test_dowker_left(self, tmp_path, example1_file):
        out = tmp_path / "cx.json"
        assert main(["dowker", str(example1_file), "-o", str(out)]) == 0
        assert _read(out)["facets"] == [["1", "2", "3"], ["1", "2", "4"]]

    def test_dowker_both_to_stdout(self, capsys, example1_file):
        assert main(["dowker", str(example1_file), "--side", "both"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert set(data) == {"left", "right"}
        assert data["right"]["facets"] == [["5", "6", "7", "8"]]

    def test_biclique_stats_sidecar(self, tmp_path, example1_file, example1_counts):
        out = tmp_path / "b.json"
        assert main(["biclique", str(example1_file), "-o", str(out), "--stats"]) == 0
        stats = _read(tmp_path / "b.stats.json")
        assert stats["faces"] == example1_counts["biclique"]["faces"]
        assert stats["f_vector"] == example1_counts["biclique"]["f_vector"]

    def test_rectangle_stats_to_stderr(self, capsys, example1_file, example1_counts):
        assert main(["rectangle", str(example1_file), "--stats"]) == 0
        captured = capsys.readouterr()
        assert json.loads(captured.out)["universe"][0] == "(1,5)"
        assert len(json.loads(captured.out)["universe"]) == example1_counts["pairs"]
        assert json.loads(captured.err)["faces"] > 0

    def test_homology(self, tmp_path, capsys):
        path = _write(tmp_path / "c.json", {"universe": ["a", "b"], "facets": [["a", "b"]]})
        assert main(["homology", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["betti"] == [1, 0]

    def test_homology_refused_above_cap(self, tmp_path, example1_file):
        out = tmp_path / "b.json"
        main(["biclique", str(example1_file), "-o", str(out)])
        assert main(["homology", str(out), "--max-columns", "5"]) == 2

    def test_shared_labels_are_tagged(self, tmp_path, capsys):
        path = _write(tmp_path / "r.json", {"x": ["a"], "y": ["a"], "pairs": [["a", "a"]]})
        assert main(["biclique", str(path)]) == 0
        assert json.loads(capsys.readouterr().out)["facets"] == [["(a,0)", "(a,1)"]]


class TestCertificateCommands:
    """Tests for matching, collapse, verify and verify-matching."""

    def test_matching_stats(self, tmp_path, example1_file, example1_counts):
        out = tmp_path / "m.json"
        assert main(["matching", str(example1_file), "-o", str(out), "--stats"]) == 0
        stats = _read(tmp_path / "m.stats.json")
        assert stats["pairs"] == example1_counts["certificate"]["left"]
        assert stats["monotone"] is True

    def test_collapse_then_verify(self, tmp_path, capsys, example1_file):
        cert = tmp_path / "cert.json"
        assert main(["collapse", str(example1_file), "--side", "right", "-o", str(cert)]) == 0
        assert len(_read(cert)["steps"]) == 20
        assert main(["verify", str(cert)]) == 0
        assert capsys.readouterr().out.startswith("ok: certificate with 20 steps")

    def test_truncated_certificate_fails(self, tmp_path, capsys, example1_file):
        cert = tmp_path / "cert.json"
        main(["collapse", str(example1_file), "-o", str(cert)])
        data = _read(cert)
        data["steps"] = data["steps"][:-1]
        _write(cert, data)
        assert main(["verify", str(cert)]) == 1
        assert capsys.readouterr().out.startswith("FAIL")

    def test_verify_matching_reports_cycle(self, tmp_path, capsys):
        """The cyclic matching on the full simplex, passed with its complex."""
        path = _write(tmp_path / "m.json", {
            "complex": {"universe": ["1", "2", "3"], "facets": [["1", "2", "3"]]},
            "pairs": [[["1"], ["1", "2"]], [["2"], ["2", "3"]], [["3"], ["1", "3"]]],
        })
        assert main(["verify-matching", str(path)]) == 1
        report = json.loads(capsys.readouterr().out)
        assert report["acyclic"] is False
        assert report["critical"] == 2
        assert report["cycle"] == [["1", "2"], ["1", "3"], ["2", "3"]]

    def test_verify_matching_accepts_dowker_matching(self, tmp_path, capsys, example1_file):
        out = tmp_path / "m.json"
        main(["matching", str(example1_file), "--side", "right", "-o", str(out)])
        capsys.readouterr()
        assert main(["verify-matching", str(out)]) == 0
        assert json.loads(capsys.readouterr().out)["pairs"] == 20


class TestPipelineCommands:
    """Tests for pipeline, random and zigzag."""

    def test_pipeline_example1(self, tmp_path, example1_file):
        out = tmp_path / "report.json"
        assert main(["pipeline", str(example1_file), "-o", str(out), "--no-timings"]) == 0
        report = _read(out)
        assert report["passed"] is True
        assert report["sizes"]["B"] == 56
        assert "timings" not in report

    def test_pipeline_missing_file(self, tmp_path):
        assert main(["pipeline", str(tmp_path / "missing.json")]) == 2

    def test_pipeline_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["pipeline", str(path)]) == 2
        assert str(path) in capsys.readouterr().err

    def test_pipeline_without_input(self):
        assert main(["pipeline"]) == 2

    def test_pipeline_random_records_seed(self, capsys):
        assert main(["pipeline", "--random", "3", "3", "0.5", "--seed", "7", "--no-timings"]) == 0
        assert json.loads(capsys.readouterr().out)["seed"] == 7

    def test_random_is_reproducible(self, capsys):
        assert main(["random", "4", "5", "0.4", "--seed", "11"]) == 0
        first = capsys.readouterr().out
        assert main(["random", "4", "5", "0.4", "--seed", "11"]) == 0
        assert capsys.readouterr().out == first
        assert json.loads(first)["x"] == ["x0", "x1", "x2", "x3"]

    def test_random_bad_density(self, capsys):
        assert main(["random", "2", "2", "1.5", "--seed", "1"]) == 2
        assert "density" in capsys.readouterr().err

    def test_random_above_universe_cap(self):
        assert main(["random", "40", "40", "0.5", "--seed", "1"]) == 2

    def test_pipeline_above_universe_cap(self, tmp_path, capsys):
        """|X| + |Y| = 80 does not fit the biclique universe."""
        x = [f"x{i}" for i in range(40)]
        y = [f"y{i}" for i in range(40)]
        path = _write(tmp_path / "r.json", {"x": x, "y": y, "pairs": [["x0", "y0"]]})
        assert main(["pipeline", str(path)]) == 2
        assert "exceeds the cap" in capsys.readouterr().err

    def test_zigzag_round_trip(self, tmp_path, capsys, example1_file):
        out = tmp_path / "z.json"
        assert main(["zigzag", str(example1_file), "-o", str(out)]) == 0
        assert [a["kind"] for a in _read(out)["arrows"]] == [
            "relabel", "collapse", "collapse", "relabel"
        ]
        assert main(["verify", str(out)]) == 0
        assert capsys.readouterr().out.startswith("ok: zigzag with 4 arrows")

    def test_zigzag_expand_relabels(self, tmp_path, example1_file):
        out = tmp_path / "z.json"
        assert main(["zigzag", str(example1_file), "--expand-relabels", "-o", str(out)]) == 0
        assert {a["kind"] for a in _read(out)["arrows"]} == {"collapse"}
        assert main(["verify", str(out)]) == 0

    def test_zigzag_isomorphic(self, tmp_path, capsys):
        d = _write(tmp_path / "d.json", {"universe": ["1", "2"], "facets": [["1", "2"]]})
        d2 = _write(tmp_path / "d2.json", {"universe": ["a", "b"], "facets": [["a", "b"]]})
        alpha = _write(tmp_path / "alpha.json", {"1": "b", "2": "a"})
        out = tmp_path / "z.json"
        assert main(["zigzag", "--isomorphic", str(d), str(d2), str(alpha), "-o", str(out)]) == 0
        assert main(["verify", str(out)]) == 0

    def test_zigzag_isomorphic_rejects_non_isomorphism(self, tmp_path, capsys):
        d = _write(tmp_path / "d.json", {"universe": ["1", "2"], "facets": [["1"], ["2"]]})
        d2 = _write(tmp_path / "d2.json", {"universe": ["a", "b"], "facets": [["a", "b"]]})
        alpha = _write(tmp_path / "alpha.json", {"1": "a", "2": "b"})
        args = ["zigzag", "--isomorphic", str(d), str(d2), str(alpha)]
        assert main(args) == 2
        assert "not an isomorphism" in capsys.readouterr().err

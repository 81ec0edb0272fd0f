"""Command-line surface: subcommands, exit codes, record output."""

from __future__ import annotations

import pytest

from gwis import parse_graph
from gwis.cli import main
from gwis.fixtures import pentagon_document

PENTAGON = pentagon_document()

THREE_BIDS = "a b1 5 x\na b2 4 x y\na b3 2 y\n"

TIED_AUCTION = "a b1 3 x\na b2 3 x\n"

C4_EDGES = "p gwis 4 4\nv a\nv b\nv c\nv d\ne a b\ne b c\ne c d\ne a d\n"

PATH_EDGES = "p gwis 3 2\nv a\nv b\nv c\ne a b 2\ne b c 1\n"


@pytest.fixture
def pentagon_file(tmp_path):
    path = tmp_path / "pentagon.gwis"
    path.write_text(PENTAGON, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_solve(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "solve", pentagon_file)
        assert code == 0
        assert "alpha = 7" in out and "alpha-set: A C" in out

    def test_solve_bnb(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "solve", pentagon_file, "--solver", "bnb")
        assert code == 0 and "alpha = 7" in out

    def test_capacity_exit(self, capsys, pentagon_file):
        code, _, err = run(capsys, "solve", pentagon_file, "--cap", "3")
        assert code == 2 and "capacity" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "/nonexistent/file.gwis")
        assert code == 1 and err

    def test_malformed_document(self, capsys, tmp_path):
        bad = tmp_path / "bad.gwis"
        bad.write_text("p gwis 1 0\nv a -1\n", encoding="utf-8")
        code, _, err = run(capsys, "solve", str(bad))
        assert code == 1 and "line 2" in err

    def test_json_lines(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "solve", pentagon_file, "--json-lines")
        assert code == 0
        assert "event=solve" in out and "alpha=7" in out and "alpha_set=A,C" in out


class TestCheck:
    @pytest.mark.parametrize("method", ["oracle", "thm1", "thm3", "thm4"])
    def test_unique_methods(self, capsys, pentagon_file, method):
        code, out, _ = run(capsys, "check", pentagon_file, "--method", method)
        assert code == 0 and "verdict = unique" in out

    def test_lemma1_is_inconclusive_here(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "check", pentagon_file, "--method", "lemma1")
        assert code == 3
        assert "condition-fails" in out and "witness: violating subset {A C}" in out

    def test_tree_method_rejects_cycles(self, capsys, pentagon_file):
        code, _, err = run(capsys, "check", pentagon_file, "--method", "tree")
        assert code == 1 and "not a tree" in err

    def test_not_unique_exit(self, capsys, tmp_path):
        twins = tmp_path / "twins.gwis"
        twins.write_text("p gwis 2 1\nv a 1\nv b 1\ne a b\n", encoding="utf-8")
        code, out, _ = run(capsys, "check", str(twins), "--method", "thm1")
        assert code == 3 and "not-unique" in out and "witness" in out

    def test_explicit_set(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "check", pentagon_file, "--method", "thm3", "--set", "A,C")
        assert code == 0 and "alpha-set: A C" in out

    def test_bad_set_rejected(self, capsys, pentagon_file):
        code, _, err = run(capsys, "check", pentagon_file, "--method", "thm1", "--set", "D,E")
        assert code == 1 and "not independent" in err

    def test_usage_error_exits_one(self, pentagon_file):
        with pytest.raises(SystemExit) as info:
            main(["check", pentagon_file, "--method", "bogus"])
        assert info.value.code == 1


class TestEpsilonAndStability:
    def test_epsilon(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "epsilon", pentagon_file)
        assert code == 0
        assert "epsilon = 1/6" in out and "delta = 1" in out

    def test_epsilon_requires_unique(self, capsys, tmp_path):
        twins = tmp_path / "twins.gwis"
        twins.write_text("p gwis 2 1\nv a 1\nv b 1\ne a b\n", encoding="utf-8")
        code, _, err = run(capsys, "epsilon", str(twins))
        assert code == 1 and "optimal sets" in err

    def test_stability(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "stability", pentagon_file, "--trials", "30", "--seed", "7")
        assert code == 0 and "stability: PASS" in out

    def test_stability_reports_violation_with_oversized_epsilon(self, capsys, tmp_path):
        twins = tmp_path / "near_twins.gwis"
        twins.write_text("p gwis 2 1\nv a 1\nv b 1/2\ne a b\n", encoding="utf-8")
        code, out, _ = run(
            capsys, "stability", str(twins),
            "--trials", "50", "--seed", "3", "--epsilon", "5",
        )
        assert code == 4
        assert "stability: FAIL" in out and "p gwis 2 1" in out  # counterexample dump


class TestReduce:
    def test_ui1_document(self, capsys, pentagon_file):
        code, out, _ = run(capsys, "reduce", "ui1", pentagon_file, "--k", "3")
        assert code == 0
        doc = parse_graph(out)
        assert doc.graph.n == 8 and doc.graph.edge_count == 5 + 5 * 3

    def test_ui2_to_file(self, capsys, pentagon_file, tmp_path):
        out_path = tmp_path / "h.gwis"
        code, out, _ = run(
            capsys, "reduce", "ui2", pentagon_file, "--k", "2", "-o", str(out_path)
        )
        assert code == 0 and str(out_path) in out
        doc = parse_graph(out_path.read_text(encoding="utf-8"))
        assert doc.graph.n == 5 + 2 + 3

    def test_bad_k(self, capsys, pentagon_file):
        code, _, err = run(capsys, "reduce", "ui1", pentagon_file, "--k", "0")
        assert code == 1 and "at least 1" in err


class TestMatchingCheck:
    def test_unique_path(self, capsys, tmp_path):
        path = tmp_path / "path.ewg"
        path.write_text(PATH_EDGES, encoding="utf-8")
        code, out, _ = run(capsys, "matching-check", str(path))
        assert code == 0
        assert "maximum matching weight = 2" in out and "matching: a-b" in out

    def test_c4_not_unique(self, capsys, tmp_path):
        path = tmp_path / "c4.ewg"
        path.write_text(C4_EDGES, encoding="utf-8")
        code, out, _ = run(capsys, "matching-check", str(path))
        assert code == 3 and "not-unique" in out

    def test_explicit_edges(self, capsys, tmp_path):
        path = tmp_path / "c4.ewg"
        path.write_text(C4_EDGES, encoding="utf-8")
        code, out, _ = run(
            capsys, "matching-check", str(path), "--edge", "b", "c", "--edge", "d", "a"
        )
        assert code == 3 and "b-c" in out

    def test_unknown_edge(self, capsys, tmp_path):
        path = tmp_path / "path.ewg"
        path.write_text(PATH_EDGES, encoding="utf-8")
        code, _, err = run(capsys, "matching-check", str(path), "--edge", "a", "c")
        assert code == 1 and "no edge" in err


class TestAuction:
    def test_unique_auction(self, capsys, tmp_path):
        path = tmp_path / "bids.auction"
        path.write_text(THREE_BIDS, encoding="utf-8")
        code, out, _ = run(capsys, "auction", str(path))
        assert code == 0
        assert "winners: b1 b3" in out and "revenue = 7" in out
        assert "margin epsilon = 1/2" in out

    def test_tied_auction(self, capsys, tmp_path):
        path = tmp_path / "tied.auction"
        path.write_text(TIED_AUCTION, encoding="utf-8")
        code, out, _ = run(capsys, "auction", str(path))
        assert code == 3
        assert "unique = false" in out and out.count("tied winner set") == 2


class TestGenAndFuzz:
    def test_gen_stdout_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "gen", "--seed", "42", "--n-max", "6")
        code2, out2, _ = run(capsys, "gen", "--seed", "42", "--n-max", "6")
        assert code1 == code2 == 0 and out1 == out2
        assert parse_graph(out1).graph.n <= 6

    def test_gen_multiple_needs_directory(self, capsys):
        code, _, err = run(capsys, "gen", "--count", "3")
        assert code == 1 and "output-dir" in err

    def test_gen_directory(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "gen", "--count", "3", "--seed", "1", "-o", str(tmp_path)
        )
        assert code == 0
        files = sorted(tmp_path.glob("*.gwis"))
        assert len(files) == 3
        for f in files:
            parse_graph(f.read_text(encoding="utf-8"))

    def test_fuzz_pass(self, capsys):
        code, out, _ = run(
            capsys, "fuzz", "--count", "15", "--n-max", "7", "--seed", "11"
        )
        assert code == 0 and "cross-validation: PASS" in out

    def test_fuzz_json_lines(self, capsys):
        code, out, _ = run(
            capsys, "fuzz", "--count", "10", "--n-max", "6", "--seed", "12",
            "--json-lines",
        )
        assert code == 0
        assert out.startswith("event=fuzz ") and "disagreements=0" in out

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(PENTAGON))
        code, out, _ = run(capsys, "solve", "-")
        assert code == 0 and "alpha = 7" in out

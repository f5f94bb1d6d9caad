import json

import pytest

from chaincover.cli import run
from chaincover.generators import canonical_ideal_chain, grid_upper


@pytest.fixture
def grid6_file(tmp_path):
    path = tmp_path / "grid6.poset"
    path.write_text(grid_upper(6).to_text())
    return str(path)


@pytest.fixture
def grid4_file(tmp_path):
    path = tmp_path / "grid4.poset"
    path.write_text(grid_upper(4).to_text())
    return str(path)


class TestCov:
    def test_width(self, grid6_file, capsys):
        assert run(["cov", grid6_file]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_witness(self, grid6_file, capsys):
        assert run(["cov", grid6_file, "--witness"]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "3"
        chains = [line.split() for line in out[1:4]]
        covered = sorted(int(x) for chain in chains for x in chain)
        assert covered == list(range(15))

    def test_json(self, grid6_file, capsys):
        assert run(["cov", grid6_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema"] == 1 and doc["width"] == 3
        assert len(doc["certificate"]) == 3

    def test_stdin(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(grid_upper(6).to_text()))
        assert run(["cov", "-"]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_missing_file(self, capsys):
        assert run(["cov", "/nonexistent/x.poset"]) == 2

    def test_cyclic_input(self, tmp_path, capsys):
        path = tmp_path / "bad.poset"
        path.write_text("n 2\n0 1\n1 0\n")
        assert run(["cov", str(path)]) == 2
        assert "cycle" in capsys.readouterr().err


class TestAntichainDecompose:
    def test_antichain(self, grid6_file, capsys):
        assert run(["antichain", grid6_file]) == 0
        members = [int(x) for x in capsys.readouterr().out.split()]
        assert len(members) == 3

    def test_decompose(self, grid4_file, capsys):
        assert run(["decompose", grid4_file]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["0", "1", "2 3", "4", "5"]


class TestDistMetric:
    def test_dist(self, grid4_file, capsys):
        assert run(["dist", grid4_file, "2", "3"]) == 0
        assert capsys.readouterr().out.strip() == "1 2 3"

    def test_dist_unreachable(self, tmp_path, capsys):
        path = tmp_path / "chain.poset"
        path.write_text("n 3\n0 1\n1 2\n")
        assert run(["dist", str(path), "0", "2"]) == 1
        assert capsys.readouterr().out.strip() == "unreachable"

    def test_check_metric(self, tmp_path, capsys):
        path = tmp_path / "bridge.poset"
        path.write_text("n 4\n0 1\n1 2\n")
        assert run(["check-metric", str(path), "0", "2"]) == 0
        out = capsys.readouterr().out
        assert "item1=ok" in out and "item2=ok" in out

    def test_check_metric_precondition(self, tmp_path):
        path = tmp_path / "chain.poset"
        path.write_text("n 3\n0 1\n1 2\n")
        assert run(["check-metric", str(path), "0", "2"]) == 2


class TestFindGrid:
    def test_found(self, grid6_file, capsys):
        assert run(["find-grid", grid6_file, "-k", "3"]) == 0
        assert "->" in capsys.readouterr().out

    def test_not_found(self, grid6_file, capsys):
        assert run(["find-grid", grid6_file, "-k", "7"]) == 1

    def test_unknown_with_budget(self, tmp_path, capsys):
        from chaincover.generators import random_poset
        path = tmp_path / "r.poset"
        path.write_text(random_poset(16, 0.15, 3).to_text())
        code = run(["find-grid", str(path), "-k", "3", "--budget", "1"])
        assert code in (0, 1, 3)
        if code == 3:
            assert capsys.readouterr().out.strip() == "unknown"

    def test_dual_flag(self, grid6_file):
        assert run(["find-grid", grid6_file, "-k", "4", "--dual"]) in (0, 1)


class TestReduceVerb:
    def test_json_schema(self, grid6_file, capsys):
        assert run(["reduce", grid6_file, "-t", "3", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema"] == 1
        assert doc["case"] in ("case1", "case1_dual", "case2", "unreduced")
        assert doc["threshold"] == 3
        assert isinstance(doc["profiles"], dict)

    def test_precondition_exit2(self, grid6_file):
        assert run(["reduce", grid6_file, "-t", "9"]) == 2


class TestIdealEmbed:
    def test_found(self, tmp_path, capsys):
        poset, ideals = canonical_ideal_chain(6, 3)
        pfile = tmp_path / "grid.poset"
        pfile.write_text(poset.to_text())
        ifile = tmp_path / "ideals.txt"
        ifile.write_text("\n".join(" ".join(str(x) for x in sorted(j))
                                   for j in ideals) + "\n")
        assert run(["ideal-embed", str(pfile), "--ideals", str(ifile)]) == 0
        out = capsys.readouterr().out
        assert "0 1 ->" in out and "1 2 ->" in out

    def test_invalid_chain_exit2(self, tmp_path):
        poset, ideals = canonical_ideal_chain(6, 2)
        pfile = tmp_path / "grid.poset"
        pfile.write_text(poset.to_text())
        ifile = tmp_path / "ideals.txt"
        ifile.write_text("1\n0 1 2\n")  # (0,2) without (0,1): not downward closed
        assert run(["ideal-embed", str(pfile), "--ideals", str(ifile)]) == 2


class TestSymbolicVerbs:
    def test_sym_cov(self, capsys):
        assert run(["sym-cov", "grid(aleph(1))"]) == 0
        assert capsys.readouterr().out.strip() == "aleph(1)"

    def test_sym_cov_finite_grid(self, capsys):
        assert run(["sym-cov", "grid(6)"]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_sym_cov_parse_error(self, capsys):
        assert run(["sym-cov", "grid(("]) == 2

    def test_obstructions(self, capsys):
        assert run(["obstructions", "aleph(1)"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["grid(aleph(1))", "dual(grid(aleph(1)))"]

    def test_obstructions_domain_error(self, capsys):
        assert run(["obstructions", "aleph(0)"]) == 2


class TestGenDot:
    def test_gen_grid_round_trip(self, capsys):
        assert run(["gen", "grid", "-n", "6"]) == 0
        text = capsys.readouterr().out
        from chaincover.core import from_text
        assert from_text(text) == grid_upper(6)

    def test_gen_random_seeded(self, capsys):
        assert run(["gen", "random", "-n", "10", "-p", "0.2", "--seed", "7"]) == 0
        first = capsys.readouterr().out
        assert run(["gen", "random", "-n", "10", "-p", "0.2", "--seed", "7"]) == 0
        assert capsys.readouterr().out == first

    def test_gen_lexsum(self, tmp_path, capsys):
        a = tmp_path / "a.poset"
        a.write_text("n 2\n")
        b = tmp_path / "b.poset"
        b.write_text("n 3\n")
        assert run(["gen", "lexsum", str(a), str(b)]) == 0
        from chaincover.core import from_text
        from chaincover.generators import antichain, lex_sum
        assert from_text(capsys.readouterr().out) == lex_sum(
            [antichain(2), antichain(3)])

    def test_gen_size_error(self, capsys):
        assert run(["gen", "grid", "-n", "1"]) == 2

    def test_dot(self, grid4_file, capsys):
        assert run(["dot", grid4_file]) == 0
        assert "digraph" in capsys.readouterr().out
        assert run(["dot", grid4_file, "--inc"]) == 0
        assert "dashed" in capsys.readouterr().out


class TestRoundTripIdentity:
    def test_gen_cov_matches_sym_cov(self, capsys, monkeypatch):
        import io
        assert run(["gen", "grid", "-n", "6"]) == 0
        text = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        assert run(["cov", "-"]) == 0
        via_file = capsys.readouterr().out.strip()
        assert run(["sym-cov", "grid(6)"]) == 0
        assert capsys.readouterr().out.strip() == via_file


def test_selftest_quick(capsys):
    assert run(["selftest", "--rounds", "4"]) == 0
    assert "0 failed" in capsys.readouterr().out


def test_unknown_verb_usage_error(capsys):
    assert run(["frobnicate"]) == 2

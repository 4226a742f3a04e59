import json

import pytest

from seth_lab import ov
from seth_lab.cli import main
from seth_lab.gadgets import GadgetParams, params_desk, params_paper


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEd:
    def test_basic(self, capsys):
        code, out, _ = run(capsys, "ed", "--a", "kitten", "--b", "sitting")
        assert code == 0
        assert out.strip() == "3"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "ed", "--a", "x", "--b", "x")
        assert code == 0
        assert out.strip() == "0"

    def test_banded_exceeds(self, capsys):
        code, out, _ = run(
            capsys, "ed", "--a", "abc", "--b", "abd", "--engine", "banded", "--k", "0"
        )
        assert code == 1
        assert out.strip() == ">0"

    def test_bitparallel_engine(self, capsys):
        code, out, _ = run(
            capsys, "ed", "--a", "kitten", "--b", "sitting", "--engine", "bitparallel"
        )
        assert code == 0
        assert out.strip() == "3"

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "ed", "--a", "ab", "--b", "b", "--trace")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "1"
        assert len(lines) == 3  # distance + one op per symbol footprint

    def test_files(self, capsys, tmp_path):
        fa = tmp_path / "a.seq"
        fb = tmp_path / "b.seq"
        fa.write_text("0123\n")
        fb.write_text("0133")
        code, out, _ = run(
            capsys, "ed", "--a-file", str(fa), "--b-file", str(fb)
        )
        assert code == 0
        assert out.strip() == "1"

    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "ed", "--a", "x")
        assert code == 2
        assert "missing" in err

    def test_unreadable_file(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "ed", "--a", "x", "--b-file", str(tmp_path / "nope.seq")
        )
        assert code == 2


class TestPat:
    def test_substring(self, capsys):
        code, out, _ = run(capsys, "pat", "--a", "ab", "--b", "xxabxx")
        assert code == 0
        assert out.strip() == "0"

    def test_frozen_example(self, capsys):
        code, out, _ = run(capsys, "pat", "--a", "aa", "--b", "b")
        assert out.strip() == "2"

    def test_empty_pattern(self, capsys):
        code, out, _ = run(capsys, "pat", "--a", "", "--b", "anything")
        assert code == 0
        assert out.strip() == "0"


class TestGenOv:
    def test_planted(self, capsys, tmp_path):
        out_path = tmp_path / "inst.json"
        code, _, err = run(
            capsys,
            "gen-ov", "--na", "2", "--nb", "2", "--d", "3",
            "--planted", "true", "--seed", "5", "--out", str(out_path),
        )
        assert code == 0
        assert "found=True" in err
        inst = ov.load(out_path)
        assert ov.solve_ov_bruteforce(inst)[0]

    def test_deterministic(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        for p in (p1, p2):
            run(
                capsys,
                "gen-ov", "--na", "3", "--nb", "3", "--d", "4",
                "--planted", "false", "--density", "0.9",
                "--seed", "1", "--out", str(p),
            )
        assert p1.read_bytes() == p2.read_bytes()

    def test_budget_exhausted(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "gen-ov", "--na", "1", "--nb", "1", "--d", "1",
            "--planted", "false", "--density", "0.0",
            "--seed", "0", "--out", str(tmp_path / "x.json"),
        )
        assert code == 1


class TestReduce:
    def test_desk_outputs(self, capsys, tmp_path):
        inst_path = tmp_path / "inst.json"
        inst = ov.gen_ov(2, 2, 2, planted=True, seed=4)
        ov.save(inst, inst_path)
        out_dir = tmp_path / "out"
        code, _, _ = run(
            capsys,
            "reduce", "--instance", str(inst_path),
            "--profile", "desk", "--out-dir", str(out_dir),
        )
        assert code == 0
        names = sorted(f.name for f in out_dir.iterdir())
        assert names == ["instance.json", "meta.json", "p1_prime.seq", "p2_prime.seq"]
        meta = json.loads((out_dir / "meta.json").read_text())
        p = params_desk(2)
        assert meta["X"] == 2 * p.e_u
        assert meta["Y"] == 2 * len((out_dir / "p2_prime.seq").read_text()) + meta["X"]
        assert meta["E_u"] - meta["E_s"] == 2
        assert set((out_dir / "p1_prime.seq").read_text()) <= set("0123")

    def test_paper_refused_with_prediction(self, capsys, tmp_path):
        inst_path = tmp_path / "inst.json"
        inst = ov.gen_ov(2, 2, 1, planted=True, seed=4)
        ov.save(inst, inst_path)
        code, out, _ = run(
            capsys,
            "reduce", "--instance", str(inst_path),
            "--profile", "paper", "--out-dir", str(tmp_path / "out"),
        )
        assert code == 1
        p = params_paper(1)
        expect_p2 = (2 + 2 * 1) * (2 * p.T + p.ag2_len)
        expect_p1p = 2 * (2 * p.T + p.ag1_len) + 2 * expect_p2
        assert f"predicted |P1'| = {expect_p1p}" in out
        assert f"predicted |P2'| = {expect_p2}" in out

    def test_bad_instance_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, _ = run(
            capsys, "reduce", "--instance", str(bad), "--out-dir", str(tmp_path)
        )
        assert code == 2


class TestSolveOv:
    @pytest.fixture()
    def planted_path(self, tmp_path):
        path = tmp_path / "planted.json"
        ov.save(ov.gen_ov(2, 2, 1, planted=True, seed=2), path)
        return path

    @pytest.fixture()
    def free_path(self, tmp_path):
        path = tmp_path / "free.json"
        ov.save(ov.gen_ov(2, 2, 1, planted=False, one_density=0.9, seed=2), path)
        return path

    @pytest.mark.parametrize("method", ["brute", "pat", "edit"])
    def test_planted(self, capsys, planted_path, method):
        code, out, _ = run(
            capsys, "solve-ov", "--instance", str(planted_path), "--method", method
        )
        assert code == 0
        assert out.splitlines()[0] == "ORTHOGONAL-PAIR"

    @pytest.mark.parametrize("method", ["brute", "pat", "edit"])
    def test_pair_free(self, capsys, free_path, method):
        code, out, _ = run(
            capsys, "solve-ov", "--instance", str(free_path), "--method", method
        )
        assert code == 0
        assert out.splitlines()[0] == "NO-PAIR"

    def test_brute_witness(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        ov.save(ov.OvInstance(d=2, A=((1, 0),), B=((0, 1),)), path)
        code, out, _ = run(capsys, "solve-ov", "--instance", str(path))
        assert "witness: A[0], B[0]" in out

    def test_single_nonorthogonal(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        ov.save(ov.OvInstance(d=1, A=((1,),), B=((1,),)), path)
        code, out, _ = run(
            capsys, "solve-ov", "--instance", str(path), "--method", "pat"
        )
        assert out.strip() == "NO-PAIR"


class TestVerify:
    def test_pass_with_json(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        code, out, _ = run(
            capsys,
            "verify", "--d", "1", "--mode", "exhaustive",
            "--samples", "20", "--instances", "2",
            "--json", str(report_path),
        )
        assert code == 0
        assert "all passed" in out
        rows = json.loads(report_path.read_text())
        assert all(r["pass"] for r in rows)

    def test_report_names_table_values(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--d", "1", "--samples", "5", "--instances", "2"
        )
        p = params_desk(1)
        assert f"got {p.l0}" in out
        assert f"got {3 * p.l0}" in out

    def test_corrupted_params_fail(self, capsys, monkeypatch):
        broken = GadgetParams(d=1, l0=4, l1=38, l2=10, T=500, profile_name="desk")
        monkeypatch.setattr("seth_lab.cli.params_desk", lambda d: broken)
        code, out, _ = run(
            capsys, "verify", "--d", "1", "--samples", "5", "--instances", "2"
        )
        assert code == 1
        assert "FAIL" in out
        assert "param-constraints" in out or "nonorthogonal-pair-exact" in out


class TestBench:
    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "bench", "--selftest")
        assert code == 0
        assert abs(json.loads(out)["exponent"] - 2.0) < 1e-9

    def test_malformed_sizes(self, capsys):
        code, _, err = run(capsys, "bench", "--sizes", "10,abc")
        assert code == 2

    def test_small_run(self, capsys, tmp_path):
        out_csv = tmp_path / "b.csv"
        code, out, _ = run(
            capsys,
            "bench", "--engines", "dp", "--sizes", "50,100,150,200",
            "--trials", "3", "--seed", "0", "--out", str(out_csv),
        )
        assert code == 0
        lines = out_csv.read_text().strip().splitlines()
        assert lines[0] == "engine,n,trial,wall_time_s,checksum"
        assert len(lines) == 13
        fits = json.loads((tmp_path / "b.fit.json").read_text())
        assert "dp" in fits

    def test_unknown_engine(self, capsys):
        code, _, _ = run(capsys, "bench", "--engines", "fft")
        assert code == 2

import json
import os
import subprocess
import sys

import pytest

from altcox import cli, chains, presentations
from altcox.cli import main, EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_VERIFY
from altcox.coxeter import CoxeterMatrix
from altcox.words import parse_word, render_word


INFINITE_MATRIX = CoxeterMatrix(2, ((1, 0), (0, 1)))


def test_present_stdout(capsys):
    assert main(["present", "--family", "A", "--rank", "3"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["generators"] == ["s0", "s1", "s2"]
    assert len(data["relators"]) == 6


def test_present_variant_catalog(capsys):
    assert main(["present", "--family", "B", "--rank", "3",
                 "--variant", "edge"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["generators"] == ["r1", "r2"]


def test_present_output_file(tmp_path):
    out = tmp_path / "p.json"
    assert main(["present", "--family", "A", "--rank", "2",
                 "--output", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["generators"] == ["s0", "s1"]
    # atomic write leaves no temp files behind
    assert [f for f in os.listdir(tmp_path) if f.startswith(".tmp-")] == []


def test_present_missing_input_is_usage_error(capsys):
    assert main(["present"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_present_malformed_matrix_file(tmp_path, capsys):
    bad = tmp_path / "m.json"
    bad.write_text("{not json")
    assert main(["present", "--matrix", str(bad)]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    capsys.readouterr()


def test_enumerate_index_and_artifacts(tmp_path, capsys):
    table = tmp_path / "t.csv"
    dot = tmp_path / "g.dot"
    reps = tmp_path / "r.txt"
    assert main(["enumerate", "--family", "A", "--rank", "3",
                 "--subgroup-gens", "2",
                 "--table", str(table), "--dot", str(dot),
                 "--reps", str(reps)]) == EXIT_OK
    assert capsys.readouterr().out == "index 4\n"
    lines = table.read_text().splitlines()
    assert lines[0] == "coset,s0,s1,s2"
    assert len(lines) == 5
    assert 'label="H"' in dot.read_text()
    assert reps.read_text() == "1\ns2\ns1 s2\ns0 s1 s2\n"


def test_enumerate_subgroup_words(capsys):
    assert main(["enumerate", "--family", "A", "--rank", "3",
                 "--subgroup", "s0", "--subgroup", "s2"]) == EXIT_OK
    assert capsys.readouterr().out == "index 6\n"


def test_enumerate_bad_subgroup_word(capsys):
    assert main(["enumerate", "--family", "A", "--rank", "3",
                 "--subgroup", "nope"]) == EXIT_USAGE
    capsys.readouterr()


def test_enumerate_subgroup_gens_out_of_range(capsys):
    assert main(["enumerate", "--family", "A", "--rank", "3",
                 "--subgroup-gens", "9"]) == EXIT_USAGE
    capsys.readouterr()


def test_enumerate_byte_determinism(tmp_path):
    outs = []
    for name in ("a", "b"):
        t = tmp_path / f"{name}.csv"
        d = tmp_path / f"{name}.dot"
        assert main(["enumerate", "--family", "D", "--rank", "4",
                     "--variant", "edge", "--subgroup-gens", "2",
                     "--table", str(t), "--dot", str(d),
                     "--output", str(tmp_path / f"{name}.txt")]) == EXIT_OK
        outs.append((t.read_bytes(), d.read_bytes(),
                     (tmp_path / f"{name}.txt").read_bytes()))
    assert outs[0] == outs[1]


def test_order(capsys):
    assert main(["order", "--family", "A", "--rank", "4",
                 "--variant", "edge"]) == EXIT_OK
    assert capsys.readouterr().out == "60\n"


def test_order_cover(capsys):
    assert main(["order", "--variant", "a5-cover",
                 "--max-cosets", "500000"]) == EXIT_OK
    assert capsys.readouterr().out == "2160\n"


def test_order_cap_exceeded(tmp_path, capsys):
    mfile = tmp_path / "inf.json"
    mfile.write_text(INFINITE_MATRIX.to_json())
    assert main(["order", "--matrix", str(mfile),
                 "--max-cosets", "5000"]) == EXIT_CAP
    assert "cap exceeded" in capsys.readouterr().err


def test_nf_decompose(capsys):
    assert main(["nf", "--family", "A", "--variant", "carmichael",
                 "--rank", "3", "--word", "a1 a2"]) == EXIT_OK
    got = capsys.readouterr().out.strip()
    spec = chains.ChainSpec("A", "carmichael", 3)
    p = spec.presentation
    d = chains.decompose(spec, parse_word("a1 a2", p))
    assert got == " | ".join(render_word(f, p) for f in d.factors)


def test_nf_enumerate_lists_all_normal_forms(capsys):
    assert main(["nf", "--family", "A", "--variant", "carmichael",
                 "--rank", "3", "--enumerate"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 12
    assert len(set(lines)) == 12
    assert all(line.count(" | ") == 1 for line in lines)


def test_nf_needs_word_or_enumerate(capsys):
    assert main(["nf", "--family", "A", "--variant", "edge",
                 "--rank", "3"]) == EXIT_USAGE
    capsys.readouterr()


def test_verify_only_filter(capsys):
    assert main(["verify", "--only", "orders-A4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS orders-A4" in out
    assert out.strip().endswith("1/1 checks passed")


def test_verify_no_matching_check(capsys):
    assert main(["verify", "--only", "no-such-check"]) == EXIT_USAGE
    capsys.readouterr()


def test_verify_reports_failure(monkeypatch, capsys):
    # sabotage one check and confirm the failure exit code
    monkeypatch.setattr(presentations, "universal_extension",
                        lambda name: presentations.chain_presentation("A", "edge", 3))
    assert main(["verify", "--only", "a5-cover"]) == EXIT_VERIFY
    assert "FAIL a5-cover-order" in capsys.readouterr().out


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "altcox.cli", "order",
                        "--family", "B", "--rank", "3", "--variant", "edge"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "24\n"

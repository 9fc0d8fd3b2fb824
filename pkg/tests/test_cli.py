import json

import pytest

from qmds import cli, matrix_file


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_table(capsys):
    code, out, _ = run(capsys, "enumerate", 7, "--max-n", 24)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split() == list(cli.TABLE_COLUMNS)
    rows = [tuple(map(int, line.split())) for line in lines[1:]]
    assert {r[4] for r in rows if r[1:4] == (3, 2, 8)} == {2, 3, 4}


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", 11, "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert {"q": 11, "lambda": 5, "tau": 3, "rho": 4, "sigma": 3, "kappa": 1, "case": 3,
            "L": 4, "T": 7, "n": 45} in rows


def test_enumerate_errors(capsys):
    assert run(capsys, "enumerate", 6)[0] == 2
    code, out, _ = run(capsys, "enumerate", 3)
    assert code == 0 and len(out.strip().split("\n")) == 1


def test_construct_and_verify(tmp_path, capsys):
    out_path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "construct", 7, 3, 2, 8, 2, 5, "-o", out_path)
    assert code == 0 and "[[12,4,5]]_7" in out
    mf = matrix_file.read(out_path)
    assert mf.rows.shape == (4, 12)
    code, out, _ = run(capsys, "verify", out_path)
    rec = json.loads(out)
    assert code == 0 and rec["certified"] and rec["exhaustive_distance"] == 9


def test_construct_c1(tmp_path, capsys):
    code, out, _ = run(capsys, "construct", 11, 5, 3, 4, 3, 7, "-o", tmp_path / "c1.txt")
    assert code == 0 and "[[45,33,7]]_11" in out
    assert matrix_file.read(tmp_path / "c1.txt").rows.shape == (6, 45)


def test_construct_refuses_large_d(tmp_path, capsys):
    code, _, err = run(capsys, "construct", 11, 5, 3, 4, 3, 8, "-o", tmp_path / "x.txt")
    assert code == 2 and "T = 7" in err
    assert not (tmp_path / "x.txt").exists()


def test_verify_perturbed(tmp_path, capsys):
    path = tmp_path / "c.txt"
    run(capsys, "construct", 7, 3, 2, 8, 2, 5, "-o", path)
    lines = path.read_text().split("\n")
    toks = lines[3].split()
    a, b = toks[0].split(",")
    toks[0] = f"{(int(a) + 1) % 7},{b}"
    lines[3] = " ".join(toks)
    path.write_text("\n".join(lines))
    code, out, _ = run(capsys, "verify", path)
    rec = json.loads(out)
    assert code == 1 and rec["self_orthogonal"] is False


def test_verify_header_L_mismatch(tmp_path, capsys):
    path = tmp_path / "c.txt"
    run(capsys, "construct", 7, 3, 2, 8, 2, 5, "-o", path)
    text = path.read_text().replace("7 1 7 12 4 0 ", "7 1 7 12 4 1 ", 1)
    path.write_text(text)
    code, out, _ = run(capsys, "verify", path)
    assert code == 1 and json.loads(out)["obligations"]["L_matches_table"] is False


def test_verify_truncated(tmp_path, capsys):
    path = tmp_path / "c.txt"
    run(capsys, "construct", 7, 3, 2, 8, 2, 5, "-o", path)
    path.write_text(path.read_text()[:200])
    code, _, err = run(capsys, "verify", path)
    assert code == 2 and "line" in err


def test_verify_missing_file(tmp_path, capsys):
    assert run(capsys, "verify", tmp_path / "nope.txt")[0] == 2


@pytest.mark.parametrize("argv,T", [((5, 3, 4, "--L", 4), (3, 6)), ((28, 5, 30, "--L", 8), (13, 23))])
def test_oracle(capsys, argv, T):
    code, out, _ = run(capsys, "oracle", *argv, "--json")
    (row,) = json.loads(out)
    assert code == 0 and (row["T1"], row["T2"]) == T and row["matches_closed_form"] is True


def test_oracle_all_L(capsys):
    code, out, _ = run(capsys, "oracle", 3, 2, 8, "--all-L")
    assert code == 0 and "residues maximising T2: [0]" in out


def test_oracle_rejects_small_moduli(capsys):
    assert run(capsys, "oracle", 1, 2, 8)[0] == 2


def test_reproduce_small_d(capsys):
    code, out, _ = run(capsys, "reproduce", "small-d", "--exhaustive-cap", 49**3)
    assert code == 0
    for name in ("[[12,4,5]]_7", "[[18,10,5]]_7", "[[24,16,5]]_7"):
        assert f"{name} certified" in out


def test_reproduce_wrong_class(capsys):
    code, _, err = run(capsys, "reproduce", "c1", "--q", 13)
    assert code == 2 and "fixture_congruence" in err


def test_reproduce_json(capsys):
    code, out, _ = run(capsys, "reproduce", "c2", "--q", 11, "--json", "--samples", 500)
    recs = json.loads(out)
    assert code == 0 and all(r["certified"] for r in recs)


def test_usage_error():
    with pytest.raises(SystemExit) as err:
        cli.main(["construct", "7"])
    assert err.value.code == 2

import json

from lincat.cli import main

DATA = "src/lincat/data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_card_bz2(capsys):
    code, out, _ = run_cli(capsys, "card", f"{DATA}/bz2.json")
    assert code == 0
    assert out.strip() == "1/2"


def test_card_json(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "card", f"{DATA}/mixed.json")
    assert code == 0
    assert json.loads(out)["cardinality"] == {"num": 5, "den": 3}


def test_basis_bs3(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "basis", f"{DATA}/bs3.json")
    assert code == 0
    basis = json.loads(out)["basis"]
    assert len(basis) == 3
    assert sorted(b["dim"] for b in basis) == [1, 1, 2]


def test_span_fig1(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "span", f"{DATA}/fig1_span.json")
    assert code == 0
    assert json.loads(out)["dims"] == [[1, 1, 0], [0, 1, 1]]


def test_degroupoidify_fig1(capsys):
    code, out, _ = run_cli(
        capsys, "--output", "json", "degroupoidify", f"{DATA}/fig1_span.json"
    )
    assert code == 0
    mat = json.loads(out)["matrix"]
    assert mat[0][0] == {"num": 1, "den": 1}
    assert mat[1][0] == {"num": 0, "den": 1}


def test_degroupoidify_spanmap(capsys):
    code, out, _ = run_cli(
        capsys, "--output", "json", "degroupoidify", f"{DATA}/gmap_bz2.json"
    )
    assert code == 0
    assert json.loads(out)["matrix"] == [[{"num": 1, "den": 2}]]


def test_twomorph_gmap(capsys):
    code, out, _ = run_cli(capsys, "--output", "json", "twomorph", f"{DATA}/gmap_bz2.json")
    assert code == 0
    obj = json.loads(out)
    assert obj["coefficients"][0]["value"] == {"num": 1, "den": 2}
    assert obj["blocks"]["0,0"] == [[[0.5, 0.0]]]


def test_compose_type_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "compose", f"{DATA}/fig1_span.json", f"{DATA}/fig1_span.json")
    assert code == 2
    assert "error" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run_cli(capsys, "card", "no-such-file.json")
    assert code == 2


def test_wrong_kind_exit_2(capsys):
    code, _, err = run_cli(capsys, "card", f"{DATA}/s3.json")
    assert code == 2


def test_machine_output_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "--output", "json", "twomorph", f"{DATA}/gmap_bz2.json")
    _, out2, _ = run_cli(capsys, "--output", "json", "twomorph", f"{DATA}/gmap_bz2.json")
    assert out1 == out2


def test_table_and_json_agree(capsys):
    _, table, _ = run_cli(capsys, "card", f"{DATA}/bz2.json")
    _, machine, _ = run_cli(capsys, "--output", "json", "card", f"{DATA}/bz2.json")
    q = json.loads(machine)["cardinality"]
    assert table.strip() == f"{q['num']}/{q['den']}"


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("LINCAT_SEED", "12345")
    code, out, _ = run_cli(capsys, "--output", "json", "basis", f"{DATA}/bs3.json")
    assert code == 0
    assert len(json.loads(out)["basis"]) == 3
    monkeypatch.setenv("LINCAT_SEED", "not-an-int")
    code, _, err = run_cli(capsys, "basis", f"{DATA}/bs3.json")
    assert code == 2


def test_verify_small_suite(capsys):
    code, out, _ = run_cli(
        capsys,
        "--output",
        "json",
        "verify",
        "--suite",
        f"{DATA}/suite_small.json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["ok"] is True


def test_compose_with_beta(capsys, tmp_path):
    from lincat.documents import serialize
    from lincat.suites import fig1_span
    from lincat.groupoids import reverse_span

    p1 = tmp_path / "rev.json"
    p2 = tmp_path / "fig1.json"
    p1.write_bytes(serialize(reverse_span(fig1_span()), name="rev"))
    p2.write_bytes(serialize(fig1_span(), name="fig1"))
    code, out, _ = run_cli(
        capsys, "--output", "json", "compose", str(p1), str(p2), "--verify-beta"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["beta"]["dims_ok"] is True
    assert obj["beta"]["dims"] == [[2, 1], [1, 2]]
    assert len(obj["apex"]) == 6


def test_verify_impossible_tolerance_exits_1(capsys):
    # with tolerance 0 even exact checks cannot pass, exercising the
    # verification-failure exit path
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--suite",
        f"{DATA}/suite_small.json",
        "--tolerance",
        "0",
    )
    assert code == 1
    assert "VERIFICATION FAILED" in out

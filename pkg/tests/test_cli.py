"""Command-line interface driven in-process: exit codes, formats, determinism."""

import json

import pytest

from qudenc.cli import fmt, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fmt_significant_digits():
    assert fmt(32) == "32"
    assert fmt(1.0) == "1"
    assert fmt(1.5) == "1.5"
    assert fmt(1 / 3) == "0.333333333333"  # 12 significant digits
    assert fmt(1e-15) == "1e-15"


def test_encode_block_unary_display(capsys):
    code, out, _ = run(capsys, "encode", "--enc", "bu", "--d", "12",
                       "--g", "3", "--level", "7")
    assert code == 0
    assert "00 10 00 00" in out
    assert "support [4, 5]" in out


def test_encode_json_payload(tmp_path, capsys):
    path = tmp_path / "enc.json"
    code, out, _ = run(capsys, "encode", "--enc", "gray", "--d", "8",
                       "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["n_qubits"] == 3
    assert len(data["codewords"]) == 8
    assert data["codewords"][2]["bits"] == "011"  # Gray(2) = 3


def test_map_op_number_operator_json(tmp_path, capsys):
    path = tmp_path / "op.json"
    code, out, _ = run(capsys, "map-op", "--enc", "sb", "--d", "3",
                       "--op", "n", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["encoding"] == "sb(d=3)"
    assert data["operator"] == "n"
    assert len(data["source_digest"]) == 16
    terms = {t["pauli"]: t["re"] for t in data["terms"]}
    assert terms == {"": 0.75, "Z0": 0.25, "Z1": -0.25, "Z0 Z1": -0.75}
    # canonical order: identity first, then by lowest acting qubit
    assert [t["pauli"] for t in data["terms"]] == ["", "Z0", "Z0 Z1", "Z1"]


def test_bounds_headline_example(capsys):
    code, out, _ = run(capsys, "bounds", "--dH", "2", "--K", "4")
    assert code == 0
    assert "cnot upper bound 32" in out
    assert "closed form 32" in out


def test_bounds_diagonal(capsys):
    code, out, _ = run(capsys, "bounds", "--dH", "0", "--K", "3", "--diagonal")
    assert code == 0
    assert "cnot upper bound 10" in out  # 3*8 - 16 + 2


def test_bounds_invalid_query_is_usage_error(capsys):
    code, _, err = run(capsys, "bounds", "--dH", "0", "--K", "3")
    assert code == 2
    assert "error" in err


def test_trotter_and_optimize_and_qasm_pipeline(tmp_path, capsys):
    circ_path = tmp_path / "circ.json"
    code, out, _ = run(capsys, "trotter", "--enc", "sb", "--d", "4",
                       "--op", "q", "--theta", "0.25", "--out", str(circ_path))
    assert code == 0 and "entangling" in out

    opt_path = tmp_path / "opt.json"
    code, out, _ = run(capsys, "optimize", "--circuit", str(circ_path),
                       "--out", str(opt_path))
    assert code == 0
    before, after = json.loads(circ_path.read_text()), json.loads(opt_path.read_text())
    assert len(after["gates"]) <= len(before["gates"])

    qasm_path = tmp_path / "circ.qasm"
    code, _, _ = run(capsys, "export-qasm", "--circuit", str(opt_path),
                     "--out", str(qasm_path))
    assert code == 0
    assert qasm_path.read_text().startswith("OPENQASM 2.0;")


def test_conversion_cost_clifford_t(capsys):
    code, out, _ = run(capsys, "conversion-cost", "--kind", "sb2unary",
                       "--d", "16", "--decompose", "clifford_t")
    assert code == 0
    assert "'CNOT': 103" in out


def test_convert_circuit_writes_json(tmp_path, capsys):
    path = tmp_path / "conv.json"
    code, out, _ = run(capsys, "convert-circuit", "--kind", "sb2gray",
                       "--d", "8", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["n_qubits"] == 3 and len(data["gates"]) == 2


def test_simulate_check_pass_and_fail(tmp_path, capsys):
    from qudenc.circuits import export_circuit, trotter_step
    from qudenc.encoder import encode_matrix
    from qudenc.encoding import SB, EncodingSpec
    from qudenc.qudit_ops import bosonic

    h = encode_matrix(EncodingSpec(SB, 4), bosonic(4, "q")).sum
    pauli_path = tmp_path / "h.json"
    pauli_path.write_text(json.dumps(h.to_json_dict()))
    circ_path = tmp_path / "step.json"
    circ_path.write_text(export_circuit(trotter_step(h, 0.3), "json"))

    code, out, _ = run(capsys, "simulate-check", "--pauli", str(pauli_path),
                       "--circuit", str(circ_path), "--theta", "0.3")
    assert code == 0 and "PASS" in out

    code, out, _ = run(capsys, "simulate-check", "--pauli", str(pauli_path),
                       "--circuit", str(circ_path), "--theta", "0.4")
    assert code == 1 and "FAIL" in out


def test_report_heisenberg_csv_row(tmp_path, capsys):
    path = tmp_path / "rep.csv"
    code, out, _ = run(capsys, "report", "--model", "heisenberg", "--s", "1.5",
                       "--N", "2", "--schemes", "sb_only", "--out", str(path))
    assert code == 0
    assert "scenario A" in out
    lines = path.read_text().splitlines()
    assert lines[0] == ("model,d_or_s,N,scheme,entangling_count,relative_to_sb,"
                        "qubits_per_particle,conversions_counted,scenario")
    assert lines[1] == "heisenberg,1.5,2,sb_only,16,1,2,0,A"


def test_report_all_schemes_and_repeatability(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["report", "--model", "bose-hubbard", "--d", "3..4", "--N", "1",
            "--out"]
    assert main(argv + [str(a)]) == 0
    assert main(argv + [str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 1 + 2 * 5  # header + 5 schemes per cutoff
    assert {line.split(",")[1] for line in lines[1:]} == {"3", "4"}


def test_report_unknown_model_is_usage_error(capsys):
    code, _, err = run(capsys, "report", "--model", "nope", "--d", "4")
    assert code == 2 and "unknown model" in err


def test_report_heisenberg_requires_s(capsys):
    code, _, err = run(capsys, "report", "--model", "heisenberg", "--d", "4")
    assert code == 2 and "--s" in err


def test_g_flag_rejected_outside_block_unary(capsys):
    code, _, err = run(capsys, "encode", "--enc", "sb", "--d", "8", "--g", "3")
    assert code == 2 and "--enc bu" in err


def test_missing_circuit_file_is_usage_error(capsys):
    code, _, err = run(capsys, "optimize", "--circuit", "/no/such/file.json")
    assert code == 2


def test_seed_resolution(tmp_path, capsys, monkeypatch):
    def dense_json(argv_extra):
        path = tmp_path / "d.json"
        assert main(["map-op", "--enc", "sb", "--d", "4", "--op", "dense",
                     "--out", str(path)] + argv_extra) == 0
        capsys.readouterr()
        return path.read_text()

    monkeypatch.delenv("SEED", raising=False)
    explicit5 = dense_json(["--seed", "5"])
    monkeypatch.setenv("SEED", "5")
    from_env = dense_json([])
    assert from_env == explicit5
    # an explicit flag wins over the environment
    monkeypatch.setenv("SEED", "6")
    assert dense_json(["--seed", "5"]) == explicit5
    assert dense_json([]) != explicit5

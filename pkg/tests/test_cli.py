"""End-to-end command-line paths: pipelines, exit codes, diagnostics."""

import csv
import io
import json

import pytest

from taftlab.cli import main
from taftlab.fixtures import ss_specs, sweedler_two_dim, trivial_action
from taftlab.serialize import dumps_canonical, hma_to_json, ss_spec_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dumps_canonical(doc))
    return str(path)


def test_hopf_check(capsys):
    code, out, err = run(capsys, "hopf-check", "--m", "3")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["ok"] is True and doc["m"] == 3


def test_qbinom_vanishing(capsys):
    code, out, _ = run(capsys, "qbinom", "4", "2", "4", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["coeffs"] == ["0", "0"]
    code, out, _ = run(capsys, "qbinom", "2", "1", "2", "0")
    assert json.loads(out)["value"]["coeffs"][0] == "2"


def test_qbinom_rejects_out_of_range(capsys):
    code, out, err = run(capsys, "qbinom", "2", "5", "2", "1")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "invalid-input"


def test_construct_verify_simple_pipeline(capsys, tmp_path):
    spec_path = write_doc(tmp_path, "spec.json",
                          ss_spec_to_json(ss_specs()["sweedler_p_gamma3"]))
    built = str(tmp_path / "mod.json")
    code, out, _ = run(capsys, "construct", "ss", "--in", spec_path,
                       "--out", built)
    assert code == 0

    code, out, _ = run(capsys, "verify", "--in", built)
    assert code == 0
    assert json.loads(out)["ok"] is True

    code, out, _ = run(capsys, "simple", "--in", built)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "certified_simple"
    assert doc["operator_algebra_dim"] == 16


def test_verify_failure_exits_two(capsys, tmp_path):
    doc = hma_to_json(sweedler_two_dim())
    doc["c"][0][0] = {"m": 2, "coeffs": ["5", "0"]}  # no longer order m
    path = write_doc(tmp_path, "bad.json", doc)
    code, out, err = run(capsys, "verify", "--in", path)
    assert code == 2
    assert json.loads(out)["ok"] is False
    assert json.loads(err)["error"] == "verification-failure"


def test_simple_reports_witness_for_sums(capsys, tmp_path):
    from taftlab.algebra_core import direct_sum, field_algebra

    mod = trivial_action(direct_sum(field_algebra(2), field_algebra(2)))
    path = write_doc(tmp_path, "sum.json", hma_to_json(mod))
    code, out, _ = run(capsys, "simple", "--in", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "not_simple"
    assert doc["witness_dim"] == 1


def test_iso_ss_verdicts(capsys, tmp_path):
    a = write_doc(tmp_path, "a.json", ss_spec_to_json(ss_specs()["pair_alpha_1"]))
    b = write_doc(tmp_path, "b.json",
                  ss_spec_to_json(ss_specs()["pair_alpha_neg1"]))
    c = write_doc(tmp_path, "c.json", ss_spec_to_json(ss_specs()["pair_alpha_2"]))

    code, out, _ = run(capsys, "iso-ss", "--a", a, "--b", b)
    assert code == 0
    doc = json.loads(out)
    assert doc["isomorphic"] is True and doc["r"] == 1

    code, out, _ = run(capsys, "iso-ss", "--a", a, "--b", c)
    assert code == 0
    assert json.loads(out)["isomorphic"] is False


def test_iso_generic_self(capsys, tmp_path):
    path = write_doc(tmp_path, "m.json", hma_to_json(sweedler_two_dim()))
    code, out, _ = run(capsys, "iso", "--a", path, "--b", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "isomorphic"

    other = write_doc(tmp_path, "other.json", hma_to_json(
        trivial_action(sweedler_two_dim().algebra)))
    code, out, _ = run(capsys, "iso", "--a", path, "--b", other)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "no_witness_found"
    assert doc["budget"] == 64


def _jet3():
    """F[t]/(t^3) over Q(zeta_2)."""
    from taftlab.algebra_core import FinDimAlgebra
    from taftlab.cyclotomic import CycNum

    zero, one = CycNum.zero(2), CycNum.one(2)
    e = lambda i: tuple(one if j == i else zero for j in range(3))
    z3 = (zero,) * 3
    return FinDimAlgebra(2, (
        (e(0), e(1), e(2)),
        (e(1), e(2), z3),
        (e(2), z3, z3),
    ))


def test_radical_of_jets(capsys, tmp_path):
    from taftlab.serialize import algebra_to_json

    path = write_doc(tmp_path, "jets.json", algebra_to_json(_jet3()))
    code, out, _ = run(capsys, "radical", "--in", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2
    assert len(doc["basis"]) == 2


def test_grading_command(capsys, tmp_path):
    from taftlab.algebra_core import matrix_algebra
    from taftlab.fixtures import elementary_c_matrix
    from taftlab.serialize import algebra_to_json, matrix_doc_to_json

    a = matrix_algebra(2, 2)
    apath = write_doc(tmp_path, "alg.json", algebra_to_json(a))
    cpath = write_doc(tmp_path, "c.json",
                      matrix_doc_to_json(elementary_c_matrix(2, (0, 1))))
    code, out, _ = run(capsys, "grading", "--in", apath, "--c", cpath)
    assert code == 0
    doc = json.loads(out)
    assert doc["dims"] == [2, 2]

    code, _, err = run(capsys, "grading", "--in", apath, "--c", cpath,
                       "--m", "3")
    assert code == 2
    assert json.loads(err)["error"] == "invalid-input"


def test_recover_round_trip_via_cli(capsys, tmp_path):
    from taftlab.constructions import build_nilpotent_extension
    from taftlab.fixtures import nilext_specs

    ext = build_nilpotent_extension(nilext_specs()["base_field_m2"])
    path = write_doc(tmp_path, "ext.json", hma_to_json(ext.module))
    base_out = str(tmp_path / "base.json")
    code, out, _ = run(capsys, "recover", "--in", path,
                       "--out-base", base_out)
    assert code == 0
    doc = json.loads(out)
    assert doc["nil_index"] == 2
    assert doc["base_dim"] == 1

    rebuilt = str(tmp_path / "rebuilt.json")
    code, out, _ = run(capsys, "construct", "nilext", "--in", base_out,
                       "--m", "2", "--out", rebuilt)
    assert code == 0
    reread = json.loads(open(rebuilt).read())
    original = json.loads(open(path).read())
    assert reread["algebra"]["mult"] == original["algebra"]["mult"]


def test_recover_rejects_semisimple(capsys, tmp_path):
    from taftlab.constructions import build_semisimple

    mod = build_semisimple(ss_specs()["mat2_trivial"])
    path = write_doc(tmp_path, "ss.json", hma_to_json(mod))
    code, out, err = run(capsys, "recover", "--in", path)
    assert code == 2
    assert "semisimple" in json.loads(err)["message"]


def test_codim_single_degree(capsys, tmp_path):
    path = write_doc(tmp_path, "m.json", hma_to_json(sweedler_two_dim()))
    code, out, _ = run(capsys, "codim", "--in", path, "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 1 and doc["c"] == 3
    assert doc["rows"] == 4 and doc["cols"] == 4
    assert doc["bound_ok"] is True


def test_codim_report_csv(capsys, tmp_path):
    path = write_doc(tmp_path, "m.json", hma_to_json(sweedler_two_dim()))
    code, out, _ = run(capsys, "codim", "--in", path, "--n", "3",
                       "--report", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["1", "2", "3"]
    assert [r["c_n"] for r in rows] == ["3", "7", "15"]
    assert all(r["bound_ok"] == "True" for r in rows)


def test_codim_budget_exit(capsys, tmp_path):
    path = write_doc(tmp_path, "m.json", hma_to_json(sweedler_two_dim()))
    code, out, err = run(capsys, "codim", "--in", path, "--n", "4",
                         "--budget", "100")
    assert code == 2 and out == ""
    diag = json.loads(err)
    assert diag["error"] == "budget-exceeded"
    assert "budget" in diag["message"]


def test_schema_violation_exit(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text('{"format": "taftlab/1", "m": 2}\n')
    code, out, err = run(capsys, "verify", "--in", str(path))
    assert code == 2
    assert json.loads(err)["error"] == "invalid-input"


def test_missing_file_exit(capsys):
    code, _, err = run(capsys, "verify", "--in", "/nonexistent/x.json")
    assert code == 2
    assert json.loads(err)["error"] == "invalid-input"


def test_fixtures_command(capsys, tmp_path):
    out_dir = tmp_path / "corpus"
    code, out, _ = run(capsys, "fixtures", "--out-dir", str(out_dir))
    assert code == 0
    listing = json.loads(out)
    assert listing["count"] == len(listing["files"])
    assert (out_dir / "sweedler2dim.json").exists()


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "result.json"
    code, out, _ = run(capsys, "qbinom", "3", "1", "3", "1",
                       "--out", str(target))
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["n"] == 3 and doc["k"] == 1

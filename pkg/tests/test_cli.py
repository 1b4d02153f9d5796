import json

import pytest

from borderedfloer import cli
from borderedfloer.laurent import LaurentPolynomial

from oracle_constants import (STRANDS_DIMS_GENUS1, TREFOIL_ALEXANDER,
                              TREFOIL_SEIFERT, TREFOIL_TABLE)


def data(name):
    return str(cli.data_path(name))


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--json", *argv)
    return code, json.loads(out) if out else None, err


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 2
    assert "usage" in out


def test_pmc_validate(capsys):
    code, payload, _ = run_json(capsys, "pmc", "validate",
                                data("pmc_genus1.json"))
    assert code == 0
    assert payload == {"ok": True, "points": 4, "genus": 1,
                       "subordinate": True}


def test_pmc_validate_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "pmc", "validate", str(bad))
    assert code == 2
    assert "line" in err
    code, _, err = run(capsys, "pmc", "validate", str(tmp_path / "none.json"))
    assert code == 2


def test_pmc_validate_invalid_circle(capsys, tmp_path):
    f = tmp_path / "disc.json"
    f.write_text(json.dumps({"points": 4, "matching": [1, 1, 2, 2],
                             "orientation": ["-", "+", "-", "+"]}))
    code, _, err = run(capsys, "pmc", "validate", str(f))
    assert code == 1
    assert "error" in err


def test_pmc_reverse_and_consum(capsys):
    code, out, _ = run(capsys, "pmc", "reverse", data("pmc_genus1.json"))
    assert code == 0
    assert json.loads(out)["matching"] == [2, 1, 2, 1]
    code, out, _ = run(capsys, "pmc", "consum",
                       data("pmc_genus1.json"), data("pmc_genus1.json"))
    assert code == 0
    assert json.loads(out)["matching"] == [1, 2, 1, 2, 3, 4, 3, 4]


def test_alg_basis(capsys):
    for i, expected in STRANDS_DIMS_GENUS1.items():
        code, payload, _ = run_json(capsys, "alg", "basis",
                                    "--pmc", data("pmc_genus1.json"),
                                    "--strands", str(i), "--grading")
        assert code == 0
        assert payload["count"] == expected
        assert all("gr" in row for row in payload["basis"])


def test_alg_check_gradings(capsys):
    code, payload, _ = run_json(capsys, "alg", "check-gradings",
                                "--pmc", data("pmc_genus1.json"))
    assert code == 0
    assert payload["ok"] is True
    assert payload["counterexample"] is None


def test_diagrams_list_builtin(capsys):
    code, payload, _ = run_json(capsys, "diagrams", "list-builtin")
    assert code == 0
    assert "trefoil" in payload["builtin"]


def test_diagrams_generators(capsys):
    code, payload, _ = run_json(capsys, "diagrams", "generators",
                                data("diagram_trefoil.json"))
    assert code == 0
    assert payload["count"] == 7
    got = {g["name"]: g["grading"] for g in payload["generators"]}
    assert got == {k: v[0] for k, v in TREFOIL_TABLE.items()}
    code, _, err = run(capsys, "diagrams", "generators",
                       data("diagram_trefoil.json"), "--flavor", "A")
    assert code == 2


def test_mod_validate_and_box(capsys):
    code, payload, _ = run_json(capsys, "mod", "validate",
                                data("module_solid_torus_d.json"))
    assert code == 0 and payload["ok"]
    code, payload, _ = run_json(capsys, "mod", "box",
                                data("module_solid_torus_a.json"),
                                data("module_solid_torus_d.json"))
    assert code == 0
    assert payload["homology"] == {"0": 0, "1": 0}
    code, _, _ = run(capsys, "mod", "box",
                     data("module_solid_torus_d.json"),
                     data("module_solid_torus_d.json"))
    assert code == 2


def test_hh_euler(capsys):
    code, payload, _ = run_json(capsys, "hh", "euler",
                                data("module_dehn_twist_da.json"))
    assert code == 0
    assert payload["euler"] == {"0": -1}


def test_decat_and_knot_pipeline(capsys, tmp_path):
    code, out, _ = run(capsys, "decat", "psi",
                       data("module_solid_torus_d.json"))
    assert code == 0
    psi = json.loads(out)
    assert psi["dimension"] == 2

    golden = json.loads(cli.data_path("golden_trefoil.json").read_text())
    pfile = tmp_path / "plucker.json"
    pfile.write_text(json.dumps(golden["plucker"]))
    from borderedfloer.decat import ExteriorElement, combine_factors
    joint = combine_factors(ExteriorElement.from_json(golden["plucker"]))
    jfile = tmp_path / "point.json"
    jfile.write_text(json.dumps(joint.to_json()))
    code, out, _ = run(capsys, "decat", "upsilon", str(pfile))
    assert code == 0
    mat = json.loads(out)
    mfile = tmp_path / "matrix.json"
    mfile.write_text(json.dumps(mat))
    code, payload, _ = run_json(capsys, "decat", "trace", str(mfile))
    assert code == 0
    assert LaurentPolynomial(
        {int(e): c for e, c in payload["trace"].items()}).symmetrized() \
        == LaurentPolynomial(TREFOIL_ALEXANDER)

    ofile = tmp_path / "omega.json"
    ofile.write_text(json.dumps({"matrix": golden["omega"]}))
    code, payload, _ = run_json(capsys, "knot", "from-plucker",
                                str(jfile), "--omega", str(ofile))
    assert code == 0
    assert payload["content"] == 1
    assert payload["alexander"] == {str(e): c
                                    for e, c in TREFOIL_ALEXANDER.items()}

    presfile = tmp_path / "pres.json"
    presfile.write_text(json.dumps({"A": [r[:2] for r in payload["rows"]],
                                    "B": [r[2:] for r in payload["rows"]]}))
    code, payload2, _ = run_json(capsys, "knot", "alexander",
                                 "--presentation", str(presfile))
    assert code == 0
    assert payload2["alexander"] == payload["alexander"]
    code, payload3, _ = run_json(capsys, "knot", "seifert",
                                 "--presentation", str(presfile),
                                 "--omega", str(ofile))
    assert code == 0
    assert tuple(tuple(r) for r in payload3["seifert"]) in (
        TREFOIL_SEIFERT,
        tuple(tuple(r) for r in payload["seifert"]))


def test_trefoil_end_to_end(capsys):
    code, payload, _ = run_json(capsys, "trefoil")
    assert code == 0
    assert payload["mismatches"] == []
    assert payload["alexander"] == {str(e): c
                                    for e, c in TREFOIL_ALEXANDER.items()}
    code, out, _ = run(capsys, "knot", "trefoil")
    assert code == 0
    assert "all values match the golden file" in out

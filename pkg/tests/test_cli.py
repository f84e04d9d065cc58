import json

import pytest

from sphersmooth.cli import main
from sphersmooth.documents import loads, parse_document, system_from_document

FIX = "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(capsys):
    code, out, err = run(capsys, "validate", f"{FIX}/c4_tensor_c4.json")
    assert code == 0
    assert "valid" in out


def test_validate_missing_file(capsys):
    code, out, err = run(capsys, "validate", "no/such/file.json")
    assert code == 1
    assert "cannot read" in err


def test_validate_invalid_datum(tmp_path, capsys):
    obj = loads(open(f"{FIX}/c4_tensor_c4.json").read())
    obj["sigma"][0]["m_coords"] = [2, -2, 0, -2, 2, 0]  # not primitive
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    code, out, err = run(capsys, "validate", str(p))
    assert code == 2
    assert "sigma" in err


def test_smooth_worked_example(capsys):
    code, out, err = run(capsys, "smooth", f"{FIX}/c4_tensor_c4.json")
    assert code == 0
    assert "smooth: yes" in out


def test_smooth_json_reparses(capsys):
    code, out, err = run(capsys, "smooth", f"{FIX}/c4_tensor_c4.json", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["smooth"] is True
    assert rep["condition3"]["assignment"] == [{"root": 2, "ray": [0, 0, 0, 0, 0, 1]}]


def test_smooth_toric_singular(capsys):
    code, out, err = run(capsys, "smooth", f"{FIX}/toric_singular.json", "--explain")
    assert code == 3
    assert "elementary divisor 2" in out


def test_smooth_toroidal(capsys):
    code, out, err = run(capsys, "smooth", f"{FIX}/toroidal_factorial.json")
    assert code == 0
    assert "vacuous" in out


def test_factorial(capsys):
    code, out, err = run(capsys, "factorial", f"{FIX}/toric_singular.json")
    assert code == 3
    code, out, err = run(capsys, "factorial", f"{FIX}/toric_smooth.json")
    assert code == 0


def test_localize(capsys):
    code, out, err = run(
        capsys, "localize", f"{FIX}/c4_tensor_c4.json", "--at", "0.1,0.2,1.1,1.2"
    )
    assert code == 0
    datum, cone, _ = parse_document(loads(out))
    assert len(datum.sigma) == 4
    code, out, err = run(capsys, "localize", f"{FIX}/c4_tensor_c4.json", "--at", "7.7")
    assert code == 2


def test_closure_doubles(capsys):
    code, out, err = run(capsys, "closure", f"{FIX}/b2_sphere_system.json")
    assert code == 0
    system, _ = system_from_document(loads(out))
    assert system.sigma == ((2, 2),)


def test_decompose(capsys):
    code, out, err = run(capsys, "decompose", f"{FIX}/product_two_sl2.json")
    assert code == 0
    docs = json.loads(out)
    assert len(docs) == 2
    for doc in docs:
        system, _ = system_from_document(doc)
        assert system.sigma == ((1,),)


def test_catalog_list(capsys):
    code, out, err = run(capsys, "catalog", "list")
    assert code == 0
    assert out.count("(") >= 42
    code, out, err = run(capsys, "catalog", "list", "--json")
    listing = json.loads(out)
    assert len(listing) == 42


def test_catalog_show(capsys):
    code, out, err = run(capsys, "catalog", "show", "21")
    assert code == 0
    system, marked = system_from_document(loads(out))
    assert system.sigma == ((1,),) and marked == {0}
    code, out, err = run(capsys, "catalog", "show", "13", "--format", "svg")
    assert code == 0 and out.startswith("<svg")
    code, out, err = run(capsys, "catalog", "show", "5", "--param", "n=3", "--format", "text")
    assert code == 0 and "A2" in out
    code, out, err = run(capsys, "catalog", "show", "44")
    assert code == 2
    code, out, err = run(capsys, "catalog", "show", "9", "--param", "n=3")
    assert code == 2  # missing n'
    code, out, err = run(capsys, "catalog", "show", "6", "--param", "n=4")
    assert code == 2  # outside the odd domain


def test_diagram(capsys):
    code, out, err = run(capsys, "diagram", f"{FIX}/c4_tensor_c4.json", "--format", "svg")
    assert code == 0
    assert out.startswith("<svg")


def test_smooth_json_verdict_matches_exit(capsys):
    code, out, err = run(capsys, "smooth", f"{FIX}/toric_singular.json", "--json")
    assert code == 3
    assert json.loads(out)["smooth"] is False
    code, out, err = run(capsys, "smooth", f"{FIX}/spin7_octonions.json", "--json")
    assert code == 0
    assert json.loads(out)["smooth"] is True

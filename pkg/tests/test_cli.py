import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from hopfcomb.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse errors
            code = exc.code
    return code, out.getvalue(), err.getvalue()


def test_product_text_output():
    code, out, _ = run_cli("product", "--algebra", "eqsym", "--basis", "M", "1", "22")
    assert code == 0
    assert out.strip() == "M[133] + M[223] + M[323]"


def test_output_is_deterministic():
    first = run_cli("product", "--algebra", "sgqsym", "--basis", "M", "12", "321")
    second = run_cli("product", "--algebra", "sgqsym", "--basis", "M", "12", "321")
    assert first == second
    assert "3*M[52341]" in first[1]


def test_product_json_output():
    code, out, _ = run_cli(
        "product", "--algebra", "eqsym", "--basis", "M", "1", "22", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"] == "eqsym"
    assert {"label": "133", "coeff": "1"} in payload["terms"]
    assert len(payload["terms"]) == 3


def test_coproduct_output():
    code, out, _ = run_cli("coproduct", "--algebra", "eqsym", "--basis", "M", "4232277")
    assert code == 0
    assert "M[42322](x)M[22]" in out


def test_qdeform_coproduct_output():
    code, out, _ = run_cli("coproduct", "--algebra", "fqsym-q", "--basis", "F", "21")
    assert code == 0
    assert "(q)*F[1](x)F[1]" in out


def test_count_families():
    assert run_cli("count", "--family", "parking-stalactic", "5")[1].strip() == "501"
    assert run_cli("count", "--family", "connected-endofunctions", "4")[1].strip() == "197"
    assert run_cli("count", "--family", "free-lie-dims", "4")[1].strip() == "223"
    assert run_cli("count", "--family", "unlabelled-parking-graphs", "4")[1].strip() == "19"
    assert run_cli("count", "--family", "sylvester-q-classes", "5")[1].strip() == "42"


def test_triangle_output():
    code, out, _ = run_cli("triangle", "--name", "lah", "4")
    assert code == 0
    assert out.splitlines() == ["1", "1 2", "1 6 6", "1 12 36 24"]
    code, out, _ = run_cli("triangle", "--name", "endt", "5")
    assert out.splitlines()[-1] == "5 80 360 480 120"


def test_more_golden_products_through_cli():
    code, out, _ = run_cli(
        "product", "--algebra", "piqsym", "{1,2,4|3}", "{1}")
    assert code == 0
    assert out.strip() == (
        "upi[{1,2,4|3|5}] + 2*upi[{1,2,5|3|4}] + upi[{1,3,5|2|4}] + upi[{1|2,3,5|4}]"
    )
    code, out, _ = run_cli("product", "--algebra", "sym-embed", "(3,3,2,1)", "(3,1,1)")
    assert out.strip() == "9*ul[(3,3,3,2,1,1,1)]"
    code, out, _ = run_cli("product", "--algebra", "qsym-embed", "(1,3,1)", "(1,2)")
    assert "2*uq[(1,1,2,3,1)]" in out
    code, out, _ = run_cli("product", "--algebra", "cpqsym", "1", "221")
    assert out.strip() == "Mpa[1332] + Mpa[2214] + Mpa[2231] + Mpa[3231]"
    code, out, _ = run_cli("product", "--algebra", "phisym", "--basis", "Y", "(3)", "(2)")
    assert out.strip() == "Y[(3,2)] + 12*Y[(5)]"
    code, out, _ = run_cli("count", "--family", "initial-words-stalactic", "6")
    assert out.strip() == "1631"
    code, out, _ = run_cli("count", "--family", "endofunctions-stalactic", "5")
    assert out.strip() == "1045"


def test_insert_output():
    code, out, _ = run_cli("insert", "cabccdbdd")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "P: cccabbddd"
    assert lines[-1] == "Q: {1,4,5|2|3,7|6,8,9}"


def test_pair_outputs():
    assert run_cli("pair", "--algebra", "eqsym", "--basis", "M", "12", "12")[1].strip() == "1"
    assert run_cli("pair", "--algebra", "eqsym", "--basis", "M", "12", "21")[1].strip() == "0"
    code, out, _ = run_cli("pair", "--algebra", "eqsym", "--basis", "M", "12", "321", "52341")
    assert code == 0 and out.strip() == "3"


def test_convert_phisym():
    code, out, _ = run_cli("convert", "--algebra", "phisym", "--from", "phi", "--to", "Sp", "312")
    assert code == 0 and out.strip() == "Sp[312]"
    code, out, _ = run_cli("convert", "--algebra", "phisym", "--from", "Ss", "--to", "phi", "2431")
    assert code == 0
    assert "phi[2413]" in out


def test_convert_classical():
    code, out, _ = run_cli("convert", "--algebra", "sym-classical", "--from", "h", "--to", "m", "(2)")
    assert code == 0 and out.strip() == "m[(1,1)] + m[(2)]"


def test_verify_exit_zero_and_report():
    code, out, _ = run_cli("verify", "--algebra", "phisym", "--max-degree", "3")
    assert code == 0
    assert "cocommutativity: yes" in out
    code, out, _ = run_cli("verify", "--algebra", "eqsym", "--max-degree", "3")
    assert code == 0
    assert "duality-consistency: ok" in out
    code, out, _ = run_cli("verify", "--algebra", "fqsym-q", "--max-degree", "3")
    assert code == 0
    assert "twisted-morphism: ok" in out


def test_usage_errors_exit_two():
    code, _, _ = run_cli("product", "--algebra", "no-such-algebra", "--basis", "M", "1", "1")
    assert code == 2
    code, _, err = run_cli("product", "--algebra", "eqsym", "--basis", "Z", "1", "1")
    assert code == 2
    code, _, err = run_cli("product", "--algebra", "qsym-q", "--basis", "M", "(1)", "(2)")
    assert code == 2  # no product registered on the quantum quasi-symmetric side


def test_limit_guard_exit_two(monkeypatch):
    code, _, err = run_cli("count", "--family", "parking", "9")
    assert code == 2
    assert "limit" in err
    monkeypatch.setenv("HOPFCOMB_MAX_DEGREE", "2")
    code, out, _ = run_cli("verify", "--algebra", "sgqsym")
    assert code == 0

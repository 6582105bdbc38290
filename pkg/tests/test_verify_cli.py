"""End-to-end verification reports, the resultant cross-check, and the
command line interface."""

import io
import json
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from cmfactor.verify import (gz_verify, yz_verify, auto_prec, _trial_factor,
                             _sylvester_resultant)
from cmfactor.cli import main, EXIT_OK, EXIT_MISMATCH, EXIT_HYPOTHESIS


def test_trial_factor():
    assert _trial_factor(-720, 10) == ({2: 4, 3: 2, 5: 1}, 1)
    assert _trial_factor(7 * 101, 10) == ({7: 1}, 101)
    assert _trial_factor(1, 10) == ({}, 1)


def test_sylvester_resultant_hand_checks():
    # determinants of the Sylvester matrices, computed by hand
    assert _sylvester_resultant([1, -2], [1, -3]) == -1
    assert _sylvester_resultant([1, 0, -2], [1, -1]) == -1
    assert _sylvester_resultant([1, 0, 1], [1, 0, -1]) == 4
    assert _sylvester_resultant([2, 3], [4, 5]) == -2
    assert _sylvester_resultant([1, 1], [1, 1]) == 0     # common root


def test_resultant_root_product_oracle():
    # res(f, g) = lc(f)^deg g * prod g(alpha) over roots alpha of f,
    # checked on f = x^2 - 5x + 6 = (x-2)(x-3), g = x - 1: (2-1)(3-1) ... up
    # to the matrix sign; magnitude is 2
    assert abs(_sylvester_resultant([1, -5, 6], [1, -1])) == 2


def test_auto_prec_grows_with_class_numbers():
    assert auto_prec(-3, -7) < auto_prec(-15, -163) < auto_prec(-47, -163)


def test_gz_verify_minus3_minus67():
    r = gz_verify(-3, -67)
    assert r.ok()
    assert r.factor_match and r.resultant_match
    # j(-67 point) = -147197952000 = -2^15 3^3 5^3 11^3, j(-3 point) = 0
    assert r.product_integer == -147197952000
    assert r.factorization == {2: 15, 3: 3, 5: 3, 11: 3}


def test_gz_verify_rejects_bad_inputs():
    with pytest.raises(ValueError):
        gz_verify(-3, -12)


def test_yz_verify_small_pair():
    r = yz_verify(-7, -15)
    assert r.ok()
    assert r.product_integer == -45
    assert r.factorization == {3: 2, 5: 1}
    assert r.rhs_exponents == {3: Fraction(4), 5: Fraction(2)}


def _run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_cli_gz_ok_exit_code():
    code, out = _run_cli(["gz", "--d1", "-3", "--d2", "-67"])
    assert code == EXIT_OK
    assert "status=ok" in out
    assert "-147197952000" in out


def test_cli_hypothesis_exit_code(capsys):
    assert main(["gz", "--d1", "-3", "--d2", "-12"]) == EXIT_HYPOTHESIS
    assert main(["yz", "--d1", "-3", "--d2", "-7"]) == EXIT_HYPOTHESIS


def test_cli_json_deterministic():
    code1, out1 = _run_cli(["yz", "--d1", "-7", "--d2", "-15", "--json"])
    code2, out2 = _run_cli(["yz", "--d1", "-7", "--d2", "-15", "--json"])
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["status"] == "ok"
    assert doc["product_integer"] == "-45"
    assert doc["factorization"] == [{"p": 3, "e": 2}, {"p": 5, "e": 1}]


def test_cli_borcherds_check():
    code, out = _run_cli(["borcherds-check", "--case", "weber", "--order", "3"])
    assert code == EXIT_OK
    assert "exact match" in out


def test_cli_rho_subcommand():
    code, out = _run_cli(["rho", "--d1", "-3", "--d2", "-163", "--m", "21"])
    assert code == EXIT_OK
    assert "N(t) = -12" in out
    assert "rho(t O_F) =" in out


def test_cli_class_poly():
    code, out = _run_cli(["class-poly", "--d", "-15"])
    assert code == EXIT_OK
    assert "191025" in out and "121287375" in out


def test_cli_whittaker():
    code, out = _run_cli(["whittaker", "--a", "0", "--ord", "3"])
    assert code == EXIT_OK
    assert "value at s=0 is 1" in out

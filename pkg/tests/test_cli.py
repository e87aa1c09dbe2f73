import json
import math

import pytest

from rszeta.cli import main, parse_complex, run_capture
from rszeta.special import gamma_r


def value(out):
    d = json.loads(out)
    return complex(d["re"], d["im"])


def test_parse_complex():
    assert parse_complex("1.2-0.3j") == 1.2 - 0.3j
    assert parse_complex("0.5") == 0.5
    assert parse_complex("2+1i") == 2 + 1j


def test_eval_gamma_r():
    code, out = run_capture(["eval", "gamma_r", "--s", "1"])
    assert code == 0 and json.loads(out) == {"im": 0.0, "re": 1.0}


def test_eval_zeta_gl():
    code, out = run_capture(["eval", "zeta_gl", "--n", "2", "--m", "1", "--a", "0,0", "--ap", "0", "--s", "1.5"])
    assert code == 0
    assert abs(value(out) - gamma_r(1.5) ** 2) < 1e-12


def test_eval_u_closed_form():
    code, out = run_capture(["eval", "u", "--n", "2", "--a=0.3,-0.3", "--s", "1.2"])
    assert code == 0
    assert abs(value(out) - 0.5 * gamma_r(1.5) * gamma_r(0.9)) < 1e-13


def test_eval_whittaker_and_bessel():
    code, out = run_capture(["eval", "whittaker", "--a", "0,0", "--y", "1,1"])
    assert code == 0 and abs(value(out) - 0.0018331687218087406) < 1e-15
    code, out = run_capture(["eval", "bessel_k", "--nu", "0.5", "--x", "1"])
    assert code == 0 and abs(value(out) - math.sqrt(math.pi / 2) / math.e) < 1e-15


@pytest.mark.parametrize("argv,code", [
    (["eval", "gamma_r", "--s", "0"], 3),
    (["eval", "bessel_k", "--nu", "0", "--x", "-1"], 2),
    (["eval", "zeta_gl", "--n", "2"], 2),
    (["series", "--ell", "0", "--n", "5"], 2),
    (["verify", "nonsense"], 2),
    (["eval", "gamma_r", "--s", "abc"], 2),
])
def test_exit_codes(argv, code):
    assert main(argv) == code


def test_series_json():
    code, out = run_capture(["series", "--ell", "0", "--n", "1", "--N", "4"])
    doc = json.loads(out)
    assert code == 0 and doc["diff"]["identical"]
    assert doc["zeta_series"] == doc["euler_product"]
    code, out = run_capture(["series", "--ell", "1", "--n", "2", "--N", "6"])
    assert code == 0 and json.loads(out)["diff"]["identical"]


def test_series_degree_zero_and_csv():
    code, out = run_capture(["series", "--ell", "0", "--n", "1", "--N", "0"])
    doc = json.loads(out)
    assert doc["zeta_series"]["coefficients"] == [[{"exps": [0, 0], "num": "1", "den": "1"}]]
    code, out = run_capture(["series", "--ell", "0", "--n", "1", "--N", "2", "--format", "csv"])
    assert code == 0 and out.splitlines()[0] == "series,degree,exps,num,den"


def test_verify_barnes(tmp_path):
    code, out = run_capture(["verify", "barnes", "--seed", "7"])
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 20
    assert all(r["pass"] and r["seed"] == 7 for r in lines)
    path = tmp_path / "r.csv"
    assert main(["verify", "barnes", "--seed", "7", "--out", str(path)]) == 0
    assert path.read_text().splitlines()[0].startswith("identity_id,pass")


def test_verify_tol_override_fails():
    code, out = run_capture(["verify", "barnes", "--seed", "7", "--tol", "1e-30"])
    assert code == 1


def test_starved_config_is_numerical_failure(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"quadrature": {"T": 1}}))
    assert main(["verify", "gl_theorems", "--config", str(cfg)]) == 3


def test_malformed_config(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"quadrature": {"height": 1}}))
    assert main(["verify", "barnes", "--config", str(cfg)]) == 2
    cfg.write_text("{not json")
    assert main(["eval", "gamma_r", "--s", "1", "--config", str(cfg)]) == 2

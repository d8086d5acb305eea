import itertools
import json
from fractions import Fraction

import pytest

import transcert

EXAMPLE_MATRIX = {
    "symbols": ["x", "y", "z"],
    "includes_one": False,
    "rows": 3,
    "cols": 3,
    "entries": [
        [{"x": "1"}, {"z": "1"}, {}],
        [{}, {"y": "1"}, {"x": "-1"}],
        [{"y": "1"}, {}, {"z": "1"}],
    ],
}


def brute_theta(r, d):
    box = range(d)
    norms = sorted(sum(v) for v in itertools.product(box, repeat=r))
    return sum(norms[:d])


def test_commands_listed():
    names = transcert.commands()
    assert "structural-rank" in names and "verify" in names
    assert len(names) == 16


def test_structural_rank_certificate_roundtrip():
    res = transcert.run("structural-rank", EXAMPLE_MATRIX)
    assert res.ok
    assert res.result["structural_rank"] == 2
    assert res.certificate["tool"] == "transcert"
    assert transcert.verify(res.certificate).ok
    assert transcert.verify(res.text).ok


def test_tampered_certificate_rejected():
    cert = transcert.run("structural-rank", EXAMPLE_MATRIX).certificate
    cert["result"]["structural_rank"] = 3
    assert transcert.verify(cert).exit_code == 1


def test_output_is_deterministic():
    a = transcert.run("siegel", {"A": [[1, 2, 3, 4, 5], [2, -1, 0, 3, 1]]}, seed=7)
    b = transcert.run("siegel", {"A": [[1, 2, 3, 4, 5], [2, -1, 0, 3, 1]]}, seed=7)
    assert a.text == b.text


def test_malformed_input_reports_pointer():
    res = transcert.run("mult-rel", {"tuple": ["2", "0"]})
    assert res.exit_code == 2
    assert res.certificate["error"]["pointer"] == "/tuple/1"


def test_invalid_json_raises():
    with pytest.raises(ValueError):
        transcert.run("theta", "{not json")


@pytest.mark.parametrize("r,d", [(1, 1), (1, 10), (2, 3), (2, 9), (3, 7)])
def test_theta_matches_brute_force(r, d):
    assert transcert.theta(r, d) == brute_theta(r, d)


def test_relation_lattice_annihilates():
    values = ["2", "4", "1/8", "3", "-9"]
    basis = transcert.relation_lattice(values)
    assert len(basis) == 3
    for col in basis:
        prod = Fraction(1)
        for v, e in zip(values, col):
            prod *= Fraction(v) ** e
        assert prod == 1


def test_padic_log_verifies():
    res = transcert.run("padic-log", {"prime": 5, "value": "6"}, prec=12)
    assert res.ok
    assert res.certificate["params"]["prec"] == 12
    assert transcert.verify(json.dumps(res.certificate)).ok


def test_library_errors_are_value_errors():
    with pytest.raises(transcert.TranscertError):
        transcert.relation_lattice(["2", "0"])
    with pytest.raises(ValueError):
        transcert.relation_lattice(["2", "x"])

import json

try:
    from padspec import _core as core
except ImportError:
    import _core as core


def run(job):
    out, code = core.run_job(json.dumps(job))
    return json.loads(out), code


def test_omega():
    assert core.omega_exponent(2) == "1"
    assert core.omega_exponent(5) == "1/4"


def test_delta():
    assert core.delta(5, "1/5") == "p^(1)"
    assert core.delta(2, "7") == "0"


def test_rank_one_radius():
    assert core.rank_one_radius(2, "1/2", "1") == "p^(-3)"
    assert core.rank_one_radius(2, "1/3", "1") == "p^(-1)"
    assert core.rank_one_radius(2, "1*p^(1/2)", "1") == "p^(-7/4)"


def test_spectrum_job():
    doc, code = run(
        {
            "p": 2,
            "command": "spectrum",
            "point": {"center": "0", "rho": "0"},
            "payload": {
                "operator": {
                    "gauge": {"type": "SdS"},
                    "coeffs": [[["2", "-1*p^(1/2)"]], [["0", "1"]]],
                }
            },
        }
    )
    assert code == 0
    assert doc["components"][0]["z"]["rho"] == "1/2"
    entries = {e["a"]: e["R1"] for e in doc["radii_table"]}
    assert entries["0"] == "p^(-3/4)"


def test_determinism():
    job = {
        "p": 3,
        "command": "map",
        "payload": {"map": "frobenius", "point": {"center": "1", "rho": "2"}},
    }
    a, ca = core.run_job(json.dumps(job))
    b, cb = core.run_job(json.dumps(job))
    assert a == b and ca == cb == 0


def test_error_exit_codes():
    _, code = run({"p": 4, "command": "delta", "payload": {"a": "1"}})
    assert code == 2
    doc, code = run(
        {
            "p": 2,
            "command": "spectrum",
            "point": {"center": "0", "rho": "0"},
            "payload": {
                "operator": {
                    "gauge": {"type": "SdS"},
                    # constant coefficients of rank 2: honest refusal
                    "coeffs": [[["0", "5"]], [["0", "3"]], [["0", "1"]]],
                }
            },
        }
    )
    assert code == 4
    assert doc["error"]["kind"] == "HypothesisNotCertified"

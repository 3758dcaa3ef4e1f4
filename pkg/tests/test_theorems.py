import pytest

from permstat import theorems
from permstat.theorems import (
    BoundExceeded,
    Bounds,
    Status,
    UnknownCheckId,
    VerificationReport,
    run_checks,
    verify,
)


def test_failing_report_needs_witness():
    with pytest.raises(ValueError):
        VerificationReport("X", 1, Status.FAIL, None)


def test_report_dict_shape():
    r = verify("AB_EQUAL", 1)
    assert r.as_dict() == {"check": "AB_EQUAL", "n": 1, "status": "pass", "witness": None}


def test_divisibility_detail():
    r = verify("THM_A_DIVISIBILITY", 5)
    assert r.passed
    assert "a_{5,2}/(p+q)^2 = p^2+p*q+q^2+1" in r.detail


def test_fh_secant_value():
    r = verify("FH_SECANT", 4)
    assert r.passed
    assert "value 5" in r.detail


def test_unknown_id():
    with pytest.raises(UnknownCheckId):
        verify("NOPE", 3)


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        verify("THM_B_IDENTITY", 8, Bounds())


def test_env_override(monkeypatch):
    monkeypatch.setenv("PERMSTAT_NMAX", "4")
    assert Bounds.from_env().multi == 4
    with pytest.raises(BoundExceeded):
        verify("THM_A_IDENTITY", 5)


def test_run_checks_order_is_deterministic():
    ids = ["EGF_A", "AB_EQUAL"]
    serial = run_checks(ids, 4, jobs=1)
    parallel = run_checks(ids, 4, jobs=2)
    assert [(r.check, r.n) for r in serial] == [(c, n) for c in ids for n in range(1, 5)]
    assert serial == parallel


@pytest.mark.parametrize("check_id", theorems.check_ids())
def test_every_check_passes_small(check_id):
    for n in range(1, 6):
        r = verify(check_id, n)
        assert r.passed, r.witness


def test_involution_gamma_is_reported_not_asserted():
    for n in range(1, 10):
        r = verify("INVOLUTION_GAMMA", n)
        assert r.passed
        assert "gamma =" in r.detail


def test_wrong_identity_yields_witness(monkeypatch):
    # break the A-family coefficients and check the failure carries a difference
    real = theorems.a_coeffs

    def broken(n):
        table = dict(real(n))
        table[0] = table[0] + 1
        return table
    monkeypatch.setattr(theorems, "a_coeffs", broken)
    r = verify("THM_A_IDENTITY", 3)
    assert r.status is Status.FAIL
    assert r.witness.startswith("lhs - rhs = ")


class TestEgf:
    def test_eulerian_coefficients(self):
        s = theorems.egf_eulerian(4)
        assert s[3] * 6 == 1 + 4 * theorems.T + theorems.T ** 2

    def test_derangement_coefficients(self):
        s = theorems.egf_derangement(4)
        assert s[4] * 24 == theorems.T ** 3 + 7 * theorems.T ** 2 + theorems.T

import numpy as np
import pytest

from fsdet.proofcheck import t2_G1, t2_G2, t2_dF, t2_F, t3_F, t3_Fprime, thm2_profile, \
    thm3_profile, verify_claims

C = np.linspace(0, 2, 201)
BETAS = np.linspace(0, 1, 101)


def test_b2_proof_F_at_zero_is_G1():
    for beta in (0, 0.3, 1):
        for c in C:
            p = thm2_profile(c, 0, beta)
            assert p["F"] == p["G1"]


@pytest.mark.parametrize("beta", [0, 0.25, 0.5, 1])
def test_b2_proof_G2_at_two(beta):
    assert thm2_profile(2, 0, beta)["G2"] == pytest.approx(4 - 2 * beta, abs=1e-12)


@pytest.mark.parametrize("beta", [0, 0.25, 0.5, 1])
def test_b2_proof_G3_at_one(beta):
    assert thm2_profile(1, 0, beta)["G3"] == pytest.approx((1 + beta) / 2, abs=1e-12)


def test_b2_proof_G3_only_on_unit_interval():
    assert thm2_profile(1.5, 0.5, 0.5)["G3"] is None


@pytest.mark.parametrize("args", [(-0.1, 0, 0.5), (2.1, 0, 0.5), (1, 1.2, 0.5), (1, 0.5, 1.5)])
def test_b2_proof_range_errors(args):
    with pytest.raises(ValueError):
        thm2_profile(*args)


def test_h22_proof_alpha_one_G_is_one():
    for c in C:
        assert thm3_profile(c, 0.5, 1.0)["G"] == pytest.approx(1, abs=1e-12)


def test_h22_proof_Fprime_nonnegative_on_middle_range():
    for alpha in np.linspace(2 / 3, 10 / 9, 41):
        for rho in np.linspace(0, 1, 21):
            assert t3_Fprime(C, rho, alpha).min() >= -1e-12


def test_h22_proof_high_branch_at_two():
    assert thm3_profile(2, 1, 2)["G"] == pytest.approx(10, abs=1e-12)
    for alpha in (10 / 9, 1.5, 3):
        assert thm3_profile(2, 1, alpha)["G"] == pytest.approx(9 * alpha - 8, abs=1e-12)


@pytest.mark.parametrize("args", [(-0.1, 0, 1), (1, -0.1, 1), (1, 0.5, -1)])
def test_h22_proof_range_errors(args):
    with pytest.raises(ValueError):
        thm3_profile(*args)


def test_finite_differences_match_both_derivatives():
    h = 1e-5
    rho = np.linspace(h, 1 - h, 101)[None, :]
    c = C[:, None]
    for beta in (0, 0.4, 1):
        fd = (t2_F(c, rho + h, beta) - t2_F(c, rho - h, beta)) / (2 * h)
        assert np.abs(fd - t2_dF(c, rho, beta)).max() <= 1e-6
    for alpha in (0, 0.7, 1, 1.5, 3):
        fd = (t3_F(c, rho + h, alpha) - t3_F(c, rho - h, alpha)) / (2 * h)
        assert np.abs(fd - t3_Fprime(c, rho, alpha)).max() <= 1e-6


def test_b2_proof_critical_point():
    for beta in (0.2, 0.7, 1):
        for c in C[(C > 0) & (C <= 1)]:
            rho = c / (2 - c)
            assert abs(t2_dF(c, rho, beta)) <= 1e-8
            if rho < 1:
                assert t2_dF(c, rho - 1e-3, beta) > 0 > t2_dF(c, rho + 1e-3, beta)


def test_b2_proof_G2_below_its_endpoint():
    c, b = np.meshgrid(C, BETAS)
    assert (t2_G2(2, b) - t2_G2(c, b)).min() >= -1e-12


def test_b2_proof_G1_below_G2():
    # the pointwise chain as stated; it breaks for c < 2/3
    c, b = np.meshgrid(C, BETAS)
    assert (t2_G2(c, b) - t2_G1(c, b)).min() >= -1e-12


def test_b2_proof_claimed_maximum_still_holds():
    c, rho, beta = np.meshgrid(C, np.linspace(0, 1, 101), BETAS, indexing="ij")
    excess = t2_F(c, rho, beta) - (4 - 2 * beta)
    assert excess.max() <= 1e-12


def test_verify_claims_report_shape():
    report = verify_claims("T3", 120)
    d = report.as_dict()
    assert d["theorem"] == "T3"
    for claim in d["claims"]:
        assert claim["grid_size"] == 120
        assert claim["pass"] == (claim["max_deviation"] <= claim["tolerance"])


def test_verify_claims_grid_minimum():
    with pytest.raises(ValueError):
        verify_claims("T2", 50)
    with pytest.raises(ValueError):
        verify_claims("T9", 200)


def test_h22_proof_grid_200():
    report = verify_claims("T3", 200)
    assert report.passed
    labels = " ".join(c.label for c in report.claims)
    assert "G(1) = 1" in labels and "9alpha - 8" in labels


def test_b2_proof_grid_200():
    report = verify_claims("T2", 200)
    assert report.passed, [(c.label, c.max_deviation, c.location) for c in report.failures()]

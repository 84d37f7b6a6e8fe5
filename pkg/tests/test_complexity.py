import json
import math

import pytest
from scipy import integrate

from fisher_renyi.complexity import ComplexityReport, cfr_complexity, cramer_rao, fisher_shannon, normalization_D
from fisher_renyi.densities import GeneralizedGaussian, beta_density, gaussian, sine_humps
from fisher_renyi.errors import DomainError
from fisher_renyi.hydrogenic import HydrogenicDensity, QuantumNumbers, cfr_ground_closed


def _minimizer_product(lam, d):
    """F~ N of B_lambda by scipy quadrature on the radial profile."""
    rho = GeneralizedGaussian(lam, d)
    area = 2 * math.pi ** (d / 2) / math.gamma(d / 2)
    rmax = rho.radius if lam > 1 else math.inf
    w = lambda r: area * r ** (d - 1)
    num = integrate.quad(lambda r: w(r) * rho.profile(r)[0] ** (2 * lam - 3) * rho.profile(r)[1] ** 2
                         if rho.profile(r)[0] > 0 else 0.0, 0, rmax, limit=400, epsabs=0, epsrel=1e-12)[0]
    den = integrate.quad(lambda r: w(r) * rho.profile(r)[0] ** lam, 0, rmax, limit=400, epsabs=0, epsrel=1e-12)[0]
    mu = 2 + d * (lam - 1)
    return num / den * den ** ((mu / d) / (1 - lam))


@pytest.mark.parametrize("lam,d", [(1.5, 1), (2.0, 1), (0.8, 1), (2.0, 3), (1.25, 3), (0.9, 2)])
def test_normalization_matches_minimizer(lam, d):
    assert normalization_D(lam, d) == pytest.approx(_minimizer_product(lam, d), rel=1e-8)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_normalization_continuous_at_one(d):
    limit = 2 * math.pi * d * math.e
    assert normalization_D(1.0, d) == limit
    for eps in (1e-3, -1e-3):
        assert normalization_D(1 + eps, d) == pytest.approx(limit, rel=1e-2)
    assert abs(normalization_D(1 + 1e-5, d) / limit - 1) < abs(normalization_D(1 + 1e-3, d) / limit - 1)


def test_normalization_rejects_bad_lambda():
    with pytest.raises(DomainError):
        normalization_D(0.6, 3)


@pytest.mark.parametrize("lam", [0.8, 1.5, 2.0])
def test_minimizer_has_unit_complexity(lam):
    assert cfr_complexity(GeneralizedGaussian(lam, 1), lam).cfr == pytest.approx(1.0, abs=1e-9)


def test_gaussian_at_shannon_limit():
    rep = cfr_complexity(gaussian(3, 0.4), 1.0)
    assert rep.cfr == pytest.approx(1.0, abs=1e-10)


def test_complexity_is_at_least_one():
    rho = sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)])
    for lam in (0.8, 1.5, 3.0):
        assert cfr_complexity(rho, lam).cfr >= 1.0


def test_methods_for_hydrogenic_state():
    rho = HydrogenicDensity(QuantumNumbers(1, 0, 0))
    closed = cfr_ground_closed(2.0)
    analytic = cfr_complexity(rho, 2.0, method="analytic")
    assert analytic.method == "analytic"
    assert analytic.cfr == pytest.approx(closed, rel=1e-13)
    quad = cfr_complexity(rho, 2.0, method="quadrature")
    assert quad.method == "quadrature"
    assert quad.cfr == pytest.approx(closed, rel=1e-9)
    both = cfr_complexity(rho, 2.0, method="both")
    assert both.method == "both" and both.discrepancy < 1e-9 and not both.suspect


def test_method_falls_back_with_note():
    rep = cfr_complexity(beta_density(3.0, 4.0), 2.0, method="both")
    assert rep.method == "quadrature"
    assert rep.discrepancy is None
    assert rep.notes and "quadrature" in rep.notes[0]
    assert cfr_complexity(beta_density(3.0, 4.0), 2.0).notes == ()
    with pytest.raises(DomainError):
        cfr_complexity(beta_density(3.0, 4.0), 2.0, method="magic")


def test_companion_measures_of_gaussian():
    rho = gaussian(3, 0.8)
    assert cramer_rao(rho) == pytest.approx(9.0, rel=1e-10)
    assert fisher_shannon(rho) == pytest.approx(2 * math.pi * math.e * 3, rel=1e-10)
    rep = cfr_complexity(rho, 1.5, companions=True)
    assert set(rep.companions) == {"cramer_rao", "fisher_shannon"}


def test_report_serialization():
    rep = cfr_complexity(beta_density(3.0, 4.0), 1.5)
    assert isinstance(rep, ComplexityReport)
    data = json.loads(rep.to_json())
    assert data["lambda"] == 1.5 and data["dim"] == 1
    assert data["cfr"] == pytest.approx(data["fisher_lambda"] * data["renyi_power"] / data["d_norm"], rel=1e-14)
    assert "companions" not in data

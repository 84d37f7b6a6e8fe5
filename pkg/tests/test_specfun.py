import math

import numpy as np
import pytest
from scipy import integrate, special

from fisher_renyi.errors import DomainError
from fisher_renyi.specfun import (
    AngularDensity,
    OrthonormalLaguerre,
    angular_density_eval,
    binomial_general,
    gegenbauer,
    gegenbauer_zeros,
    laguerre,
    laguerre_eval,
    laguerre_zeros,
    log_gamma,
    pochhammer,
)


def test_log_gamma_values():
    assert log_gamma(1.0) == 0.0
    assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-14)
    assert log_gamma(3.5) == pytest.approx(math.log(15 * math.sqrt(math.pi) / 8), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.5])
def test_log_gamma_rejects_non_positive(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_pochhammer():
    assert pochhammer(5, 0) == 1
    assert pochhammer(-2, 3) == 0
    assert pochhammer(3, 4) == 360
    assert pochhammer(0.5, 3) == pytest.approx(special.poch(0.5, 3))


def test_binomial_general():
    assert binomial_general(1, -1) == 0
    assert binomial_general(7, 0) == 1
    assert binomial_general(5, 2) == 10
    assert binomial_general(3, 5) == 0
    assert binomial_general(2.5, 2) == pytest.approx(special.binom(2.5, 2))


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5, 5.0])
def test_laguerre_matches_scipy(n, alpha):
    x = np.linspace(0, 20, 41)
    np.testing.assert_allclose(laguerre(n, alpha, x), special.eval_genlaguerre(n, alpha, x),
                               rtol=1e-11, atol=1e-11)


def test_negative_degree_is_zero_polynomial():
    assert np.all(laguerre(-1, 2.0, np.array([0.0, 1.5])) == 0)
    assert np.all(gegenbauer(-1, 1.5, np.array([0.2])) == 0)
    assert OrthonormalLaguerre(-1, 1.0).norm_factor == 0.0


@pytest.mark.parametrize("n,alpha", [(1, 0.0), (3, 1.0), (5, 3.0), (6, 5.0)])
def test_laguerre_zeros(n, alpha):
    z = laguerre_zeros(n, alpha)
    ref, _ = special.roots_genlaguerre(n, alpha)
    np.testing.assert_allclose(z, np.sort(ref), rtol=1e-12)


@pytest.mark.parametrize("alpha", [0.0, 1.0, 3.0, 5.0])
def test_orthonormality(alpha):
    for n in range(7):
        for m in range(n, 7):
            pn, pm = OrthonormalLaguerre(n, alpha), OrthonormalLaguerre(m, alpha)
            val, _ = integrate.quad(lambda x: x**alpha * math.exp(-x) * pn(x) * pm(x), 0, np.inf,
                                    epsabs=1e-12, limit=200)
            assert val == pytest.approx(float(n == m), abs=1e-8)


def test_orthonormal_low_degree():
    assert OrthonormalLaguerre(0, 1.0)(3.0) == pytest.approx(1.0)
    assert OrthonormalLaguerre(0, 3.0)(0.7) == pytest.approx(1 / math.sqrt(math.gamma(4)))
    value, deriv = laguerre_eval(OrthonormalLaguerre(1, 0.0), np.array(0.0))
    assert value == pytest.approx(1.0)
    assert deriv == pytest.approx(-1.0)
    value, deriv = laguerre_eval(OrthonormalLaguerre(0, 1.0), np.array(2.0))
    assert (value, deriv) == (pytest.approx(1.0), pytest.approx(0.0))


def test_laguerre_derivative_finite_difference():
    rng = np.random.default_rng(7)
    x = rng.uniform(0.1, 15, 20)
    h = 1e-5
    for n, alpha in [(2, 1.0), (4, 3.0), (6, 0.5)]:
        p = OrthonormalLaguerre(n, alpha)
        _, d = laguerre_eval(p, x)
        fd = (p(x + h) - p(x - h)) / (2 * h)
        np.testing.assert_allclose(d, fd, rtol=1e-6, atol=1e-9)


def test_laguerre_derivative_relation():
    x = np.linspace(0, 12, 25)
    h = 1e-6
    for n in range(1, 7):
        fd = (laguerre(n, 2.0, x + h) - laguerre(n, 2.0, x - h)) / (2 * h)
        np.testing.assert_allclose(fd, -laguerre(n - 1, 3.0, x), rtol=1e-7, atol=1e-6)


def test_laguerre_eval_rejects_bad_input():
    with pytest.raises(DomainError):
        OrthonormalLaguerre(2, -1.0)
    with pytest.raises(DomainError):
        laguerre_eval(OrthonormalLaguerre(2, 1.0), np.array(-0.5))


def test_gegenbauer_low_degree_forms():
    x = np.linspace(-1, 1, 11)
    assert np.all(gegenbauer(0, 1.7, x) == 1.0)
    assert np.array_equal(gegenbauer(1, 1.7, x), 2 * 1.7 * x)
    for n in range(2, 7):
        np.testing.assert_allclose(gegenbauer(n, 1.5, x), special.eval_gegenbauer(n, 1.5, x), rtol=1e-12,
                                   atol=1e-12)


def test_gegenbauer_zeros():
    for n, mu in [(1, 0.5), (3, 1.5), (4, 2.5)]:
        z = gegenbauer_zeros(n, mu)
        np.testing.assert_allclose(gegenbauer(n, mu, z), 0.0, atol=1e-12)


def test_angular_density_special_cases():
    theta = np.linspace(0, math.pi, 9)
    v, d = angular_density_eval(AngularDensity(0, 0), theta)
    np.testing.assert_allclose(v, 1 / (4 * math.pi))
    np.testing.assert_allclose(d, 0.0, atol=1e-15)
    v, _ = angular_density_eval(AngularDensity(2, 2), theta)
    ref = math.gamma(3.5) / (2 * math.pi**1.5 * math.gamma(3)) * np.sin(theta) ** 4
    np.testing.assert_allclose(v, ref, rtol=1e-13, atol=1e-16)


def test_angular_density_matches_spherical_harmonics():
    theta = np.linspace(0.05, 3.0, 13)
    for l in range(5):
        for m in range(-l, l + 1):
            v = AngularDensity(l, m)(theta)
            y = special.sph_harm_y(l, m, theta, 0.3)
            np.testing.assert_allclose(v, np.abs(y) ** 2, rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("l", range(5))
def test_angular_normalization(l):
    for m in range(-l, l + 1):
        ang = AngularDensity(l, m)
        val, _ = integrate.quad(lambda t: 2 * math.pi * ang(t) * math.sin(t), 0, math.pi, epsabs=1e-13)
        assert val == pytest.approx(1.0, abs=1e-8)


def test_angular_derivative_finite_difference():
    theta = np.linspace(0.1, 3.0, 17)
    h = 1e-6
    for l, m in [(1, 0), (2, 1), (3, -2), (4, 4)]:
        ang = AngularDensity(l, m)
        _, d = ang.evaluate(theta)
        fd = (ang(theta + h) - ang(theta - h)) / (2 * h)
        np.testing.assert_allclose(d, fd, rtol=1e-6, atol=1e-9)


def test_angular_density_rejects_bad_labels():
    with pytest.raises(DomainError):
        AngularDensity(1, 2)
    with pytest.raises(DomainError):
        angular_density_eval(AngularDensity(1, 0), np.array([4.0]))

import math

import numpy as np
import pytest
from scipy import integrate, special

from fisher_renyi.errors import DomainError, IntegrabilityError, UnsupportedLambdaError
from fisher_renyi.hydrogenic import (
    HydrogenicDensity,
    Phi0Request,
    QuantumNumbers,
    _circular_constraints,
    cfr_circular_closed,
    cfr_ground_closed,
    cfr_ns_closed,
    cfr_numeric,
    circular_pieces,
    g_function,
    hydrogenic_report,
    numeric_pieces,
    phi0,
    phi0_lattice,
    radial_integrals_general,
)


def _textbook_density(n, l, m, Z, pts):
    r = np.linalg.norm(pts, axis=-1)
    theta = np.arccos(pts[:, 2] / r)
    phi = np.arctan2(pts[:, 1], pts[:, 0])
    x = 2 * Z * r / n
    norm = math.sqrt((2 * Z / n) ** 3 * math.factorial(n - l - 1) / (2 * n * math.factorial(n + l)))
    R = norm * np.exp(-x / 2) * x**l * special.eval_genlaguerre(n - l - 1, 2 * l + 1, x)
    return R**2 * np.abs(special.sph_harm_y(l, m, theta, phi)) ** 2


def test_ground_state_pointwise():
    Z = 1.7
    rho = HydrogenicDensity(QuantumNumbers(1, 0, 0, Z))
    r = np.array([0.1, 0.5, 1.0, 2.0, 4.0])
    pts = np.stack([r, np.zeros_like(r), np.zeros_like(r)], axis=-1)
    np.testing.assert_allclose(rho(pts), Z**3 / math.pi * np.exp(-2 * Z * r), rtol=1e-13)


@pytest.mark.parametrize("n,l,m,Z", [(2, 1, 1, 1.0), (3, 1, 0, 2.0), (3, 2, -1, 1.0), (4, 0, 0, 1.5)])
def test_density_matches_textbook_wavefunctions(n, l, m, Z):
    pts = np.random.default_rng(5).uniform(-4, 4, (40, 3))
    np.testing.assert_allclose(HydrogenicDensity(QuantumNumbers(n, l, m, Z))(pts),
                               _textbook_density(n, l, m, Z, pts), rtol=1e-10, atol=1e-16)


@pytest.mark.parametrize("args", [(0, 0, 0), (2, 2, 0), (2, 1, 2), (1, 0, 0, 0.0)])
def test_invalid_quantum_numbers(args):
    with pytest.raises(DomainError):
        QuantumNumbers(*args)


def test_quantum_number_properties():
    qn = QuantumNumbers(4, 2, 1, Z=2.0)
    assert (qn.radial_nodes, qn.polar_nodes, qn.is_circular) == (1, 1, False)
    assert qn.energy == pytest.approx(-4 / 32)
    assert QuantumNumbers(3, 2, -2).is_circular


def test_phi0_reduction_values():
    for lam in (1.5, 2.0, 2.5, 3.0):
        r = int(2 * lam)
        assert phi0(Phi0Request(2, 0, [0] * r, [1] * r, [1 / lam] * r)) == 2.0
    assert phi0(Phi0Request(2, 0, [3, -1], [1, 1], [0.5, 0.5])) == 0.0
    assert phi0(Phi0Request(0, 0, [1], [1], [1])) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(DomainError):
        Phi0Request(0, 0, [-2], [1], [1])
    with pytest.raises(DomainError):
        Phi0Request(0, 0, [1, 2], [1], [1])


@pytest.mark.parametrize("degrees,alphas,scales,mu", [
    ([1, 2, 3], [1, 1, 3], [0.5, 0.5, 1 / 3], 2),
    ([2, 2, 2, 2], [1, 1, 2, 2], [1 / 3] * 4, 4),
    ([4, 1], [3, 0.5], [0.25, 2.0], 3.5),
])
def test_phi0_convolution_matches_lattice(degrees, alphas, scales, mu):
    req = Phi0Request(mu, 0, degrees, alphas, scales)
    assert phi0(req) == pytest.approx(phi0_lattice(req), rel=1e-12)


def test_phi0_is_the_laguerre_product_integral():
    # Phi_0 = int e^{-x} x^mu prod L_m^(a)(t x) dx for beta = 0
    degrees, alphas, scales, mu = [2, 1], [1, 3], [0.5, 0.25], 2
    f = lambda x: math.exp(-x) * x**mu * math.prod(
        special.eval_genlaguerre(m, a, t * x) for m, a, t in zip(degrees, alphas, scales))
    ref = integrate.quad(f, 0, np.inf, epsabs=0, epsrel=1e-13)[0]
    assert phi0(Phi0Request(mu, 0, degrees, alphas, scales)) == pytest.approx(ref, rel=1e-11)


def test_g_function_ground_state():
    assert g_function(1, 0, 2.0) == 2 / 9
    for lam in (1.5, 2.5, 3.0):
        assert g_function(1, 0, lam) == pytest.approx(2 * (2 * lam - 1) ** -2, rel=1e-15)


@pytest.mark.parametrize("n,lam", [(2, 2.0), (3, 2.0), (2, 3.0), (1, 1.5)])
def test_radial_integrals_match_quadrature(n, lam):
    qn = QuantumNumbers(n, 0, 0)
    closed = radial_integrals_general(qn, lam)
    num = numeric_pieces(qn, lam)
    assert closed.i1a == pytest.approx(num.i1a_rad, rel=1e-8)
    assert closed.i2 == pytest.approx(num.i2_rad, rel=1e-8)


def test_radial_power_integral_scales_with_charge():
    lam = 2.0
    i1 = radial_integrals_general(QuantumNumbers(2, 0, 0, Z=1.0), lam).i2
    i2 = radial_integrals_general(QuantumNumbers(2, 0, 0, Z=2.0), lam).i2
    assert i2 / i1 == pytest.approx(2.0 ** (3 * (lam - 1)), rel=1e-13)


@pytest.mark.parametrize("n,lam", [(2, 1.25), (2, 2.5), (1, 0.9)])
def test_unsupported_lambda_for_closed_radial_integrals(n, lam):
    with pytest.raises(UnsupportedLambdaError):
        radial_integrals_general(QuantumNumbers(n, 0, 0), lam)
    with pytest.raises(UnsupportedLambdaError, match="quadrature"):
        cfr_ns_closed(n, lam)


def test_circular_angular_factors_match_quadrature():
    for n in (2, 3):
        closed = circular_pieces(n, 1.5)
        num = numeric_pieces(QuantumNumbers(n, n - 1, n - 1), 1.5)
        for a, b in zip(closed, num):
            assert a == pytest.approx(b, rel=1e-9)


def test_circular_constraints():
    # every admissible lambda > 2/3 satisfies the Gamma-argument constraints
    assert math.isfinite(cfr_circular_closed(6, 0.6667))
    with pytest.raises(DomainError, match="circular closed form needs"):
        _circular_constraints(5, 0.5)


def test_ground_state_closed_value():
    assert cfr_ground_closed(2.0) == pytest.approx(7.564, abs=5e-4)
    for lam in (1.5, 2.0, 2.5):
        assert cfr_ns_closed(1, lam) == pytest.approx(cfr_ground_closed(lam), rel=1e-14)
    for lam in (1.25, 2.0, 3.0):
        assert cfr_circular_closed(1, lam) == pytest.approx(cfr_ground_closed(lam), rel=1e-13)


@pytest.mark.parametrize("qn,lam,closed", [
    (QuantumNumbers(1, 0, 0), 2.0, lambda: cfr_ground_closed(2.0)),
    (QuantumNumbers(2, 1, 1), 1.5, lambda: cfr_circular_closed(2, 1.5)),
    (QuantumNumbers(4, 3, -3), 2.0, lambda: cfr_circular_closed(4, 2.0)),
    (QuantumNumbers(2, 0, 0), 2.0, lambda: cfr_ns_closed(2, 2.0)),
    (QuantumNumbers(3, 0, 0), 3.0, lambda: cfr_ns_closed(3, 3.0)),
])
def test_closed_forms_match_quadrature(qn, lam, closed):
    assert cfr_numeric(qn, lam).cfr == pytest.approx(closed(), rel=1e-8)


def test_charge_independence_without_closed_form():
    a = cfr_numeric(QuantumNumbers(3, 1, 0, Z=1.0), 1.25).cfr
    b = cfr_numeric(QuantumNumbers(3, 1, 0, Z=2.0), 1.25).cfr
    assert b == pytest.approx(a, rel=1e-7)


@pytest.mark.parametrize("qn", [QuantumNumbers(2, 0, 0), QuantumNumbers(2, 1, 0)])
def test_nodal_states_rejected_at_small_lambda(qn):
    with pytest.raises(IntegrabilityError, match="node"):
        cfr_numeric(qn, 0.7)
    cfr_numeric(QuantumNumbers(2, 1, 1), 0.7)  # nodeless: fine


def test_report_methods_and_fallback():
    rep = hydrogenic_report(QuantumNumbers(1, 0, 0), 2.0, "both")
    assert rep.method == "both" and rep.discrepancy < 1e-8
    rep = hydrogenic_report(QuantumNumbers(3, 1, 0), 1.5, "closed")
    assert rep.method == "quadrature" and "no closed form" in rep.notes[0]
    rep = hydrogenic_report(QuantumNumbers(2, 0, 0), 1.5, "closed")
    assert rep.method == "quadrature"
    with pytest.raises(DomainError):
        hydrogenic_report(QuantumNumbers(1, 0, 0), 2.0, "guess")

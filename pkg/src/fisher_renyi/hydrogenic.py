"""Hydrogenic position densities and their Fisher-Renyi complexity.

Two evaluation paths are provided:

* quadrature of the six one-dimensional factors (three radial, three polar)
  into which the complexity of a separable density decomposes, valid for any
  state (n, l, m);
* closed forms for the ground state, the circular states (l = |m| = n - 1,
  pure Gamma functions) and the ns states (terminating Laguerre
  linearization sums Phi_0).

For lambda != 1 the decomposition reads

    I1 = I1a_rad * I1a_ang + I1b_rad * I1b_ang,      I2 = I2_rad * I2_ang,
    F~ = I1 / I2,  N = I2^{(mu/3)/(1-lambda)},  C = F~ N / D_lambda,

with  I1a_rad = int R^{2l-3} R'^2 r^2 dr,  I1b_rad = int R^{2l-1} dr,
I2_rad = int R^l r^2 dr  (l standing for lambda), and the matching polar
integrals over the unit sphere.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .complexity import DISCREPANCY_TOL, ComplexityReport, cfr_complexity, normalization_D
from .densities import Profile, SeparableDensity, piece_index
from .errors import DomainError, IntegrabilityError, UnsupportedLambdaError
from .functionals import FunctionalValue, LambdaParam, as_lambda, separable_pieces
from .quadrature import QuadratureSpec
from .specfun import AngularDensity, OrthonormalLaguerre, binomial_general, laguerre, pochhammer

__all__ = [
    "QuantumNumbers",
    "HydrogenicDensity",
    "hydrogenic_density",
    "Phi0Request",
    "phi0",
    "phi0_lattice",
    "g_function",
    "RadialIntegrals",
    "radial_integrals_general",
    "HydrogenicPieces",
    "circular_pieces",
    "numeric_pieces",
    "cfr_ground_closed",
    "cfr_ns_closed",
    "cfr_circular_closed",
    "cfr_numeric",
    "hydrogenic_report",
    "check_integrability",
]

# exp(-x) underflows long before the polynomial factors could overflow
_X_CUTOFF = 1e4


@dataclass(frozen=True)
class QuantumNumbers:
    n: int
    l: int
    m: int
    Z: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise DomainError(f"l must lie in [0, n-1] = [0, {self.n - 1}], got {self.l}")
        if abs(self.m) > self.l:
            raise DomainError(f"|m| must not exceed l = {self.l}, got m = {self.m}")
        if not self.Z > 0:
            raise DomainError(f"Z must be positive, got {self.Z}")

    @property
    def energy(self) -> float:
        return -self.Z**2 / (2 * self.n**2)

    @property
    def radial_nodes(self) -> int:
        return self.n - self.l - 1

    @property
    def polar_nodes(self) -> int:
        return self.l - abs(self.m)

    @property
    def is_circular(self) -> bool:
        return self.l == abs(self.m) == self.n - 1

    def label(self) -> str:
        return f"({self.n},{self.l},{self.m})"


def _radial_profile(qn: QuantumNumbers) -> Profile:
    n, l, Z = qn.n, qn.l, qn.Z
    k, alpha = qn.radial_nodes, 2 * l + 1
    poly = OrthonormalLaguerre(k, alpha)
    dx = 2 * Z / n  # dr~/dr
    pref = 4 * Z**3 / n**4 * poly.norm_factor**2
    x_nodes = poly.zeros()
    r_nodes = x_nodes / dx
    cuts = (0.0, *r_nodes, math.inf)
    cuts_arr = np.asarray(cuts)
    lead = (-1) ** k / math.factorial(k)  # L_k^(a)(x) = lead * prod (x - x_j)

    def assemble(x, L, dL):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
            xs = np.where(x > 0, x, 1.0)
            base = np.exp(-x) * np.where(x > 0, xs ** (2 * l), 1.0 if l == 0 else 0.0)
            v = pref * base * L * L
            lead_term = np.where(x > 0, 2 * l * xs ** (2 * l - 1), 0.0) if l else 0.0
            dbase = np.exp(-x) * lead_term - base
            dv = dx * pref * (dbase * L * L + 2 * base * L * dL)
        far = x > _X_CUTOFF
        return np.where(far, 0.0, v), np.where(far, 0.0, dv)

    def func(r):
        x = dx * np.asarray(r, dtype=float)
        L = laguerre(k, alpha, x)
        dL = -laguerre(k - 1, alpha + 1, x)
        return assemble(x, L, dL)

    def local(r, dl, dr):
        r = np.asarray(r, dtype=float)
        x = dx * r
        if k == 0:
            return assemble(x, np.ones_like(x), np.zeros_like(x))
        idx = piece_index(cuts_arr, r, dl, dr)
        diff = r[:, None] - r_nodes[None, :]
        j = np.arange(k)[None, :]
        diff = np.where(j + 1 == idx[:, None], dl[:, None], diff)
        diff = np.where(j == idx[:, None], -dr[:, None], diff)
        L, dL = _product_with_derivative(dx * diff, lead)
        return assemble(x, L, dL)

    return Profile(func, cuts, local, scale=n * n / Z)


def _product_with_derivative(factors: np.ndarray, lead: float):
    """lead * prod_j f_j and lead * sum_j prod_{i != j} f_i, row-wise."""
    m = factors.shape[1]
    value = lead * np.prod(factors, axis=1)
    deriv = np.zeros(factors.shape[0])
    for j in range(m):
        deriv += np.prod(np.delete(factors, j, axis=1), axis=1)
    return value, lead * deriv


def _angular_profile(ang: AngularDensity) -> Profile:
    am = abs(ang.m)
    deg, mu = ang.l - am, am + 0.5
    pref = ang.prefactor
    nodes = ang.nodes()
    cuts = (0.0, *nodes, math.pi)
    cuts_arr = np.asarray(cuts)
    lead = 2.0**deg * pochhammer(mu, deg) / math.factorial(deg)

    def assemble(theta, s, C, dC):
        c = np.cos(theta)
        value = pref * s ** (2 * am) * C * C
        dpoly = -2 * C * dC * s ** (2 * am + 1)
        if am:
            dpoly = dpoly + 2 * am * s ** (2 * am - 1) * c * C * C
        return value, pref * dpoly

    def func(theta):
        return ang.evaluate(theta)

    def local(theta, dl, dr):
        theta = np.asarray(theta, dtype=float)
        idx = piece_index(cuts_arr, theta, dl, dr)
        first, last = idx == 0, idx == len(cuts) - 2
        s = np.where(first & (dl <= dr), np.sin(dl), np.sin(theta))
        s = np.where(last & (dr < dl), np.sin(dr), s)
        if deg == 0:
            return assemble(theta, s, np.ones_like(theta), np.zeros_like(theta))
        # cos(theta) - cos(theta_j) = -2 sin((theta + theta_j)/2) sin((theta - theta_j)/2)
        delta = theta[:, None] - nodes[None, :]
        j = np.arange(deg)[None, :]
        delta = np.where(j + 1 == idx[:, None], dl[:, None], delta)
        delta = np.where(j == idx[:, None], -dr[:, None], delta)
        factors = -2 * np.sin(0.5 * (theta[:, None] + nodes[None, :])) * np.sin(0.5 * delta)
        C, dC = _product_with_derivative(factors, lead)
        return assemble(theta, s, C, dC)

    return Profile(func, cuts, local, scale=1.0)


class HydrogenicDensity(SeparableDensity):
    """Position density |psi_{n,l,m}|^2 = R_{n,l}(r) Theta_{l,m}(theta) of a hydrogenic state."""

    def __init__(self, qn: QuantumNumbers):
        self.qn = qn
        self.angular_density = AngularDensity(qn.l, qn.m)
        super().__init__(_radial_profile(qn), _angular_profile(self.angular_density),
                         name=f"hydrogenic {qn.label()} Z={qn.Z:g}")

    def closed_form_parts(self, lam: float):
        lam_p = LambdaParam(float(lam), 3)
        if lam_p.is_shannon_limit:
            return None
        try:
            pieces = _closed_pieces(self.qn, lam_p)
        except (UnsupportedLambdaError, DomainError):
            return None
        return pieces.fisher_lambda(), pieces.renyi_power(lam_p)

    def __repr__(self):
        return f"HydrogenicDensity{self.qn.label()}(Z={self.qn.Z:g})"


def hydrogenic_density(qn: QuantumNumbers) -> HydrogenicDensity:
    return HydrogenicDensity(qn)


# ---------------------------------------------------------------------------
# Laguerre linearization coefficients


@dataclass(frozen=True)
class Phi0Request:
    """Arguments of Phi_0(mu, beta, r, {m_i}, {alpha_i}; {t_i}).

    Phi_0 = int_0^inf e^{-x} x^mu prod_i L_{m_i}^{(alpha_i)}(t_i x) dx / Gamma(beta + 1)
    expanded as a terminating multiple sum (beta = 0 throughout this module).
    A degree of -1 stands for an absent polynomial and makes the value 0.
    """

    mu: float
    beta: float
    degrees: tuple
    alphas: tuple
    scales: tuple

    def __post_init__(self):
        for name in ("degrees", "alphas", "scales"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not len(self.degrees) == len(self.alphas) == len(self.scales):
            raise DomainError("degrees, alphas and scales must have equal length")
        if any(int(m) != m or m < -1 for m in self.degrees):
            raise DomainError(f"degrees must be integers >= -1, got {self.degrees}")

    @property
    def r(self) -> int:
        return len(self.degrees)

    def _prefactor(self) -> float:
        out = pochhammer(self.beta + 1, int(self.mu)) if float(self.mu).is_integer() else math.exp(
            math.lgamma(self.beta + 1 + self.mu) - math.lgamma(self.beta + 1))
        for m, a in zip(self.degrees, self.alphas):
            out *= binomial_general(m + a, int(m))
        return out

    def _factor_coeffs(self, m, a, t) -> np.ndarray:
        return np.array([pochhammer(-m, j) / (pochhammer(a + 1, j) * math.factorial(j)) * t**j
                         for j in range(int(m) + 1)])


def phi0(req: Phi0Request) -> float:
    """Terminating linearization sum, grouped by total index J = sum j_i.

    The multiple sum factorizes apart from the (beta + mu + 1)_J weight, so the
    per-factor coefficient sequences are convolved and weighted once per J.
    """
    if any(m == -1 for m in req.degrees):
        return 0.0
    conv = np.ones(1)
    for m, a, t in zip(req.degrees, req.alphas, req.scales):
        conv = np.convolve(conv, req._factor_coeffs(m, a, t))
    total = sum(pochhammer(req.beta + req.mu + 1, J) * float(c) for J, c in enumerate(conv))
    return req._prefactor() * total


def phi0_lattice(req: Phi0Request) -> float:
    """Same sum by direct enumeration of the multi-index lattice (reference path)."""
    if any(m == -1 for m in req.degrees):
        return 0.0
    total = 0.0
    for js in itertools.product(*[range(int(m) + 1) for m in req.degrees]):
        term = pochhammer(req.beta + req.mu + 1, sum(js))
        for j, m, a, t in zip(js, req.degrees, req.alphas, req.scales):
            term *= pochhammer(-m, j) / (pochhammer(a + 1, j) * math.factorial(j)) * t**j
        total += term
    return req._prefactor() * total


def _copies(count: int) -> int:
    c = round(count)
    if abs(c - count) > 1e-12 or c < 0:
        raise UnsupportedLambdaError(f"polynomial count {count} is not a non-negative integer")
    return int(c)


def _phi_same(mu, count, k, a, t, lowered=0):
    """Phi_0 with ``count`` factors, the last ``lowered`` of which are differentiated
    (degree k - 1, parameter a + 1)."""
    r = _copies(count)
    if lowered > r:
        return 0.0
    degrees = [k] * (r - lowered) + [k - 1] * lowered
    alphas = [a] * (r - lowered) + [a + 1] * lowered
    return phi0(Phi0Request(mu, 0, degrees, alphas, [t] * r))


def _check_closed_lambda(qn: QuantumNumbers, lam: float):
    if not lam > 1:
        raise UnsupportedLambdaError("closed-form radial integrals need lambda > 1")
    if not float(2 * lam).is_integer():
        raise UnsupportedLambdaError(
            f"closed-form radial integrals need 2*lambda integral, got lambda = {lam:g}")
    if qn.radial_nodes and not float(lam).is_integer():
        # L^{2 lambda} differs from |L|^{2 lambda} when L changes sign
        raise UnsupportedLambdaError(
            f"states with radial nodes need integer lambda for the closed form, got {lam:g}")


def g_function(n: int, l: int, lam: float) -> float:
    """G(n, l, lambda): the Phi_0 combination inside the closed-form I1a_rad."""
    qn = QuantumNumbers(n, l, l)
    _check_closed_lambda(qn, lam)
    p = 2 * lam - 1
    count = 2 * p
    k, a, t = n - l - 1, 2 * l + 1, 1 / p
    b = 2 * l * p

    def full(mu):
        return _phi_same(mu, count, k, a, t)

    def one(mu):
        return _phi_same(mu, count, k, a, t, 1)

    def two(mu):
        return _phi_same(mu, count, k, a, t, 2)

    return (4 * l * l * full(b) + full(b + 2) / p**2 - 4 * l / p * full(b + 1)
            + 4 / p**2 * two(b + 2) - 8 * l / p * one(b + 1) + 4 / p**2 * one(b + 2))


class RadialIntegrals(NamedTuple):
    i1a: float
    i1b: float
    i2: float


def radial_integrals_general(qn: QuantumNumbers, lam) -> RadialIntegrals:
    """Closed-form (I1a_rad, I1b_rad, I2_rad) via Laguerre linearization.

    Needs 2*lambda integral and lambda > 1; states with radial nodes need an
    integer lambda.  Raises UnsupportedLambdaError otherwise.
    """
    x = float(getattr(lam, "value", lam))
    _check_closed_lambda(qn, x)
    n, l, Z = qn.n, qn.l, qn.Z
    k, a = qn.radial_nodes, 2 * l + 1
    p = 2 * x - 1
    log_ratio = math.lgamma(n - l) - math.lgamma(n + l + 1)
    log_pre1 = ((4 * x - 3) * math.log(2) + (6 * x - 4) * math.log(Z) - (8 * x - 5) * math.log(n)
                + p * log_ratio - (2 * l * p + 1) * math.log(p))
    pre1 = math.exp(log_pre1)
    i1a = pre1 * g_function(n, l, x)
    i1b = pre1 * _phi_same(2 * l * p, 2 * p, k, a, 1 / p)
    log_pre2 = ((2 * x - 3) * math.log(2) + 3 * (x - 1) * math.log(Z) - (4 * x - 3) * math.log(n)
                + x * log_ratio - (2 * l * x + 3) * math.log(x))
    i2 = math.exp(log_pre2) * _phi_same(2 * (l * x + 1), 2 * x, k, a, 1 / x)
    return RadialIntegrals(i1a, i1b, i2)


# ---------------------------------------------------------------------------
# six-factor decomposition


class HydrogenicPieces(NamedTuple):
    i1a_rad: float
    i1b_rad: float
    i2_rad: float
    i1a_ang: float
    i1b_ang: float
    i2_ang: float

    def i1(self) -> float:
        return self.i1a_rad * self.i1a_ang + self.i1b_rad * self.i1b_ang

    def i2(self) -> float:
        return self.i2_rad * self.i2_ang

    def fisher_lambda(self) -> float:
        return self.i1() / self.i2()

    def renyi_power(self, lam: LambdaParam) -> float:
        return self.i2() ** ((lam.mu / 3) / (1 - lam.value))

    def cfr(self, lam: LambdaParam) -> float:
        return self.fisher_lambda() * self.renyi_power(lam) / normalization_D(lam, 3)


def _circular_constraints(n: int, lam: float):
    if n < 2:
        return
    checks = [
        (3 - 2 * n + 4 * lam * (n - 1), "3 - 2n + 4 lambda (n-1) > 0"),
        (2 - n + 2 * lam * (n - 1), "2 - n + 2 lambda (n-1) > 0"),
        ((2 * lam - 1) * (n - 1), "(2 lambda - 1)(n-1) > 0"),
    ]
    for val, text in checks:
        if not val > 0:
            raise DomainError(f"circular closed form needs {text}; got {val:g} for n={n}, lambda={lam:g}")


def circular_pieces(n: int, lam, Z: float = 1.0) -> HydrogenicPieces:
    """Closed-form six factors for the circular state l = |m| = n - 1."""
    L = as_lambda(lam, 3).value
    if L == 1:
        raise DomainError("closed forms exclude lambda = 1")
    _circular_constraints(n, L)
    g = math.lgamma
    ln2, lnZ, lnn, lnpi = math.log(2), math.log(Z), math.log(n), math.log(math.pi)
    ln_p = math.log(2 * L - 1)
    common_r = g(3 - 2 * n + 4 * L * (n - 1)) - (2 * L - 1) * g(2 * n)
    i1a_r = math.exp(2 * (2 * L - 1) * ln2 + 2 * (3 * L - 2) * lnZ - (8 * L - 5) * lnn
                     + (4 * L * (1 - n) + 2 * n - 5) * ln_p + common_r) * (2 * L * (n - 1) - n + 2)
    i1b_r = math.exp((4 * L - 3) * ln2 + 2 * (3 * L - 2) * lnZ - (8 * L - 5) * lnn
                     + (4 * L * (1 - n) + 2 * n - 3) * ln_p + common_r)
    i2_r = math.exp((2 * L - 3) * ln2 + 3 * (L - 1) * lnZ - (4 * L - 3) * lnn
                    + (-2 * L * (n - 1) - 3) * math.log(L) + g(2 * (n - 1) * L + 3) - L * g(2 * n))
    ang = g(n + 0.5) - g(n)
    i1a_a = math.exp(2 * (1 - L) * ln2 + 3 * (1 - L) * lnpi + (2 * L - 1) * ang
                     + g(2 - n + 2 * L * (n - 1)) - g(2.5 - n + 2 * L * (n - 1)))
    if n > 1:
        i1b_a = (n - 1) ** 2 * math.exp((3 - 2 * L) * ln2 + 3 * (1 - L) * lnpi + (2 * L - 1) * ang
                                        + g((2 * L - 1) * (n - 1)) - g(2 * L * (n - 1) - n + 2.5))
    else:
        i1b_a = 0.0  # the 1s angular factor is constant
    i2_a = math.exp((1 - L) * ln2 + 1.5 * (1 - L) * lnpi + L * ang
                    + g(1 + L * (n - 1)) - g(1.5 + L * (n - 1)))
    return HydrogenicPieces(i1a_r, i1b_r, i2_r, i1a_a, i1b_a, i2_a)


def _ns_pieces(qn: QuantumNumbers, lam: LambdaParam) -> HydrogenicPieces:
    rad = radial_integrals_general(qn, lam)
    x = lam.value
    four_pi = 4 * math.pi
    return HydrogenicPieces(rad.i1a, rad.i1b, rad.i2, four_pi ** (2 - 2 * x), 0.0, four_pi ** (1 - x))


def _closed_pieces(qn: QuantumNumbers, lam: LambdaParam) -> HydrogenicPieces:
    if lam.is_shannon_limit:
        raise DomainError("closed forms exclude lambda = 1")
    if qn.is_circular:
        return circular_pieces(qn.n, lam, qn.Z)
    if qn.l == 0:
        return _ns_pieces(qn, lam)
    raise UnsupportedLambdaError(f"no closed form for state {qn.label()}")


def check_integrability(qn: QuantumNumbers, lam: LambdaParam) -> None:
    """Reject lambda <= 3/4 for states with nodes.

    Near a simple node the Fisher integrand behaves like t^{4 lambda - 4},
    which is not integrable for lambda <= 3/4.
    """
    if (qn.radial_nodes or qn.polar_nodes) and lam.value <= 0.75:
        where = []
        if qn.radial_nodes:
            where.append(f"{qn.radial_nodes} radial node(s)")
        if qn.polar_nodes:
            where.append(f"{qn.polar_nodes} polar node(s)")
        raise IntegrabilityError(
            f"state {qn.label()} has {' and '.join(where)}; the lambda-weighted Fisher integral "
            f"diverges like t^(4 lambda - 4) at each node and needs lambda > 3/4 "
            f"(got {lam.value:g})")


def numeric_pieces(qn: QuantumNumbers, lam, spec: QuadratureSpec | None = None) -> HydrogenicPieces:
    """The six factors by quadrature, split at the radial and polar nodes."""
    lam = as_lambda(lam, 3)
    check_integrability(qn, lam)
    rho = HydrogenicDensity(qn)
    p = separable_pieces(rho, 2 * lam.value - 3, lam.value, spec)
    return HydrogenicPieces(p.grad_radial.value, p.polar_radial.value, p.power_radial.value,
                            p.grad_angular_radial_part.value, p.polar_angular.value, p.power_angular.value)


# ---------------------------------------------------------------------------
# closed-form complexities


def cfr_ground_closed(lam) -> float:
    """C for the ground state, valid for every admissible lambda != 1."""
    lam = as_lambda(lam, 3)
    x = lam.value
    if lam.is_shannon_limit:
        raise DomainError("closed forms exclude lambda = 1")
    log_c = (math.log(4) + (2 / 3) * math.log(math.pi) + (2 / (x - 1) + 6) * math.log(x)
             - 3 * math.log(2 * x - 1))
    return math.exp(log_c) / normalization_D(lam, 3)


def cfr_ns_closed(n: int, lam) -> float:
    """C for the ns states from the Laguerre linearization sums (Z-free)."""
    lam = as_lambda(lam, 3)
    x = lam.value
    qn = QuantumNumbers(n, 0, 0)
    try:
        _check_closed_lambda(qn, x)
    except UnsupportedLambdaError as exc:
        raise UnsupportedLambdaError(f"{exc}; use the quadrature path") from None
    r = int(round(2 * x))
    phi = phi0(Phi0Request(2, 0, [n - 1] * r, [1] * r, [1 / x] * r))
    f = phi ** (2 * (1 / (3 * (1 - x)) - 1)) * g_function(n, 0, x)
    log_c = ((3 + 2 / (3 * (x - 1))) * math.log(2) + (2 / 3) * math.log(math.pi)
             + (2 / 3) * (2 / (x - 1) + 5) * math.log(n) + (2 / (x - 1) + 6) * math.log(x)
             - math.log(2 * x - 1))
    return math.exp(log_c) * f / normalization_D(lam, 3)


def cfr_circular_closed(n: int, lam) -> float:
    """C for the circular state l = |m| = n - 1, in log-Gamma form (Z-free)."""
    lam = as_lambda(lam, 3)
    L = lam.value
    if lam.is_shannon_limit:
        raise DomainError("closed forms exclude lambda = 1")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    _circular_constraints(n, L)
    g = math.lgamma
    ln_c = ((19 / 3 - 4 * L + 2 / (3 * (L - 1)) + n * (4 * L - 2)) * math.log(2)
            + 0.5 * math.log(math.pi)
            - (2 / (3 * (1 - L)) - 5 / 3) * math.log(n)
            + (2 * (3 * L - 2) * (2 * L * (n - 1) + 3) / (3 * (L - 1))) * math.log(L)
            + (4 * L * (1 - n) + 2 * n - 5) * math.log(2 * L - 1)
            + (2 / (3 * (L - 1)) + 5 / 3) * (g(n) + g(2 * n))
            + 2 * g(2 - n + 2 * L * (n - 1))
            - ((3 - 5 * L) / (3 * (1 - L))) * g(n + 0.5)
            + 2 * (1 / (3 * (L - 1)) + 1) * (g(1.5 + L * (n - 1)) - g(1 + L * (n - 1))
                                             - g(3 + 2 * L * (n - 1))))
    return math.exp(ln_c) / normalization_D(lam, 3)


def cfr_numeric(qn: QuantumNumbers, lam, spec: QuadratureSpec | None = None) -> ComplexityReport:
    """Quadrature complexity for any state, assembled from the six factors."""
    lam = as_lambda(lam, 3)
    check_integrability(qn, lam)
    if lam.is_shannon_limit:
        return cfr_complexity(HydrogenicDensity(qn), lam, "quadrature", spec)
    pieces = numeric_pieces(qn, lam, spec)
    d_norm = normalization_D(lam, 3)
    f = FunctionalValue(pieces.fisher_lambda(), "quadrature")
    nv = FunctionalValue(pieces.renyi_power(lam), "quadrature")
    return ComplexityReport(lam=lam, dim=3, fisher_lambda=f, renyi_power=nv, d_norm=d_norm,
                            cfr=f.value * nv.value / d_norm, method="quadrature")


def hydrogenic_report(qn: QuantumNumbers, lam, method: str = "both",
                      spec: QuadratureSpec | None = None) -> ComplexityReport:
    """Complexity report for a state using closed forms where they exist.

    ``method`` is closed (alias analytic), quadrature or both.  When no closed
    form applies, quadrature is used and a note says so.
    """
    lam = as_lambda(lam, 3)
    check_integrability(qn, lam)
    if method == "quadrature":
        return cfr_numeric(qn, lam, spec)
    if method not in ("closed", "analytic", "both"):
        raise DomainError(f"unknown method {method!r}; choose closed, quadrature or both")
    rho = HydrogenicDensity(qn)
    parts = rho.closed_form_parts(lam.value)
    if parts is None:
        rep = cfr_numeric(qn, lam, spec)
        return ComplexityReport(**{**rep.__dict__, "notes": (
            f"no closed form for state {qn.label()} at lambda={lam.value:g}; used quadrature",)})
    d_norm = normalization_D(lam, 3)
    f = FunctionalValue(parts[0], "analytic")
    nv = FunctionalValue(parts[1], "analytic")
    cfr = f.value * nv.value / d_norm
    discrepancy = None
    used = "analytic"
    if method == "both":
        num = cfr_numeric(qn, lam, spec)
        discrepancy = abs(num.cfr - cfr) / abs(cfr)
        used = "both"
    return ComplexityReport(lam=lam, dim=3, fisher_lambda=f, renyi_power=nv, d_norm=d_norm, cfr=cfr,
                            method=used, discrepancy=discrepancy,
                            suspect=discrepancy is not None and discrepancy > DISCREPANCY_TOL)

"""Entropic functionals of a density: Renyi and Shannon entropies, the Renyi
entropy power, and the standard, lambda-weighted and biparametric Fisher
informations.

Every functional is reduced to integrals of the form
``int g(rho, |grad rho|) dx`` over the density's profiles:

* 1-D densities integrate directly;
* radial densities carry the |S^{d-1}| r^{d-1} weight;
* separable 3-D densities factor into radial x polar pieces (the gradient
  splits into a radial and a polar component, each of which factorizes).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .densities import Density, Density1D, Profile, RadialDensity, SeparableDensity, sphere_area
from .errors import ConvergenceError, DivergenceError, DomainError, UnsupportedInputError
from .quadrature import QuadratureSpec, QuadResult

__all__ = [
    "LambdaParam",
    "FunctionalValue",
    "SeparablePieces",
    "power_integral",
    "gradient_integral",
    "renyi_entropy",
    "shannon_entropy",
    "renyi_power",
    "fisher_standard",
    "fisher_lambda",
    "biparametric_fisher",
    "separable_pieces",
    "mean_and_variance",
]


def lambda_lower_bound(d: int) -> float:
    return max((d - 1) / d, d / (d + 2))


def _bound_text(d: int) -> str:
    return f"max{{{Fraction(d - 1, d)}, {Fraction(d, d + 2)}}}"


@dataclass(frozen=True)
class LambdaParam:
    """Order parameter lambda, validated for use in ``dim`` dimensions."""

    value: float
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dim}")
        if not math.isfinite(self.value) or not self.value > lambda_lower_bound(self.dim):
            raise DomainError(
                f"lambda must exceed {_bound_text(self.dim)} for d={self.dim}, got {self.value:g}")

    @property
    def is_shannon_limit(self) -> bool:
        return self.value == 1.0

    @property
    def mu(self) -> float:
        """2 + d (lambda - 1)."""
        return 2 + self.dim * (self.value - 1)

    def __float__(self):
        return float(self.value)


def as_lambda(lam, dim: int) -> LambdaParam:
    if isinstance(lam, LambdaParam):
        if lam.dim != dim:
            raise DomainError(f"lambda was validated for d={lam.dim}, density has d={dim}")
        return lam
    return LambdaParam(float(lam), dim)


@dataclass(frozen=True)
class FunctionalValue:
    value: float
    method: str = "quadrature"
    err_estimate: float = 0.0

    def __float__(self):
        return float(self.value)


# ---------------------------------------------------------------------------
# integrand kernels; zero wherever rho vanishes


def _pow(v, p):
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        return np.where(v > 0, np.abs(v) ** p, 0.0)


def _grad_term(v, dv, s, beta):
    """rho^s |rho'|^beta, evaluated in log space to dodge overflow near zeros."""
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ok = (v > 0) & (dv != 0)
        out = np.exp(s * np.log(np.where(ok, v, 1.0)) + beta * np.log(np.where(ok, np.abs(dv), 1.0)))
    return np.where(ok, out, 0.0)


def _neg_xlogx(v):
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(v > 0, -v * np.log(np.where(v > 0, v, 1.0)), 0.0)


# Functional integrands are non-negative, so the relative tolerance alone
# decides convergence; an absolute floor would accept tiny integrals (radial
# factors of excited states reach 1e-7 and below) at reduced precision.
_ABS_FLOOR = 1e-250


def _spec(spec: QuadratureSpec | None, singular: bool = False) -> QuadratureSpec:
    spec = spec or QuadratureSpec()
    spec = replace(spec, abs_tol=min(spec.abs_tol, _ABS_FLOOR))
    if singular and spec.grading < 6:
        spec = replace(spec, grading=6)
    return spec


def _run(profile: Profile, fn, spec, weight=None, what="integral") -> QuadResult:
    try:
        return profile.integrate(fn, spec, weight)
    except ConvergenceError as exc:
        raise DivergenceError(f"{what} failed to converge: {exc}", exc.estimate, exc.error) from exc


def _radial_weight(d):
    area = sphere_area(d)
    if d == 1:
        return lambda r: np.full_like(np.asarray(r, dtype=float), area)
    return lambda r: area * np.asarray(r, dtype=float) ** (d - 1)


def _polar_weight(theta):
    return 2 * math.pi * np.sin(theta)


def _r_power(k):
    return lambda r: np.asarray(r, dtype=float) ** k


class _Acc:
    """Running value with a first-order propagated error."""

    def __init__(self):
        self.value = 0.0
        self.err = 0.0

    def add_product(self, *parts: QuadResult, coeff: float = 1.0):
        val = coeff
        rel = 0.0
        for p in parts:
            val *= p.value
            rel += p.error / abs(p.value) if p.value else 0.0
        self.value += val
        self.err += abs(val) * rel
        return self


def _integral_generic(rho: Density, fn1d, spec, what, separable_combo):
    """Shared driver: 1-D and radial densities integrate fn1d(v, dv, x) directly."""
    if isinstance(rho, Density1D):
        return _run(rho.profile, fn1d, spec, None, what)
    if isinstance(rho, RadialDensity):
        return _run(rho.profile, fn1d, spec, _radial_weight(rho.dim), what)
    if isinstance(rho, SeparableDensity):
        return separable_combo()
    raise UnsupportedInputError(f"no integration rule for {type(rho).__name__}")


def power_integral(rho: Density, p: float, spec: QuadratureSpec | None = None) -> QuadResult:
    """int rho^p dx."""
    spec = _spec(spec)
    fn = lambda v, dv, x: _pow(v, p)

    def sep():
        rad = _run(rho.radial, fn, spec, _r_power(2), "radial power integral")
        ang = _run(rho.angular, fn, spec, _polar_weight, "angular power integral")
        acc = _Acc().add_product(rad, ang)
        return QuadResult(acc.value, acc.err)

    return _integral_generic(rho, fn, spec, f"int rho^{p:g}", sep)


def gradient_integral(rho: Density, s: float, beta: float = 2.0,
                      spec: QuadratureSpec | None = None) -> QuadResult:
    """int rho^s |grad rho|^beta dx."""
    spec = _spec(spec, singular=s < -1)
    fn = lambda v, dv, x: _grad_term(v, dv, s, beta)

    def sep():
        if beta != 2:
            raise UnsupportedInputError("separable densities support only beta = 2")
        p = separable_pieces(rho, s, None, spec)
        acc = _Acc().add_product(p.grad_radial, p.grad_angular_radial_part)
        acc.add_product(p.polar_radial, p.polar_angular)
        return QuadResult(acc.value, acc.err)

    return _integral_generic(rho, fn, spec, f"gradient integral (s={s:g})", sep)


class SeparablePieces(NamedTuple):
    """Radial and polar factors of the separable gradient/power integrals.

    With s the exponent on rho in the gradient term:
      grad_radial              = int R^s R'^2 r^2 dr
      grad_angular_radial_part = int Theta^{s+2} dOmega
      polar_radial             = int R^{s+2} dr
      polar_angular            = int Theta^s Theta'^2 dOmega
    and, when a power p is requested,
      power_radial             = int R^p r^2 dr
      power_angular            = int Theta^p dOmega
    """

    grad_radial: QuadResult
    polar_radial: QuadResult
    grad_angular_radial_part: QuadResult
    polar_angular: QuadResult
    power_radial: QuadResult | None
    power_angular: QuadResult | None


def separable_pieces(rho: SeparableDensity, s: float, p: float | None,
                     spec: QuadratureSpec | None = None) -> SeparablePieces:
    """All one-dimensional factors needed for the gradient (and power) integrals."""
    spec = _spec(spec, singular=s < -1)
    R, T = rho.radial, rho.angular
    g_rad = _run(R, lambda v, dv, x: _grad_term(v, dv, s, 2.0), spec, _r_power(2), "radial gradient integral")
    p_rad = _run(R, lambda v, dv, x: _pow(v, s + 2), spec, None, "radial polar-term integral")
    g_ang = _run(T, lambda v, dv, x: _pow(v, s + 2), spec, _polar_weight, "angular integral")
    p_ang = _run(T, lambda v, dv, x: _grad_term(v, dv, s, 2.0), spec, _polar_weight, "angular gradient integral")
    pw_rad = pw_ang = None
    if p is not None:
        pw_rad = _run(R, lambda v, dv, x: _pow(v, p), spec, _r_power(2), "radial power integral")
        pw_ang = _run(T, lambda v, dv, x: _pow(v, p), spec, _polar_weight, "angular power integral")
    return SeparablePieces(g_rad, p_rad, g_ang, p_ang, pw_rad, pw_ang)


def _entropy_integral(rho: Density, spec) -> QuadResult:
    fn = lambda v, dv, x: _neg_xlogx(v)

    def sep():
        R, T = rho.radial, rho.angular
        ent_r = _run(R, fn, spec, _r_power(2), "radial entropy integral")
        mass_r = _run(R, lambda v, dv, x: v, spec, _r_power(2), "radial mass")
        ent_t = _run(T, fn, spec, _polar_weight, "angular entropy integral")
        mass_t = _run(T, lambda v, dv, x: v, spec, _polar_weight, "angular mass")
        acc = _Acc().add_product(ent_r, mass_t).add_product(mass_r, ent_t)
        return QuadResult(acc.value, acc.err)

    return _integral_generic(rho, fn, spec, "entropy integral", sep)


# ---------------------------------------------------------------------------
# public functionals


def renyi_entropy(rho: Density, p: float, spec: QuadratureSpec | None = None) -> FunctionalValue:
    """R_p = ln(int rho^p) / (1 - p)."""
    if not p > 0 or p == 1:
        raise DomainError("Renyi order must be positive and different from 1")
    q = power_integral(rho, p, spec)
    if not (q.value > 0 and math.isfinite(q.value)):
        raise DivergenceError(f"int rho^{p:g} is not finite and positive ({q.value})")
    return FunctionalValue(math.log(q.value) / (1 - p), "quadrature", q.error / (q.value * abs(1 - p)))


def shannon_entropy(rho: Density, spec: QuadratureSpec | None = None) -> FunctionalValue:
    """S = -int rho ln rho, with 0 ln 0 = 0."""
    res = _entropy_integral(rho, _spec(spec))
    return FunctionalValue(res.value, "quadrature", res.error)


def renyi_power(rho: Density, lam, spec: QuadratureSpec | None = None) -> FunctionalValue:
    """N_lambda = (int rho^lambda)^{(mu/d)/(1-lambda)}, or exp(2 S / d) at lambda = 1."""
    lam = as_lambda(lam, rho.dim)
    d = rho.dim
    if lam.is_shannon_limit:
        s = shannon_entropy(rho, spec)
        val = math.exp(2 * s.value / d)
        return FunctionalValue(val, "quadrature", val * 2 * s.err_estimate / d)
    q = power_integral(rho, lam.value, spec)
    if not q.value > 0:
        raise DivergenceError("int rho^lambda vanished")
    expo = (lam.mu / d) / (1 - lam.value)
    val = q.value**expo
    return FunctionalValue(val, "quadrature", abs(val * expo) * q.error / q.value)


def fisher_standard(rho: Density, spec: QuadratureSpec | None = None) -> FunctionalValue:
    """F = int |grad rho|^2 / rho."""
    res = gradient_integral(rho, -1.0, 2.0, spec)
    return FunctionalValue(res.value, "quadrature", res.error)


def _fisher_lambda_parts(rho: Density, lam: LambdaParam, spec) -> tuple[QuadResult, QuadResult]:
    num = gradient_integral(rho, 2 * lam.value - 3, 2.0, spec)
    den = power_integral(rho, lam.value, spec)
    return num, den


def fisher_lambda(rho: Density, lam, spec: QuadratureSpec | None = None) -> FunctionalValue:
    """F~_lambda = int rho^{2 lambda - 3} |grad rho|^2 / int rho^lambda."""
    lam = as_lambda(lam, rho.dim)
    num, den = _fisher_lambda_parts(rho, lam, spec)
    if not den.value > 0:
        raise DivergenceError("int rho^lambda vanished")
    val = num.value / den.value
    err = abs(val) * (num.error / abs(num.value) if num.value else 0.0) + abs(val) * den.error / den.value
    return FunctionalValue(val, "quadrature", err)


def biparametric_fisher(rho: Density, beta: float, q: float,
                        spec: QuadratureSpec | None = None) -> FunctionalValue:
    """I_{beta,q} = int rho^{beta (q-1) + 1} (|grad rho| / rho)^beta dx.

    For beta = 2, q = lambda this is the numerator of ``fisher_lambda``.
    """
    if not beta > 1 or q < 0:
        raise DomainError("need beta > 1 and q >= 0")
    res = gradient_integral(rho, beta * (q - 1) + 1 - beta, beta, spec)
    return FunctionalValue(res.value, "quadrature", res.error)


def mean_and_variance(rho: Density, spec: QuadratureSpec | None = None) -> tuple[np.ndarray, float]:
    """Centroid <x> and V = <|x|^2> - |<x>|^2."""
    spec = spec or QuadratureSpec()
    if isinstance(rho, Density1D):
        m0 = _run(rho.profile, lambda v, dv, x: v, spec, None, "mass").value
        m1 = _run(rho.profile, lambda v, dv, x: v * x, spec, None, "first moment").value / m0
        m2 = _run(rho.profile, lambda v, dv, x: v * (x - m1) ** 2, spec, None, "second moment").value / m0
        return np.array([m1]), m2
    if isinstance(rho, RadialDensity):
        w = _radial_weight(rho.dim)
        m0 = _run(rho.profile, lambda v, dv, r: v, spec, w, "mass").value
        m2 = _run(rho.profile, lambda v, dv, r: v * r * r, spec, w, "second moment").value / m0
        return rho.center.copy(), m2
    if isinstance(rho, SeparableDensity):
        R, T = rho.radial, rho.angular
        mr = [_run(R, (lambda k: lambda v, dv, r: v * r**k)(k), spec, None, "radial moment").value
              for k in (2, 3, 4)]
        mt = _run(T, lambda v, dv, t: v, spec, _polar_weight, "angular mass").value
        mz = _run(T, lambda v, dv, t: v * np.cos(t), spec, _polar_weight, "angular moment").value
        m0 = mr[0] * mt
        z = mr[1] * mz / m0
        second = mr[2] * mt / m0
        return rho.center + np.array([0.0, 0.0, z]), second - z * z
    raise UnsupportedInputError(f"no moment rule for {type(rho).__name__}")

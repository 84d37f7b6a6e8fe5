"""The Fisher-Renyi complexity C = F~_lambda * N_lambda / D_lambda and its
companions (Cramer-Rao and Fisher-Shannon products)."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .densities import Density
from .errors import DomainError
from .functionals import (
    FunctionalValue,
    LambdaParam,
    as_lambda,
    fisher_lambda,
    fisher_standard,
    mean_and_variance,
    renyi_power,
    shannon_entropy,
)
from .quadrature import QuadratureSpec

__all__ = [
    "DISCREPANCY_TOL",
    "ComplexityReport",
    "normalization_D",
    "cfr_from_parts",
    "cfr_complexity",
    "cramer_rao",
    "fisher_shannon",
]

# analytic-vs-quadrature relative difference above which a report is flagged
DISCREPANCY_TOL = 1e-6

_METHODS = {
    "quadrature": "quadrature",
    "analytic": "analytic",
    "closed": "analytic",
    "analytic-if-available": "analytic-if-available",
    "both": "both",
}


def normalization_D(lam, d: int) -> float:
    """D_lambda, the infimum of F~_lambda * N_lambda (attained by B_lambda).

    At lambda = 1 this is the continuous limit 2 pi d e.
    """
    lam = as_lambda(lam, d)
    x = lam.value
    if lam.is_shannon_limit:
        return 2 * math.pi * d * math.e
    if x > 1:
        k = x / (x - 1)
        log_ratio = math.lgamma(k) - math.lgamma(d / 2 + k)
        pre = 1 / (x * (x - 1))
    else:
        k = 1 / (1 - x)
        log_ratio = math.lgamma(k - d / 2) - math.lgamma(k)
        pre = 1 / (x * (1 - x))
    base = ((d + 2) * x - d) / (2 * x)
    log_d = (math.log(2 * math.pi * d * pre) + (2 / d) * log_ratio
             + (lam.mu / (d * (x - 1))) * math.log(base))
    return math.exp(log_d)


def cfr_from_parts(fisher: float, power: float, lam: LambdaParam) -> float:
    return fisher * power / normalization_D(lam, lam.dim)


@dataclass(frozen=True)
class ComplexityReport:
    lam: LambdaParam
    dim: int
    fisher_lambda: FunctionalValue
    renyi_power: FunctionalValue
    d_norm: float
    cfr: float
    method: str
    companions: dict | None = None
    discrepancy: float | None = None
    suspect: bool = False
    notes: tuple = field(default=())

    def to_dict(self) -> dict:
        out = {
            "lambda": self.lam.value,
            "dim": self.dim,
            "fisher_lambda": self.fisher_lambda.value,
            "renyi_power": self.renyi_power.value,
            "d_norm": self.d_norm,
            "cfr": self.cfr,
            "method": self.method,
            "discrepancy": self.discrepancy,
        }
        if self.companions:
            out["companions"] = dict(self.companions)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _quadrature_parts(rho: Density, lam: LambdaParam, spec) -> tuple[FunctionalValue, FunctionalValue]:
    return fisher_lambda(rho, lam, spec), renyi_power(rho, lam, spec)


def _analytic_parts(rho: Density, lam: LambdaParam):
    parts = rho.closed_form_parts(lam.value)
    if parts is None:
        return None
    f, n = parts
    return FunctionalValue(f, "analytic"), FunctionalValue(n, "analytic")


def cfr_complexity(rho: Density, lam, method: str = "analytic-if-available",
                   spec: QuadratureSpec | None = None, companions: bool = False) -> ComplexityReport:
    """Fisher-Renyi complexity of ``rho`` at order ``lam``.

    ``method`` is one of quadrature, analytic (alias closed), analytic-if-available
    or both.  With ``both`` the analytic value is reported and the relative
    difference to quadrature is stored in ``discrepancy``; the report is marked
    suspect when that difference exceeds ``DISCREPANCY_TOL``.
    """
    try:
        mode = _METHODS[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}; choose from {sorted(_METHODS)}") from None
    lam = as_lambda(lam, rho.dim)
    d_norm = normalization_D(lam, rho.dim)
    notes = []

    analytic = None
    if mode != "quadrature":
        analytic = _analytic_parts(rho, lam)
        if analytic is None:
            if mode in ("analytic", "both"):
                notes.append("no closed form for this density and lambda; used quadrature")
            mode = "quadrature"

    discrepancy = None
    if analytic is not None:
        f, n = analytic
        cfr = f.value * n.value / d_norm
        used = "analytic"
        if mode == "both":
            fq, nq = _quadrature_parts(rho, lam, spec)
            cq = fq.value * nq.value / d_norm
            discrepancy = abs(cq - cfr) / abs(cfr)
            used = "both"
    else:
        f, n = _quadrature_parts(rho, lam, spec)
        cfr = f.value * n.value / d_norm
        used = "quadrature"

    comp = None
    if companions:
        comp = {"cramer_rao": cramer_rao(rho, spec), "fisher_shannon": fisher_shannon(rho, spec)}
    return ComplexityReport(
        lam=lam, dim=rho.dim, fisher_lambda=f, renyi_power=n, d_norm=d_norm, cfr=cfr,
        method=used, companions=comp, discrepancy=discrepancy,
        suspect=discrepancy is not None and discrepancy > DISCREPANCY_TOL, notes=tuple(notes))


def cramer_rao(rho: Density, spec: QuadratureSpec | None = None) -> float:
    """F[rho] * V[rho] with V = <|x|^2> - |<x>|^2."""
    _, var = mean_and_variance(rho, spec)
    return fisher_standard(rho, spec).value * var


def fisher_shannon(rho: Density, spec: QuadratureSpec | None = None) -> float:
    """F[rho] * exp(2 S[rho] / d)."""
    s = shannon_entropy(rho, spec).value
    return fisher_standard(rho, spec).value * math.exp(2 * s / rho.dim)

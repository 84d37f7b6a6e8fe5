"""Property suites that check the analytic claims about C_FR numerically.

Each check returns a list of ``CheckResult`` rows; ``run_suite`` runs a named
suite and ``SUITES`` maps suite names to their checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .complexity import cfr_complexity, normalization_D
from .densities import (
    beta_density,
    gaussian,
    make_generalized_gaussian,
    near_continuity_pair,
    rearrange_decreasing_1d,
    replicate_1d,
    scale_translate,
    sine_humps,
)
from .functionals import biparametric_fisher, renyi_entropy
from .hydrogenic import (
    HydrogenicDensity,
    Phi0Request,
    QuantumNumbers,
    cfr_circular_closed,
    cfr_ground_closed,
    cfr_ns_closed,
    cfr_numeric,
    g_function,
    phi0,
)

__all__ = ["CheckResult", "SUITES", "run_suite", "battery"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _rel(a: float, b: float) -> float:
    return abs(a / b - 1.0)


def battery():
    """Ten test densities: Gaussians, extremal densities, trig bumps, hydrogenic states."""
    return [
        gaussian(1),
        gaussian(3, sigma=0.7),
        make_generalized_gaussian(1.5, 1),
        make_generalized_gaussian(1.25, 3),
        make_generalized_gaussian(0.8, 1),
        sine_humps([(-math.pi, math.pi, 1.0)], name="sin2 bump"),
        sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)], name="two sin2 humps"),
        beta_density(3.0, 4.0),
        HydrogenicDensity(QuantumNumbers(1, 0, 0)),
        HydrogenicDensity(QuantumNumbers(2, 1, 0)),
    ]


BATTERY_LAMBDAS = (0.8, 1.25, 1.5, 2.0, 3.0)


def check_minimizers() -> list[CheckResult]:
    rows = []
    for lam, d in [(1.5, 1), (2.0, 1), (0.8, 1), (2.0, 3), (1.25, 3)]:
        c = cfr_complexity(make_generalized_gaussian(lam, d), lam, method="quadrature").cfr
        rows.append(CheckResult(f"C[B_{lam:g}] = 1 (d={d})", abs(c - 1) <= 1e-6, f"C = {c:.12g}"))
    return rows


def check_lower_bound() -> list[CheckResult]:
    worst = math.inf
    where = ""
    for rho in battery():
        for lam in BATTERY_LAMBDAS:
            c = cfr_complexity(rho, lam, method="quadrature").cfr
            if c < worst:
                worst, where = c, f"{rho!r} at lambda={lam:g}"
    n = len(battery()) * len(BATTERY_LAMBDAS)
    return [CheckResult(f"C >= 1 over {n} density/lambda pairs", worst >= 1 - 1e-6,
                        f"minimum {worst:.12g} ({where})")]


def check_shannon_limit() -> list[CheckResult]:
    d_lim = 2 * math.pi * 3 * math.e
    dev = _rel(normalization_D(1.001, 3), d_lim)
    c1 = cfr_complexity(gaussian(1), 1.0).cfr
    return [
        CheckResult("D_lambda -> 2 pi d e as lambda -> 1", dev < 1e-2, f"relative gap at 1.001: {dev:.3e}"),
        CheckResult("Gaussian C = 1 at lambda = 1", abs(c1 - 1) <= 1e-8, f"C = {c1:.15g}"),
    ]


def check_scaling() -> list[CheckResult]:
    rows = []
    worst_c = worst_f = worst_n = 0.0
    cases = [(sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)]), np.array([0.7])),
             (HydrogenicDensity(QuantumNumbers(2, 1, 1)), np.array([0.3, -1.0, 2.0]))]
    for rho, b in cases:
        d = rho.dim
        for lam in (1.5, 2.0):
            base = cfr_complexity(rho, lam, method="quadrature")
            for a in (0.5, 2.0, 3.0):
                t = cfr_complexity(scale_translate(rho, a, b), lam, method="quadrature")
                e = d * (lam - 1) + 2
                worst_c = max(worst_c, _rel(t.cfr, base.cfr))
                worst_f = max(worst_f, _rel(t.fisher_lambda.value, a**e * base.fisher_lambda.value))
                worst_n = max(worst_n, _rel(t.renyi_power.value, a**-e * base.renyi_power.value))
    rows.append(CheckResult("C invariant under x -> a(x - b)", worst_c <= 1e-7, f"max deviation {worst_c:.3e}"))
    rows.append(CheckResult("F~ scales as a^(d(lambda-1)+2)", worst_f <= 1e-7, f"max deviation {worst_f:.3e}"))
    rows.append(CheckResult("N scales as a^-(d(lambda-1)+2)", worst_n <= 1e-7, f"max deviation {worst_n:.3e}"))
    return rows


def check_replication() -> list[CheckResult]:
    rho = sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)])
    lam = 1.5
    base = cfr_complexity(rho, lam, method="quadrature")
    rows = []
    for n in (2, 3):
        rep = cfr_complexity(replicate_1d(rho, n), lam, method="quadrature")
        ratio = rep.cfr / base.cfr
        f_dev = _rel(rep.fisher_lambda.value / base.fisher_lambda.value, n ** ((3 - lam) / 2))
        n_dev = _rel(rep.renyi_power.value / base.renyi_power.value, n ** ((lam + 1) / 2))
        rows.append(CheckResult(f"C ratio = n^2 for n={n}", abs(ratio / n**2 - 1) <= 1e-4,
                                f"ratio {ratio:.6f}"))
        rows.append(CheckResult(f"F~ and N replication exponents for n={n}", max(f_dev, n_dev) <= 1e-5,
                                f"deviations {f_dev:.2e}, {n_dev:.2e}"))
    return rows


def rearrangement_densities():
    return [
        sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)], name="two sin2 humps"),
        sine_humps([(-3.0, 0.7, 1.0), (-2.0, 1.5, 2.0), (0.0, 0.4, 0.5)], name="three sin2 humps"),
        beta_density(2.5, 5.0),
    ]


def check_rearrangement(coarse: int = 1024, fine: int = 4096) -> list[CheckResult]:
    rows = []
    for rho in rearrangement_densities():
        stars = {g: rearrange_decreasing_1d(rho, g) for g in (coarse, fine)}
        for lam in (1.5, 2.0):
            c = cfr_complexity(rho, lam, method="quadrature").cfr
            i2 = biparametric_fisher(rho, 2.0, lam).value
            r = renyi_entropy(rho, lam).value
            gaps = {g: abs(renyi_entropy(s, lam).value - r) for g, s in stars.items()}
            star = stars[fine]
            c_star = cfr_complexity(star, lam, method="quadrature").cfr
            i2_star = biparametric_fisher(star, 2.0, lam).value
            ok = (c >= c_star and i2 >= i2_star and gaps[fine] <= 1e-5 and gaps[fine] < gaps[coarse])
            rows.append(CheckResult(
                f"rearrangement of {rho.name} at lambda={lam:g}", ok,
                f"C {c:.6g} >= {c_star:.6g}; I {i2:.6g} >= {i2_star:.6g}; "
                f"|dR| {gaps[coarse]:.2e} -> {gaps[fine]:.2e}"))
    return rows


def _sup_distance(rho, rho_t, delta) -> float:
    width = delta**5 * math.pi
    xs = np.concatenate([np.linspace(-math.pi, 0.0, 20001), np.linspace(0.0, width, 20001)])
    return float(np.max(np.abs(rho(xs) - rho_t(xs))))


def check_near_continuity() -> list[CheckResult]:
    lam = 1.5
    values = []
    sups = []
    for delta in (0.2, 0.1, 0.05):
        rho, rho_t = near_continuity_pair(delta)
        values.append(cfr_complexity(rho_t, lam, method="quadrature").cfr)
        sups.append(_sup_distance(rho, rho_t, delta) <= delta)
    increasing = values[0] < values[1] < values[2]
    return [CheckResult("C grows as delta shrinks while sup|rho - rho~| <= delta",
                        increasing and all(sups),
                        "C = " + ", ".join(f"{v:.6g}" for v in values))]


def check_hydrogenic_paths() -> list[CheckResult]:
    cases = [("ground", QuantumNumbers(1, 0, 0), lam, cfr_ground_closed(lam)) for lam in (1.2, 1.5, 2.0, 3.0)]
    cases += [(f"circular n={n}", QuantumNumbers(n, n - 1, n - 1), lam, cfr_circular_closed(n, lam))
              for n in (1, 2, 3) for lam in (1.25, 2.0)]
    cases += [(f"ns n={n}", QuantumNumbers(n, 0, 0), 2.0, cfr_ns_closed(n, 2.0)) for n in (1, 2, 3)]
    worst, where = 0.0, ""
    for label, qn, lam, closed in cases:
        dev = _rel(cfr_numeric(qn, lam).cfr, closed)
        if dev >= worst:
            worst, where = dev, f"{label}, lambda={lam:g}"
    return [CheckResult(f"closed form vs quadrature over {len(cases)} cases", worst <= 1e-6,
                        f"max relative difference {worst:.2e} ({where})")]


def check_ground_reduction() -> list[CheckResult]:
    lam = 2.0
    p = phi0(Phi0Request(2, 0, [0] * 4, [1] * 4, [1 / lam] * 4))
    g = g_function(1, 0, lam)
    rows = [CheckResult("Phi_0 reduction for the ground state", p == 2.0, f"value {p!r}"),
            CheckResult("G(1,0,lambda) = 2 (2 lambda - 1)^-2", g == 2 * (2 * lam - 1) ** -2, f"value {g!r}")]
    worst = max(_rel(cfr_ns_closed(1, x), cfr_ground_closed(x)) for x in (1.5, 2.0, 2.5))
    rows.append(CheckResult("ns closed form at n=1 equals the ground-state form", worst <= 1e-13,
                            f"max relative difference {worst:.2e}"))
    return rows


def check_charge_independence() -> list[CheckResult]:
    rows = []
    for state in [(1, 0, 0), (2, 1, 1), (3, 1, 0)]:
        vals = [cfr_numeric(QuantumNumbers(*state, Z=z), 1.5).cfr for z in (1.0, 2.0, 5.0)]
        spread = max(vals) / min(vals) - 1
        rows.append(CheckResult(f"C independent of Z for {state}", spread <= 1e-7,
                                f"C = {vals[0]:.12g}, spread {spread:.2e}"))
    return rows


SUITES: dict[str, list[Callable[[], list[CheckResult]]]] = {
    "bounds": [check_minimizers, check_lower_bound, check_shannon_limit],
    "scaling": [check_scaling],
    "replication": [check_replication],
    "rearrangement": [check_rearrangement],
    "near-continuity": [check_near_continuity],
    "hydrogenic": [check_hydrogenic_paths, check_ground_reduction, check_charge_independence],
}


def run_suite(name: str = "all") -> list[CheckResult]:
    if name == "all":
        checks = [c for suite in SUITES.values() for c in suite]
    elif name in SUITES:
        checks = SUITES[name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    out = []
    for check in checks:
        out.extend(check())
    return out

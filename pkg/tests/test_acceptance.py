"""Acceptance criteria 1-10, one test per criterion at its stated tolerance.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and also when the module is run directly.
"""
import math

import numpy as np
import pytest

from fisher_renyi import (
    GeneralizedGaussian,
    HydrogenicDensity,
    QuantumNumbers,
    beta_density,
    biparametric_fisher,
    cfr_circular_closed,
    cfr_complexity,
    cfr_ground_closed,
    cfr_ns_closed,
    cfr_numeric,
    gaussian,
    near_continuity_pair,
    normalization_D,
    rearrange_decreasing_1d,
    renyi_entropy,
    replicate_1d,
    scale_translate,
    sine_humps,
)
from fisher_renyi.hydrogenic import Phi0Request, g_function, phi0

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str):
    line = f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def rel(a, b):
    return abs(a / b - 1)


def test_criterion_01_minimizer_sharpness():
    cases = [(1.5, 1), (2.0, 1), (0.8, 1), (2.0, 3), (1.25, 3)]
    values = [cfr_complexity(GeneralizedGaussian(lam, d), lam, method="quadrature").cfr for lam, d in cases]
    worst = max(abs(c - 1) for c in values)
    record(1, "C[B_lambda] = 1", worst <= 1e-6, f"max |C - 1| = {worst:.2e} over {len(cases)} (lambda, d) pairs")


def test_criterion_02_lower_bound():
    densities = [
        gaussian(1),
        gaussian(3, sigma=0.7),
        GeneralizedGaussian(1.5, 1),
        GeneralizedGaussian(1.25, 3),
        sine_humps([(-math.pi, math.pi, 1.0)]),
        sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)]),
        sine_humps([(-3.0, 0.7, 1.0), (-2.0, 1.5, 2.0), (0.0, 0.4, 0.5)]),
        beta_density(3.0, 4.0),
        HydrogenicDensity(QuantumNumbers(1, 0, 0)),
        HydrogenicDensity(QuantumNumbers(2, 1, 0)),
    ]
    lams = (0.8, 1.25, 1.5, 2.0, 3.0)
    worst = min(cfr_complexity(rho, lam, method="quadrature").cfr for rho in densities for lam in lams)
    record(2, "C >= 1 on the battery", worst >= 1 - 1e-6,
           f"min C = {worst:.10g} over {len(densities)} x {len(lams)} pairs")


def test_criterion_03_dual_path_hydrogenic():
    cases = [(QuantumNumbers(1, 0, 0), lam, cfr_ground_closed(lam)) for lam in (1.2, 1.5, 2.0, 3.0)]
    cases += [(QuantumNumbers(n, n - 1, n - 1), lam, cfr_circular_closed(n, lam))
              for n in (1, 2, 3) for lam in (1.25, 2.0)]
    cases += [(QuantumNumbers(n, 0, 0), 2.0, cfr_ns_closed(n, 2.0)) for n in (1, 2, 3)]
    worst = max(rel(cfr_numeric(qn, lam).cfr, closed) for qn, lam, closed in cases)
    record(3, "closed form vs quadrature", worst <= 1e-6,
           f"max relative difference {worst:.2e} over {len(cases)} cases")


def test_criterion_04_ground_state_reduction():
    lam = 2.0
    p = phi0(Phi0Request(2, 0, [0] * 4, [1] * 4, [1 / lam] * 4))
    g = g_function(1, 0, lam)
    worst = max(rel(cfr_ns_closed(1, x), cfr_ground_closed(x)) for x in (1.5, 2.0, 2.5))
    ok = p == 2.0 and g == 2 * (2 * lam - 1) ** -2 and worst <= 1e-14
    record(4, "Phi_0 = 2, G(1,0,2) = 2/9, ns(n=1) = ground", ok,
           f"Phi_0 = {p!r}, G = {g!r}, max relative difference {worst:.1e}")


def test_criterion_05_scaling_invariance():
    cases = [(sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)]), 0.7),
             (HydrogenicDensity(QuantumNumbers(2, 1, 1)), np.array([0.3, -1.0, 2.0]))]
    worst_c = worst_f = worst_n = 0.0
    for rho, b in cases:
        for lam in (1.5, 2.0):
            base = cfr_complexity(rho, lam, method="quadrature")
            e = rho.dim * (lam - 1) + 2
            for a in (0.5, 2.0, 3.0):
                t = cfr_complexity(scale_translate(rho, a, b), lam, method="quadrature")
                worst_c = max(worst_c, rel(t.cfr, base.cfr))
                worst_f = max(worst_f, rel(t.fisher_lambda.value, a**e * base.fisher_lambda.value))
                worst_n = max(worst_n, rel(t.renyi_power.value, a**-e * base.renyi_power.value))
    ok = max(worst_c, worst_f, worst_n) <= 1e-7
    record(5, "scaling and translation", ok,
           f"C {worst_c:.1e}, F~ exponent {worst_f:.1e}, N exponent {worst_n:.1e}")


def test_criterion_06_replication():
    rho = sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)])
    lam = 1.5
    base = cfr_complexity(rho, lam, method="quadrature")
    details, ok = [], True
    for n in (2, 3):
        rep = cfr_complexity(replicate_1d(rho, n), lam, method="quadrature")
        ratio = rep.cfr / base.cfr
        f_dev = rel(rep.fisher_lambda.value / base.fisher_lambda.value, n ** ((3 - lam) / 2))
        n_dev = rel(rep.renyi_power.value / base.renyi_power.value, n ** ((lam + 1) / 2))
        ok &= abs(ratio / n**2 - 1) <= 1e-4 and max(f_dev, n_dev) <= 1e-5
        details.append(f"n={n}: ratio {ratio:.6f}, exponent gaps {f_dev:.1e}/{n_dev:.1e}")
    record(6, "replication law", ok, "; ".join(details))


def test_criterion_07_rearrangement():
    densities = [
        sine_humps([(0.0, 1.0, 1.0), (1.5, 2.0, 0.6)]),
        sine_humps([(-3.0, 0.7, 1.0), (-2.0, 1.5, 2.0), (0.0, 0.4, 0.5)]),
        beta_density(2.5, 5.0),
    ]
    ok, worst_gap, min_margin = True, 0.0, math.inf
    for rho in densities:
        coarse, fine = rearrange_decreasing_1d(rho, 1024), rearrange_decreasing_1d(rho, 4096)
        for lam in (1.5, 2.0):
            c = cfr_complexity(rho, lam, method="quadrature").cfr
            c_star = cfr_complexity(fine, lam, method="quadrature").cfr
            i2 = biparametric_fisher(rho, 2.0, lam).value
            i2_star = biparametric_fisher(fine, 2.0, lam).value
            r = renyi_entropy(rho, lam).value
            gap_c = abs(renyi_entropy(coarse, lam).value - r)
            gap_f = abs(renyi_entropy(fine, lam).value - r)
            ok &= c >= c_star and i2 >= i2_star and gap_f <= 1e-5 and gap_f < gap_c
            worst_gap = max(worst_gap, gap_f)
            min_margin = min(min_margin, c / c_star - 1)
    record(7, "rearrangement monotonicity", ok,
           f"min C/C* - 1 = {min_margin:.3g}, max |R - R*| = {worst_gap:.1e} at 4096 cells (refines 1024)")


def test_criterion_08_near_continuity():
    lam = 1.5
    values, sups = [], []
    for delta in (0.2, 0.1, 0.05):
        rho, rho_t = near_continuity_pair(delta)
        values.append(cfr_complexity(rho_t, lam, method="quadrature").cfr)
        width = delta**5 * math.pi
        xs = np.concatenate([np.linspace(-math.pi, 0.0, 20001), np.linspace(0.0, width, 20001)])
        sups.append(float(np.max(np.abs(rho(xs) - rho_t(xs)))) / delta)
    ok = values[0] < values[1] < values[2] and max(sups) <= 1
    record(8, "near-continuity failure", ok,
           "C = " + ", ".join(f"{v:.6g}" for v in values) + f"; max sup/delta = {max(sups):.3f}")


def test_criterion_09_charge_independence():
    worst = 0.0
    for state in [(1, 0, 0), (2, 1, 1), (3, 1, 0)]:
        vals = [cfr_numeric(QuantumNumbers(*state, Z=z), 1.5).cfr for z in (1.0, 2.0, 5.0)]
        worst = max(worst, max(vals) / min(vals) - 1)
    record(9, "Z-independence", worst <= 1e-7, f"max spread {worst:.1e}")


def test_criterion_10_shannon_limit():
    limit = 2 * math.pi * 3 * math.e
    dev = rel(normalization_D(1.001, 3), limit)
    c = cfr_complexity(gaussian(1), 1.0, method="quadrature").cfr
    record(10, "lambda -> 1 continuity", dev < 1e-2 and abs(c - 1) <= 1e-8,
           f"D(1.001)/(2 pi d e) - 1 = {dev:.2e}; Gaussian C at lambda=1 = {c:.15g}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

"""Special-function kernel: Gamma/Pochhammer/binomials, Laguerre and
Gegenbauer polynomials, and the angular density |Y_lm|^2.

All polynomial evaluations use forward three-term recurrences.  The degrees
needed here are small (about 10 or less), so recurrence round-off is not an issue.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "log_gamma",
    "pochhammer",
    "binomial_general",
    "laguerre",
    "laguerre_zeros",
    "gegenbauer",
    "gegenbauer_zeros",
    "OrthonormalLaguerre",
    "laguerre_eval",
    "AngularDensity",
    "angular_density_eval",
]


def log_gamma(x: float) -> float:
    """Return ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1."""
    if k < 0:
        raise DomainError(f"pochhammer requires k >= 0, got {k}")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def binomial_general(top: float, bottom: int) -> float:
    """Generalized binomial coefficient C(top, bottom) for integer ``bottom``.

    Zero for negative ``bottom`` and for a non-negative integer ``top`` below
    ``bottom``.
    """
    if bottom < 0:
        return 0.0
    if float(top).is_integer() and top >= 0 and bottom > top:
        return 0.0
    out = 1.0
    for i in range(bottom):
        out *= (top - i) / (i + 1)
    return out


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^(alpha)(x) (standard normalization).

    Negative ``n`` gives the zero polynomial.
    """
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def laguerre_zeros(n: int, alpha: float) -> np.ndarray:
    """Zeros of L_n^(alpha), ascending, from the Jacobi matrix eigenvalues."""
    if n <= 0:
        return np.zeros(0)
    k = np.arange(n)
    diag = 2 * k + alpha + 1
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    jac = np.diag(diag) - np.diag(off, 1) - np.diag(off, -1)
    return np.sort(np.linalg.eigvalsh(jac))


def gegenbauer(n: int, mu: float, x):
    """Gegenbauer polynomial C_n^(mu)(x); negative ``n`` gives zero."""
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(1, n + 1):
        prev, cur = cur, (2 * (mu + (k - 1)) * x * cur - (2 * mu + (k - 2)) * prev) / k
    return cur


def gegenbauer_zeros(n: int, mu: float) -> np.ndarray:
    """Zeros of C_n^(mu) in (-1, 1), ascending."""
    if n <= 0:
        return np.zeros(0)
    k = np.arange(1, n, dtype=float)
    off = np.sqrt(k * (k + 2 * mu - 1) / (4 * (k + mu) * (k + mu - 1)))
    jac = np.diag(off, 1) + np.diag(off, -1)
    return np.sort(np.linalg.eigvalsh(jac))


@dataclass(frozen=True)
class OrthonormalLaguerre:
    """L_n^(alpha) scaled to unit norm under the weight x^alpha e^-x on [0, inf)."""

    degree: int
    alpha: float

    def __post_init__(self):
        if self.alpha <= -1:
            raise DomainError(f"Laguerre parameter must exceed -1, got {self.alpha}")

    @property
    def norm_factor(self) -> float:
        """sqrt(n! / Gamma(n + alpha + 1)); zero for a negative degree."""
        if self.degree < 0:
            return 0.0
        n = self.degree
        return math.exp(0.5 * (math.lgamma(n + 1) - math.lgamma(n + self.alpha + 1)))

    def __call__(self, x):
        return self.norm_factor * laguerre(self.degree, self.alpha, x)

    def derivative(self, x):
        # d/dx L_n^(a) = -L_{n-1}^(a+1)
        return -self.norm_factor * laguerre(self.degree - 1, self.alpha + 1, x)

    def zeros(self) -> np.ndarray:
        return laguerre_zeros(self.degree, self.alpha)


def laguerre_eval(poly: OrthonormalLaguerre, x):
    """Value and x-derivative of an orthonormal Laguerre polynomial."""
    if np.any(np.asarray(x) < 0):
        raise DomainError("laguerre_eval requires x >= 0")
    return poly(x), poly.derivative(x)


@dataclass(frozen=True)
class AngularDensity:
    """Theta_{l,m}(theta) = |Y_{l,m}(theta, phi)|^2, independent of phi."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or abs(self.m) > self.l:
            raise DomainError(f"need l >= 0 and |m| <= l, got l={self.l}, m={self.m}")

    @property
    def prefactor(self) -> float:
        l, am = self.l, abs(self.m)
        log_c = (
            math.log(l + 0.5)
            + math.lgamma(l - am + 1)
            - math.lgamma(l + am + 1)
            + 2 * math.lgamma(am + 0.5)
            - (1 - 2 * am) * math.log(2.0)
            - 2 * math.log(math.pi)
        )
        return math.exp(log_c)

    def _gegenbauer_args(self):
        am = abs(self.m)
        return self.l - am, am + 0.5

    def __call__(self, theta):
        return self.evaluate(theta)[0]

    def evaluate(self, theta):
        """Return (Theta(theta), dTheta/dtheta)."""
        theta = np.asarray(theta, dtype=float)
        am = abs(self.m)
        deg, mu = self._gegenbauer_args()
        s, c = np.sin(theta), np.cos(theta)
        g = gegenbauer(deg, mu, c)
        dg = 2 * mu * gegenbauer(deg - 1, mu + 1, c)  # d/dx C_n^mu = 2 mu C_{n-1}^{mu+1}
        pref = self.prefactor
        value = pref * s ** (2 * am) * g * g
        dpoly = -2 * g * dg * s ** (2 * am + 1)
        if am:
            dpoly = dpoly + 2 * am * s ** (2 * am - 1) * c * g * g
        return value, pref * dpoly

    def nodes(self) -> np.ndarray:
        """Polar angles in (0, pi) where Theta vanishes, ascending."""
        deg, mu = self._gegenbauer_args()
        return np.sort(np.arccos(gegenbauer_zeros(deg, mu)))


def angular_density_eval(ang: AngularDensity, theta):
    """Theta_{l,m}(theta) and its theta-derivative."""
    theta_arr = np.asarray(theta, dtype=float)
    if np.any(theta_arr < 0) or np.any(theta_arr > math.pi):
        raise DomainError("theta must lie in [0, pi]")
    return ang.evaluate(theta_arr)

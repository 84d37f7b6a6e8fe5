"""Probability densities and the transformations the complexity properties
are stated for.

Three concrete shapes cover everything the package integrates:

* ``Density1D``: a density on the line, given piecewise between cut points;
* ``RadialDensity``: rho(x) = f(|x - c|) in any dimension;
* ``SeparableDensity``: rho(r, theta) = R(r) * Theta(theta) in three dimensions.

Each is built from ``Profile`` objects (a one-variable function with its
derivative, cut into smooth pieces).  Functionals integrate profiles piece by
piece, so every quantity reduces to one-dimensional quadrature.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import DomainError, UnsupportedInputError
from .quadrature import QuadratureSpec, integrate

__all__ = [
    "Profile",
    "Density",
    "Density1D",
    "RadialDensity",
    "SeparableDensity",
    "GeneralizedGaussian",
    "GridDensity",
    "make_generalized_gaussian",
    "gaussian",
    "sine_humps",
    "beta_density",
    "scale_translate",
    "replicate_1d",
    "near_continuity_pair",
    "rearrange_decreasing_1d",
    "sphere_area",
]


def sphere_area(d: int) -> float:
    """Surface measure of the unit sphere S^{d-1} (2 for d = 1)."""
    return 2 * math.pi ** (d / 2) / math.gamma(d / 2)


def piece_index(cuts: np.ndarray, x, dl, dr) -> np.ndarray:
    """Index of the piece [cuts[k], cuts[k+1]] a quadrature node belongs to.

    Uses the cut nearest to the node, which is unambiguous even when ``x``
    itself has rounded onto the cut.
    """
    x = np.asarray(x, dtype=float)
    k = np.searchsorted(cuts, x)
    k = np.clip(k, 1, len(cuts) - 1)
    left, right = cuts[k - 1], cuts[k]
    nearest_left = np.abs(x - left) <= np.abs(right - x)
    # which cut the node sits next to, and on which side
    near_cut = np.where(nearest_left, k - 1, k)
    return np.where(np.asarray(dl) <= np.asarray(dr), near_cut, near_cut - 1).clip(0, len(cuts) - 2)


@dataclass(frozen=True)
class Profile:
    """A non-negative function of one variable together with its derivative.

    ``func(x) -> (value, derivative)`` is valid on [cuts[0], cuts[-1]] and
    smooth between consecutive cuts.  ``local(x, dl, dr)``, when given, returns
    the same pair but may use the exact distances ``dl``/``dr`` to the
    neighbouring cuts to resolve zeros sitting on a cut.
    """

    func: Callable
    cuts: tuple
    local: Callable | None = None
    scale: float = 1.0

    def __post_init__(self):
        cuts = tuple(float(c) for c in self.cuts)
        if len(cuts) < 2 or any(b <= a for a, b in zip(cuts[:-1], cuts[1:])):
            raise ValueError(f"cuts must be strictly increasing, got {cuts}")
        object.__setattr__(self, "cuts", cuts)

    @property
    def lo(self) -> float:
        return self.cuts[0]

    @property
    def hi(self) -> float:
        return self.cuts[-1]

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x >= self.lo) & (x <= self.hi)
        xs = np.where(inside, x, 0.5 * (self.lo + self.hi) if np.isfinite(self.hi - self.lo) else 0.0)
        v, dv = self.func(xs)
        v = np.where(inside, v, 0.0)
        dv = np.where(inside, dv, 0.0)
        return v, dv

    def eval_local(self, x, dl, dr):
        if self.local is None:
            return self.func(x)
        return self.local(x, dl, dr)

    def transform(self, slope: float, shift: float, amp: float) -> "Profile":
        """Profile of amp * f(slope * (x - shift))."""
        base = self
        inner = [shift + c / slope for c in base.cuts]
        cuts = tuple(sorted(inner))

        def func(x):
            v, dv = base.func(slope * (np.asarray(x, dtype=float) - shift))
            return amp * v, amp * slope * dv

        local = None
        if base.local is not None:
            k = abs(slope)

            def local(x, dl, dr):
                y = slope * (np.asarray(x, dtype=float) - shift)
                if slope > 0:
                    v, dv = base.local(y, k * dl, k * dr)
                else:
                    v, dv = base.local(y, k * dr, k * dl)
                return amp * v, amp * slope * dv

        return Profile(func, cuts, local, self.scale / abs(slope))

    def integrate(self, fn: Callable, spec: QuadratureSpec, weight: Callable | None = None):
        """Integrate fn(value, derivative, x) [* weight(x)] over the profile."""

        def f(x, dl, dr):
            v, dv = self.eval_local(x, dl, dr)
            out = fn(np.asarray(v, dtype=float), np.asarray(dv, dtype=float), x)
            if weight is not None:
                out = out * weight(x)
            return out

        s = spec.with_breakpoints(self.cuts[1:-1])
        return integrate(f, self.lo, self.hi, s, scale=self.scale, local=True)


class Density:
    """Base class: an evaluable d-dimensional probability density."""

    dim: int = 1

    def __call__(self, x):
        raise NotImplementedError

    def gradient(self, x):
        raise NotImplementedError

    @property
    def bounded(self) -> bool:
        raise NotImplementedError

    def closed_form_parts(self, lam: float):
        """Analytic (F~_lambda, N_lambda) when the density has them; ``None`` otherwise."""
        return None


def _points(x, d):
    x = np.asarray(x, dtype=float)
    if d == 1 and (x.ndim == 0 or x.shape[-1] != 1):
        x = x[..., None]
    if x.shape[-1] != d:
        raise ValueError(f"points must have trailing dimension {d}")
    return x


class Density1D(Density):
    dim = 1

    def __init__(self, profile: Profile, name: str = ""):
        self.profile = profile
        self.name = name

    @property
    def support(self) -> tuple[float, float]:
        return self.profile.lo, self.profile.hi

    @property
    def bounded(self) -> bool:
        return bool(np.isfinite(self.profile.lo) and np.isfinite(self.profile.hi))

    def __call__(self, x):
        return self.profile(x)[0]

    def gradient(self, x):
        return self.profile(x)[1]

    def __repr__(self):
        return f"Density1D({self.name or 'anonymous'}, support={self.support})"


class RadialDensity(Density):
    """rho(x) = f(|x - center|) in ``dim`` dimensions; ``profile`` lives on [0, R]."""

    def __init__(self, dim: int, profile: Profile, center=None, name: str = ""):
        if profile.lo != 0.0:
            raise ValueError("a radial profile must start at r = 0")
        self.dim = dim
        self.profile = profile
        self.center = np.zeros(dim) if center is None else np.asarray(center, dtype=float).reshape(dim)
        self.name = name

    @property
    def radius(self) -> float:
        return self.profile.hi

    @property
    def bounded(self) -> bool:
        return bool(np.isfinite(self.radius))

    def __call__(self, x):
        x = _points(x, self.dim)
        r = np.linalg.norm(x - self.center, axis=-1)
        return self.profile(r)[0]

    def gradient(self, x):
        x = _points(x, self.dim)
        rel = x - self.center
        r = np.linalg.norm(rel, axis=-1)
        _, dv = self.profile(r)
        with np.errstate(invalid="ignore", divide="ignore"):
            unit = np.where(r[..., None] > 0, rel / r[..., None], 0.0)
        g = dv[..., None] * unit
        return g[..., 0] if self.dim == 1 else g

    def as_1d(self) -> Density1D:
        """The same density viewed as a ``Density1D`` (only for dim == 1)."""
        if self.dim != 1:
            raise UnsupportedInputError("only one-dimensional radial densities can be unfolded")
        prof = self.profile
        c = float(self.center[0])
        inner = prof.cuts[1:]
        cuts = tuple([c - r for r in reversed(inner)] + [c] + [c + r for r in inner])

        def func(x):
            y = np.asarray(x, dtype=float) - c
            v, dv = prof.func(np.abs(y))
            return v, np.sign(y) * dv

        def local(x, dl, dr):
            y = np.asarray(x, dtype=float) - c
            neg = y < 0
            if np.all(~neg):
                v, dv = prof.eval_local(np.abs(y), dl, dr)
                return v, dv
            if np.all(neg):
                v, dv = prof.eval_local(np.abs(y), dr, dl)
                return v, -dv
            v1, d1 = prof.eval_local(np.abs(y), np.where(neg, dr, dl), np.where(neg, dl, dr))
            return v1, np.where(neg, -d1, d1)

        return Density1D(Profile(func, cuts, local, prof.scale), name=self.name)

    def __repr__(self):
        return f"RadialDensity({self.name or 'anonymous'}, dim={self.dim}, radius={self.radius})"


class SeparableDensity(Density):
    """rho = R(|x - c|) * Theta(theta) in three dimensions, Theta independent of phi."""

    dim = 3

    def __init__(self, radial: Profile, angular: Profile, center=None, name: str = ""):
        if radial.lo != 0.0 or angular.lo != 0.0 or not math.isclose(angular.hi, math.pi):
            raise ValueError("radial profile must start at 0 and the angular one span [0, pi]")
        self.radial = radial
        self.angular = angular
        self.center = np.zeros(3) if center is None else np.asarray(center, dtype=float).reshape(3)
        self.name = name

    @property
    def bounded(self) -> bool:
        return bool(np.isfinite(self.radial.hi))

    def _spherical(self, x):
        x = _points(x, 3)
        rel = x - self.center
        r = np.linalg.norm(rel, axis=-1)
        with np.errstate(invalid="ignore", divide="ignore"):
            cos_t = np.where(r > 0, rel[..., 2] / r, 1.0)
        theta = np.arccos(np.clip(cos_t, -1.0, 1.0))
        phi = np.arctan2(rel[..., 1], rel[..., 0])
        return r, theta, phi

    def __call__(self, x):
        r, theta, _ = self._spherical(x)
        return self.radial(r)[0] * self.angular(theta)[0]

    def gradient(self, x):
        r, theta, phi = self._spherical(x)
        R, dR = self.radial(r)
        T, dT = self.angular(theta)
        st, ct = np.sin(theta), np.cos(theta)
        cp, sp = np.cos(phi), np.sin(phi)
        e_r = np.stack([st * cp, st * sp, ct], axis=-1)
        e_t = np.stack([ct * cp, ct * sp, -st], axis=-1)
        with np.errstate(invalid="ignore", divide="ignore"):
            tang = np.where(r > 0, R * dT / r, 0.0)
        return (dR * T)[..., None] * e_r + tang[..., None] * e_t

    def __repr__(self):
        return f"SeparableDensity({self.name or 'anonymous'})"


# ---------------------------------------------------------------------------
# generalized Gaussians


def _gg_constants(lam: float, d: int) -> tuple[float, float]:
    """(A_lambda, C_lambda) for the extremal density family."""
    if lam > 1:
        log_a = 0.5 * d * math.log(math.pi) + math.lgamma(lam / (lam - 1)) - math.lgamma(d / 2 + lam / (lam - 1))
    else:
        k = 1 / (1 - lam)
        log_a = 0.5 * d * math.log(math.pi) + math.lgamma(k - d / 2) - math.lgamma(k)
    a = math.exp(log_a)
    c = math.exp(-2 * (lam - 1) / (d * (lam - 1) + 2) * log_a)
    return a, c


class GeneralizedGaussian(RadialDensity):
    """B_lambda(x) = (C -/+ |x|^2)_+^{1/(lambda-1)}, the minimizers of C_FR.

    Compactly supported (radius sqrt(C)) for lambda > 1, heavy-tailed for lambda < 1.
    """

    def __init__(self, lam: float, dim: int, center=None):
        lam = float(lam)
        if lam == 1:
            raise DomainError("the generalized Gaussian family excludes lambda = 1")
        if lam < 1 and not lam > dim / (dim + 2):
            raise DomainError(f"lambda < 1 requires lambda > d/(d+2) = {dim}/{dim + 2} for a normalizable density")
        if lam <= 0:
            raise DomainError("lambda must be positive")
        self.lam = lam
        self.A, self.C = _gg_constants(lam, dim)
        expo = 1.0 / (lam - 1)
        C = self.C
        sign = -1.0 if lam > 1 else 1.0

        def func(r):
            r = np.asarray(r, dtype=float)
            base = C + sign * r * r
            with np.errstate(invalid="ignore", divide="ignore"):
                pos = base > 0
                b = np.where(pos, base, 1.0)
                v = np.where(pos, b**expo, 0.0)
                dv = np.where(pos, expo * b ** (expo - 1) * 2 * sign * r, 0.0)
            return v, dv

        if lam > 1:
            radius = math.sqrt(C)
            cuts = (0.0, radius)

            def local(r, dl, dr):
                # C - r^2 = (R - r)(R + r) with R - r = dr exactly
                r = np.asarray(r, dtype=float)
                gap = dr * (2 * radius - dr)
                with np.errstate(invalid="ignore", divide="ignore"):
                    v = gap**expo
                    dv = -2 * expo * gap ** (expo - 1) * r
                return np.where(gap > 0, v, 0.0), np.where(gap > 0, dv, 0.0)

            prof = Profile(func, cuts, local, scale=radius)
        else:
            # tail decays like r^{-2/(1-lam)}; map it over the bulk width
            prof = Profile(func, (0.0, math.inf), None, scale=math.sqrt(C))
        super().__init__(dim, prof, center, name=f"B_{lam:g} (d={dim})")

    def __repr__(self):
        return f"GeneralizedGaussian(lam={self.lam}, dim={self.dim}, C={self.C:.6g})"


def make_generalized_gaussian(lam, d: int) -> GeneralizedGaussian:
    """Minimizer density B_lambda in ``d`` dimensions.

    ``lam`` may be a float or any object with a ``value`` attribute.
    """
    value = float(getattr(lam, "value", lam))
    return GeneralizedGaussian(value, d)


def gaussian(dim: int = 1, sigma: float = 1.0, center=None) -> RadialDensity:
    """Isotropic normal density with per-coordinate standard deviation ``sigma``."""
    if sigma <= 0:
        raise DomainError("sigma must be positive")
    norm = (2 * math.pi * sigma * sigma) ** (-dim / 2)

    def func(r):
        r = np.asarray(r, dtype=float)
        v = norm * np.exp(-0.5 * (r / sigma) ** 2)
        return v, -r / (sigma * sigma) * v

    prof = Profile(func, (0.0, math.inf), None, scale=2 * sigma)
    return RadialDensity(dim, prof, center, name=f"gaussian(sigma={sigma:g}, d={dim})")


# ---------------------------------------------------------------------------
# one-dimensional test densities


def sine_humps(humps: Sequence[tuple[float, float, float]], normalize: bool = True,
               name: str = "") -> Density1D:
    """Sum of sin^2 humps: height * sin^2(pi (x - start) / width) on [start, start + width].

    Humps must not overlap.  Gaps between them are zero.  With ``normalize`` the
    heights are rescaled to unit total mass (each hump carries height*width/2).
    """
    humps = sorted((float(s), float(w), float(h)) for s, w, h in humps)
    for (s0, w0, _), (s1, _, _) in zip(humps[:-1], humps[1:]):
        if s0 + w0 > s1 + 1e-15 * max(1.0, abs(s1)):
            raise ValueError("humps overlap")
    mass = sum(h * w / 2 for _, w, h in humps)
    k = 1.0 / mass if normalize else 1.0
    starts = np.array([s for s, _, _ in humps])
    widths = np.array([w for _, w, _ in humps])
    heights = np.array([h * k for _, _, h in humps])
    cut_list: list[float] = []
    for s, w, _ in humps:
        for c in (s, s + w):
            if not cut_list or c > cut_list[-1]:
                cut_list.append(c)
    cuts = np.array(cut_list)
    # hump id of each piece (-1 for gaps)
    piece_hump = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        mid = 0.5 * (a + b)
        j = np.searchsorted(starts, mid, side="right") - 1
        piece_hump.append(j if j >= 0 and mid < starts[j] + widths[j] else -1)
    piece_hump = np.array(piece_hump)

    def _eval(j, s_left, s_right):
        valid = j >= 0
        jj = np.where(valid, j, 0)
        w, h = widths[jj], heights[jj]
        use_left = s_left <= s_right
        s = np.where(use_left, s_left, s_right)
        v = h * np.sin(np.pi * s / w) ** 2
        dv = h * (np.pi / w) * np.sin(2 * np.pi * s / w) * np.where(use_left, 1.0, -1.0)
        return np.where(valid, v, 0.0), np.where(valid, dv, 0.0)

    def func(x):
        x = np.asarray(x, dtype=float)
        j = np.searchsorted(starts, x, side="right") - 1
        inside = (j >= 0) & (x <= starts[np.maximum(j, 0)] + widths[np.maximum(j, 0)])
        j = np.where(inside, j, -1)
        s_left = x - starts[np.maximum(j, 0)]
        s_right = widths[np.maximum(j, 0)] - s_left
        return _eval(j, s_left, s_right)

    def local(x, dl, dr):
        p = piece_index(cuts, x, dl, dr)
        return _eval(piece_hump[p], np.asarray(dl, dtype=float), np.asarray(dr, dtype=float))

    scale = float(widths.max())
    return Density1D(Profile(func, tuple(cuts), local, scale), name=name or "sine_humps")


def beta_density(a: float, b: float) -> Density1D:
    """Beta(a, b) density on [0, 1]; a, b > 1 so that it vanishes at both ends."""
    if a <= 1 or b <= 1:
        raise DomainError("beta_density requires a > 1 and b > 1")
    log_norm = math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
    norm = math.exp(log_norm)

    def _eval(x, y):
        v = norm * x ** (a - 1) * y ** (b - 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            dv = v * ((a - 1) / x - (b - 1) / y)
        dv = np.where(v > 0, dv, 0.0)
        return v, dv

    def func(x):
        x = np.asarray(x, dtype=float)
        return _eval(x, 1.0 - x)

    def local(x, dl, dr):
        return _eval(np.asarray(dl, dtype=float), np.asarray(dr, dtype=float))

    return Density1D(Profile(func, (0.0, 1.0), local, 1.0), name=f"beta({a:g},{b:g})")


# ---------------------------------------------------------------------------
# transformations


def scale_translate(rho: Density, a: float, b=0.0) -> Density:
    """rho_{a,b}(x) = |a|^d rho(a (x - b)); stays normalized for any a != 0."""
    if a == 0:
        raise DomainError("scale factor a must be nonzero")
    d = rho.dim
    b = np.broadcast_to(np.asarray(b, dtype=float), (d,)).copy()
    amp = abs(a) ** d
    if isinstance(rho, Density1D):
        prof = rho.profile.transform(a, float(b[0]), amp)
        return Density1D(prof, name=f"{rho.name}|a={a:g},b={b[0]:g}")
    if isinstance(rho, RadialDensity):
        prof = rho.profile.transform(abs(a), 0.0, amp)
        center = b + rho.center / a
        out = RadialDensity(d, prof, center, name=f"{rho.name}|a={a:g}")
        return out
    if isinstance(rho, SeparableDensity):
        radial = rho.radial.transform(abs(a), 0.0, amp)
        angular = rho.angular if a > 0 else rho.angular.transform(-1.0, math.pi, 1.0)
        return SeparableDensity(radial, angular, b + rho.center / a, name=f"{rho.name}|a={a:g}")
    raise UnsupportedInputError(f"cannot transform {type(rho).__name__}")


def replicate_1d(rho: Density, n: int) -> Density1D:
    """n disjoint copies of rho, each squeezed by sqrt(n) and scaled by 1/sqrt(n).

    Copies are laid left to right with a gap of one squeezed support width.
    """
    if n < 1:
        raise DomainError("replication count must be >= 1")
    if isinstance(rho, RadialDensity) and rho.dim == 1:
        rho = rho.as_1d()
    if not isinstance(rho, Density1D):
        raise UnsupportedInputError("replication is defined for one-dimensional densities")
    if not rho.bounded:
        raise UnsupportedInputError("replication needs a density with bounded support")
    base = rho.profile
    lo, hi = base.lo, base.hi
    root = math.sqrt(n)
    width = (hi - lo) / root
    shifts = [2 * width * m for m in range(n)]
    copies = [base.transform(root, s, 1.0 / root) for s in shifts]
    cuts = tuple(c for p in copies for c in p.cuts)
    starts = np.array([p.lo for p in copies])
    cut_arr = np.array(cuts)
    # piece -> copy index, or -1 in the gaps
    owner = []
    for a_, b_ in zip(cut_arr[:-1], cut_arr[1:]):
        mid = 0.5 * (a_ + b_)
        j = int(np.searchsorted(starts, mid, side="right") - 1)
        owner.append(j if mid <= copies[j].hi else -1)
    owner = np.array(owner)

    def func(x):
        x = np.asarray(x, dtype=float)
        v = np.zeros_like(x)
        dv = np.zeros_like(x)
        for p in copies:
            pv, pd = p(x)
            v = v + pv
            dv = dv + pd
        return v, dv

    def local(x, dl, dr):
        x = np.asarray(x, dtype=float)
        piece = piece_index(cut_arr, x, dl, dr)
        who = owner[piece]
        v = np.zeros_like(x)
        dv = np.zeros_like(x)
        for j, p in enumerate(copies):
            m = who == j
            if m.any():
                pv, pd = p.eval_local(x[m], np.asarray(dl)[m], np.asarray(dr)[m])
                v[m] = pv
                dv[m] = pd
        return v, dv

    prof = Profile(func, cuts, local, base.scale / root)
    return Density1D(prof, name=f"{rho.name}x{n}")


def near_continuity_pair(delta: float) -> tuple[Density1D, Density1D]:
    """The delta-neighbouring pair showing C_FR is not near continuous.

    rho = (2/pi) sin^2 x on [-pi, 0];
    rho~ = 2/(pi (1 + delta^6)) * {sin^2 x on [-pi, 0]; delta sin^2(x / delta^5) on (0, delta^5 pi]}.
    """
    if not 0 < delta < 1:
        raise DomainError("delta must lie in (0, 1)")
    rho = sine_humps([(-math.pi, math.pi, 2 / math.pi)], normalize=False, name="sin2")
    k = 2 / (math.pi * (1 + delta**6))
    width = delta**5 * math.pi
    rho_t = sine_humps([(-math.pi, math.pi, k), (0.0, width, k * delta)], normalize=False,
                       name=f"sin2+osc(delta={delta:g})")
    return rho, rho_t


# ---------------------------------------------------------------------------
# symmetric decreasing rearrangement


class GridDensity(Density1D):
    """Density1D backed by monotone cubic interpolation of tabulated values."""

    def __init__(self, knots: np.ndarray, values: np.ndarray, name: str = ""):
        self.knots = np.asarray(knots, dtype=float)
        self.values = np.asarray(values, dtype=float)
        interp = PchipInterpolator(self.knots, self.values, extrapolate=False)
        total = float(interp.integrate(self.knots[0], self.knots[-1]))
        self.values = self.values / total
        self._interp = PchipInterpolator(self.knots, self.values, extrapolate=False)
        self._deriv = self._interp.derivative()
        interp_v, interp_d = self._interp, self._deriv

        def func(x):
            x = np.asarray(x, dtype=float)
            v = np.nan_to_num(interp_v(x))
            d = np.nan_to_num(interp_d(x))
            return np.maximum(v, 0.0), d

        width = self.knots[-1] - self.knots[0]
        super().__init__(Profile(func, tuple(self.knots), None, width), name=name)

    def to_csv(self, path, points: int | None = None) -> None:
        """Write (x, rho(x)) rows; at the knots unless ``points`` is given."""
        xs = self.knots if points is None else np.linspace(self.knots[0], self.knots[-1], points)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["x", "rho"])
            for x, v in zip(xs, self(xs)):
                w.writerow([f"{x:.12g}", f"{v:.12g}"])


def _level_measure(values: np.ndarray, h: float, levels: np.ndarray, chunk: int = 512) -> np.ndarray:
    """|{f > t}| for the piecewise-linear interpolant of ``values`` (spacing h)."""
    lo = np.minimum(values[:-1], values[1:])
    hi = np.maximum(values[:-1], values[1:])
    span = hi - lo
    flat = span == 0
    span = np.where(flat, 1.0, span)
    out = np.empty(len(levels))
    for start in range(0, len(levels), chunk):
        t = levels[start:start + chunk, None]
        frac = np.clip((hi - t) / span, 0.0, 1.0)
        frac = np.where(flat, (hi > t).astype(float), frac)
        out[start:start + chunk] = h * frac.sum(axis=1)
    return out


def rearrange_decreasing_1d(rho: Density, grid_size: int = 2048) -> GridDensity:
    """Symmetric decreasing rearrangement of a bounded 1-D density.

    The density is sampled on ``grid_size`` uniform cells of its support and
    replaced by its piecewise-linear interpolant f.  The distribution function
    m(t) = |{f > t}| is piecewise linear between consecutive sample values, so
    evaluating it there gives the exact rearrangement f*(m(t)/2) = t of f.
    The result is smoothed by monotone cubic interpolation.
    """
    if grid_size < 64:
        raise DomainError("grid_size must be at least 64")
    if isinstance(rho, RadialDensity) and rho.dim == 1:
        rho = rho.as_1d()
    if not isinstance(rho, Density1D) or not rho.bounded:
        raise UnsupportedInputError("rearrangement needs a one-dimensional density with bounded support")
    lo, hi = rho.support
    h = (hi - lo) / grid_size
    xs = lo + np.arange(grid_size + 1) * h
    xs[-1] = hi
    vals = np.asarray(rho(xs), dtype=float)
    levels = np.unique(vals)[::-1]  # descending
    radii = 0.5 * _level_measure(vals, h, levels)
    half = 0.5 * (hi - lo)
    # keep strictly increasing radii (flat stretches of f give repeated radii)
    keep = np.concatenate([[True], np.diff(radii) > 1e-14 * half])
    radii, levels = radii[keep], levels[keep]
    if radii[-1] < half * (1 - 1e-12):
        radii = np.append(radii, half)
        levels = np.append(levels, levels[-1])
    else:
        radii[-1] = half
    knots = np.concatenate([-radii[:0:-1], radii])
    values = np.concatenate([levels[:0:-1], levels])
    return GridDensity(knots, values, name=f"{rho.name}*")

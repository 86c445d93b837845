"""Max-modulus growth profiles, the (degree, conductor) fit, and the
functional-equation invariant arithmetic.

Profile semantics: the growth scale Gamma(r)^d / alpha^r of these series
lives where the continuation is Gamma-dominated, in a narrow arc around
the negative real axis of the circle |s| = r. Toward the imaginary axis
the reflection factors pick up an extra exp(pi |Im s| / 2) per gamma
factor that swamps the invariant being measured, so the scan window caps
both the angle from pi (0.2 rad) and the height |Im s| <= 1/2.
max_modulus_profile samples that arc at equispaced angles, refines the
argmax by golden section to an angular step below 1e-6, and reports log
of the max. The fit recovers d as the integer power of log Gamma(r) and
alpha from the residual slope in log space.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import EvaluationError, NonIntegerDegreeError, SchemaError
from .gammafn import log_gamma
from .series import GeneralDirichletSeries, evaluate

_TWO_PI = 2.0 * math.pi

ANGLE_CAP = 0.2  # arc half-width cap, radians
HEIGHT_CAP = 0.5  # cap on |Im s| over the scanned arc
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class FunctionalEquationData:
    """Completion data Q^s prod Gamma(alpha_i s + beta_i) with root number w."""

    q_scale: float
    gamma_factors: tuple  # of (alpha: float, beta: complex)
    w: complex = 1.0 + 0.0j

    def __post_init__(self):
        if not self.q_scale > 0.0:
            raise SchemaError("Q must be positive")
        if abs(abs(complex(self.w)) - 1.0) > 1e-12:
            raise SchemaError("|w| must equal 1 to 1e-12")
        for i, (alpha, beta) in enumerate(self.gamma_factors):
            if alpha < 0.0:
                raise SchemaError(f"gamma_factors[{i}]: alpha must be >= 0")
            if complex(beta).real < 0.0:
                raise SchemaError(f"gamma_factors[{i}]: Re(beta) must be >= 0")


@dataclass(frozen=True)
class ProfileSample:
    r: float
    log_max: float
    argmax_angle: float


@dataclass(frozen=True)
class GrowthProfile:
    samples: tuple  # of ProfileSample, r strictly increasing
    angular_resolution: int
    skipped_points: tuple = ()  # (r, angle) pairs excluded near the pole


@dataclass(frozen=True)
class GrowthInvariants:
    d: int
    alpha: float
    q: float
    fit_residual: float
    r_grid: tuple

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("degree must be a positive integer")
        if not (self.alpha > 0.0 and self.q > 0.0):
            raise ValueError("alpha and q must be positive")
        if abs(self.alpha * self.q - _TWO_PI**self.d) > 1e-9 * _TWO_PI**self.d:
            raise ValueError("alpha * q must equal (2 pi)^d")


def _arc_half_width(r: float) -> float:
    return math.asin(min(HEIGHT_CAP, r * math.sin(ANGLE_CAP)) / r)


def max_modulus_profile(
    series: GeneralDirichletSeries,
    r_grid,
    angular_resolution: int = 720,
    tol: float = 1e-10,
) -> GrowthProfile:
    """Profile log max |F| over the growth arc of each circle |s| = r.

    Radii must be >= 3/2 (inside that the pole at s=1 contaminates every
    circle) and strictly increasing. Sample points that land within 1e-6
    of s=1 are skipped and recorded.
    """
    radii = [float(r) for r in r_grid]
    if not radii:
        raise ValueError("r_grid must be non-empty")
    if any(r < 1.5 for r in radii):
        raise ValueError("every radius must be >= 3/2")
    if sorted(set(radii)) != radii:
        raise ValueError("r_grid must be strictly increasing")
    if angular_resolution < 360:
        raise ValueError("angular_resolution must be >= 360")

    samples = []
    skipped = []
    for r in radii:

        def modulus(theta: float) -> float:
            z = r * cmath.exp(1j * theta)
            return abs(evaluate(series, z, tol).value)

        half = _arc_half_width(r)
        lo, hi = math.pi - half, math.pi + half
        step = (hi - lo) / (angular_resolution - 1)
        best_val = -math.inf
        best_theta = math.pi
        for j in range(angular_resolution):
            theta = lo + j * step
            z = r * cmath.exp(1j * theta)
            if abs(z - 1.0) <= 1e-6:
                skipped.append((r, theta))
                continue
            v = modulus(theta)
            if v > best_val:
                best_val, best_theta = v, theta

        # golden-section refinement of the bracketed maximum
        a = max(lo, best_theta - step)
        b = min(hi, best_theta + step)
        c = b - _GOLDEN * (b - a)
        d_ = a + _GOLDEN * (b - a)
        fc, fd = modulus(c), modulus(d_)
        while b - a > 1e-6:
            if fc >= fd:
                b, d_, fd = d_, c, fc
                c = b - _GOLDEN * (b - a)
                fc = modulus(c)
            else:
                a, c, fc = c, d_, fd
                d_ = a + _GOLDEN * (b - a)
                fd = modulus(d_)
        theta_star = 0.5 * (a + b)
        v_star = modulus(theta_star)
        if v_star >= best_val:
            best_val, best_theta = v_star, theta_star
        samples.append(ProfileSample(r, math.log(best_val), best_theta))

    return GrowthProfile(
        samples=tuple(samples),
        angular_resolution=angular_resolution,
        skipped_points=tuple(skipped),
    )


def _real_log_gamma(r: float) -> float:
    return log_gamma(complex(r)).real


def fit_invariants(profile: GrowthProfile, d_max: int = 4) -> GrowthInvariants:
    """Least-squares recovery of (d, alpha) from a profile.

    For each candidate integer degree d the residual log M(r) - d log
    Gamma(r) is fit against c - r log(alpha); the degree minimizing the
    rms residual wins, and q follows from alpha q = (2 pi)^d.
    """
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    if len(profile.samples) < 4:
        raise ValueError("fit needs at least 4 profile samples")
    rs = np.array([p.r for p in profile.samples])
    if np.allclose(rs, rs[0]):
        raise ValueError("degenerate profile: all radii equal")
    logm = np.array([p.log_max for p in profile.samples])
    lg = np.array([_real_log_gamma(r) for r in rs])
    design = np.column_stack([np.ones_like(rs), -rs])

    best = None
    for d in range(1, d_max + 1):
        y = logm - d * lg
        coef, *_ = np.linalg.lstsq(design, y, rcond=None)
        rms = float(np.sqrt(np.mean((design @ coef - y) ** 2)))
        if best is None or rms < best[0]:
            best = (rms, d, float(coef[1]))
    rms, d, log_alpha = best
    alpha = math.exp(log_alpha)
    return GrowthInvariants(
        d=d,
        alpha=alpha,
        q=_TWO_PI**d / alpha,
        fit_residual=rms,
        r_grid=tuple(float(r) for r in rs),
    )


@dataclass(frozen=True)
class LowerBoundHeuristic:
    """Empirical stand-in for the lower-growth half of the invariant
    condition: inflating alpha by epsilon must blow the fit residual up
    by at least ratio_required. Heuristic, not a certificate."""

    epsilon: float
    residual_base: float
    residual_inflated: float
    ratio: float
    passed: bool
    heuristic: bool = True


def lower_bound_heuristic(
    profile: GrowthProfile,
    invariants: GrowthInvariants,
    epsilon: float = 0.2,
    ratio_required: float = 10.0,
) -> LowerBoundHeuristic:
    rs = np.array([p.r for p in profile.samples])
    logm = np.array([p.log_max for p in profile.samples])
    lg = np.array([_real_log_gamma(r) for r in rs])
    y = logm - invariants.d * lg
    slope = -math.log(invariants.alpha * (1.0 + epsilon))
    shifted = y - slope * rs
    resid_inflated = float(np.sqrt(np.mean((shifted - shifted.mean()) ** 2)))
    base = max(invariants.fit_residual, 1e-300)
    ratio = resid_inflated / base
    return LowerBoundHeuristic(
        epsilon=epsilon,
        residual_base=invariants.fit_residual,
        residual_inflated=resid_inflated,
        ratio=ratio,
        passed=ratio >= ratio_required,
    )


def invariants_from_fe(fe: FunctionalEquationData) -> GrowthInvariants:
    """Exact (d, q, alpha) from completion data.

    d = 2 sum alpha_i must be a positive integer to 1e-9;
    q = (2 pi)^d Q^2 prod alpha_i^(2 alpha_i) with 0^0 = 1; alpha = (2 pi)^d / q.
    """
    if not fe.gamma_factors:
        raise SchemaError("gamma_factors must be non-empty")
    d_raw = 2.0 * sum(alpha for alpha, _ in fe.gamma_factors)
    d = round(d_raw)
    if d < 1 or abs(d_raw - d) > 1e-9:
        raise NonIntegerDegreeError(d_raw)
    prod = 1.0
    for alpha, _ in fe.gamma_factors:
        if alpha > 0.0:
            prod *= alpha ** (2.0 * alpha)
    q = _TWO_PI**d * fe.q_scale**2 * prod
    return GrowthInvariants(
        d=d, alpha=_TWO_PI**d / q, q=q, fit_residual=0.0, r_grid=()
    )


def zeta_fe() -> FunctionalEquationData:
    """Completion pi^(-s/2) Gamma(s/2) of the integer-exponent unit series."""
    return FunctionalEquationData(
        q_scale=1.0 / math.sqrt(math.pi), gamma_factors=((0.5, 0.0 + 0.0j),)
    )


def dedekind_fe(discriminant: int) -> FunctionalEquationData:
    """Completion data of a quadratic-field zeta: q comes out |discriminant|."""
    ad = abs(discriminant)
    if discriminant < 0:
        factors = ((0.5, 0.0 + 0.0j), (0.5, 0.5 + 0.0j))
    else:
        factors = ((0.5, 0.0 + 0.0j), (0.5, 0.0 + 0.0j))
    return FunctionalEquationData(
        q_scale=math.sqrt(ad) / math.pi, gamma_factors=factors
    )


def fe_from_dict(data: dict) -> FunctionalEquationData:
    """Parse completion data from JSON: {"Q": num, "gamma_factors":
    [{"alpha": num, "beta": num | [re, im]}, ...], "w": num | [re, im]}."""
    if not isinstance(data, dict):
        raise SchemaError("functional-equation file must hold a JSON object")
    if "Q" not in data or not isinstance(data["Q"], (int, float)):
        raise SchemaError("field 'Q' missing or not a number")
    factors_raw = data.get("gamma_factors")
    if not isinstance(factors_raw, list) or not factors_raw:
        raise SchemaError("field 'gamma_factors' must be a non-empty list")

    def as_complex(v, where: str) -> complex:
        if isinstance(v, (int, float)):
            return complex(v)
        if isinstance(v, (list, tuple)) and len(v) == 2:
            return complex(v[0], v[1])
        raise SchemaError(f"{where} must be a number or [re, im] pair")

    factors = []
    for i, f in enumerate(factors_raw):
        if not isinstance(f, dict) or "alpha" not in f:
            raise SchemaError(f"gamma_factors[{i}] must be an object with 'alpha'")
        factors.append(
            (float(f["alpha"]), as_complex(f.get("beta", 0.0), f"gamma_factors[{i}].beta"))
        )
    w = as_complex(data.get("w", 1.0), "w")
    return FunctionalEquationData(
        q_scale=float(data["Q"]), gamma_factors=tuple(factors), w=w
    )

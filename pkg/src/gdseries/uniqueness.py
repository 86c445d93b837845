"""Instance-level checks of the uniqueness machinery: the strict growth
condition on (alpha, rho, d), its conductor and quadratic-field
reformulations, and matching a computed product against the only two
entire forms its growth class admits, sinh(beta x)/(beta x) and
cosh(beta x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .beurling import AsymptoticLaw, BeurlingProduct, log_f

_SHAPES = ("sinh_over_linear", "cosh")
_LN2 = math.log(2.0)

# an order of magnitude above worst observed evaluation error, far below
# the separation between the two forms
NO_MATCH_TOL = 1e-3


@dataclass(frozen=True)
class CandidateForm:
    shape: str
    beta: float

    def __post_init__(self):
        if self.shape not in _SHAPES:
            raise ValueError(f"shape must be one of {_SHAPES}")
        if not self.beta > 0.0:
            raise ValueError("beta must be positive")


@dataclass(frozen=True)
class ConditionReport:
    lhs: float
    rhs: float
    holds: bool
    margin: float

    def __post_init__(self):
        if self.holds != (self.margin > 0.0):
            raise ValueError("holds must agree with margin > 0")


def main_condition(alpha: float, rho: float, d: int) -> ConditionReport:
    """Strict growth condition alpha > (pi rho / sin(pi/(2d)))^d."""
    if not (alpha > 0.0 and rho > 0.0 and d >= 1):
        raise ValueError("need alpha > 0, rho > 0, d >= 1")
    rhs = (math.pi * rho / math.sin(math.pi / (2.0 * d))) ** d
    return ConditionReport(alpha, rhs, alpha > rhs, alpha - rhs)


def selberg_sharp_condition(q: float, rho: float, d: int) -> ConditionReport:
    """Conductor form q^{-1/d} > rho/(2 sin(pi/(2d))); equivalent to
    main_condition at alpha = (2 pi)^d / q."""
    if not (q > 0.0 and rho > 0.0 and d >= 1):
        raise ValueError("need q > 0, rho > 0, d >= 1")
    lhs = q ** (-1.0 / d)
    rhs = rho / (2.0 * math.sin(math.pi / (2.0 * d)))
    return ConditionReport(lhs, rhs, lhs > rhs, lhs - rhs)


def dedekind_condition(abs_disc: float, n: int, rho: float) -> ConditionReport:
    """Quadratic/number-field form |disc|^{1/n} < 2 sin(pi/(2n))/rho.

    The inequality points the other way, so the margin is rhs - lhs,
    keeping holds <=> margin > 0.
    """
    if not (abs_disc >= 1.0 and n >= 1 and rho > 0.0):
        raise ValueError("need abs_disc >= 1, n >= 1, rho > 0")
    lhs = abs_disc ** (1.0 / n)
    rhs = 2.0 * math.sin(math.pi / (2.0 * n)) / rho
    return ConditionReport(lhs, rhs, lhs < rhs, rhs - lhs)


# ---------------------------------------------------------- candidate forms


def candidate_forms(beta: float) -> tuple[CandidateForm, CandidateForm]:
    """Both entire forms of exponential type beta with f(0) = 1."""
    return (CandidateForm("sinh_over_linear", beta), CandidateForm("cosh", beta))


def candidate_log_value(form: CandidateForm, x: float) -> float:
    """log of the form at real x, stable for all magnitudes of beta x."""
    u = form.beta * abs(float(x))
    if u == 0.0:
        return 0.0
    if form.shape == "cosh":
        return u - _LN2 + math.log1p(math.exp(-2.0 * u))
    if u < 1e-4:
        u2 = u * u
        return math.log1p(u2 / 6.0 + u2 * u2 / 120.0)
    return u - math.log(2.0 * u) + math.log1p(-math.exp(-2.0 * u))


def candidate_value(form: CandidateForm, x: float) -> float:
    return math.exp(candidate_log_value(form, x))


class MatchResult(NamedTuple):
    best: CandidateForm | None
    max_abs_log_diff: float
    distances: dict
    candidate_count: int
    exploratory: bool


def match_candidate(
    product: BeurlingProduct,
    law: AsymptoticLaw,
    x_grid,
    tol: float = 1e-10,
) -> MatchResult:
    """Match x -> f(x^d) against the two candidate forms.

    beta is the law's exponential rate for f(x^d), namely m/d; it is not
    fit freely because the growth class fixes the rate before the form
    dichotomy applies. Distance to a form is max |log f(x^d) - log form|
    over the grid; the nearer form wins. If neither form comes within
    1e-3 the result carries best = None with both distances, which
    signals a computation problem or a series outside the dichotomy's
    scope. The abstract count of candidates is 2d (two forms times the d
    branch rotations, which have no real-axis signature); results at
    d >= 2 are flagged exploratory.
    """
    xs = [float(x) for x in x_grid]
    if not xs:
        raise ValueError("x_grid must be non-empty")
    if any(not math.isfinite(x) or x < 1.0 for x in xs):
        raise ValueError("x_grid entries must be finite and >= 1")
    if law.d != product.d:
        raise ValueError("law and product disagree on d")

    beta = law.m / law.d
    forms = candidate_forms(beta)
    worst = {form.shape: 0.0 for form in forms}
    for x in xs:
        lf = log_f(product, x**product.d, tol).value
        for form in forms:
            diff = abs(lf - candidate_log_value(form, x))
            if diff > worst[form.shape]:
                worst[form.shape] = diff

    best = min(forms, key=lambda form: worst[form.shape])
    best_dist = worst[best.shape]
    return MatchResult(
        best=best if best_dist <= NO_MATCH_TOL else None,
        max_abs_log_diff=best_dist,
        distances=dict(worst),
        candidate_count=2 * product.d,
        exploratory=product.d >= 2,
    )

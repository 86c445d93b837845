"""Adaptive Simpson quadrature for real or complex integrands.

Plain recursive bisection with the standard 1/15 error estimate. The
budget counter guards against integrands that never settle; hitting it
raises QuadratureError rather than returning a silently bad value.
"""

from __future__ import annotations

from typing import Callable

from .errors import QuadratureError


def _simpson(fa, fm, fb, h):
    return h * (fa + 4.0 * fm + fb) / 6.0


def adaptive_simpson(
    f: Callable[[float], complex],
    a: float,
    b: float,
    abs_tol: float = 1e-12,
    rel_tol: float = 1e-12,
    max_depth: int = 48,
    budget: int = 200_000,
) -> tuple[complex, float]:
    """Integrate f over [a, b]; returns (value, error_estimate).

    Tolerance is met when the local Richardson error passes either the
    absolute or the relative test. Raises QuadratureError if the
    evaluation budget is exhausted or the recursion depth bottoms out
    without convergence.
    """
    if not (b > a):
        raise ValueError("need b > a")
    calls = [0]

    def ev(x: float):
        calls[0] += 1
        if calls[0] > budget:
            raise QuadratureError(
                f"quadrature budget of {budget} evaluations exhausted on [{a}, {b}]"
            )
        return f(x)

    fa, fb = ev(a), ev(b)
    m = 0.5 * (a + b)
    fm = ev(m)
    whole = _simpson(fa, fm, fb, b - a)

    def recurse(lo, hi, flo, fmid, fhi, approx, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm, frm = ev(lm), ev(rm)
        left = _simpson(flo, flm, fmid, mid - lo)
        right = _simpson(fmid, frm, fhi, hi - mid)
        err = (left + right - approx) / 15.0
        refined = left + right + err
        scale = max(abs(refined), 1.0e-300)
        if abs(err) <= abs_tol or abs(err) <= rel_tol * scale:
            return refined, abs(err)
        if depth <= 0:
            raise QuadratureError(
                f"quadrature failed to converge on [{lo}, {hi}] (residual {abs(err):.3e})"
            )
        lv, le = recurse(lo, mid, flo, flm, fmid, left, depth - 1)
        rv, re = recurse(mid, hi, fmid, frm, fhi, right, depth - 1)
        return lv + rv, le + re

    return recurse(a, b, fa, fm, fb, whole, max_depth)

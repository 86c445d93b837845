"""Arbitrary-precision helpers backing the decay-residual lane.

The decay residual f(x) - model(x) sits exponentially far below both
terms: for the unit integer-exponent product it is e^{-pi x}/(2 pi x)
against values of size e^{+pi x}, so binary64 evaluation of log f loses
the residual entirely past x ~ 2. These routines recompute log f and
the model law at a configurable decimal precision with mpmath.

Everything here takes and returns mpf/mpc under an explicit `dps`
argument and runs inside mpmath.workdps, so the global mp context is
left untouched. mpmath's context is process-global; concurrent callers
wanting different precisions should serialize or use separate processes.
"""

from __future__ import annotations

import mpmath as mp

from .errors import EvaluationError
from .series import GeneralDirichletSeries
from .zetafns import character_table, quadratic_ideal_counts

_K_CAP = 200  # product tail series: terms shrink by >= 16x per step


def mp_l_function(w, discriminant: int):
    """Kronecker-character L(w) as a finite Hurwitz-zeta combination."""
    q = abs(int(discriminant))
    values = character_table(discriminant)
    total = mp.mpf(0)
    for r in range(1, q + 1):
        chi = values[r - 1]
        if chi:
            total += chi * mp.zeta(w, mp.mpf(r) / q)
    return mp.power(q, -w) * total


def mp_log_f(series: GeneralDirichletSeries, d: int, x, dps: int = 60):
    """log prod (1 + x^2/lambda^{2d})^{a_n} at dps decimal digits.

    Same split as the binary64 lane: factors with lambda <= (4x)^{1/d}
    summed directly, the rest through the expansion of log(1+u) whose
    k-th term needs only the tail sum of the series at exponent 2dk.
    """
    with mp.workdps(dps):
        xa = abs(mp.mpf(x))
        if xa == 0:
            return mp.mpf(0)
        x2 = xa * xa
        lam_star = (4 * xa) ** (mp.mpf(1) / d)
        family = series.family

        direct = mp.mpf(0)
        if family == "riemann_zeta":
            n0 = int(mp.floor(lam_star))
            for n in range(1, n0 + 1):
                direct += mp.log1p(x2 / mp.mpf(n) ** (2 * d))

            def tail_sum(w):
                return mp.zeta(w, n0 + 1)

        elif family == "shifted_zeta":
            n0 = int(mp.floor(lam_star + mp.mpf(1) / 2))
            for n in range(1, n0 + 1):
                lam = n - mp.mpf(1) / 2
                direct += mp.log1p(x2 / lam ** (2 * d))

            def tail_sum(w):
                return mp.zeta(w, n0 + mp.mpf(1) / 2)

        elif family == "dedekind_quadratic":
            disc = series.discriminant
            n0 = int(mp.floor(lam_star))
            counts = quadratic_ideal_counts(disc, max(n0, 1))
            for n in range(1, n0 + 1):
                if counts[n]:
                    direct += counts[n] * mp.log1p(x2 / mp.mpf(n) ** (2 * d))

            def tail_sum(w):
                head = mp.fsum(
                    counts[n] * mp.power(n, -w)
                    for n in range(1, n0 + 1)
                    if counts[n]
                )
                return mp.zeta(w) * mp_l_function(w, disc) - head

        elif family == "explicit":
            for lam, a in series.terms:
                direct += a * mp.log1p(x2 / mp.mpf(lam) ** (2 * d))
            return direct

        else:
            raise EvaluationError(
                f"no arbitrary-precision product path for family {family!r}"
            )

        target = mp.mpf(10) ** (-(dps + 5))
        tail = mp.mpf(0)
        x2k = mp.mpf(1)
        for k in range(1, _K_CAP + 1):
            x2k *= x2
            term = (-1) ** (k + 1) * x2k / k * tail_sum(2 * d * k)
            tail += term
            if abs(term) <= target * max(mp.mpf(1), abs(direct + tail)):
                break
        else:
            raise EvaluationError("product tail expansion failed to converge")
        return direct + tail


def mp_family_law(family: str, params: dict, d: int, dps: int = 60):
    """Exact decay-law constants (a, log b, m) of a built-in family.

    a = 2 d g(0), log b = 2 d^2 g'(0), m = pi rho d / sin(pi/(2d)), with
    g(0), g'(0), rho evaluated at working precision.
    """
    with mp.workdps(dps):
        if family == "riemann_zeta":
            return (mp.mpf(-1), -mp.log(2 * mp.pi), +mp.pi)
        if family == "shifted_zeta":
            return (mp.mpf(0), -mp.log(2), +mp.pi)
        if family == "dedekind_quadratic":
            disc = int(params["discriminant"])
            q = abs(disc)
            values = character_table(disc)

            def zk(w):
                return mp.zeta(w) * mp_l_function(w, disc)

            g0 = zk(mp.mpf(0))
            g0p = mp.diff(zk, mp.mpf(0))
            # residue at s=1 is L(1), by the digamma evaluation of L(1, chi)
            rho = (
                -mp.fsum(
                    values[r - 1] * mp.digamma(mp.mpf(r) / q)
                    for r in range(1, q)
                    if values[r - 1]
                )
                / q
            )
            a = 2 * d * g0
            log_b = 2 * d**2 * g0p
            m = mp.pi * rho * d / mp.sin(mp.pi / (2 * d))
            return (a, log_b, m)
        raise EvaluationError(f"no exact decay law for family {family!r}")


def sharpen_law(law, family: str, params: dict, dps: int = 60, rel_tol: float = 1e-6):
    """Promote binary64 law constants to working precision.

    When (a, log b, m) each agree with the family's exact constants to
    rel_tol the exact values are used, so the residual measurement is
    not polluted by the double-precision fit; otherwise the binary64
    values are promoted verbatim. Returns (a, log_b, m, sharpened).
    """
    with mp.workdps(dps):
        a64 = mp.mpf(law.a)
        logb64 = mp.log(mp.mpf(law.b))
        m64 = mp.mpf(law.m)
        try:
            a, log_b, m = mp_family_law(family, params, law.d, dps=dps)
        except (EvaluationError, KeyError):
            return (a64, logb64, m64, False)

        def close(u, v):
            return abs(u - v) <= rel_tol * max(1, abs(v))

        if close(a64, a) and close(logb64, log_b) and close(m64, m):
            return (a, log_b, m, True)
        return (a64, logb64, m64, False)


def mp_log_model(a, log_b, m, d: int, x):
    """(a log x + log b + m x^{1/d}) / d at the ambient precision."""
    xv = mp.mpf(x)
    return (a * mp.log(xv) + log_b + m * mp.power(xv, mp.mpf(1) / d)) / d

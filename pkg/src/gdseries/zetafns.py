"""Zeta-type special functions: Hurwitz zeta by Euler-Maclaurin with a
certified remainder, Riemann zeta with functional-equation continuation,
Kronecker symbols, quadratic Dirichlet L-functions, and Dedekind zeta
factors for quadratic fields.

Everything here is binary64. The Euler-Maclaurin order is fixed at 8
Bernoulli terms; the shift N adapts until the standard remainder bound
clears the requested tolerance.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .bernoulli import bernoulli_float
from .errors import EvaluationError, PoleError, UnsupportedRegionError
from .gammafn import log_gamma, recip_gamma

_EM_ORDER = 8  # Bernoulli pairs

# |B_{2K+2}| / (2K+2)! for the remainder majorant at K = _EM_ORDER
_B18_OVER_18FACT = abs(bernoulli_float(18)) / math.factorial(18)


def _pochhammer_abs(s: complex, m: int) -> float:
    acc = 1.0
    for j in range(m):
        acc *= abs(s + j)
    return acc


def _em_remainder_bound(s: complex, a: float, n: int) -> float:
    # standard bound: |R| <= |B_{2K+2}/(2K+2)! poch(s,2K+1) (N+a)^{-s-2K-1}|
    #                       * |s+2K+1|/(sigma+2K+1), needs sigma + 2K + 1 > 0
    sigma = s.real
    k2 = 2 * _EM_ORDER
    if sigma + k2 + 1.0 <= 0.0:
        return math.inf
    base = (n + a) ** (-(sigma + k2 + 1.0))
    return (
        _B18_OVER_18FACT
        * _pochhammer_abs(s, k2 + 1)
        * base
        * abs(s + k2 + 1.0)
        / (sigma + k2 + 1.0)
    )


def hurwitz_zeta_with_bound(
    s: complex, a: float, tol: float = 1e-13
) -> tuple[complex, float]:
    """Hurwitz zeta sum_{n>=0} (n+a)^-s by Euler-Maclaurin.

    Valid for Re(s) > -(2*8+1) away from s=1; returns (value, remainder bound).
    """
    s = complex(s)
    if a <= 0.0:
        raise ValueError("hurwitz_zeta requires a > 0")
    if abs(s - 1.0) <= 1e-14:
        raise PoleError("hurwitz_zeta pole at s=1")
    sigma = s.real
    if sigma <= -(2 * _EM_ORDER):
        raise UnsupportedRegionError(
            f"Euler-Maclaurin order {_EM_ORDER} does not reach Re(s)={sigma}"
        )

    n = 16
    while _em_remainder_bound(s, a, n) > 0.5 * tol:
        n *= 2
        if n > 1 << 22:
            raise EvaluationError("Euler-Maclaurin shift grew without meeting tol")

    # compensated partial sum of (k+a)^-s, k = 0..n-1
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for k in range(n):
        term = cmath.exp(-s * math.log(k + a))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t

    base = n + a
    logb = math.log(base)
    total += cmath.exp((1.0 - s) * logb) / (s - 1.0)
    total += 0.5 * cmath.exp(-s * logb)
    poch = s
    bpow = cmath.exp((-s - 1.0) * logb)
    fact2k = 1.0
    for k in range(1, _EM_ORDER + 1):
        fact2k *= (2 * k - 1) * (2 * k)
        total += (bernoulli_float(2 * k) / fact2k) * poch * bpow
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        bpow /= base * base
    return total, _em_remainder_bound(s, a, n)


def hurwitz_zeta(s: complex, a: float, tol: float = 1e-13) -> complex:
    return hurwitz_zeta_with_bound(s, a, tol)[0]


def riemann_zeta(s: complex, tol: float = 1e-13) -> complex:
    """zeta(s) everywhere except s=1.

    Right of Re(s) = -1 this is Euler-Maclaurin directly; further left it
    reflects through the symmetric completion pi^{-s/2} Gamma(s/2) zeta(s),
    which also pins the trivial zeros to exact zeros of 1/Gamma.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-12:
        raise PoleError("zeta pole at s=1")
    if s.real >= -1.0:
        return hurwitz_zeta(s, 1.0, tol)
    rg = recip_gamma(0.5 * s)
    if rg == 0.0:
        return 0.0 + 0.0j
    pref = cmath.exp((s - 0.5) * math.log(math.pi) + log_gamma(0.5 * (1.0 - s))) * rg
    inner_tol = tol / max(1.0, abs(pref))
    return pref * hurwitz_zeta(1.0 - s, 1.0, inner_tol)


def kronecker_symbol(d: int, n: int) -> int:
    """Kronecker symbol (d|n) by the binary Jacobi algorithm, no factoring."""
    a, b = d, n
    if b == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and b % 2 == 0:
        return 0
    v = 0
    while b % 2 == 0:
        b //= 2
        v += 1
    k = 1
    if v % 2 == 1 and a % 8 in (3, 5):
        k = -1
    if b < 0:
        b = -b
        if a < 0:
            k = -k
    a %= b
    while a != 0:
        v = 0
        while a % 2 == 0:
            a //= 2
            v += 1
        if v % 2 == 1 and b % 8 in (3, 5):
            k = -k
        if a % 4 == 3 and b % 4 == 3:
            k = -k
        a, b = b % a, a
    return k if b == 1 else 0


def _squarefree(m: int) -> bool:
    m = abs(m)
    if m == 0:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def is_fundamental_discriminant(d: int) -> bool:
    if d == 0 or d == 1:
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


@lru_cache(maxsize=64)
def character_table(d: int) -> tuple[int, ...]:
    """chi_d(1..|d|) for a fundamental discriminant d."""
    q = abs(d)
    return tuple(kronecker_symbol(d, r) for r in range(1, q + 1))


def dirichlet_l_from_table(
    s: complex, modulus: int, values: tuple[float, ...], tol: float = 1e-13
) -> complex:
    """L(s, chi) from an explicit value table mod q, via Hurwitz zeta at the
    rational shifts r/q. Only valid right of Re(s) = -1; the table carries no
    functional equation."""
    s = complex(s)
    if s.real < -1.0:
        raise UnsupportedRegionError(
            "table-based Dirichlet L has no continuation left of Re(s) = -1"
        )
    q = modulus
    qs = cmath.exp(-s * math.log(q))
    active = sum(1 for v in values if v != 0)
    tol_each = tol / (max(1, active) * max(abs(qs), 1e-300))
    total = 0.0 + 0.0j
    for r in range(1, q + 1):
        chi = values[r - 1]
        if chi == 0:
            continue
        total += chi * hurwitz_zeta(s, r / q, tol_each)
    return qs * total


def kronecker_l(s: complex, d: int, tol: float = 1e-13) -> complex:
    """L(s, chi_d) for a fundamental discriminant d, on all of C.

    Right of Re(s) = -1 by Hurwitz decomposition; further left by the
    functional equation of the (primitive, self-dual) character, with
    root number +1 and parity a = 0 (d > 0) or 1 (d < 0).
    """
    s = complex(s)
    q = abs(d)
    if s.real >= -1.0:
        return dirichlet_l_from_table(s, q, character_table(d), tol)
    a = 0 if d > 0 else 1
    rg = recip_gamma(0.5 * (s + a))
    if rg == 0.0:
        return 0.0 + 0.0j
    pref = (
        cmath.exp((0.5 - s) * math.log(q / math.pi) + log_gamma(0.5 * (1.0 - s + a)))
        * rg
    )
    inner_tol = tol / max(1.0, abs(pref))
    return pref * kronecker_l(1.0 - s, d, inner_tol)


def dedekind_zeta_quadratic(s: complex, d: int, tol: float = 1e-13) -> complex:
    """zeta_K(s) = zeta(s) L(s, chi_d) for the quadratic field of discriminant d."""
    s = complex(s)
    if abs(s - 1.0) <= 1e-12:
        raise PoleError("dedekind zeta pole at s=1")
    z = riemann_zeta(s, 0.5 * tol)
    l = kronecker_l(s, d, 0.5 * tol / max(1.0, abs(z)))
    return z * l


def quadratic_ideal_counts(d: int, n_max: int) -> list[int]:
    """r_K(n) = sum_{e | n} chi_d(e) for n = 1..n_max, by divisor sieve.

    Index 0 of the returned list is unused (kept 0).
    """
    counts = [0] * (n_max + 1)
    for e in range(1, n_max + 1):
        chi = kronecker_symbol(d, e)
        if chi == 0:
            continue
        for m in range(e, n_max + 1, e):
            counts[m] += chi
    return counts

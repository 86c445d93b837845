"""General Dirichlet series sum a_n / lambda_n^s: datatype, JSON schema,
evaluation with analytic continuation for the built-in families,
Cauchy-contour derivatives, residue extraction, and the membership
checks for the positive-coefficient class with trivial zeros.

Built-in families and their continuation strategies:
  riemann_zeta        Euler-Maclaurin right of Re(s) = -1, symmetric
                      functional equation further left
  shifted_zeta        (2^s - 1) * zeta(s); exponents are half-integers
  dirichlet_L         Hurwitz decomposition over residue classes; the
                      quadratic (Kronecker) case continues everywhere
  dedekind_quadratic  zeta(s) * L(s, chi_D)
  explicit            finite term list, Re(s) > 1 only, requires a
                      user-supplied truncation tail descriptor
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import (
    EvaluationError,
    PoleError,
    SchemaError,
    TailBoundError,
    UnsupportedRegionError,
)
from . import zetafns

FAMILIES = (
    "riemann_zeta",
    "shifted_zeta",
    "dirichlet_L",
    "dedekind_quadratic",
    "explicit",
)

_TWO_PI = 2.0 * math.pi

TAIL_TYPES = ("integral_test", "geometric")


@dataclass(frozen=True)
class TailBound:
    """Certified truncation-tail descriptor for sum_{n>N} a_n lambda_n^-w.

    integral_test: params coef_scale C, coef_power p, lambda_scale delta,
      meaning |a_n| <= C n^p and lambda_n >= delta n; the tail is bounded by
      C delta^-w N^(p-w+1) / (w - p - 1) for w > p + 1.
    geometric: params scale A, ratio r with 0 < r < 1, meaning
      |a_n| <= A r^n; the tail is bounded by A lambda^-w r^(N+1) / (1 - r)
      using the first omitted exponent (or the last known one).
    """

    type: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.type not in TAIL_TYPES:
            raise SchemaError(f"tail_bound.type must be one of {TAIL_TYPES}")
        p = self.params
        if self.type == "integral_test":
            for key in ("coef_scale", "coef_power", "lambda_scale"):
                if key not in p:
                    raise SchemaError(f"tail_bound.params.{key} missing")
            if p["coef_scale"] < 0 or p["lambda_scale"] <= 0:
                raise SchemaError("tail_bound integral_test params out of range")
        else:
            for key in ("scale", "ratio"):
                if key not in p:
                    raise SchemaError(f"tail_bound.params.{key} missing")
            if p["scale"] < 0 or not 0.0 < p["ratio"] < 1.0:
                raise SchemaError("tail_bound geometric params out of range")

    def bound(self, n_terms: int, w: float, lambda_next: float) -> float:
        """Upper bound on the absolute tail past term n_terms at exponent w."""
        p = self.params
        if self.type == "integral_test":
            c, pw, delta = p["coef_scale"], p["coef_power"], p["lambda_scale"]
            if w <= pw + 1.0:
                return math.inf
            return c * delta**-w * n_terms ** (pw - w + 1.0) / (w - pw - 1.0)
        a, r = p["scale"], p["ratio"]
        if a == 0.0:
            return 0.0
        return a * lambda_next**-w * r ** (n_terms + 1) / (1.0 - r)


@dataclass(frozen=True)
class GeneralDirichletSeries:
    """Immutable term-list representation of sum a_n / lambda_n^s.

    class_b_claim marks series asserting membership in the
    positive-coefficient class; only then are a_n >= 0 and a_1 = 1
    enforced at construction (merged or user series may carry signs)."""

    name: str
    family: str
    params: dict = field(default_factory=dict)
    terms: tuple = ()
    tail_bound: TailBound | None = None
    class_b_claim: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SchemaError(f"family must be one of {FAMILIES}, got {self.family!r}")
        prev = 0.0
        for i, term in enumerate(self.terms):
            lam, a = term
            if not (math.isfinite(lam) and math.isfinite(a)):
                raise SchemaError(f"terms[{i}] has a non-finite entry")
            if lam <= prev:
                raise SchemaError(
                    f"terms[{i}]: exponents must be strictly increasing and positive"
                )
            prev = lam
        if self.class_b_claim:
            if not self.terms or abs(self.terms[0][1] - 1.0) > 1e-12:
                raise SchemaError("normalized series must lead with coefficient 1")
            for i, (_, a) in enumerate(self.terms):
                if a < 0.0:
                    raise SchemaError(f"terms[{i}]: negative coefficient {a}")
        if self.family == "explicit" and self.tail_bound is None:
            raise SchemaError("explicit series requires a tail_bound descriptor")
        if self.family == "dedekind_quadratic":
            d = self.params.get("discriminant")
            if not isinstance(d, int) or not zetafns.is_fundamental_discriminant(d):
                raise SchemaError(
                    "dedekind_quadratic requires a fundamental discriminant != 1"
                )
        if self.family == "dirichlet_L":
            q = self.params.get("modulus")
            vals = self.params.get("values")
            if not isinstance(q, int) or q < 1:
                raise SchemaError("dirichlet_L requires integer params.modulus >= 1")
            if not isinstance(vals, (list, tuple)) or len(vals) != q:
                raise SchemaError("dirichlet_L params.values must list chi(1..q)")

    @property
    def discriminant(self) -> int | None:
        d = self.params.get("discriminant")
        return d if isinstance(d, int) else None


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    trunc_error: float

    def __post_init__(self):
        if not (self.trunc_error >= 0.0 and math.isfinite(self.trunc_error)):
            raise ValueError("trunc_error must be finite and >= 0")


# ---------------------------------------------------------------- constructors


def riemann_zeta_series(n_terms: int = 64) -> GeneralDirichletSeries:
    return GeneralDirichletSeries(
        name="riemann_zeta",
        family="riemann_zeta",
        terms=tuple((float(n), 1.0) for n in range(1, n_terms + 1)),
        tail_bound=TailBound(
            "integral_test", {"coef_scale": 1.0, "coef_power": 0.0, "lambda_scale": 1.0}
        ),
        class_b_claim=True,
    )


def shifted_zeta_series(n_terms: int = 64) -> GeneralDirichletSeries:
    """(2^s - 1) zeta(s) = sum (n - 1/2)^-s over n >= 1."""
    return GeneralDirichletSeries(
        name="shifted_zeta",
        family="shifted_zeta",
        terms=tuple((n - 0.5, 1.0) for n in range(1, n_terms + 1)),
        tail_bound=TailBound(
            "integral_test", {"coef_scale": 1.0, "coef_power": 0.0, "lambda_scale": 0.5}
        ),
        class_b_claim=True,
    )


def dedekind_quadratic_series(
    discriminant: int, n_terms: int = 64
) -> GeneralDirichletSeries:
    if not zetafns.is_fundamental_discriminant(discriminant):
        raise SchemaError(f"{discriminant} is not a fundamental discriminant")
    counts = zetafns.quadratic_ideal_counts(discriminant, n_terms)
    # r_K(n) <= d(n) <= 2 sqrt(n)
    return GeneralDirichletSeries(
        name=f"dedekind_{discriminant}",
        family="dedekind_quadratic",
        params={"discriminant": discriminant},
        terms=tuple((float(n), float(counts[n])) for n in range(1, n_terms + 1)),
        tail_bound=TailBound(
            "integral_test", {"coef_scale": 2.0, "coef_power": 0.5, "lambda_scale": 1.0}
        ),
        class_b_claim=True,
    )


def dirichlet_l_series(discriminant: int, n_terms: int = 64) -> GeneralDirichletSeries:
    if not zetafns.is_fundamental_discriminant(discriminant):
        raise SchemaError(f"{discriminant} is not a fundamental discriminant")
    q = abs(discriminant)
    table = zetafns.character_table(discriminant)
    return GeneralDirichletSeries(
        name=f"dirichlet_L_{discriminant}",
        family="dirichlet_L",
        params={
            "modulus": q,
            "values": [float(v) for v in table],
            "discriminant": discriminant,
        },
        terms=tuple(
            (float(n), float(table[(n - 1) % q])) for n in range(1, n_terms + 1)
        ),
        tail_bound=TailBound(
            "integral_test", {"coef_scale": 1.0, "coef_power": 0.0, "lambda_scale": 1.0}
        ),
    )


def explicit_series(
    name: str, terms, tail_bound: TailBound, class_b_claim: bool = False
) -> GeneralDirichletSeries:
    return GeneralDirichletSeries(
        name=name,
        family="explicit",
        terms=tuple((float(l), float(a)) for l, a in terms),
        tail_bound=tail_bound,
        class_b_claim=class_b_claim,
    )


# ------------------------------------------------------------------ evaluation

_POLE_FAMILIES = ("riemann_zeta", "shifted_zeta", "dedekind_quadratic")


def partial_sum(series: GeneralDirichletSeries, s: complex, n_terms: int) -> complex:
    """Plain truncated sum over the first n_terms stored terms (compensated)."""
    s = complex(s)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for lam, a in series.terms[:n_terms]:
        if a == 0.0:
            continue
        term = a * cmath.exp(-s * math.log(lam))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


def evaluate(series: GeneralDirichletSeries, s: complex, tol: float) -> SeriesValue:
    """F(s) with certified truncation error <= tol.

    Built-in families continue analytically; near the pole at s=1 (within
    1e-12) a PoleError is raised. The explicit family only converges for
    Re(s) > 1 and errors elsewhere.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    s = complex(s)
    fam = series.family
    if fam in _POLE_FAMILIES and abs(s - 1.0) <= 1e-12:
        raise PoleError("evaluation requested within 1e-12 of the pole at s=1")

    if fam == "riemann_zeta":
        return SeriesValue(zetafns.riemann_zeta(s, tol), tol)
    if fam == "shifted_zeta":
        factor = cmath.exp(s * math.log(2.0)) - 1.0
        scale = max(abs(factor), 1e-300)
        return SeriesValue(factor * zetafns.riemann_zeta(s, tol / scale), tol)
    if fam == "dedekind_quadratic":
        return SeriesValue(
            zetafns.dedekind_zeta_quadratic(s, series.discriminant, tol), tol
        )
    if fam == "dirichlet_L":
        d = series.discriminant
        if d is not None:
            return SeriesValue(zetafns.kronecker_l(s, d, tol), tol)
        table = tuple(series.params["values"])
        return SeriesValue(
            zetafns.dirichlet_l_from_table(s, series.params["modulus"], table, tol),
            tol,
        )

    # explicit: direct summation in the absolute-convergence half-plane
    if s.real <= 1.0:
        raise UnsupportedRegionError(
            "explicit series has no continuation left of Re(s) = 1"
        )
    n = len(series.terms)
    lam_last = series.terms[-1][0] if series.terms else 1.0
    tail = series.tail_bound.bound(n, s.real, lam_last)
    if not tail <= tol:
        raise TailBoundError(
            f"tail bound {tail:.3e} after {n} stored terms cannot meet tol={tol:.3e}"
        )
    return SeriesValue(partial_sum(series, s, n), tail)


def _contour_requirements(series: GeneralDirichletSeries, s: complex, radius: float):
    if series.family == "explicit":
        if s.real - radius <= 1.0:
            raise UnsupportedRegionError(
                "derivative contour leaves the explicit convergence half-plane"
            )
    elif series.family in _POLE_FAMILIES and abs(s - 1.0) <= radius + 1e-9:
        raise EvaluationError("derivative contour would intersect the pole at s=1")


def derivative(
    series: GeneralDirichletSeries, s: complex, order: int, tol: float
) -> SeriesValue:
    """F^(order)(s) by Cauchy's formula on a circle of radius 1/2.

    Trapezoid nodes double until two successive estimates differ by less
    than tol/2; the periodic integrand makes that spectrally accurate.
    """
    if not 0 <= order <= 4:
        raise ValueError("derivative order must be between 0 and 4")
    s = complex(s)
    radius = 0.5
    _contour_requirements(series, s, radius)
    point_tol = tol / 1000.0
    kfact = math.factorial(order)

    max_nodes = 4096
    cache: dict[int, complex] = {}

    def node_value(idx: int) -> complex:
        # idx indexes the angle 2*pi*idx/max_nodes
        val = cache.get(idx)
        if val is None:
            theta = _TWO_PI * idx / max_nodes
            z = s + radius * cmath.exp(1j * theta)
            val = evaluate(series, z, point_tol).value
            cache[idx] = val
        return val

    def estimate(n: int) -> complex:
        step = max_nodes // n
        acc = 0.0 + 0.0j
        for j in range(n):
            theta = _TWO_PI * j / n
            acc += node_value(j * step) * cmath.exp(-1j * order * theta)
        return kfact * acc / (n * radius**order)

    n = 16
    prev = estimate(n)
    while n < max_nodes:
        n *= 2
        cur = estimate(n)
        diff = abs(cur - prev)
        if diff < 0.5 * tol:
            return SeriesValue(cur, diff + point_tol)
        prev = cur
    raise EvaluationError("contour derivative did not converge within 4096 nodes")


def residue_at_pole(series: GeneralDirichletSeries, tol: float) -> float:
    """Residue of F at s=1 via a contour of radius 1/4 around the pole."""
    if series.family not in _POLE_FAMILIES and series.family != "dirichlet_L":
        raise UnsupportedRegionError("residue extraction needs a built-in family")
    radius = 0.25
    point_tol = tol / 1000.0
    max_nodes = 4096
    cache: dict[int, complex] = {}

    def estimate(n: int) -> complex:
        step = max_nodes // n
        acc = 0.0 + 0.0j
        for j in range(n):
            idx = j * step
            val = cache.get(idx)
            if val is None:
                theta = _TWO_PI * idx / max_nodes
                w = radius * cmath.exp(1j * theta)
                val = evaluate(series, 1.0 + w, point_tol).value * w
                cache[idx] = val
            acc += val
        return acc / n

    n = 32
    prev = estimate(n)
    while n < max_nodes:
        n *= 2
        cur = estimate(n)
        if abs(cur - prev) < 0.5 * tol:
            return cur.real
        prev = cur
    raise EvaluationError("residue contour did not converge within 4096 nodes")


# ------------------------------------------------------------- class-B checks


@dataclass(frozen=True)
class ClassBReport:
    """Axiom-by-axiom membership report; failures carry numeric witnesses."""

    axioms_checked: tuple  # of (axiom_id, passed, witness or None)
    rho: float | None
    trivial_zero_residuals: tuple

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok, _ in self.axioms_checked)


def check_class_B(
    series: GeneralDirichletSeries, d: int, n_zeros: int, tol: float
) -> ClassBReport:
    """Check the series-form axiom, the simple-pole axiom, and the forced
    zeros at s = -2nd for n = 1..n_zeros. The growth axiom is the business
    of the profile fit and is not examined here."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 1 <= n_zeros <= 5:
        raise ValueError("n_zeros must be between 1 and 5")
    entries = []

    witness = None
    ok = bool(series.terms)
    if not ok:
        witness = "empty term list"
    else:
        if abs(series.terms[0][1] - 1.0) > 1e-12:
            ok = False
            witness = f"a_1={series.terms[0][1]!r}"
        for i, (_, a) in enumerate(series.terms):
            if a < 0.0:
                ok = False
                witness = f"a_{i + 1}={a!r}"
                break
    entries.append(("1", ok, witness))

    rho = None
    if series.family == "explicit":
        entries.append(("2", False, "no continuation available"))
    else:
        rho = residue_at_pole(series, tol)
        ok = math.isfinite(rho) and rho > 0.0
        entries.append(("2", ok, None if ok else f"rho={rho!r}"))

    residuals = []
    if series.family == "explicit":
        entries.append(("4", False, "no continuation available"))
    else:
        worst = 0.0
        for n in range(1, n_zeros + 1):
            v = abs(evaluate(series, complex(-2.0 * n * d), tol).value)
            residuals.append(v)
            worst = max(worst, v)
        ok = worst <= tol
        entries.append(("4", ok, None if ok else f"|F({-2 * n_zeros * d})|={worst:.3e}"))

    return ClassBReport(
        axioms_checked=tuple(entries),
        rho=rho,
        trivial_zero_residuals=tuple(residuals),
    )


def to_lambda_merge(
    series_a: GeneralDirichletSeries, series_b: GeneralDirichletSeries
) -> GeneralDirichletSeries:
    """Merge two term lists on exactly-equal exponents, up to the shared
    exponent cutoff; cancelled (zero) coefficients are dropped.

    The result is an explicit series. Its tail descriptor is the trivial
    zero-scale geometric bound, so evaluation past the stored terms is
    only certified where the cutoff already captures the tail."""
    if not series_a.terms or not series_b.terms:
        raise SchemaError("merge requires non-empty term lists")
    cutoff = min(series_a.terms[-1][0], series_b.terms[-1][0])
    merged: dict[float, float] = {}
    for src in (series_a, series_b):
        for lam, a in src.terms:
            if lam <= cutoff:
                merged[lam] = merged.get(lam, 0.0) + a
    terms = tuple(
        (lam, merged[lam]) for lam in sorted(merged) if merged[lam] != 0.0
    )
    return GeneralDirichletSeries(
        name=f"merge({series_a.name},{series_b.name})",
        family="explicit",
        terms=terms,
        tail_bound=TailBound("geometric", {"scale": 0.0, "ratio": 0.5}),
    )


# ------------------------------------------------------------------- schema IO


def series_to_dict(series: GeneralDirichletSeries) -> dict:
    out = {
        "name": series.name,
        "family": series.family,
        "params": dict(series.params),
        "terms": [[lam, a] for lam, a in series.terms],
    }
    if series.tail_bound is not None:
        out["tail_bound"] = {
            "type": series.tail_bound.type,
            "params": dict(series.tail_bound.params),
        }
    return out


def series_from_dict(data: dict) -> GeneralDirichletSeries:
    if not isinstance(data, dict):
        raise SchemaError("series definition must be a JSON object")
    for key in ("name", "family", "terms"):
        if key not in data:
            raise SchemaError(f"series field '{key}' missing")
    if not isinstance(data["name"], str):
        raise SchemaError("field 'name' must be a string")
    if not isinstance(data["family"], str):
        raise SchemaError("field 'family' must be a string")
    raw_terms = data["terms"]
    if not isinstance(raw_terms, list):
        raise SchemaError("field 'terms' must be a list of [lambda, a] pairs")
    terms = []
    for i, pair in enumerate(raw_terms):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) for v in pair)
        ):
            raise SchemaError(f"terms[{i}] must be a numeric [lambda, a] pair")
        terms.append((float(pair[0]), float(pair[1])))
    tail = None
    if "tail_bound" in data and data["tail_bound"] is not None:
        tb = data["tail_bound"]
        if not isinstance(tb, dict) or "type" not in tb:
            raise SchemaError("field 'tail_bound' must be an object with a 'type'")
        tail = TailBound(tb["type"], dict(tb.get("params", {})))
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise SchemaError("field 'params' must be an object")
    return GeneralDirichletSeries(
        name=data["name"],
        family=data["family"],
        params=params,
        terms=tuple(terms),
        tail_bound=tail,
        class_b_claim=bool(data.get("class_b", False)),
    )

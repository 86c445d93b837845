"""Optional figure rendering for CLI reports.

matplotlib is imported lazily with the Agg backend so that library use
and plain CLI runs never touch a display. Each renderer writes one PNG
and returns the path it wrote.
"""

from __future__ import annotations

import math
import os


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_profile(profile, invariants, path: str) -> str:
    """Max-modulus profile log M(r) with the fitted growth line."""
    plt = _plt()
    rs = [p.r for p in profile.samples]
    logm = [p.log_max for p in profile.samples]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(rs, logm, "o", label="measured log M(r)")
    if invariants is not None:
        from .gammafn import log_gamma

        intercept = sum(
            lm - invariants.d * log_gamma(complex(r)).real + r * math.log(invariants.alpha)
            for r, lm in zip(rs, logm)
        ) / len(rs)
        dense = [rs[0] + i * (rs[-1] - rs[0]) / 200.0 for i in range(201)]
        fit = [
            invariants.d * log_gamma(complex(r)).real
            - r * math.log(invariants.alpha)
            + intercept
            for r in dense
        ]
        ax.plot(
            dense,
            fit,
            "-",
            label=f"d log Gamma(r) - r log alpha (d={invariants.d})",
        )
    ax.set_xlabel("r")
    ax.set_ylabel("log M(r)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return os.path.abspath(path)


def render_decay(points, path: str) -> str:
    """Residual log against x, with flagged floor points hollow."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    solid = [(p.x, p.residual_log) for p in points if not p.cancellation_flag]
    floor = [(p.x, p.residual_log) for p in points if p.cancellation_flag]
    if solid:
        ax.plot([q[0] for q in solid], [q[1] for q in solid], "o-", label="residual")
    if floor:
        ax.plot(
            [q[0] for q in floor],
            [q[1] for q in floor],
            "o",
            mfc="none",
            label="precision floor",
        )
    ax.set_xlabel("x")
    ax.set_ylabel("log |f - model|")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return os.path.abspath(path)


def render_gamma_sweep(reports, path: str) -> str:
    """bound_ratio against sigma for a gamma-bound sweep."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(
        [r.sigma for r in reports],
        [r.bound_ratio for r in reports],
        "o-",
        label="integral / (sigma^3 Gamma(sigma))",
    )
    ax.set_xlabel("sigma")
    ax.set_ylabel("bound ratio")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return os.path.abspath(path)

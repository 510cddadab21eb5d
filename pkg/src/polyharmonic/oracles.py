"""Finite-difference and brute-force cross-checks for the closed forms.

Nothing in this module calls the analytic derivative it is checking: the
derivative oracles differentiate the plain density/energy evaluators, and the
root counter is a raw sign scan.  Dependency direction is one way -- this
module consumes the solver and section layers, never the reverse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .energies import CliffordConfig, HypersphereConfig, eps_C, eps_r_deriv, residual_334, sphere_volume, total_energy
from .errors import DomainError
from .sections import tau_r
from .solvers import build_P

__all__ = [
    "OracleReport",
    "fd_derivative",
    "scan_roots",
    "verify_variation",
    "verify_clifford_criticality",
]

# step chosen so second-derivative estimates keep >= 6 significant digits
DEFAULT_STEP_SCALE = 1e-4


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one verification battery."""

    name: str
    max_residual: float
    samples: int
    passed: bool
    tolerance: float

    def __post_init__(self) -> None:
        if self.passed != (self.max_residual <= self.tolerance):
            raise ValueError("passed flag inconsistent with residual vs tolerance")

    @classmethod
    def from_residual(cls, name: str, max_residual: float, samples: int, tolerance: float) -> "OracleReport":
        return cls(name, max_residual, samples, max_residual <= tolerance, tolerance)


def fd_derivative(f, x: float, order: int = 1, h: float | None = None) -> float:
    """Central-difference derivative with one Richardson level (error O(h^4))."""
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {order!r}")
    if h is None:
        h = DEFAULT_STEP_SCALE * max(1.0, abs(x))
    if h <= 0.0:
        raise DomainError(f"step must be positive, got {h!r}")
    if order == 1:
        def estimate(step):
            return (f(x + step) - f(x - step)) / (2.0 * step)
    else:
        fx = f(x)

        def estimate(step):
            return (f(x + step) - 2.0 * fx + f(x - step)) / (step * step)

    return (4.0 * estimate(h / 2.0) - estimate(h)) / 3.0


def scan_roots(f, interval: tuple[float, float], grid_points: int) -> list[tuple[float, float]]:
    """Sign-change brackets of f on a uniform grid of ``grid_points`` points.

    Exact zeros land as degenerate brackets (x, x).  Vectorized evaluation is
    attempted first and falls back to pointwise calls.
    """
    if grid_points < 2:
        raise DomainError(f"grid_points must be >= 2, got {grid_points!r}")
    lo, hi = interval
    if not lo < hi:
        raise DomainError(f"empty interval {interval!r}")
    xs = np.linspace(lo, hi, grid_points)
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([f(float(x)) for x in xs], dtype=float)

    brackets: list[tuple[float, float]] = []
    zero_idx = np.nonzero(vals == 0.0)[0]
    change_idx = np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]
    for i in sorted(set(zero_idx) | set(change_idx)):
        if vals[i] == 0.0:
            brackets.append((float(xs[i]), float(xs[i])))
        else:
            brackets.append((float(xs[i]), float(xs[i + 1])))
    return brackets


def _capped_step(x: float, lo: float, hi: float) -> float:
    """FD step that keeps all Richardson sample points inside (lo, hi)."""
    return min(DEFAULT_STEP_SCALE * max(1.0, abs(x)), 0.2 * (x - lo), 0.2 * (hi - x))


def verify_variation(alpha: float, n: int, r: int, tolerance: float = 1e-7) -> OracleReport:
    """Three-route agreement for the angle derivative of the total energy.

    Routes: finite differences of the total energy, the analytic density
    derivative scaled by the energy constant, and the assembled order-r
    tension coefficient scaled by minus the domain volume.  The residual is
    the largest pairwise gap, relative to the largest magnitude (floored at 1).
    """
    cfg = HypersphereConfig(r=r, n=n)
    step = _capped_step(alpha, 0.0, math.pi)
    fd = fd_derivative(lambda t: total_energy(cfg, alpha + t), 0.0, order=1, h=step)
    vol = sphere_volume(n - 1)
    analytic = 0.5 * vol * float(n - 1) ** r * eps_r_deriv(alpha, r, 1)
    operator = -vol * tau_r(alpha, n, r).coeff
    scale = max(1.0, abs(fd), abs(analytic), abs(operator))
    residual = max(abs(fd - analytic), abs(fd - operator), abs(analytic - operator)) / scale
    return OracleReport.from_residual(
        f"variation[r={r},n={n},alpha={alpha:.6g}]", residual, 3, tolerance
    )


def verify_clifford_criticality(t: float, p: int, q: int, r: int, tolerance: float = 1e-8) -> OracleReport:
    """Cross-check a torus parameter t = R1^2 through every available route.

    Balanced weight case (p/R1^2 = q/R2^2): the immersion is harmonic and the
    residual is the weight gap itself.  Order 2: the only candidate is the
    balanced torus, so the residual combines |t - 1/2| with the
    finite-difference criticality of the density.  Otherwise three residuals
    must vanish together: the finite-difference density derivative (relative
    to the density value), the quadratic criticality residual, and the cubic
    value, each normalized by its natural scale.
    """
    if not 0.0 < t < 1.0:
        raise DomainError(f"t must lie in (0, 1), got {t!r}")
    cfg = CliffordConfig.from_t(p, q, r, t)
    alpha = math.asin(cfg.R1)
    half_pi = 0.5 * math.pi

    p_weight = p / t
    q_weight = q / (1.0 - t)
    gap = abs(p_weight - q_weight) / max(1.0, p_weight, q_weight)
    if gap <= tolerance:
        return OracleReport.from_residual(
            f"clifford-harmonic[p={p},q={q},r={r},t={t:.6g}]", gap, 1, tolerance
        )

    step = _capped_step(alpha, 0.0, half_pi)
    density = eps_C(alpha, cfg)
    fd_residual = abs(fd_derivative(lambda a: eps_C(a, cfg), alpha, 1, h=step)) / max(density, 1e-300)

    if r == 2:
        residual = max(abs(t - 0.5), fd_residual)
        return OracleReport.from_residual(
            f"clifford-biharmonic[p={p},q={q},t={t:.6g}]", residual, 2, tolerance
        )

    quad_scale = max(
        1.0,
        abs(p_weight),
        abs((r - 1) * (q_weight - p_weight) - 2.0 * p_weight) * t,
        r * abs(p_weight - q_weight) * t * t,
    )
    quad_residual = abs(residual_334(t, cfg)) / quad_scale

    poly = build_P(p, q, r)
    poly_residual = abs(poly(t)) / max(1.0, poly.coefficient_scale)

    residual = max(fd_residual, quad_residual, poly_residual)
    return OracleReport.from_residual(
        f"clifford-criticality[p={p},q={q},r={r},t={t:.6g}]", residual, 3, tolerance
    )

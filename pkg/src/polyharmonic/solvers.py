"""Critical-point solvers and classification for both immersion families.

The hypersphere family has a single proper critical latitude per order, with
radius 1/sqrt(r); the Clifford family reduces (for r >= 3) to the admissible
roots of a cubic in t = R1^2, classified minimal exactly when t matches
p/(p+q).  Root finding is a bracketing hybrid rather than a closed-form cubic
formula: closed forms lose digits near the double roots that sit on the
three-root boundary of the parameter space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .energies import CliffordConfig, eps_C_deriv, eps_r_deriv, residual_334
from .errors import DomainError, UnsupportedOrderError

__all__ = [
    "Kind",
    "SolutionReport",
    "CubicPolynomial",
    "build_P",
    "root_solve",
    "solve_hypersphere",
    "enumerate_hypersphere_criticals",
    "solve_clifford",
    "classify_torus_parameter",
    "discriminant_condition",
    "clifford_sweep",
    "MINIMAL_TOL",
    "BOUNDARY_TOL",
]

MINIMAL_TOL = 1e-9    # |t - p/(p+q)| below this is classified minimal
BOUNDARY_TOL = 1e-9   # roots this close to 0 or 1 collapse a factor sphere
DEFAULT_ROOT_TOL = 1e-12
SCAN_POINTS = 4096


class Kind(str, Enum):
    HARMONIC = "harmonic"
    MINIMAL = "minimal"
    PROPER = "proper_r_harmonic"


@dataclass(frozen=True)
class SolutionReport:
    """A classified critical point of one of the reduced energies.

    ``parameter`` is the hypersphere radius R, or t = R1^2 for a torus.
    ``stable`` is None when no second-variation statement applies (torus
    reports); the residuals map verification-route names to magnitudes.
    """

    parameter: float
    alpha_star: float
    kind: Kind
    stable: bool | None
    residuals: dict[str, float]
    R1: float | None = None
    R2: float | None = None


@dataclass(frozen=True)
class CubicPolynomial:
    """P(t) = c3 t^3 + c2 t^2 + c1 t + c0 with vectorized Horner evaluation."""

    c3: float
    c2: float
    c1: float
    c0: float

    def __call__(self, t):
        return ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0

    def deriv(self, t):
        return (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1

    @property
    def coefficient_scale(self) -> float:
        return max(abs(self.c3), abs(self.c2), abs(self.c1), abs(self.c0))

    def stationary_points(self) -> list[float]:
        """Real roots of P', ascending (at most two)."""
        a, b, c = 3.0 * self.c3, 2.0 * self.c2, self.c1
        if a == 0.0:
            return [] if b == 0.0 else [-c / b]
        disc = b * b - 4.0 * a * c
        if disc < 0.0:
            return []
        if disc == 0.0:
            return [-b / (2.0 * a)]
        root = math.sqrt(disc)
        # stable quadratic formula: avoid the cancelling branch
        qq = -0.5 * (b + math.copysign(root, b))
        out = [qq / a]
        if qq != 0.0:
            out.append(c / qq)
        else:
            out.append(-b / a - out[0])
        out.sort()
        return out


def _check_pq(p: int, q: int) -> None:
    if int(p) != p or p < 1 or int(q) != q or q < 1:
        raise DomainError(f"sphere dimensions p, q must be integers >= 1, got {p!r}, {q!r}")


def _check_order(r: int) -> None:
    if int(r) != r or r < 2:
        raise DomainError(f"order r must be an integer >= 2, got {r!r}")


def build_P(p: int, q: int, r: int) -> CubicPolynomial:
    """Cubic whose admissible roots t = R1^2 are the torus critical parameters.

    Coefficients are exact small integers, so P(0) = -p and P(1) = q hold
    exactly in floating point.
    """
    _check_pq(p, q)
    _check_order(r)
    return CubicPolynomial(
        float(r * (p + q)),
        float(q - p - r * (q + 2 * p)),
        float(2 * p + r * p),
        float(-p),
    )


def _refine_bracket(poly, lo: float, hi: float) -> float:
    """Bisect a sign-change bracket to machine width, then Newton-polish."""
    flo, fhi = poly(lo), poly(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = poly(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) != (fmid < 0.0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    root = lo if abs(flo) <= abs(fhi) else hi
    for _ in range(3):
        slope = poly.deriv(root)
        if slope == 0.0:
            break
        candidate = root - poly(root) / slope
        if candidate == root or not math.isfinite(candidate):
            break
        if abs(poly(candidate)) < abs(poly(root)):
            root = candidate
        else:
            break
    return root


def root_solve(
    poly: CubicPolynomial,
    interval: tuple[float, float] = (0.0, 1.0),
    tol: float = DEFAULT_ROOT_TOL,
    grid_points: int = SCAN_POINTS,
) -> list[float]:
    """All real roots of ``poly`` strictly inside the open interval, ascending.

    Brackets come from a uniform sign scan combined with the monotone pieces
    cut by the stationary points of the cubic (so root pairs below the grid
    resolution are still separated).  Double roots appear as tangencies: a
    stationary point where |P| sits at rounding level.  Bisection near a
    multiple root is fuzzy at the cube-root-of-roundoff scale, so candidates
    within that radius of a tangency are merged onto it; everything else is
    deduplicated at spacing ``tol`` and must satisfy |P| <= tol * scale.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if grid_points < 2:
        raise DomainError(f"grid_points must be >= 2, got {grid_points!r}")
    lo, hi = interval
    if not lo < hi:
        raise DomainError(f"empty interval {interval!r}")

    scale = max(1.0, poly.coefficient_scale)
    tangency_tol = 1e-12 * scale

    xs = np.linspace(lo, hi, grid_points + 1)
    vals = poly(xs)
    candidates: list[float] = []

    sign_change = np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]
    for i in sign_change:
        candidates.append(_refine_bracket(poly, float(xs[i]), float(xs[i + 1])))
    for i in np.nonzero(vals == 0.0)[0]:
        candidates.append(float(xs[i]))

    # monotone pieces: between consecutive stationary points the cubic is
    # injective, so an endpoint sign change pins down exactly one root
    stationary = [s for s in poly.stationary_points() if lo < s < hi]
    cuts = [lo, *stationary, hi]
    for left, right in zip(cuts[:-1], cuts[1:]):
        fl, fr = poly(left), poly(right)
        if fl == 0.0:
            candidates.append(left)
        if fl * fr < 0.0:
            candidates.append(_refine_bracket(poly, left, right))
    if poly(hi) == 0.0:
        candidates.append(hi)

    # tangencies: a double root leaves no sign change but pins |P| to
    # rounding level at a stationary point
    tangencies = [s for s in stationary if abs(poly(s)) <= tangency_tol]
    lead = max(abs(poly.c3), 1e-30)
    cluster_radius = 2.0 * (4.0 * tangency_tol / lead) ** (1.0 / 3.0)
    for s in tangencies:
        merged = [s] + [c for c in candidates if abs(c - s) <= cluster_radius]
        best = min(merged, key=lambda c: abs(poly(c)))
        candidates = [c for c in candidates if abs(c - s) > cluster_radius]
        candidates.append(best)

    roots: list[float] = []
    for t in sorted(candidates):
        if not lo < t < hi:
            continue
        if abs(poly(t)) > tol * scale:
            continue
        if roots and t - roots[-1] <= tol:
            if abs(poly(t)) < abs(poly(roots[-1])):
                roots[-1] = t
            continue
        roots.append(t)
    return roots


def solve_hypersphere(r: int) -> SolutionReport:
    """The unique proper critical radius R = 1/sqrt(r) of the hypersphere family."""
    _check_order(r)
    radius = 1.0 / math.sqrt(r)
    alpha_star = math.asin(radius)
    second = eps_r_deriv(alpha_star, r, 2)
    return SolutionReport(
        parameter=radius,
        alpha_star=alpha_star,
        kind=Kind.PROPER,
        stable=second > 0.0,
        residuals={"eps_r_prime": abs(eps_r_deriv(alpha_star, r, 1))},
    )


def enumerate_hypersphere_criticals(r: int) -> list[SolutionReport]:
    """All critical angles of the reduced density on (0, pi), ascending.

    These are the proper pair symmetric about the equator plus the equator
    itself, where the density attains its global minimum 0 (hence the
    harmonic entry is marked stable even though the second derivative
    degenerates there for r >= 3).
    """
    base = solve_hypersphere(r)
    half_pi = 0.5 * math.pi
    entries = []
    for alpha, kind in (
        (base.alpha_star, Kind.PROPER),
        (half_pi, Kind.HARMONIC),
        (math.pi - base.alpha_star, Kind.PROPER),
    ):
        stable = True if kind is Kind.HARMONIC else eps_r_deriv(alpha, r, 2) > 0.0
        entries.append(
            SolutionReport(
                parameter=math.sin(alpha),
                alpha_star=alpha,
                kind=kind,
                stable=stable,
                residuals={"eps_r_prime": abs(eps_r_deriv(alpha, r, 1))},
            )
        )
    return entries


def classify_torus_parameter(t: float, p: int, q: int, tol: float = MINIMAL_TOL) -> Kind:
    """Kind of the torus with R1^2 = t: minimal iff t matches p/(p+q) within tol."""
    _check_pq(p, q)
    return Kind.MINIMAL if abs(t - p / (p + q)) <= tol else Kind.PROPER


def _torus_report(t: float, p: int, q: int, r: int, kind: Kind, residuals: dict[str, float]) -> SolutionReport:
    cfg = CliffordConfig.from_t(p, q, r, t)
    return SolutionReport(
        parameter=t,
        alpha_star=math.asin(cfg.R1),
        kind=kind,
        stable=None,
        residuals=residuals,
        R1=cfg.R1,
        R2=cfg.R2,
    )


def solve_clifford(p: int, q: int, r: int, tol: float = DEFAULT_ROOT_TOL) -> list[SolutionReport]:
    """All admissible torus parameters for the given dimensions and order, ascending in t.

    Order 2 is special-cased: only the balanced torus t = 1/2 qualifies, and it
    is minimal exactly when p = q.  From order 3 on the parameters are the
    roots of the cubic inside (0, 1); roots within BOUNDARY_TOL of 0 or 1 are
    rejected as degenerate (a factor sphere collapses).
    """
    _check_pq(p, q)
    _check_order(r)
    if r == 2:
        t = 0.5
        kind = Kind.MINIMAL if p == q else Kind.PROPER
        cfg = CliffordConfig.from_t(p, q, r, t)
        residuals = {
            "P": abs(build_P(p, q, r)(t)),
            "eps_C_prime": abs(eps_C_deriv(math.asin(cfg.R1), cfg)),
        }
        return [_torus_report(t, p, q, r, kind, residuals)]

    poly = build_P(p, q, r)
    reports = []
    for t in root_solve(poly, (0.0, 1.0), tol):
        if t <= BOUNDARY_TOL or t >= 1.0 - BOUNDARY_TOL:
            continue
        cfg = CliffordConfig.from_t(p, q, r, t)
        residuals = {
            "P": abs(poly(t)),
            "residual_334": abs(residual_334(t, cfg)),
        }
        reports.append(_torus_report(t, p, q, r, classify_torus_parameter(t, p, q), residuals))
    return reports


def discriminant_condition(p: int, q: int, r: int) -> float:
    """Three-distinct-root certificate for the torus cubic: positive means three.

    Exact integer arithmetic; only the sign matters.
    """
    _check_pq(p, q)
    if r == 2:
        raise UnsupportedOrderError("the three-root certificate applies from order 3 on")
    _check_order(r)
    p, q, r = int(p), int(q), int(r)
    return float((r**4 - 4 * r**3 + 24 * r**2 - 40 * r - 8) * p * q + 4 * (1 - r) ** 3 * (p * p + q * q))


def clifford_sweep(
    p_range: tuple[int, int],
    q_range: tuple[int, int],
    r_range: tuple[int, int],
) -> list[dict]:
    """Solve the torus family over an inclusive integer grid, row-ordered by (p, q, r).

    Each row carries the admissible root list, its count, and the three-root
    certificate value (None at order 2, where the certificate does not apply).
    """
    for name, (lo, hi) in (("p", p_range), ("q", q_range), ("r", r_range)):
        if hi < lo:
            raise DomainError(f"empty {name} range {lo}:{hi}")
    rows = []
    for p in range(p_range[0], p_range[1] + 1):
        for q in range(q_range[0], q_range[1] + 1):
            for r in range(r_range[0], r_range[1] + 1):
                roots = [rep.parameter for rep in solve_clifford(p, q, r)]
                disc = discriminant_condition(p, q, r) if r >= 3 else None
                rows.append(
                    {"p": p, "q": q, "r": r, "count": len(roots), "disc": disc, "roots": roots}
                )
    return rows

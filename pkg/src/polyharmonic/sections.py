"""Operator-level rebuild of the tension-field ladder for the hypersphere family.

The equivariant reduction keeps every covariant object proportional either to
the radial coordinate direction or to the identity on the domain frame, so a
section of the pull-back bundle is carried here as a single scalar coefficient
tagged radial or tangential.  The module rebuilds, from that representation
alone,

* the tension field (radial, coefficient -(n-1) sin cos),
* the covariant-derivative step radial -> tangential (multiply by cot),
* the divergence step tangential -> radial (multiply by (n-1) sin cos),
* the rough Laplacian as the literal composition of the two,
* the constant-curvature action summed over the (n-1) frame directions,

and assembles the order-r tension coefficient from those pieces.  Closed
forms enter only through the base tension coefficient, which makes the
assembled result an independent check on the reduced-energy derivatives.

The chart machinery at the bottom computes Christoffel symbols numerically
from the warped metric sin^2(a) g_sphere + da^2 and exposes the closed-form
symbol table the operators rely on, so the ladder's algebra is itself checked
against raw metric differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .energies import sphere_volume
from .errors import ContractError, DomainError

__all__ = [
    "SectionKind",
    "CurvatureMode",
    "EquivariantSection",
    "tension",
    "apply_d",
    "apply_dstar",
    "rough_laplacian",
    "nabla_frame",
    "curvature_action",
    "tau_r",
    "operator_energy",
    "sphere_polar_metric",
    "warped_sphere_metric",
    "christoffel_from_metric",
    "christoffel_numeric",
    "ChristoffelTable",
]


class SectionKind(str, Enum):
    RADIAL = "radial"
    TANGENTIAL = "tangential"


class CurvatureMode(str, Enum):
    """Curvature contraction variants, each summed over the domain frame."""

    RADIAL_FRAME = "R(rad,e)e"
    FRAME_RADIAL = "R(e,rad)e"
    TANGENTIAL_RADIAL = "R(tang,rad)e-summed"


@dataclass(frozen=True)
class EquivariantSection:
    """A pull-back-bundle section carried by one scalar coefficient.

    Radial sections multiply the radial coordinate field; tangential sections
    multiply the identity pairing of domain frame and image frame.
    """

    kind: SectionKind
    coeff: float
    alpha: float
    n: int

    def __post_init__(self) -> None:
        if not math.isfinite(self.coeff):
            raise ContractError(f"section coefficient must be finite, got {self.coeff!r}")
        if not 0.0 < self.alpha < math.pi:
            raise DomainError(f"angle must lie in (0, pi), got {self.alpha!r}")
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"ambient dimension n must be an integer >= 2, got {self.n!r}")


def _require(section: EquivariantSection, kind: SectionKind, op: str) -> None:
    if section.kind is not kind:
        raise ContractError(f"{op} expects a {kind.value} section, got {section.kind.value}")


def tension(alpha: float, n: int) -> EquivariantSection:
    """Tension field of the latitude map: radial with coefficient -(n-1) sin cos."""
    coeff = -(n - 1) * math.sin(alpha) * math.cos(alpha)
    return EquivariantSection(SectionKind.RADIAL, coeff, alpha, n)


def apply_d(section: EquivariantSection) -> EquivariantSection:
    """Covariant derivative of a radial section: tangential, coefficient times cot.

    The only surviving Christoffel contraction is the mixed family
    Gamma^j_{i,rad} = cot(a) delta^j_i, which scales the frame identity.
    """
    _require(section, SectionKind.RADIAL, "apply_d")
    cot = math.cos(section.alpha) / math.sin(section.alpha)
    return EquivariantSection(SectionKind.TANGENTIAL, section.coeff * cot, section.alpha, section.n)


def apply_dstar(section: EquivariantSection) -> EquivariantSection:
    """Divergence of a tangential section: radial, coefficient times (n-1) sin cos.

    Tracing the derivative of the frame identity leaves only the normal
    family Gamma^rad_{ij} = -sin(a) cos(a) (g_S)_ij, contracted with the
    inverse sphere metric over the n-1 frame directions.
    """
    _require(section, SectionKind.TANGENTIAL, "apply_dstar")
    factor = (section.n - 1) * math.sin(section.alpha) * math.cos(section.alpha)
    return EquivariantSection(SectionKind.RADIAL, section.coeff * factor, section.alpha, section.n)


def rough_laplacian(section: EquivariantSection) -> EquivariantSection:
    """Rough Laplacian on radial sections: the literal composition of the two steps."""
    _require(section, SectionKind.RADIAL, "rough_laplacian")
    return apply_dstar(apply_d(section))


def nabla_frame(section: EquivariantSection) -> EquivariantSection:
    """Frame derivative of a radial section, in orthonormal-frame form.

    Same Christoffel contraction as ``apply_d``; kept separate because the
    curvature terms consume the orthonormal-frame form, not the coordinate
    one-form.
    """
    _require(section, SectionKind.RADIAL, "nabla_frame")
    return apply_d(section)


def curvature_action(
    section: EquivariantSection,
    mode: CurvatureMode,
    other: EquivariantSection | None = None,
) -> EquivariantSection:
    """Constant-curvature action R(X, Y)W = <Y, W> X - <X, W> Y, frame-summed.

    The frame images have squared length sin^2(a) and are orthogonal to the
    radial direction, so every variant collapses to a radial section:

    * RADIAL_FRAME:       sum_j R(section, e_j) e_j  ->  (n-1) sin^2(a) * coeff
    * FRAME_RADIAL:       sum_j R(e_j, section) e_j  ->  the negative
    * TANGENTIAL_RADIAL:  sum_j R(section_j, other) e_j with a tangential
      first slot and radial second  ->  -(n-1) sin^2(a) * coeff * other.coeff
    """
    mode = CurvatureMode(mode)
    s2 = math.sin(section.alpha) ** 2
    m = section.n - 1
    if mode is CurvatureMode.RADIAL_FRAME:
        _require(section, SectionKind.RADIAL, mode.value)
        coeff = m * s2 * section.coeff
    elif mode is CurvatureMode.FRAME_RADIAL:
        _require(section, SectionKind.RADIAL, mode.value)
        coeff = -m * s2 * section.coeff
    else:
        _require(section, SectionKind.TANGENTIAL, mode.value)
        if other is None:
            raise ContractError("the mixed curvature mode needs a radial second section")
        _require(other, SectionKind.RADIAL, mode.value)
        coeff = -m * s2 * section.coeff * other.coeff
    return EquivariantSection(SectionKind.RADIAL, coeff, section.alpha, section.n)


def tau_r(alpha: float, n: int, r: int) -> EquivariantSection:
    """Order-r tension coefficient assembled term by term from the ladder.

    Even orders r = 2s take the (2s-1)-fold Laplacian of the tension minus the
    frame-summed curvature term of the (2s-2)-fold one, minus the mixed
    curvature sum; odd orders shift the indices by one and append the extra
    mixed term.  Empty sums (s = 1) contribute nothing.
    """
    if int(r) != r or r < 2:
        raise DomainError(f"order r must be an integer >= 2, got {r!r}")

    lap = [tension(alpha, n)]
    for _ in range(r - 1):
        lap.append(rough_laplacian(lap[-1]))

    def mixed(frame_idx: int, radial_idx: int) -> float:
        """sum_j R(frame derivative of lap[frame_idx], lap[radial_idx]) e_j."""
        term = curvature_action(nabla_frame(lap[frame_idx]), CurvatureMode.TANGENTIAL_RADIAL, lap[radial_idx])
        return term.coeff

    if r % 2 == 0:
        s = r // 2
        coeff = lap[2 * s - 1].coeff
        coeff -= curvature_action(lap[2 * s - 2], CurvatureMode.RADIAL_FRAME).coeff
        for el in range(1, s):
            # the reversed-slot term equals minus the mixed form by antisymmetry
            coeff -= mixed(s + el - 2, s - el - 1) + mixed(s - el - 1, s + el - 2)
    else:
        s = (r - 1) // 2
        coeff = lap[2 * s].coeff
        coeff -= curvature_action(lap[2 * s - 1], CurvatureMode.RADIAL_FRAME).coeff
        for el in range(1, s):
            coeff -= mixed(s + el - 1, s - el - 1) + mixed(s - el - 1, s + el - 1)
        coeff -= mixed(s - 1, s - 1)
    return EquivariantSection(SectionKind.RADIAL, coeff, alpha, n)


def operator_energy(alpha: float, n: int, r: int) -> float:
    """Total order-r energy assembled from the ladder instead of closed forms.

    Even orders integrate the squared (r/2 - 1)-fold Laplacian of the tension
    (the radial direction has unit length); odd orders integrate the squared
    frame derivative, where each of the n-1 frame images has squared length
    sin^2(a).
    """
    if int(r) != r or r < 2:
        raise DomainError(f"order r must be an integer >= 2, got {r!r}")
    section = tension(alpha, n)
    for _ in range(r // 2 - 1):
        section = rough_laplacian(section)
    if r % 2 == 0:
        density = section.coeff**2
    else:
        section = nabla_frame(section)
        density = (n - 1) * math.sin(alpha) ** 2 * section.coeff**2
    return 0.5 * sphere_volume(n - 1) * density


# --------------------------------------------------------------------------
# chart-level Christoffel machinery
# --------------------------------------------------------------------------


def sphere_polar_metric(theta) -> np.ndarray:
    """Round metric of the unit sphere in nested polar coordinates.

    diag(1, sin^2 t1, sin^2 t1 sin^2 t2, ...), singular where any leading
    sine vanishes.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    diag = np.ones(theta.size)
    for j in range(1, theta.size):
        diag[j] = diag[j - 1] * math.sin(theta[j - 1]) ** 2
    return np.diag(diag)


def warped_sphere_metric(point) -> np.ndarray:
    """Metric sin^2(a) g_sphere + da^2 of the ambient sphere; a is the last coordinate."""
    point = np.asarray(point, dtype=float)
    theta, alpha = point[:-1], point[-1]
    m = theta.size
    g = np.zeros((m + 1, m + 1))
    g[:m, :m] = math.sin(alpha) ** 2 * sphere_polar_metric(theta)
    g[m, m] = 1.0
    return g


def _metric_partial(metric_fn, point: np.ndarray, axis: int, h: float) -> np.ndarray:
    offset = np.zeros_like(point)
    offset[axis] = h
    return (metric_fn(point + offset) - metric_fn(point - offset)) / (2.0 * h)


def christoffel_from_metric(metric_fn, point, step: float = 1e-5) -> np.ndarray:
    """Symbols Gamma^k_{ij} from the metric alone.

    Metric derivatives use central differences with one Richardson level.
    Returned array is indexed [k, i, j].
    """
    point = np.asarray(point, dtype=float)
    dim = point.size
    g = metric_fn(point)
    # determinants shrink geometrically with nesting depth, so gauge
    # singularity by conditioning instead
    if not np.all(np.isfinite(g)) or np.linalg.det(g) == 0.0 or np.linalg.cond(g) > 1e9:
        raise DomainError("chart is singular at the requested point")
    ginv = np.linalg.inv(g)

    partials = np.empty((dim, dim, dim))  # partials[l, i, j] = d g_ij / d y_l
    for axis in range(dim):
        coarse = _metric_partial(metric_fn, point, axis, step)
        fine = _metric_partial(metric_fn, point, axis, step / 2.0)
        partials[axis] = (4.0 * fine - coarse) / 3.0

    # Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_li - d_l g_ij); as [i, j, l]
    # arrays: d_i g_jl is partials itself, d_j g_li needs [i,j,l] -> A[j,l,i],
    # d_l g_ij needs [i,j,l] -> A[l,i,j]
    combo = (
        partials
        + partials.transpose(2, 0, 1)
        - partials.transpose(1, 2, 0)
    )
    return 0.5 * np.einsum("kl,ijl->kij", ginv, combo)


def christoffel_numeric(alpha: float, chart_point, n: int, step: float = 1e-5) -> np.ndarray:
    """All ambient-chart symbols at (chart_point, alpha), from the metric alone."""
    if int(n) != n or n < 2:
        raise DomainError(f"ambient dimension n must be an integer >= 2, got {n!r}")
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"angle must lie in (0, pi), got {alpha!r}")
    chart_point = np.atleast_1d(np.asarray(chart_point, dtype=float))
    if chart_point.size != n - 1:
        raise DomainError(f"chart point must have {n - 1} coordinates, got {chart_point.size}")
    point = np.append(chart_point, alpha)
    return christoffel_from_metric(warped_sphere_metric, point, step)


@dataclass(frozen=True)
class ChristoffelTable:
    """Closed-form symbol families of the warped chart at a fixed base point.

    Index convention matches ``christoffel_numeric``: angular coordinates
    first, the latitude angle last.
    """

    alpha: float
    chart_point: tuple[float, ...]

    def normal_from_frame(self, i: int, j: int) -> float:
        """Gamma^rad_{ij} for angular i, j: -sin(a) cos(a) (g_S)_ij."""
        g_s = sphere_polar_metric(self.chart_point)
        return -math.sin(self.alpha) * math.cos(self.alpha) * g_s[i, j]

    def frame_from_radial(self, i: int, j: int) -> float:
        """Gamma^j_{i,rad}: cot(a) on the diagonal, zero off it."""
        if i != j:
            return 0.0
        return math.cos(self.alpha) / math.sin(self.alpha)

    def radial_degenerate(self) -> float:
        """Gamma^._{rad,rad} and Gamma^rad_{.,rad}: identically zero."""
        return 0.0

    def closed(self, step: float = 1e-5) -> np.ndarray:
        """The full closed-form array [k, i, j].

        The purely angular block passes through the symbols of the unwarped
        sphere metric (the sin^2(a) factor cancels), computed here from the
        sphere metric alone.
        """
        m = len(self.chart_point)
        table = np.zeros((m + 1, m + 1, m + 1))
        table[:m, :m, :m] = christoffel_from_metric(
            sphere_polar_metric, np.asarray(self.chart_point, dtype=float), step
        )
        g_s = sphere_polar_metric(self.chart_point)
        table[m, :m, :m] = -math.sin(self.alpha) * math.cos(self.alpha) * g_s
        cot = math.cos(self.alpha) / math.sin(self.alpha)
        for i in range(m):
            table[i, i, m] = cot
            table[i, m, i] = cot
        return table

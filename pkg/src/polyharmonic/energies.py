"""Reduced one-variable energies of the two equivariant immersion families.

Two families are covered.  The hypersphere family maps the unit sphere of
dimension n-1 into the unit sphere of dimension n at latitude angle ``a``;
its order-r energy density reduces to

    eps_r(a) = sin^2(a) * cos^(2(r-1))(a)           on (0, pi).

The generalized Clifford family embeds a product of two spheres of radii
R1, R2 (with R1^2 + R2^2 = 1) into the sphere of one dimension more; its
reduced density is

    eps_C(a) = sin^2(a) cos^2(a) * [p/R1^2 cos^2(a) + q/R2^2 sin^2(a)]^(r-2)

on (0, pi/2), where the bracket power is the empty product (= 1) at r = 2.

Everything here is a pure function of its arguments; angles are radians.
Derivatives are hand-differentiated closed forms -- numerical differentiation
lives only in the oracle module so the two routes stay independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, UnsupportedOrderError

__all__ = [
    "HypersphereConfig",
    "CliffordConfig",
    "EnergyValue",
    "eps_r",
    "eps_r_deriv",
    "eps_C",
    "eps_C_deriv",
    "residual_334",
    "total_energy",
    "sphere_volume",
    "reduced_energy_at",
]


def _check_order(r: int) -> None:
    if int(r) != r or r < 2:
        raise DomainError(f"order r must be an integer >= 2, got {r!r}")


def _check_alpha(alpha: float, upper: float) -> None:
    if not 0.0 < alpha < upper:
        raise DomainError(f"angle must lie in (0, {upper:.6g}), got {alpha!r}")


@dataclass(frozen=True)
class HypersphereConfig:
    """Order and ambient dimension for the hypersphere family."""

    r: int
    n: int

    def __post_init__(self) -> None:
        _check_order(self.r)
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"ambient dimension n must be an integer >= 2, got {self.n!r}")


@dataclass(frozen=True)
class CliffordConfig:
    """Sphere factor dimensions, order and radii of a generalized Clifford torus.

    R2 is always derived from R1, so the constraint R1^2 + R2^2 = 1 holds by
    construction rather than by caller discipline.
    """

    p: int
    q: int
    r: int
    R1: float
    R2: float = field(init=False)

    def __post_init__(self) -> None:
        if int(self.p) != self.p or self.p < 1 or int(self.q) != self.q or self.q < 1:
            raise DomainError(f"sphere dimensions p, q must be integers >= 1, got {self.p!r}, {self.q!r}")
        _check_order(self.r)
        if not 0.0 < self.R1 < 1.0:
            raise DomainError(f"R1 must lie in (0, 1), got {self.R1!r}")
        object.__setattr__(self, "R2", math.sqrt(1.0 - self.R1 * self.R1))

    @classmethod
    def from_t(cls, p: int, q: int, r: int, t: float) -> "CliffordConfig":
        """Build a configuration from the squared first radius t = R1^2."""
        if not 0.0 < t < 1.0:
            raise DomainError(f"t = R1^2 must lie in (0, 1), got {t!r}")
        return cls(p, q, r, math.sqrt(t))


@dataclass(frozen=True)
class EnergyValue:
    """A reduced-energy sample: the (nonnegative) density value at an angle."""

    value: float
    alpha: float

    def __post_init__(self) -> None:
        if not self.value >= 0.0:
            raise DomainError(f"reduced energies are nonnegative, got {self.value!r}")


def eps_r(alpha: float, r: int) -> float:
    """Reduced order-r density sin^2(a) cos^(2(r-1))(a) of the hypersphere family."""
    _check_alpha(alpha, math.pi)
    _check_order(r)
    s = math.sin(alpha)
    c = math.cos(alpha)
    return s * s * c ** (2 * (r - 1))


def eps_r_deriv(alpha: float, r: int, order: int = 1) -> float:
    """First or second derivative of ``eps_r`` in the angle (closed form)."""
    _check_alpha(alpha, math.pi)
    _check_order(r)
    s = math.sin(alpha)
    c = math.cos(alpha)
    if order == 1:
        # d/da [s^2 c^(2r-2)] = 2 s c^(2r-3) (c^2 - (r-1) s^2)
        return 2.0 * s * c ** (2 * r - 3) * (c * c - (r - 1) * s * s)
    if order == 2:
        s2 = s * s
        c2 = c * c
        return 2.0 * c ** (2 * r - 4) * (
            c2 * c2 - (5 * r - 4) * s2 * c2 + (r - 1) * (2 * r - 3) * s2 * s2
        )
    raise DomainError(f"derivative order must be 1 or 2, got {order!r}")


def _weights(cfg: CliffordConfig) -> tuple[float, float]:
    return cfg.p / (cfg.R1 * cfg.R1), cfg.q / (cfg.R2 * cfg.R2)


def eps_C(alpha: float, cfg: CliffordConfig) -> float:
    """Reduced order-r density of the Clifford family on (0, pi/2)."""
    _check_alpha(alpha, math.pi / 2)
    s = math.sin(alpha)
    c = math.cos(alpha)
    s2, c2 = s * s, c * c
    if cfg.r == 2:
        return s2 * c2
    pw, qw = _weights(cfg)
    return s2 * c2 * (pw * c2 + qw * s2) ** (cfg.r - 2)


def eps_C_deriv(alpha: float, cfg: CliffordConfig) -> float:
    """d eps_C / d alpha (closed form)."""
    _check_alpha(alpha, math.pi / 2)
    s = math.sin(alpha)
    c = math.cos(alpha)
    s2, c2 = s * s, c * c
    lead = 2.0 * s * c * (c2 - s2)
    if cfg.r == 2:
        return lead
    pw, qw = _weights(cfg)
    bracket = pw * c2 + qw * s2
    return lead * bracket ** (cfg.r - 2) + 2.0 * (cfg.r - 2) * s2 * s * c2 * c * (qw - pw) * bracket ** (cfg.r - 3)


def residual_334(sin_sq: float, cfg: CliffordConfig) -> float:
    """Quadratic residual in t = sin^2(alpha) whose zeros are the interior critical angles.

    Only meaningful for r >= 3; at r = 2 the density has no bracket term and
    this reduction does not apply.
    """
    if cfg.r == 2:
        raise UnsupportedOrderError("the interior criticality residual requires order r >= 3")
    if not math.isfinite(sin_sq):
        raise DomainError(f"sin^2(alpha) must be finite, got {sin_sq!r}")
    pw, qw = _weights(cfg)
    t = sin_sq
    return pw + ((cfg.r - 1) * (qw - pw) - 2.0 * pw) * t + cfg.r * (pw - qw) * t * t


def sphere_volume(dim: int) -> float:
    """Surface volume of the round unit sphere of the given dimension.

    Uses the standard closed form 2 pi^((d+1)/2) / Gamma((d+1)/2).
    """
    if int(dim) != dim or dim < 1:
        raise DomainError(f"sphere dimension must be an integer >= 1, got {dim!r}")
    half = 0.5 * (dim + 1)
    return 2.0 * math.pi ** half / math.gamma(half)


def total_energy(cfg: HypersphereConfig, alpha: float) -> float:
    """Total order-r energy of the latitude-``alpha`` hypersphere immersion."""
    return 0.5 * sphere_volume(cfg.n - 1) * float(cfg.n - 1) ** cfg.r * eps_r(alpha, cfg.r)


def reduced_energy_at(alpha: float, cfg: HypersphereConfig | CliffordConfig) -> EnergyValue:
    """Sample the reduced density of either family as an ``EnergyValue``."""
    if isinstance(cfg, HypersphereConfig):
        return EnergyValue(eps_r(alpha, cfg.r), alpha)
    return EnergyValue(eps_C(alpha, cfg), alpha)

"""Named verification batteries behind the ``verify`` command.

Each battery aggregates one family of invariants into OracleReport records;
``run_suite`` dispatches by name.  Passing an explicit tolerance overrides the
per-check defaults wholesale (useful for loosening on exotic platforms or for
forcing a failure demonstration).
"""

from __future__ import annotations

import math
import random

import numpy as np

from .energies import (
    CliffordConfig,
    HypersphereConfig,
    eps_C_deriv,
    eps_r,
    eps_r_deriv,
    residual_334,
    total_energy,
)
from .oracles import OracleReport, scan_roots, verify_clifford_criticality, verify_variation
from .sections import (
    ChristoffelTable,
    apply_d,
    apply_dstar,
    christoffel_numeric,
    operator_energy,
    rough_laplacian,
    tau_r,
    tension,
)
from .solvers import (
    build_P,
    classify_torus_parameter,
    discriminant_condition,
    root_solve,
    solve_clifford,
    Kind,
)

__all__ = ["SUITE_NAMES", "run_suite", "suite_energy", "suite_ladder", "suite_tau", "suite_clifford"]

SUITE_NAMES = ("energy", "ladder", "tau", "clifford", "all")

_SEED = 20240811


def _alpha_grid(count: int = 200, lo: float = 0.05, hi: float = math.pi - 0.05) -> np.ndarray:
    # even count never lands exactly on pi/2
    return np.linspace(lo, hi, count)


def suite_energy(tol: float | None = None) -> list[OracleReport]:
    reports = []

    worst, samples = 0.0, 0
    for r in range(2, 9):
        for n in range(2, 6):
            cfg = HypersphereConfig(r=r, n=n)
            for alpha in _alpha_grid(40):
                closed = total_energy(cfg, alpha)
                assembled = operator_energy(alpha, n, r)
                worst = max(worst, abs(assembled - closed) / max(closed, 1e-300))
                samples += 1
    reports.append(OracleReport.from_residual("energy.operator_route", worst, samples, tol or 1e-10))

    worst, samples = 0.0, 0
    for r in range(2, 9):
        for alpha in _alpha_grid(200):
            lhs = eps_r(alpha, r + 1)
            rhs = math.cos(alpha) ** 2 * eps_r(alpha, r)
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300))
            samples += 1
    reports.append(OracleReport.from_residual("energy.density_recursion", worst, samples, tol or 1e-13))

    worst, samples = 0.0, 0
    for r in range(2, 8):
        for n in range(2, 6):
            lower = HypersphereConfig(r=r, n=n)
            upper = HypersphereConfig(r=r + 1, n=n)
            for alpha in _alpha_grid(50):
                ratio = total_energy(upper, alpha) / total_energy(lower, alpha)
                target = (n - 1) * math.cos(alpha) ** 2
                worst = max(worst, abs(ratio - target) / max(1.0, abs(target)))
                samples += 1
    reports.append(OracleReport.from_residual("energy.order_ratio", worst, samples, tol or 1e-12))

    return reports


def suite_ladder(tol: float | None = None) -> list[OracleReport]:
    reports = []

    worst_d, worst_dstar, worst_power, samples = 0.0, 0.0, 0.0, 0
    for n in range(2, 6):
        for alpha in _alpha_grid(100):
            base = tension(alpha, n)
            first = apply_d(base)
            target_first = -(n - 1) * math.cos(alpha) ** 2
            worst_d = max(worst_d, abs(first.coeff - target_first) / max(1.0, abs(target_first)))

            second = apply_dstar(first)
            target_second = (n - 1) * first.coeff * math.sin(alpha) * math.cos(alpha)
            worst_dstar = max(worst_dstar, abs(second.coeff - target_second) / max(1.0, abs(target_second)))

            section = base
            factor = (n - 1) * math.cos(alpha) ** 2
            for s in range(1, 7):
                section = rough_laplacian(section)
                target = factor**s * base.coeff
                worst_power = max(worst_power, abs(section.coeff - target) / max(1.0, abs(target)))
            samples += 1
    reports.append(OracleReport.from_residual("ladder.first_step", worst_d, samples, tol or 1e-13))
    reports.append(OracleReport.from_residual("ladder.divergence_step", worst_dstar, samples, tol or 1e-13))
    reports.append(OracleReport.from_residual("ladder.laplacian_power", worst_power, samples * 6, tol or 1e-12))

    rng = random.Random(_SEED)
    worst, samples = 0.0, 0
    for _ in range(50):
        n = rng.randint(2, 6)
        alpha = rng.uniform(0.3, math.pi - 0.3)
        point = tuple(rng.uniform(0.3, math.pi - 0.3) for _ in range(n - 1))
        numeric = christoffel_numeric(alpha, point, n)
        closed = ChristoffelTable(alpha, point).closed()
        worst = max(worst, float(np.max(np.abs(numeric - closed))))
        samples += 1
    reports.append(OracleReport.from_residual("ladder.christoffel_table", worst, samples, tol or 1e-7))

    return reports


def suite_tau(tol: float | None = None) -> list[OracleReport]:
    reports = []

    worst, samples = 0.0, 0
    for r in range(2, 7):
        for n in range(2, 6):
            constant = 0.5 * float(n - 1) ** r
            for alpha in _alpha_grid(200):
                assembled = tau_r(alpha, n, r).coeff
                target = -constant * eps_r_deriv(alpha, r, 1)
                worst = max(worst, abs(assembled - target) / max(1.0, abs(assembled), abs(target)))
                samples += 1
    reports.append(OracleReport.from_residual("tau.master_identity", worst, samples, tol or 1e-9))

    worst, samples = 0.0, 0
    for r in range(2, 7):
        for n in range(2, 5):
            alphas = [0.4, 0.9, 1.3, 2.2, math.asin(1.0 / math.sqrt(r))]
            for alpha in alphas:
                report = verify_variation(alpha, n, r)
                worst = max(worst, report.max_residual)
                samples += 1
    reports.append(OracleReport.from_residual("tau.variation_routes", worst, samples, tol or 1e-7))

    return reports


def suite_clifford(tol: float | None = None) -> list[OracleReport]:
    reports = []
    rng = random.Random(_SEED)

    # independent evaluators of the same criticality condition must factor:
    # d(eps_C)/da = 2 sin cos bracket^(r-3) * residual(sin^2)
    worst, samples = 0.0, 0
    for _ in range(100):
        p, q = rng.randint(1, 16), rng.randint(1, 16)
        r = rng.randint(3, 12)
        cfg = CliffordConfig(p, q, r, rng.uniform(0.2, 0.98))
        alpha = rng.uniform(0.1, 0.5 * math.pi - 0.1)
        s2 = math.sin(alpha) ** 2
        c2 = math.cos(alpha) ** 2
        bracket = (p / cfg.R1**2) * c2 + (q / cfg.R2**2) * s2
        lhs = eps_C_deriv(alpha, cfg)
        rhs = 2.0 * math.sin(alpha) * math.cos(alpha) * bracket ** (r - 3) * residual_334(s2, cfg)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
        samples += 1
    reports.append(OracleReport.from_residual("clifford.derivative_factorization", worst, samples, tol or 1e-9))

    worst, samples = 0.0, 0
    for p in (1, 2, 5, 8):
        for q in (1, 3, 6, 8):
            for r in (3, 4, 5, 12, 25, 40):
                for rep in solve_clifford(p, q, r):
                    check = verify_clifford_criticality(rep.parameter, p, q, r)
                    worst = max(worst, check.max_residual)
                    samples += 1
    reports.append(OracleReport.from_residual("clifford.root_criticality", worst, samples, tol or 1e-8))

    worst, samples = 0.0, 0
    for _ in range(12):
        p, q = rng.randint(1, 16), rng.randint(1, 16)
        t = p / (p + q)
        gap = abs(p / t - q / (1.0 - t))
        if classify_torus_parameter(t, p, q) is not Kind.MINIMAL:
            gap = math.inf
        worst = max(worst, gap)
        samples += 1
    reports.append(OracleReport.from_residual("clifford.minimal_parameter", worst, samples, tol or 1e-10))

    worst, samples = 0.0, 0
    for p in (1, 2, 4, 8):
        for q in (1, 3, 8):
            for r in (3, 5, 10, 20, 40):
                condition = discriminant_condition(p, q, r)
                if condition <= 0.0:
                    continue
                roots = root_solve(build_P(p, q, r))
                brackets = scan_roots(build_P(p, q, r), (0.0, 1.0), 100_001)
                worst = max(worst, abs(len(roots) - 3.0), abs(len(brackets) - 3.0))
                samples += 1
    reports.append(OracleReport.from_residual("clifford.three_root_certificate", worst, samples, tol or 0.5))

    return reports


_SUITES = {
    "energy": suite_energy,
    "ladder": suite_ladder,
    "tau": suite_tau,
    "clifford": suite_clifford,
}


def run_suite(name: str, tol: float | None = None) -> list[OracleReport]:
    """Run the named battery (or every battery for ``all``)."""
    if name == "all":
        reports = []
        for key in ("energy", "ladder", "tau", "clifford"):
            reports.extend(_SUITES[key](tol))
        return reports
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    return _SUITES[name](tol)

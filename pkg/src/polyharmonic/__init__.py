"""Critical radii of polyharmonic hypersphere and Clifford-torus immersions.

The package computes the proper critical parameters of the two classical
equivariant families of immersions into round spheres and verifies them three
independent ways: closed-form reduced energies, an operator-level rebuild of
the tension ladder, and finite-difference / brute-force oracles.
"""

__version__ = "0.1.0"

from .energies import (
    CliffordConfig,
    EnergyValue,
    HypersphereConfig,
    eps_C,
    eps_C_deriv,
    eps_r,
    eps_r_deriv,
    reduced_energy_at,
    residual_334,
    sphere_volume,
    total_energy,
)
from .errors import ContractError, DomainError, UnsupportedOrderError
from .oracles import OracleReport, fd_derivative, scan_roots, verify_clifford_criticality, verify_variation
from .sections import (
    ChristoffelTable,
    CurvatureMode,
    EquivariantSection,
    SectionKind,
    apply_d,
    apply_dstar,
    christoffel_numeric,
    curvature_action,
    nabla_frame,
    operator_energy,
    rough_laplacian,
    tau_r,
    tension,
)
from .solvers import (
    CubicPolynomial,
    Kind,
    SolutionReport,
    build_P,
    classify_torus_parameter,
    clifford_sweep,
    discriminant_condition,
    enumerate_hypersphere_criticals,
    root_solve,
    solve_clifford,
    solve_hypersphere,
)
from .suites import SUITE_NAMES, run_suite

__all__ = [
    "__version__",
    "CliffordConfig",
    "EnergyValue",
    "HypersphereConfig",
    "eps_C",
    "eps_C_deriv",
    "eps_r",
    "eps_r_deriv",
    "reduced_energy_at",
    "residual_334",
    "sphere_volume",
    "total_energy",
    "ContractError",
    "DomainError",
    "UnsupportedOrderError",
    "OracleReport",
    "fd_derivative",
    "scan_roots",
    "verify_clifford_criticality",
    "verify_variation",
    "ChristoffelTable",
    "CurvatureMode",
    "EquivariantSection",
    "SectionKind",
    "apply_d",
    "apply_dstar",
    "christoffel_numeric",
    "curvature_action",
    "nabla_frame",
    "operator_energy",
    "rough_laplacian",
    "tau_r",
    "tension",
    "CubicPolynomial",
    "Kind",
    "SolutionReport",
    "build_P",
    "classify_torus_parameter",
    "clifford_sweep",
    "discriminant_condition",
    "enumerate_hypersphere_criticals",
    "root_solve",
    "solve_clifford",
    "solve_hypersphere",
    "SUITE_NAMES",
    "run_suite",
]

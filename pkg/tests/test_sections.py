"""Section calculus: ladder identities, curvature action, assembled tension."""

import math
import random

import numpy as np
import pytest

from polyharmonic import (
    ChristoffelTable,
    ContractError,
    CurvatureMode,
    DomainError,
    EquivariantSection,
    HypersphereConfig,
    SectionKind,
    apply_d,
    apply_dstar,
    christoffel_numeric,
    curvature_action,
    eps_r_deriv,
    nabla_frame,
    operator_energy,
    rough_laplacian,
    tau_r,
    tension,
    total_energy,
)
from polyharmonic.sections import christoffel_from_metric, sphere_polar_metric


class TestSectionType:
    def test_rejects_nonfinite_coefficient(self):
        with pytest.raises(ContractError):
            EquivariantSection(SectionKind.RADIAL, math.nan, 1.0, 3)

    def test_rejects_bad_angle_and_dimension(self):
        with pytest.raises(DomainError):
            EquivariantSection(SectionKind.RADIAL, 1.0, 0.0, 3)
        with pytest.raises(DomainError):
            EquivariantSection(SectionKind.RADIAL, 1.0, 1.0, 1)


class TestLadder:
    def test_tension_values(self):
        assert tension(math.pi / 4, 3).coeff == pytest.approx(-1.0, rel=1e-14)
        assert abs(tension(math.pi / 2, 5).coeff) < 1e-15
        assert tension(1.0, 4).coeff < 0.0  # negative on the first quadrant

    def test_first_step_reproduces_cot_scaling(self):
        base = tension(math.pi / 4, 3)
        stepped = apply_d(base)
        assert stepped.kind is SectionKind.TANGENTIAL
        assert stepped.coeff == pytest.approx(-2.0 * math.cos(math.pi / 4) ** 2, rel=1e-14)
        # unit coefficient at pi/4 passes through unchanged
        unit = EquivariantSection(SectionKind.RADIAL, 1.0, math.pi / 4, 3)
        assert apply_d(unit).coeff == pytest.approx(1.0, rel=1e-14)

    def test_first_step_linear_in_coefficient(self):
        zero = EquivariantSection(SectionKind.RADIAL, 0.0, 1.1, 4)
        assert apply_d(zero).coeff == 0.0

    def test_divergence_step(self):
        rng = random.Random(31)
        for _ in range(50):
            n = rng.randint(2, 7)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            base = tension(alpha, n)
            stepped = apply_dstar(apply_d(base))
            target = (n - 1) * apply_d(base).coeff * math.sin(alpha) * math.cos(alpha)
            assert stepped.coeff == pytest.approx(target, rel=1e-13, abs=1e-15)
            # the composition closes back to (n-1) cos^2 times the input
            assert stepped.coeff == pytest.approx(
                (n - 1) * math.cos(alpha) ** 2 * base.coeff, rel=1e-13, abs=1e-15
            )

    def test_divergence_unit_value(self):
        unit = EquivariantSection(SectionKind.TANGENTIAL, 1.0, math.pi / 4, 3)
        assert apply_dstar(unit).coeff == pytest.approx(1.0, rel=1e-14)

    def test_rough_laplacian_is_the_composition(self):
        rng = random.Random(32)
        for _ in range(30):
            n = rng.randint(2, 6)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            section = EquivariantSection(SectionKind.RADIAL, rng.uniform(-2, 2), alpha, n)
            assert rough_laplacian(section).coeff == apply_dstar(apply_d(section)).coeff

    def test_rough_laplacian_unit_value(self):
        unit = EquivariantSection(SectionKind.RADIAL, 1.0, math.pi / 4, 3)
        assert rough_laplacian(unit).coeff == pytest.approx(1.0, rel=1e-14)

    def test_iterated_laplacian_power_closed_form(self):
        rng = random.Random(33)
        for _ in range(30):
            n = rng.randint(2, 6)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            base = tension(alpha, n)
            section = base
            factor = (n - 1) * math.cos(alpha) ** 2
            for s in range(1, 7):
                section = rough_laplacian(section)
                assert section.coeff == pytest.approx(factor**s * base.coeff, rel=1e-12, abs=1e-15)

    def test_frame_derivative_matches_first_step(self):
        rng = random.Random(34)
        for _ in range(30):
            n = rng.randint(2, 6)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            section = EquivariantSection(SectionKind.RADIAL, rng.uniform(-3, 3), alpha, n)
            assert nabla_frame(section).coeff == apply_d(section).coeff
        lifted = nabla_frame(rough_laplacian(tension(0.9, 4)))
        target = rough_laplacian(tension(0.9, 4)).coeff / math.tan(0.9)
        assert lifted.coeff == pytest.approx(target, rel=1e-13)

    def test_kind_contracts(self):
        radial = EquivariantSection(SectionKind.RADIAL, 1.0, 1.0, 3)
        tangential = EquivariantSection(SectionKind.TANGENTIAL, 1.0, 1.0, 3)
        with pytest.raises(ContractError):
            apply_d(tangential)
        with pytest.raises(ContractError):
            apply_dstar(radial)
        with pytest.raises(ContractError):
            rough_laplacian(tangential)
        with pytest.raises(ContractError):
            nabla_frame(tangential)


class TestCurvature:
    def test_radial_frame_value(self):
        section = EquivariantSection(SectionKind.RADIAL, 1.0, math.pi / 4, 3)
        out = curvature_action(section, CurvatureMode.RADIAL_FRAME)
        assert out.kind is SectionKind.RADIAL
        assert out.coeff == pytest.approx(1.0, rel=1e-14)  # (n-1) sin^2 = 2 * 1/2

    def test_antisymmetry(self):
        rng = random.Random(35)
        for _ in range(20):
            section = EquivariantSection(
                SectionKind.RADIAL, rng.uniform(-2, 2), rng.uniform(0.1, 3.0), rng.randint(2, 6)
            )
            plus = curvature_action(section, CurvatureMode.RADIAL_FRAME).coeff
            minus = curvature_action(section, CurvatureMode.FRAME_RADIAL).coeff
            assert plus == -minus

    def test_linearity(self):
        base = EquivariantSection(SectionKind.RADIAL, 1.0, 0.8, 4)
        scaled = EquivariantSection(SectionKind.RADIAL, 2.5, 0.8, 4)
        assert curvature_action(scaled, CurvatureMode.RADIAL_FRAME).coeff == pytest.approx(
            2.5 * curvature_action(base, CurvatureMode.RADIAL_FRAME).coeff, rel=1e-15
        )

    def test_mixed_mode_multiplies_coefficients(self):
        tangential = EquivariantSection(SectionKind.TANGENTIAL, 3.0, 0.8, 4)
        radial = EquivariantSection(SectionKind.RADIAL, -2.0, 0.8, 4)
        out = curvature_action(tangential, CurvatureMode.TANGENTIAL_RADIAL, radial)
        expected = -3.0 * math.sin(0.8) ** 2 * 3.0 * -2.0
        assert out.coeff == pytest.approx(expected, rel=1e-14)

    def test_mode_contracts(self):
        radial = EquivariantSection(SectionKind.RADIAL, 1.0, 1.0, 3)
        tangential = EquivariantSection(SectionKind.TANGENTIAL, 1.0, 1.0, 3)
        with pytest.raises(ContractError):
            curvature_action(tangential, CurvatureMode.RADIAL_FRAME)
        with pytest.raises(ContractError):
            curvature_action(tangential, CurvatureMode.TANGENTIAL_RADIAL)  # missing partner
        with pytest.raises(ContractError):
            curvature_action(radial, CurvatureMode.TANGENTIAL_RADIAL, radial)


class TestTau:
    def test_vanishes_at_proper_critical_point(self):
        for r in (2, 3, 5):
            alpha = math.asin(1.0 / math.sqrt(r))
            assert abs(tau_r(alpha, 3, r).coeff) < 1e-12

    def test_vanishes_at_equator(self):
        for r in (2, 4, 6):
            assert abs(tau_r(math.pi / 2, 4, r).coeff) < 1e-13

    def test_order_two_closed_form(self):
        coeff = tau_r(1.0, 3, 2).coeff
        assert coeff == pytest.approx(-2.0 * math.sin(2.0) * math.cos(2.0), rel=1e-13)

    def test_master_identity(self):
        rng = random.Random(36)
        for _ in range(200):
            r = rng.randint(2, 6)
            n = rng.randint(2, 5)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            assembled = tau_r(alpha, n, r).coeff
            target = -0.5 * float(n - 1) ** r * eps_r_deriv(alpha, r, 1)
            assert abs(assembled - target) <= 1e-9 * max(1.0, abs(assembled), abs(target))


class TestOperatorEnergy:
    def test_matches_closed_form(self):
        rng = random.Random(37)
        for _ in range(100):
            r = rng.randint(2, 8)
            n = rng.randint(2, 5)
            alpha = rng.uniform(0.05, math.pi - 0.05)
            closed = total_energy(HypersphereConfig(r=r, n=n), alpha)
            assert operator_energy(alpha, n, r) == pytest.approx(closed, rel=1e-10)


class TestChristoffel:
    def test_degenerate_radial_entries_vanish(self):
        gamma = christoffel_numeric(0.9, (0.8, 1.2), 3)
        assert np.max(np.abs(gamma[:, 3 - 1, 3 - 1])) < 1e-9
        assert np.max(np.abs(gamma[3 - 1, :, 3 - 1])) < 1e-9

    def test_cot_scaling_family(self):
        gamma = christoffel_numeric(math.pi / 3, (0.8, 1.2), 3)
        expected = 1.0 / math.sqrt(3.0)
        for i in range(2):
            assert gamma[i, i, 2] == pytest.approx(expected, abs=1e-9)
            assert gamma[i, 2, i] == pytest.approx(expected, abs=1e-9)
        assert abs(gamma[0, 1, 2]) < 1e-9

    def test_normal_family_scales_the_sphere_metric(self):
        point = (0.8, 1.2)
        gamma = christoffel_numeric(math.pi / 4, point, 3)
        g_s = sphere_polar_metric(point)
        for i in range(2):
            for j in range(2):
                assert gamma[2, i, j] == pytest.approx(-0.5 * g_s[i, j], abs=1e-9)

    def test_tangential_block_passes_through(self):
        # the warp factor cancels: the angular block equals the bare sphere symbols
        point = np.array([0.8, 1.2])
        full = christoffel_numeric(1.1, tuple(point), 3)
        bare = christoffel_from_metric(sphere_polar_metric, point)
        assert np.max(np.abs(full[:2, :2, :2] - bare)) < 1e-9

    def test_closed_table_against_numeric(self):
        rng = random.Random(38)
        for _ in range(50):
            n = rng.randint(2, 6)
            alpha = rng.uniform(0.3, math.pi - 0.3)
            point = tuple(rng.uniform(0.3, math.pi - 0.3) for _ in range(n - 1))
            numeric = christoffel_numeric(alpha, point, n)
            closed = ChristoffelTable(alpha, point).closed()
            assert float(np.max(np.abs(numeric - closed))) < 1e-7

    def test_table_evaluators(self):
        table = ChristoffelTable(math.pi / 3, (0.8,))
        assert table.frame_from_radial(0, 0) == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-14)
        assert table.frame_from_radial(0, 1) == 0.0
        assert table.radial_degenerate() == 0.0
        assert table.normal_from_frame(0, 0) == pytest.approx(
            -math.sin(math.pi / 3) * math.cos(math.pi / 3), rel=1e-14
        )

    def test_chart_singularity_raises(self):
        with pytest.raises(DomainError):
            christoffel_numeric(1.0, (1e-13, 0.5), 3)

    def test_shape_validation(self):
        with pytest.raises(DomainError):
            christoffel_numeric(1.0, (0.5,), 3)  # needs n-1 = 2 coordinates
        with pytest.raises(DomainError):
            christoffel_numeric(0.0, (0.5, 0.5), 3)

    def test_lowest_dimension(self):
        gamma = christoffel_numeric(0.7, (2.0,), 2)
        assert gamma[0, 0, 1] == pytest.approx(math.cos(0.7) / math.sin(0.7), abs=1e-9)
        assert gamma[1, 0, 0] == pytest.approx(-math.sin(0.7) * math.cos(0.7), abs=1e-9)

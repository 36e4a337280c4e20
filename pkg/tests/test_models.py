import pytest
import numpy as np
from math import sqrt
from numpy.polynomial import Polynomial
from core.exceptions import AmbiguousClassification, ConfigError, OutOfDomain, UnsupportedShift
from models import (BGKModel, DampedOperator, KineticModel, NTEModel, SOUND_SPEED, VelocityFunction, apply_damped,
                    chi_modes, make_model, null_space_decomposition)

U_CASES = [
    (-2.0, (0, 3, 0)),
    (-sqrt(1.5), (0, 2, 1)),
    (-0.5, (1, 2, 0)),
    (0.0, (1, 1, 1)),
    (0.5, (2, 1, 0)),
    (sqrt(1.5), (2, 0, 1)),
    (2.0, (3, 0, 0)),
]

class TestVelocityFunction:
    """Тесты функций скорости замкнутого вида"""

    def test_evaluation_with_envelope(self):
        """Тест q(v)·e^{-v²/2}"""
        f = VelocityFunction(Polynomial([1.0, 2.0]), True, 'f')
        assert f(0.0) == pytest.approx(1.0)
        assert f(1.0) == pytest.approx(3.0 * np.exp(-0.5))

    def test_flux_scaled_and_sum(self):
        """Тест (v+u)f, масштабирования и суммы"""
        f = VelocityFunction(Polynomial([0.0, 1.0]), False, 'v')
        g = VelocityFunction(Polynomial([1.0]), False, 'one')
        assert f.flux(0.5)(2.0) == pytest.approx(5.0)
        assert f.scaled(3.0)(2.0) == pytest.approx(6.0)
        assert (f + g)(2.0) == pytest.approx(3.0)
        assert f.flux(0.5).degree == 2

    def test_sum_with_different_envelopes(self):
        """Тест ошибки при сложении функций с разной огибающей"""
        with pytest.raises(ValueError):
            VelocityFunction(Polynomial([1.0]), True) + VelocityFunction(Polynomial([1.0]), False)

class TestKineticModels:
    """Тесты кинетических моделей"""

    def test_base_model_is_abstract(self):
        """Тест KineticModel является абстрактным классом"""
        with pytest.raises(TypeError):
            KineticModel()

    def test_make_model(self):
        """Тест фабрики моделей"""
        assert isinstance(make_model('bgk'), BGKModel)
        assert isinstance(make_model('nte'), NTEModel)
        with pytest.raises(ConfigError):
            make_model('boltzmann')

    def test_chi_modes_orthonormal(self, bgk_model):
        """Тест ⟨χ_a, χ_b⟩ = δ_ab"""
        modes = bgk_model.null_basis()
        gram = np.array([[bgk_model.inner(a, b) for b in modes] for a in modes])
        np.testing.assert_allclose(gram, np.eye(3), atol=1e-13)

    def test_chi_fluxes(self, bgk_model):
        """Тест ⟨(v+u)χ, χ⟩ = u + c, u - c, u"""
        u = 0.3
        modes = chi_modes(u)
        for name, mode in modes.as_dict().items():
            assert bgk_model.inner(mode.flux(u), mode) == pytest.approx(modes.speeds[name], abs=1e-13)
        assert modes.speeds['chi_plus'] == pytest.approx(u + SOUND_SPEED)

    def test_collision_annihilates_null_space(self, bgk_model, nte_model):
        """Тест L X = 0 для мод нуль-пространства"""
        for model in (bgk_model, nte_model):
            grid = model.velocity_grid(20)
            for mode in model.null_basis():
                np.testing.assert_allclose(model.apply_L(grid.sample(mode), grid), 0.0, atol=1e-12)

    def test_nte_domain(self, nte_model):
        """Тест области скоростей NTE"""
        assert nte_model.sound_speed is None
        nte_model.check_domain(np.array([-1.0, 0.0, 1.0]))
        with pytest.raises(OutOfDomain):
            nte_model.check_domain(1.01)

class TestNullSpaceDecomposition:
    """Тесты разбиения нуль-пространства по знаку потока"""

    @pytest.mark.parametrize('u, expected', U_CASES)
    def test_bgk_dimensions(self, bgk_model, u, expected):
        """Тест размерностей (ν+, ν-, ν0) для всех режимов u"""
        decomposition = null_space_decomposition(bgk_model, u)
        assert decomposition.dims == expected
        assert len(decomposition.recovery_modes) == expected[0] + expected[2]
        assert len(decomposition.flux_directions()) == sum(expected) + expected[2]

    def test_bgk_labels_at_zero_shift(self, bgk_model):
        """Тест имен потоковых моментов при u = 0"""
        decomposition = null_space_decomposition(bgk_model, 0.0)
        assert decomposition.flux_labels() == ['U+[chi_plus]', 'U-[chi_minus]', 'U0[chi_zero]', 'UL0[chi_zero]']
        assert decomposition.gammas_plus[0] == pytest.approx(SOUND_SPEED, abs=1e-13)

    def test_nte_single_zero_mode(self, nte_model):
        """Тест NTE: одна мода X_0 = 1/√2"""
        decomposition = null_space_decomposition(nte_model, 0.0)
        assert decomposition.dims == (0, 0, 1)
        assert decomposition.X_zero[0](0.3) == pytest.approx(1.0 / sqrt(2.0))

    def test_nte_shift_unsupported(self, nte_model):
        """Тест ошибки для NTE при u ≠ 0"""
        with pytest.raises(UnsupportedShift):
            null_space_decomposition(nte_model, 0.1)

    def test_ambiguous_classification(self, bgk_model):
        """Тест поток χ_0 между tol и 10·tol"""
        with pytest.raises(AmbiguousClassification):
            null_space_decomposition(bgk_model, 1e-11)

    def test_invalid_tolerance(self, bgk_model):
        """Тест ошибки при неположительном допуске"""
        with pytest.raises(ValueError):
            null_space_decomposition(bgk_model, 0.0, tol_null=0.0)

class TestDampedOperator:
    """Тесты затухающего оператора"""

    def test_directions(self, bgk_model, nte_model):
        """Тест числа направлений затухания"""
        assert len(DampedOperator(bgk_model, null_space_decomposition(bgk_model, 0.0), 0.1).directions()) == 4
        assert len(DampedOperator(nte_model, null_space_decomposition(nte_model, 0.0), 0.1).directions()) == 2

    def test_invalid_alpha(self, nte_model):
        """Тест ошибки при α <= 0"""
        with pytest.raises(ValueError):
            DampedOperator(nte_model, null_space_decomposition(nte_model, 0.0), 0.0)

    @pytest.mark.parametrize('u', [0.0, 0.5, -2.0])
    def test_symmetric_and_coercive(self, bgk_model, u):
        """Тест ⟨f, L_d g⟩ = ⟨L_d f, g⟩ и ⟨f, L_d f⟩ > 0"""
        # Arrange
        operator = DampedOperator(bgk_model, null_space_decomposition(bgk_model, u), 0.1)
        grid = bgk_model.velocity_grid(40)
        f = grid.sample(VelocityFunction(Polynomial([1.0, 0.0, 0.0, 0.0, 1.0]), True))
        g = grid.sample(VelocityFunction(Polynomial([0.0, 1.0, 0.5]), True))

        # Act
        f_damped = apply_damped(operator, f, grid)
        g_damped = apply_damped(operator, g, grid)

        # Assert
        assert grid.inner(f, g_damped) == pytest.approx(grid.inner(f_damped, g), abs=1e-12)
        assert grid.inner(f, f_damped) > 0
        assert grid.inner(g, g_damped) > 0

    def test_damping_acts_on_null_space(self, bgk_model):
        """Тест L_d χ ≠ 0, хотя L χ = 0"""
        operator = DampedOperator(bgk_model, null_space_decomposition(bgk_model, 0.0), 0.1)
        grid = bgk_model.velocity_grid(20)
        chi = grid.sample(chi_modes(0.0).plus)
        assert grid.inner(chi, operator.apply(chi, grid)) > 0
        assert 'alpha=0.1' in repr(operator)

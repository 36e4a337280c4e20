import pytest
import numpy as np
from math import sqrt
from numpy.polynomial import Polynomial
from scipy.integrate import quad_vec
from core.exceptions import AsymmetricGrid, ModelMismatch, OutOfDomain, UnsupportedShift
from models import VelocityFunction, chi_modes
from solver import build_basis, eval_basis, gram_matrix, parity_decompose

class TestBuildBasis:
    """Тесты построения базиса"""

    def test_sizes_and_kinds(self):
        """Тест размеров и нормализации вида"""
        bgk = build_basis('bgk', 5, 0.5)
        nte = build_basis('nte_legendre', 3)
        assert bgk.size == 11
        assert bgk.kind == 'bgk_half_hermite'
        assert bgk.gaussian
        assert nte.size == 7
        assert not nte.gaussian
        assert nte.velocity_domain == (-1.0, 1.0)

    def test_default_quad_points(self):
        """Тест узлов по умолчанию 2N + 8"""
        assert build_basis('bgk', 6).quad_points == 20

    def test_degrees_and_parity(self):
        """Тест степеней n_k = k // 2 и маски нечетных функций"""
        basis = build_basis('nte', 2)
        np.testing.assert_array_equal(basis.degrees, [0, 0, 1, 1, 2])
        np.testing.assert_array_equal(basis.odd_mask, [True, False, True, False, True])

    def test_invalid_arguments(self):
        """Тест ошибок аргументов"""
        with pytest.raises(ValueError):
            build_basis('bgk', 0)
        with pytest.raises(ValueError):
            build_basis('hermite', 4)
        with pytest.raises(UnsupportedShift):
            build_basis('nte', 4, 0.5)

class TestOrthonormality:
    """Тесты ортонормальности базиса"""

    @pytest.mark.parametrize('u', [-2.0, -sqrt(1.5), 0.0, 0.5, 2.0])
    def test_bgk_orthonormal(self, u):
        """Тест ⟨ψ_k, ψ_l⟩ = δ_kl для BGK при разных u"""
        basis = build_basis('bgk', 10, u)
        np.testing.assert_allclose(gram_matrix(basis), np.eye(basis.size), atol=1e-11)

    @pytest.mark.parametrize('N', [4, 12, 20])
    def test_nte_orthonormal(self, N):
        """Тест ⟨ψ_k, ψ_l⟩ = δ_kl для NTE"""
        basis = build_basis('nte', N)
        np.testing.assert_allclose(gram_matrix(basis), np.eye(basis.size), atol=1e-11)

    def test_bgk_orthonormal_at_table_limit(self):
        """Тест ортонормальности при N = 20 на правиле Гаусса"""
        basis = build_basis('bgk', 20)
        np.testing.assert_allclose(gram_matrix(basis), np.eye(basis.size), atol=1e-11)

    @pytest.mark.parametrize('kind, u', [('bgk', 0.5), ('bgk', -sqrt(1.5)), ('nte', 0.0)])
    def test_orthonormal_by_adaptive_quadrature(self, kind, u):
        """Тест ∫ψ_k ψ_l dv = δ_kl адаптивной квадратурой по каждой полуоси от v = -u при N = 20"""
        basis = build_basis(kind, 20, u)
        reach = 2.0 * sqrt(21.0) + 8.0 if basis.gaussian else 1.0

        def integrand(v):
            values = basis.eval(v)
            return np.outer(values, values).ravel()

        gram = np.zeros(basis.size ** 2)
        for low, high in ((-u - reach, -u), (-u, -u + reach)):
            part, _ = quad_vec(integrand, low, high, epsabs=1e-13, epsrel=1e-13, norm='max', limit=2000)
            gram += part
        np.testing.assert_allclose(gram.reshape(basis.size, basis.size), np.eye(basis.size), atol=1e-11)

class TestEvaluation:
    """Тесты вычисления функций базиса"""

    @pytest.mark.parametrize('u', [0.0, 0.7])
    def test_parity_about_minus_u(self, u):
        """Тест четности: нечетные индексы - четные функции, четные индексы - нечетные"""
        # Arrange
        basis = build_basis('bgk', 4, u)
        v = np.array([0.1, 0.8, 2.5])

        # Act
        values = basis.eval(v)
        mirrored = basis.eval(-2.0 * u - v)

        # Assert
        np.testing.assert_allclose(mirrored[0::2], -values[0::2], atol=1e-14)
        np.testing.assert_allclose(mirrored[1::2], values[1::2], atol=1e-14)

    def test_eval_basis_shape(self):
        """Тест формы eval_basis"""
        basis = build_basis('nte', 3)
        assert eval_basis(basis, np.linspace(-1, 1, 7)).shape == (7, 7)
        assert eval_basis(basis, 0.5).shape == (7,)

    def test_nte_out_of_domain(self):
        """Тест ошибки для |v| > 1"""
        with pytest.raises(OutOfDomain):
            build_basis('nte', 3).eval(np.array([0.0, 1.5]))

class TestProjection:
    """Тесты точных проекций"""

    def test_chi_modes_exactly_representable_at_zero_shift(self):
        """Тест χ при u = 0 лежат в span(ψ) и восстанавливаются по коэффициентам"""
        basis = build_basis('bgk', 6)
        v = np.linspace(-4, 4, 17)
        for mode in chi_modes(0.0).as_dict().values():
            coefficients = basis.expand(mode)
            np.testing.assert_allclose(coefficients @ basis.eval(v), mode(v), atol=1e-12)
            assert coefficients @ coefficients == pytest.approx(1.0, abs=1e-12)

    def test_sides_sum_to_full_projection(self):
        """Тест проекции по сторонам складываются в полную"""
        basis = build_basis('bgk', 5, -0.8)
        g = VelocityFunction(Polynomial([1.0, -2.0, 0.5, 1.0]), True, 'g')
        both = basis.project(g)
        np.testing.assert_allclose(basis.project(g, 'positive') + basis.project(g, 'negative'), both, atol=1e-13)

    def test_nte_polynomial_projection(self):
        """Тест проекции v на базис NTE: ‖a‖² = ∫v² dv = 2/3"""
        basis = build_basis('nte', 4)
        coefficients = basis.project(VelocityFunction(Polynomial([0.0, 1.0]), False, 'v'))
        assert coefficients @ coefficients == pytest.approx(2.0 / 3.0, abs=1e-13)
        np.testing.assert_allclose(coefficients[1::2], 0.0, atol=1e-15)

    def test_envelope_mismatch(self):
        """Тест ошибки при несовпадении огибающей"""
        with pytest.raises(ModelMismatch):
            build_basis('nte', 3).project(VelocityFunction(Polynomial([1.0]), True, 'gauss'))

    def test_unknown_side(self):
        """Тест ошибки при неизвестной стороне"""
        with pytest.raises(ValueError):
            build_basis('nte', 3).project(VelocityFunction(Polynomial([1.0]), False, 'one'), 'left')

class TestParityDecompose:
    """Тесты четно-нечетного разложения"""

    def test_decomposition_about_shifted_center(self):
        """Тест разложения f = (v+u)² + (v+u) относительно v = -u"""
        # Arrange
        u = 0.5
        grid = np.linspace(-3.0, 2.0, 11)
        w = grid + u
        samples = w ** 2 + w

        # Act
        pair = parity_decompose(samples, grid, u)

        # Assert
        np.testing.assert_allclose(pair.even_part, w ** 2, atol=1e-14)
        np.testing.assert_allclose(pair.odd_part, w, atol=1e-14)

    def test_asymmetric_grid(self):
        """Тест ошибки для несимметричной сетки"""
        with pytest.raises(AsymmetricGrid):
            parity_decompose(np.ones(3), np.array([-1.0, 0.0, 2.0]), 0.0)

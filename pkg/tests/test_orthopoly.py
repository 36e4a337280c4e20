import pytest
import numpy as np
from math import pi, sqrt
from scipy.integrate import quad_vec
from core.exceptions import IndexBeyondTable, PrecisionExhausted
from orthopoly import (evaluate_polys, gaussian_moments, golub_welsch, half_gaussian_rule, half_hermite_recurrence,
                       jacobi_matrix, legendre01_rule, shifted_legendre_recurrence)
from config import settings

# s = ±u/2 для u из (0, ±0.5, ±√1.5, ±2)
SHIFTS = [0.0, 0.25, -0.25, sqrt(1.5) / 2, -sqrt(1.5) / 2, 1.0, -1.0]

def adaptive_gram(table, n_max):
    """∫ B_m B_n e^{-(v-s)²} dv на [0, b] адаптивной квадратурой, независимо от правил Гаусса"""
    s = table.shift
    upper = max(s, 0.0) + 2.0 * sqrt(n_max + 1) + 8.0

    def integrand(v):
        values = evaluate_polys(table, v, n_max)
        return np.outer(values, values).ravel() * np.exp(-(v - s) ** 2)

    result, _ = quad_vec(integrand, 0.0, upper, epsabs=1e-13, epsrel=1e-13, norm='max', limit=2000)
    return result.reshape(n_max + 1, n_max + 1)

def derivatives(table, v, n_max):
    """B_n'(v) дифференцированием трехчленной рекуррентности"""
    values = evaluate_polys(table, v, n_max)
    result = np.zeros(n_max + 1)
    if n_max >= 1:
        result[1] = values[0] / sqrt(table.betas[0])
    for n in range(1, n_max):
        result[n + 1] = ((v - table.alphas[n]) * result[n] + values[n]
                         - sqrt(table.betas[n - 1]) * result[n - 1]) / sqrt(table.betas[n])
    return result

class TestGaussianMoments:
    """Тесты моментов полугауссова веса"""

    def test_moments_without_shift(self):
        """Тест m0 = √π/2, m1 = 1/2, m2 = √π/4 при s = 0"""
        moments = gaussian_moments(0.0)
        assert moments.m0 == pytest.approx(sqrt(pi) / 2, abs=1e-15)
        assert moments.m1 == pytest.approx(0.5, abs=1e-15)
        assert moments.m2 == pytest.approx(sqrt(pi) / 4, abs=1e-15)

    def test_large_positive_shift_approaches_full_gaussian(self):
        """Тест при большом s вес почти целиком на [0, ∞): m0 → √π"""
        moments = gaussian_moments(8.0)
        assert moments.m0 == pytest.approx(sqrt(pi), rel=1e-14)
        assert moments.m1 / moments.m0 == pytest.approx(8.0, rel=1e-12)

class TestHalfHermiteRecurrence:
    """Тесты рекуррентности полуэрмитовых многочленов"""

    def test_known_coefficients(self):
        """Тест α_0 = 1/√π и β_1 при s = 0"""
        table = half_hermite_recurrence(0.0, 10)
        assert table.alphas[0] == pytest.approx(0.5641895835, abs=1e-9)
        assert table.betas[0] == pytest.approx(0.181690113, abs=1e-8)

    def test_table_shape_and_positive_betas(self):
        """Тест длины таблицы и положительности β"""
        table = half_hermite_recurrence(0.3, 12)
        assert len(table.alphas) == 13
        assert len(table.betas) == 12
        assert table.n_max == 12
        assert np.all(table.betas > 0)

    @pytest.mark.parametrize('shift', SHIFTS)
    def test_modes_agree(self, shift):
        """Тест рекуррентность в mpmath и процедура Стилтьеса дают одну таблицу"""
        double = half_hermite_recurrence(shift, 40, 'double')
        extended = half_hermite_recurrence(shift, 40, 'extended')

        assert double.precision_mode == 'double'
        assert extended.precision_mode == 'extended'
        np.testing.assert_allclose(double.alphas, extended.alphas, rtol=1e-12)
        np.testing.assert_allclose(double.betas, extended.betas, rtol=1e-12)

    def test_default_mode_is_extended(self):
        """Тест таблицы по умолчанию строятся в mpmath при любом n_max"""
        assert half_hermite_recurrence(0.0, 4).precision_mode == 'extended'
        assert half_hermite_recurrence(0.0, 30).precision_mode == 'extended'

    @pytest.mark.parametrize('shift', [-1.0, -0.25, 0.25, 1.0])
    def test_shifted_tables_at_assembly_sizes(self, shift):
        """Тест положительности β при сдвигах ±u/2 и длинах таблиц, нужных сборке при малых N"""
        for n_max in (14, 15, 20):
            assert np.all(half_hermite_recurrence(shift, n_max).betas > 0)

    def test_precision_exhausted(self, monkeypatch):
        """Тест ошибки, если точность не удалось подтвердить повторным расчетом"""
        monkeypatch.setattr(settings, 'RECURRENCE_REFINEMENTS', 0)
        with pytest.raises(PrecisionExhausted):
            half_hermite_recurrence(0.1234, 5)

    def test_invalid_arguments(self):
        """Тест ошибок аргументов"""
        with pytest.raises(ValueError):
            half_hermite_recurrence(0.0, -1)
        with pytest.raises(ValueError):
            half_hermite_recurrence(0.0, 4, 'quad')

class TestShiftedLegendreRecurrence:
    """Тесты рекуррентности Лежандра на [0, 1]"""

    def test_closed_form_coefficients(self):
        """Тест α_n = 1/2 и β_n = 1/(4(4 - n⁻²))"""
        table = shifted_legendre_recurrence(6)
        np.testing.assert_allclose(table.alphas, 0.5)
        n = np.arange(1, 7)
        np.testing.assert_allclose(table.betas, 1.0 / (4.0 * (4.0 - 1.0 / n ** 2)), rtol=1e-15)
        assert table.m0 == 1.0

class TestEvaluatePolys:
    """Тесты вычисления ортонормированных многочленов"""

    @pytest.mark.parametrize('shift', [0.0, 0.5])
    def test_orthonormality_half_gaussian(self, shift):
        """Тест Σ w B_i B_j = δ_ij на правиле Гаусса того же веса"""
        # Arrange
        table = half_hermite_recurrence(shift, 8)
        rule = half_gaussian_rule(shift, 10)

        # Act
        values = evaluate_polys(table, rule.nodes, 8)
        gram = (values * rule.weights) @ values.T

        # Assert
        np.testing.assert_allclose(gram, np.eye(9), atol=1e-11)

    def test_orthonormality_legendre(self):
        """Тест ортонормальности многочленов Лежандра на [0, 1]"""
        table = shifted_legendre_recurrence(20)
        rule = legendre01_rule(22)
        values = evaluate_polys(table, rule.nodes, 20)
        np.testing.assert_allclose((values * rule.weights) @ values.T, np.eye(21), atol=1e-12)

    @pytest.mark.parametrize('shift', SHIFTS)
    def test_adaptive_quadrature_double(self, shift):
        """Тест ортонормальности B_0..B_20 процедуры Стилтьеса по адаптивной квадратуре"""
        table = half_hermite_recurrence(shift, 20, 'double')
        np.testing.assert_allclose(adaptive_gram(table, 20), np.eye(21), atol=1e-11)

    @pytest.mark.parametrize('shift', SHIFTS)
    def test_adaptive_quadrature_extended(self, shift):
        """Тест ортонормальности B_0..B_40 рекуррентности mpmath по адаптивной квадратуре"""
        table = half_hermite_recurrence(shift, 40, 'extended')
        np.testing.assert_allclose(adaptive_gram(table, 40), np.eye(41), atol=1e-10)

    @pytest.mark.parametrize('shift', [0.0, 1.0, -1.0])
    def test_christoffel_darboux(self, shift):
        """Тест Σ_{k≤n} B_k² = √β_{n+1}(B'_{n+1} B_n - B_{n+1} B'_n)"""
        n = 8
        table = half_hermite_recurrence(shift, n + 1)
        for v in (0.1, 0.7, 1.3, 2.2):
            values = evaluate_polys(table, v, n + 1)
            slopes = derivatives(table, v, n + 1)
            kernel = np.sum(values[:n + 1] ** 2)
            wronskian = sqrt(table.betas[n]) * (slopes[n + 1] * values[n] - values[n + 1] * slopes[n])
            assert wronskian == pytest.approx(kernel, rel=1e-10)

    def test_christoffel_darboux_legendre(self):
        """Тест той же формулы для многочленов Лежандра на [0, 1]"""
        n = 10
        table = shifted_legendre_recurrence(n + 1)
        for v in (0.05, 0.4, 0.93):
            values = evaluate_polys(table, v, n + 1)
            slopes = derivatives(table, v, n + 1)
            wronskian = sqrt(table.betas[n]) * (slopes[n + 1] * values[n] - values[n + 1] * slopes[n])
            assert wronskian == pytest.approx(np.sum(values[:n + 1] ** 2), rel=1e-10)

    def test_shape_for_scalar_and_array(self):
        """Тест формы результата"""
        table = shifted_legendre_recurrence(5)
        assert evaluate_polys(table, 0.3, 5).shape == (6,)
        assert evaluate_polys(table, np.zeros((2, 3)), 4).shape == (5, 2, 3)

    def test_degree_beyond_table(self):
        """Тест ошибки при степени больше длины таблицы"""
        with pytest.raises(IndexBeyondTable):
            evaluate_polys(shifted_legendre_recurrence(3), 0.5, 4)

class TestJacobiMatrix:
    """Тесты матрицы Якоби"""

    def test_symmetric_tridiagonal(self):
        """Тест симметрии и трехдиагональности"""
        matrix = jacobi_matrix(half_hermite_recurrence(0.0, 8), 6)
        np.testing.assert_array_equal(matrix, matrix.T)
        assert np.all(np.triu(matrix, 2) == 0)

    def test_eigenvalues_are_gauss_nodes(self):
        """Тест собственные значения совпадают с узлами правила Гаусса"""
        table = shifted_legendre_recurrence(7)
        nodes = np.linalg.eigvalsh(jacobi_matrix(table, 8))
        np.testing.assert_allclose(nodes, legendre01_rule(8).nodes, atol=1e-14)

    def test_order_beyond_table(self):
        """Тест ошибки при порядке больше таблицы"""
        with pytest.raises(IndexBeyondTable):
            jacobi_matrix(shifted_legendre_recurrence(3), 5)

class TestQuadrature:
    """Тесты правил Гаусса по алгоритму Голуба-Уэлша"""

    def test_legendre_rule_exactness(self):
        """Тест точности для многочленов степени 2n - 1"""
        rule = legendre01_rule(5)
        for degree in range(10):
            assert rule.weights @ rule.nodes ** degree == pytest.approx(1.0 / (degree + 1), abs=1e-14)

    def test_half_gaussian_rule_moments(self):
        """Тест моментов полугауссова правила"""
        rule = half_gaussian_rule(0.0, 8)
        assert rule.weights.sum() == pytest.approx(sqrt(pi) / 2, abs=1e-14)
        assert rule.weights @ rule.nodes == pytest.approx(0.5, abs=1e-14)
        assert np.all(rule.nodes > 0)
        assert np.all(np.diff(rule.nodes) > 0)

    def test_integrate_helper(self):
        """Тест QuadratureRule.integrate"""
        rule = legendre01_rule(4)
        assert rule.integrate(lambda t: 3.0 * t ** 2) == pytest.approx(1.0, abs=1e-14)
        assert len(rule) == 4

    def test_single_point_rule(self):
        """Тест правила из одного узла"""
        rule = golub_welsch(shifted_legendre_recurrence(0), 1)
        assert rule.nodes[0] == pytest.approx(0.5)
        assert rule.weights[0] == pytest.approx(1.0)

    @pytest.mark.parametrize('shift', [0.0, 0.6, -1.0])
    def test_half_gaussian_nodes_interlace(self, shift):
        """Тест узлы правил из n и n + 1 точек строго перемежаются"""
        for n in range(1, 16):
            coarse = half_gaussian_rule(shift, n).nodes
            fine = half_gaussian_rule(shift, n + 1).nodes
            assert np.all(fine[:-1] < coarse) and np.all(coarse < fine[1:])
            assert fine[0] > 0

    def test_legendre_nodes_interlace(self):
        """Тест перемежаемости узлов Гаусса-Лежандра на [0, 1]"""
        for n in range(1, 24):
            coarse, fine = legendre01_rule(n).nodes, legendre01_rule(n + 1).nodes
            assert np.all(fine[:-1] < coarse) and np.all(coarse < fine[1:])

    def test_too_many_points(self):
        """Тест ошибки при числе узлов больше таблицы"""
        with pytest.raises(IndexBeyondTable):
            golub_welsch(shifted_legendre_recurrence(3), 5)

    def test_rules_are_read_only(self):
        """Тест кэшированные правила защищены от изменения"""
        rule = legendre01_rule(6)
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.0

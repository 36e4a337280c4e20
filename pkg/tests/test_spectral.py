import pytest
import numpy as np
from config import settings
from core.exceptions import SignatureMismatch, SingularBoundarySystem
from data import get_incoming
from solver import (DampedSolution, assemble_system, evaluate_solution, galerkin_residual, generalized_eig,
                    solution_moments, solve_damped)

U_VALUES = [-2.0, -np.sqrt(1.5), -0.5, 0.0, 0.5, np.sqrt(1.5), 2.0]

class TestGeneralizedEig:
    """Тесты обобщенной задачи на собственные значения"""

    @pytest.mark.parametrize('N', [4, 8, 16])
    @pytest.mark.parametrize('u', U_VALUES)
    def test_bgk_signature(self, bgk_model, N, u):
        """Тест сигнатуры (N, N, 1) для всех режимов u"""
        system = assemble_system(bgk_model, N, u)
        eig = generalized_eig(system.A, system.B, system.tol_zero)
        assert eig.counts == (N, N, 1)

    @pytest.mark.parametrize('N', [4, 8, 16])
    def test_nte_signature(self, nte_model, N):
        """Тест сигнатуры (N, N, 1) для NTE"""
        system = assemble_system(nte_model, N)
        assert generalized_eig(system.A, system.B).counts == (N, N, 1)

    def test_eigen_residual(self, bgk_system, bgk_eig):
        """Тест A η = -λ B η"""
        A, B, eig = bgk_system.A, bgk_system.B, bgk_eig
        residual = A @ eig.vectors + B @ eig.vectors * eig.lambdas
        assert np.abs(residual).max() < 1e-10

    def test_b_orthonormal(self, nte_system, nte_eig):
        """Тест Vᵀ B V = I"""
        V = nte_eig.vectors
        np.testing.assert_allclose(V.T @ nte_system.B @ V, np.eye(V.shape[1]), atol=1e-10)

    def test_sorted_and_sign_fixed(self, bgk_eig):
        """Тест сортировки λ и знака наибольшей компоненты"""
        assert (np.diff(bgk_eig.lambdas) >= 0).all()
        for k in range(bgk_eig.vectors.shape[1]):
            column = bgk_eig.vectors[:, k]
            assert column[np.argmax(np.abs(column))] > 0

    def test_classes(self, nte_eig):
        """Тест классов индексов по знаку λ"""
        assert all(nte_eig.lambdas[k] < 0 for k in nte_eig.negative)
        assert all(nte_eig.lambdas[k] > 0 for k in nte_eig.positive)
        assert abs(nte_eig.lambdas[nte_eig.zero[0]]) <= nte_eig.tolerance
        assert len(nte_eig.nonnegative) == 9

    def test_zero_tolerance_too_large(self, bgk_system):
        """Тест SignatureMismatch при завышенном допуске нуля"""
        with pytest.raises(SignatureMismatch) as error:
            generalized_eig(bgk_system.A, bgk_system.B, tol_zero=0.5)
        assert error.value.expected == (8, 8, 1)
        assert error.value.counts[2] > 1

    def test_expected_signature_override(self, nte_system):
        """Тест SignatureMismatch при явно заданной сигнатуре"""
        with pytest.raises(SignatureMismatch):
            generalized_eig(nte_system.A, nte_system.B, expected=(1, 1, 1))

@pytest.fixture(scope='module')
def bgk_solution(bgk_model, bgk_system, bgk_eig):
    """fixture с затухающим решением BGK для φ = χ_+"""
    return solve_damped(bgk_system, get_incoming('chi_plus', bgk_model), bgk_eig)

@pytest.fixture(scope='module')
def milne_solution(nte_model, nte_system, nte_eig):
    """fixture с затухающим решением задачи Милна"""
    return solve_damped(nte_system, get_incoming('v', nte_model), nte_eig)

class TestSolveDamped:
    """Тесты решения затухающей задачи"""

    def test_diagnostics(self, bgk_solution, milne_solution):
        """Тест невязок ограничений и граничного условия"""
        for solution in (bgk_solution, milne_solution):
            assert solution.diagnostics['constraint_residual'] < 1e-9
            assert solution.diagnostics['boundary_residual'] < 1e-9
            assert solution.diagnostics['quadrature_discrepancy'] == 0.0
            assert solution.condition < settings.CONDITION_LIMIT

    def test_nonnegative_modes_suppressed(self, bgk_solution):
        """Тест ηᵀ B a(0) = 0 для λ >= 0"""
        eig, B = bgk_solution.eig, bgk_solution.system.B
        projections = eig.vectors[:, list(eig.nonnegative)].T @ B @ bgk_solution.a0
        assert np.abs(projections).max() < 1e-9

    def test_galerkin_residual(self, bgk_solution, milne_solution):
        """Тест A a'(x) + B a(x) = 0"""
        for solution in (bgk_solution, milne_solution):
            for x in (0.0, 0.5, 3.0):
                assert galerkin_residual(solution, x) < 1e-9

    def test_decay(self, milne_solution):
        """Тест a(x) -> 0 при x -> ∞"""
        assert np.abs(milne_solution.coefficients(1e4)).max() < 1e-12
        np.testing.assert_allclose(milne_solution.coefficients(0.0), milne_solution.a0, atol=1e-12)

    def test_flux_energy_nonincreasing(self, bgk_solution, milne_solution):
        """Тест ∫(v+u) f_N² dv = aᵀA a не возрастает по x, так как (aᵀA a)' = -2 aᵀB a"""
        for solution in (bgk_solution, milne_solution):
            A = solution.system.A
            energy = [a @ A @ a for a in map(solution.coefficients, (0.0, 0.5, 1.0, 2.0))]
            assert np.all(np.diff(energy) <= 1e-12)

    @pytest.mark.parametrize('incoming', ['v', 'v_cubed'])
    def test_l2_norm_nonincreasing_strong_damping(self, nte_model, incoming):
        """Тест ∫f_N² dv не возрастает по x при α = 1"""
        system = assemble_system(nte_model, 8, alpha=1.0)
        solution = solve_damped(system, get_incoming(incoming, nte_model))
        norms = [a @ a for a in map(solution.coefficients, (0.0, 0.5, 1.0, 2.0))]
        assert np.all(np.diff(norms) <= 1e-12)

    def test_negative_x(self, milne_solution):
        """Тест ValueError при x < 0"""
        with pytest.raises(ValueError):
            milne_solution.coefficients(-1.0)

    def test_evaluate(self, milne_solution):
        """Тест f_N(x, v) = a(x) · ψ(v)"""
        v = np.linspace(-1.0, 1.0, 9)
        expected = milne_solution.coefficients(0.5) @ milne_solution.basis.eval(v)
        np.testing.assert_allclose(evaluate_solution(milne_solution, 0.5, v), expected)

    def test_moments(self, milne_solution):
        """Тест U(f_N)(x) = flux_vectors · a(x)"""
        moments = solution_moments(milne_solution, 1.0)
        assert moments.shape == (2,)
        np.testing.assert_allclose(moments, milne_solution.system.flux_vectors @ milne_solution.coefficients(1.0))

    def test_from_coefficients(self, milne_solution):
        """Тест восстановления решения по a(0)"""
        restored = DampedSolution.from_coefficients(milne_solution.system, milne_solution.a0, milne_solution.eig,
                                                    milne_solution.incoming)
        np.testing.assert_allclose(restored.mode_amplitudes, milne_solution.mode_amplitudes, atol=1e-12)
        np.testing.assert_allclose(restored.coefficients(0.7), milne_solution.coefficients(0.7), atol=1e-12)

    def test_singular_boundary_system(self, monkeypatch, nte_model, nte_system, nte_eig):
        """Тест SingularBoundarySystem при превышении предела обусловленности"""
        monkeypatch.setattr(settings, 'CONDITION_LIMIT', 1.0)
        with pytest.raises(SingularBoundarySystem) as error:
            solve_damped(nte_system, get_incoming('v', nte_model), nte_eig)
        assert error.value.condition >= 1.0

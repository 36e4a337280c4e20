from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union
from numpy import abs as np_abs, argmax, argsort, asarray, exp, float64, ndarray, vstack, zeros
from numpy.linalg import cond, norm
from scipy.linalg import LinAlgError, eigh, lu_factor, lu_solve, solve_triangular
from core import Logger
from core.exceptions import EigenFailure, SignatureMismatch, SingularBoundarySystem
from data.data_provider import IncomingData
from solver.assembly import GalerkinSystem, assemble_boundary, cholesky_factor
from config import settings

logger = Logger(__name__)

@dataclass(frozen=True)
class EigenDecomposition:
    """
    Обобщенные собственные пары пучка (A, -B): A η = -λ B η, ηᵀ B η = 1.

    Моды с λ < 0 затухают как e^{x/λ}; моды с λ >= 0 запрещены ограничениями ηᵀ B a = 0.

    Аргументы:
        lambdas (ndarray): λ_k по возрастанию
        vectors (ndarray): Столбцы η_k, B-ортонормированные
        positive, negative, zero (Tuple[int, ...]): Индексы классов
        tolerance (float): Абсолютный допуск нуля tol_zero·max|λ|
    """
    lambdas: ndarray
    vectors: ndarray
    positive: Tuple[int, ...]
    negative: Tuple[int, ...]
    zero: Tuple[int, ...]
    tolerance: float

    @property
    def counts(self) -> Tuple[int, int, int]:
        return len(self.positive), len(self.negative), len(self.zero)

    @property
    def nonnegative(self) -> Tuple[int, ...]:
        """Индексы мод, чьи амплитуды обязаны быть нулевыми."""
        return tuple(sorted(self.positive + self.zero))

@dataclass(frozen=True)
class DampedSolution:
    """
    Решение затухающей задачи в виде разложения по затухающим модам.

    a(x) = Σ_{λ_k < 0} c_k e^{x/λ_k} η_k,  f_N(x, v) = a(x) · ψ(v).

    Аргументы:
        system (GalerkinSystem): Система
        a0 (ndarray): a(0)
        mode_amplitudes (ndarray): c_k = η_kᵀ B a0 для отрицательных мод
        eig (EigenDecomposition): Собственные пары
        incoming (IncomingData): Входящие данные
        condition (float): Оценка числа обусловленности системы для a(0)
        diagnostics (Dict[str, float]): Невязки ограничений и граничного условия, оценка квадратуры
    """
    system: GalerkinSystem
    a0: ndarray
    mode_amplitudes: ndarray
    eig: EigenDecomposition
    incoming: IncomingData
    condition: float
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @property
    def basis(self):
        return self.system.basis

    def coefficients(self, x: float) -> ndarray:
        """a(x)."""
        if x < 0:
            raise ValueError(f"x должен быть неотрицательным, получено {x}")
        negative = list(self.eig.negative)
        growth = self.mode_amplitudes * exp(x / self.eig.lambdas[negative])
        return self.eig.vectors[:, negative] @ growth

    def derivative(self, x: float) -> ndarray:
        """a'(x), аналитически по разложению."""
        negative = list(self.eig.negative)
        lambdas = self.eig.lambdas[negative]
        return self.eig.vectors[:, negative] @ (self.mode_amplitudes * exp(x / lambdas) / lambdas)

    @classmethod
    def from_coefficients(cls, system: GalerkinSystem, a0: ndarray, eig: EigenDecomposition,
                          incoming: IncomingData, condition: float = float('nan')) -> 'DampedSolution':
        """Восстанавливает решение по сохраненному a(0) (например, из кэша)."""
        a0 = asarray(a0, dtype=float64)
        amplitudes = eig.vectors[:, list(eig.negative)].T @ (system.B @ a0)
        return cls(system=system, a0=a0, mode_amplitudes=amplitudes, eig=eig, incoming=incoming, condition=condition)

def generalized_eig(A: ndarray, B: ndarray, tol_zero: Optional[float] = None,
                    expected: Optional[Tuple[int, int, int]] = None) -> EigenDecomposition:
    """
    Решает A η = κ B η редукцией Холецкого B = R Rᵀ и возвращает λ = -κ.

    Знак каждого η фиксирован: наибольшая по модулю компонента положительна.

    Аргументы:
        A (ndarray): Симметричная матрица
        B (ndarray): Симметричная положительно определенная матрица
        tol_zero (Optional[float]): Относительный допуск нуля (по умолчанию settings.TOL_ZERO)
        expected (Optional[Tuple[int, int, int]]): Ожидаемая сигнатура (по умолчанию (N, N, 1) для размера 2N+1)

    Возвращает:
        EigenDecomposition: Пары, отсортированные по λ

    Ошибки:
        NotPositiveDefinite: Если B не положительно определена
        EigenFailure: Если симметричная задача не сошлась
        SignatureMismatch: Если сигнатура отличается от ожидаемой
    """
    tol_zero = settings.TOL_ZERO if tol_zero is None else tol_zero
    size = A.shape[0]
    if expected is None:
        half = (size - 1) // 2
        expected = (half, half, 1)

    R = cholesky_factor(B)
    reduced = solve_triangular(R, solve_triangular(R, A, lower=True).T, lower=True)
    try:
        kappas, y = eigh(0.5 * (reduced + reduced.T))
    except LinAlgError as exc:
        raise EigenFailure(f"Симметричная задача порядка {size} не сошлась: {exc}") from exc

    vectors = solve_triangular(R.T, y, lower=False)
    lambdas = -kappas
    order = argsort(lambdas, kind='stable')
    lambdas, vectors = lambdas[order], vectors[:, order]
    for k in range(size):
        if vectors[argmax(np_abs(vectors[:, k])), k] < 0:
            vectors[:, k] = -vectors[:, k]

    tolerance = tol_zero * float(np_abs(lambdas).max())
    positive = tuple(int(k) for k in range(size) if lambdas[k] > tolerance)
    negative = tuple(int(k) for k in range(size) if lambdas[k] < -tolerance)
    zero = tuple(int(k) for k in range(size) if abs(lambdas[k]) <= tolerance)
    decomposition = EigenDecomposition(lambdas=lambdas, vectors=vectors, positive=positive, negative=negative,
                                       zero=zero, tolerance=tolerance)

    if decomposition.counts != tuple(expected):
        raise SignatureMismatch(decomposition.counts, tuple(expected))
    logger.debug(f"Сигнатура пучка {decomposition.counts}, max|λ| = {np_abs(lambdas).max():.6e}")
    return decomposition

def solve_damped(system: GalerkinSystem, incoming: IncomingData,
                 eig: Optional[EigenDecomposition] = None) -> DampedSolution:
    """
    Решает затухающую задачу (алгоритм с ограничениями на неотрицательные моды).

    Система для a(0): N+1 строк η_kᵀ B (λ_k >= 0) над N граничными строками, правая часть
    (0, rhs). Разложение LU с частичным выбором и одним шагом итерационного уточнения.

    Аргументы:
        system (GalerkinSystem): Собранная система
        incoming (IncomingData): Входящие данные
        eig (Optional[EigenDecomposition]): Готовое разложение (вспомогательные решения его переиспользуют)

    Возвращает:
        DampedSolution: Решение с диагностикой невязок

    Ошибки:
        SingularBoundarySystem: Если число обусловленности больше settings.CONDITION_LIMIT
        QuadratureNotConverged: Если правая часть граничного условия не сошлась
    """
    eig = eig or generalized_eig(system.A, system.B, system.tol_zero)
    boundary = assemble_boundary(system.basis, incoming, system.boundary_points)

    constraints = eig.vectors[:, list(eig.nonnegative)].T @ system.B
    matrix = vstack([constraints, boundary.rows])
    rhs = zeros(matrix.shape[0])
    rhs[len(eig.nonnegative):] = boundary.rhs

    condition = float(cond(matrix))
    if not condition < settings.CONDITION_LIMIT:
        raise SingularBoundarySystem(condition)
    if condition > 1e10:
        logger.warning(f"Система для a(0) плохо обусловлена: cond = {condition:.3e}")

    factor = lu_factor(matrix)
    a0 = lu_solve(factor, rhs)
    a0 = a0 + lu_solve(factor, rhs - matrix @ a0)

    amplitudes = eig.vectors[:, list(eig.negative)].T @ (system.B @ a0)
    scale = max(1.0, float(norm(a0)))
    diagnostics = {
        'constraint_residual': float(np_abs(constraints @ a0).max()) / scale,
        'boundary_residual': float(np_abs(boundary.rows @ a0 - boundary.rhs).max()) / scale,
        'quadrature_discrepancy': boundary.discrepancy,
    }
    logger.debug(f"a(0) для '{incoming.name}': cond = {condition:.3e}, невязки {diagnostics}")
    return DampedSolution(system=system, a0=a0, mode_amplitudes=amplitudes, eig=eig, incoming=incoming,
                          condition=condition, diagnostics=diagnostics)

def evaluate_solution(sol: DampedSolution, x: float, v: Union[float, ndarray]) -> ndarray:
    """
    f_N(x, v) = Σ_{λ_k<0} c_k e^{x/λ_k} (η_k · ψ(v)).

    Ошибки:
        ValueError: Если x < 0
        OutOfDomain: Если v вне области модели
    """
    return sol.coefficients(x) @ sol.basis.eval(v)

def solution_moments(sol: DampedSolution, x: float) -> ndarray:
    """U(f_N)(x) = flux_vectors · a(x) в порядке system.flux_labels."""
    return sol.system.flux_vectors @ sol.coefficients(x)

def galerkin_residual(sol: DampedSolution, x: float) -> float:
    """‖A a'(x) + B a(x)‖_∞ - невязка ОДУ Галеркина."""
    system = sol.system
    return float(np_abs(system.A @ sol.derivative(x) + system.B @ sol.coefficients(x)).max())

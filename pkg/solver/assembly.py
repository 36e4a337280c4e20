from math import sqrt
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple
from numpy import column_stack, eye, ndarray, zeros
from numpy.linalg import eigvalsh
from scipy.linalg import LinAlgError, cholesky
from core import Logger
from core.exceptions import ModelMismatch, NotPositiveDefinite, QuadratureNotConverged
from data.data_provider import IncomingData
from models import DampedOperator, KineticModel, NullSpaceDecomposition, null_space_decomposition
from orthopoly import evaluate_polys, half_gaussian_rule, jacobi_matrix, legendre01_rule
from solver.basis import BasisSet, build_basis
from config import settings

logger = Logger(__name__)

class BoundaryCondition(NamedTuple):
    """
    Граничные строки и правая часть условия при x = 0.

    Аргументы:
        rows (ndarray): Матрица N×(2N+1)
        rhs (ndarray): Вектор длины N
        discrepancy (float): Оценка ошибки квадратуры (0 для точного пути)
    """
    rows: ndarray
    rhs: ndarray
    discrepancy: float

@dataclass(frozen=True)
class GalerkinSystem:
    """
    Матрицы Галеркина полупространственной задачи A a' = -B a.

    Аргументы:
        basis (BasisSet): Базис ψ
        model (KineticModel): Модель
        decomposition (NullSpaceDecomposition): Разбиение нуль-пространства
        damped_op (DampedOperator): Затухающий оператор
        A (ndarray): A_kl = ⟨(v+u)ψ_k, ψ_l⟩
        B (ndarray): B_kl = +⟨ψ_k, L_d ψ_l⟩, симметричная положительно определенная
        boundary_rows (ndarray): Строки граничного условия, N×(2N+1)
        flux_vectors (ndarray): Строки ⟨d, ψ_k⟩ для направлений d вектора U(f)
        flux_labels (Tuple[str, ...]): Имена строк flux_vectors
        tol_null (float): Относительный допуск классификации мод
        tol_zero (float): Относительный допуск нулевого собственного значения
        boundary_points (int): Узлов квадратуры правой части граничного условия
    """
    basis: BasisSet
    model: KineticModel
    decomposition: NullSpaceDecomposition
    damped_op: DampedOperator
    A: ndarray
    B: ndarray
    boundary_rows: ndarray
    flux_vectors: ndarray
    flux_labels: Tuple[str, ...]
    tol_null: float
    tol_zero: float
    boundary_points: int

    @property
    def N(self) -> int:
        return self.basis.N

    @property
    def u(self) -> float:
        return self.basis.u

    @property
    def alpha(self) -> float:
        return self.damped_op.alpha

def assemble_A(basis: BasisSet) -> ndarray:
    """
    Матрица потока A_kl = ⟨(v+u)ψ_k, ψ_l⟩.

    Для нечетной ψ степени n и четной ψ степени m элемент равен J[n, m] матрицы Якоби
    рекуррентности базиса; элементы одной четности равны нулю. A не зависит от u.
    """
    jacobi = jacobi_matrix(basis.recurrence, basis.N + 1)
    A = zeros((basis.size, basis.size))
    for n in range(basis.N + 1):
        for m in range(basis.N):
            A[2 * n, 2 * m + 1] = A[2 * m + 1, 2 * n] = jacobi[n, m]
    return A

def collision_gram(basis: BasisSet, model: KineticModel) -> ndarray:
    """⟨ψ_k, L ψ_l⟩ = δ_kl - Σ_e ⟨ψ_k, e⟩⟨e, ψ_l⟩ по ортонормированному базису Null(L)."""
    P = column_stack([basis.project(mode) for mode in model.null_basis()])
    return eye(basis.size) - P @ P.T

def cholesky_factor(B: ndarray) -> ndarray:
    """
    Нижний треугольный множитель B = R Rᵀ.

    Ошибки:
        NotPositiveDefinite: Если разложение не существует (с оценкой λ_min(B))
    """
    try:
        return cholesky(B, lower=True)
    except LinAlgError:
        raise NotPositiveDefinite(float(eigvalsh(B).min())) from None

def assemble_B(basis: BasisSet, damped_op: DampedOperator, quad_points: Optional[int] = None) -> ndarray:
    """
    Матрица B_kl = ⟨ψ_k, L_d ψ_l⟩ = δ_kl - Σ⟨ψ_k, e⟩⟨e, ψ_l⟩ + α Σ⟨ψ_k, d⟩⟨d, ψ_l⟩.

    Все перекрестные интегралы точные (разбиение в v = -u и одна гауссиана на каждой стороне).

    Аргументы:
        basis (BasisSet): Базис
        damped_op (DampedOperator): Затухающий оператор при том же u
        quad_points (Optional[int]): Узлов на полуось

    Возвращает:
        ndarray: Симметричная положительно определенная матрица

    Ошибки:
        ModelMismatch: Если u оператора и базиса различаются
        NotPositiveDefinite: Если разложение Холецкого не удалось
    """
    if damped_op.u != basis.u:
        raise ModelMismatch(f"u оператора ({damped_op.u}) не совпадает с u базиса ({basis.u})")

    D = column_stack([basis.project(direction, quad_points=quad_points) for direction in damped_op.directions()])
    B = collision_gram(basis, damped_op.model) + damped_op.alpha * D @ D.T
    B = 0.5 * (B + B.T)
    cholesky_factor(B)
    return B

def boundary_rows(basis: BasisSet) -> ndarray:
    """Строки граничного условия: строка j содержит J[k, j] для нечетных и четных ψ степени k."""
    N = basis.N
    jacobi = jacobi_matrix(basis.recurrence, N + 1)
    rows = zeros((N, basis.size))
    rows[:, 0::2] = jacobi[:, :N].T
    rows[:, 1::2] = jacobi[:N, :N].T
    return rows

def assemble_boundary(basis: BasisSet, phi: IncomingData, quad_points: Optional[int] = None) -> BoundaryCondition:
    """
    Граничное условие: Σ⟨(v+u)ψ_odd, ψ_2j⟩ a_odd + Σ⟨|v+u|ψ_even, ψ_2j⟩ a_even = 2∫_{v+u>0} (v+u) φ ψ_2j dv.

    Коэффициенты строки j - столбец j матрицы Якоби для обеих четностей. Правая часть для
    данных замкнутого вида считается точно проекцией (v+u)φ на положительной стороне; иначе
    правилом с G и 2G узлами (BGK: полугауссово правило после замены t = (v+u)/√2,
    NTE: Гаусса-Лежандра на [0, 1]) с оценкой ошибки по их расхождению.

    Аргументы:
        basis (BasisSet): Базис
        phi (IncomingData): Входящие данные
        quad_points (Optional[int]): G (по умолчанию settings.BOUNDARY_POINTS)

    Возвращает:
        BoundaryCondition: Строки, правая часть, оценка ошибки

    Ошибки:
        QuadratureNotConverged: Если расхождение G/2G больше settings.QUADRATURE_TOL
    """
    rows = boundary_rows(basis)
    if phi.exact is not None and phi.exact.gaussian == basis.gaussian:
        rhs = 2.0 * basis.project(phi.exact.flux(basis.u), side='positive')[1::2]
        return BoundaryCondition(rows=rows, rhs=rhs, discrepancy=0.0)

    points = quad_points or settings.BOUNDARY_POINTS
    coarse = _boundary_rhs(basis, phi, points)
    fine = _boundary_rhs(basis, phi, 2 * points)
    discrepancy = float(abs(coarse - fine).max())
    logger.debug(f"Правая часть для '{phi.name}': расхождение G/2G = {discrepancy:.3e} (G = {points})")
    if discrepancy > settings.QUADRATURE_TOL:
        raise QuadratureNotConverged(discrepancy, settings.QUADRATURE_TOL)
    if discrepancy > 0.01 * settings.QUADRATURE_TOL:
        logger.warning(f"Квадратура правой части близка к допуску: {discrepancy:.3e}")
    return BoundaryCondition(rows=rows, rhs=fine, discrepancy=discrepancy)

def _boundary_rhs(basis: BasisSet, phi: IncomingData, n_points: int) -> ndarray:
    """2∫_{v+u>0} (v+u) φ ψ_2j dv для j = 0..N-1 правилом из n_points узлов."""
    if basis.gaussian:
        rule = half_gaussian_rule(0.0, n_points)
        t = sqrt(2.0) * rule.nodes
        polys = evaluate_polys(basis.recurrence, t, basis.N - 1)
        return 2.0 * sqrt(2.0) * polys @ (rule.weights * rule.nodes * phi(t - basis.u))

    rule = legendre01_rule(n_points)
    polys = evaluate_polys(basis.recurrence, rule.nodes, basis.N - 1)
    return sqrt(2.0) * polys @ (rule.weights * rule.nodes * phi(rule.nodes))

def flux_moment_vectors(basis: BasisSet, decomposition: NullSpaceDecomposition) -> Tuple[ndarray, List[str]]:
    """
    Строки ⟨d, ψ_k⟩ для U(f) = (U_+, U_-, U_0, U_{L,0}); U(f_N) = flux_vectors @ a.

    Возвращает:
        Tuple[ndarray, List[str]]: Матрица (ν_+ + ν_- + 2ν_0)×(2N+1) и имена строк
    """
    directions = decomposition.flux_directions()
    if not directions:
        return zeros((0, basis.size)), []
    return column_stack([basis.project(direction) for direction in directions]).T, decomposition.flux_labels()

def assemble_system(model: KineticModel, N: int, u: float = 0.0, alpha: Optional[float] = None,
                    quad_points: Optional[int] = None, tol_null: Optional[float] = None,
                    tol_zero: Optional[float] = None, boundary_points: Optional[int] = None) -> GalerkinSystem:
    """
    Собирает базис, разбиение Null(L), затухающий оператор и все матрицы Галеркина.

    Аргументы:
        model (KineticModel): Модель
        N (int): Порядок базиса
        u (float): Объемная скорость
        alpha (Optional[float]): Сила затухания (по умолчанию settings.DEFAULT_ALPHA)
        quad_points (Optional[int]): Узлов на полуось (по умолчанию 2N + settings.QUAD_EXTRA)
        tol_null (Optional[float]): Допуск классификации мод
        tol_zero (Optional[float]): Допуск нулевого собственного значения
        boundary_points (Optional[int]): Узлов для правой части граничного условия

    Возвращает:
        GalerkinSystem: Неизменяемая собранная система

    Пример:
        >>> system = assemble_system(make_model('nte'), N=4)
        >>> system.A.shape
        (9, 9)
    """
    alpha = settings.DEFAULT_ALPHA if alpha is None else alpha
    tol_null = settings.TOL_NULL if tol_null is None else tol_null
    with logger.stage(f"Сборка системы {model.name}, N={N}, u={u:+.6f}, α={alpha}"):
        basis = build_basis(model.name, N, u, quad_points)
        decomposition = null_space_decomposition(model, u, tol_null)
        damped_op = DampedOperator(model, decomposition, alpha)

        A = assemble_A(basis)
        B = assemble_B(basis, damped_op)
        flux_vectors, labels = flux_moment_vectors(basis, decomposition)
        rows = boundary_rows(basis)

    logger.info(f"(ν+, ν-, ν0) = {decomposition.dims}, моды {labels}")
    return GalerkinSystem(basis=basis, model=model, decomposition=decomposition, damped_op=damped_op, A=A, B=B,
                          boundary_rows=rows, flux_vectors=flux_vectors, flux_labels=tuple(labels), tol_null=tol_null,
                          tol_zero=settings.TOL_ZERO if tol_zero is None else tol_zero,
                          boundary_points=boundary_points or settings.BOUNDARY_POINTS)

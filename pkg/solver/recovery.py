from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Optional, Tuple, Union
from numpy import array, concatenate, ndarray, stack, zeros
from numpy.linalg import cond, solve
from numpy.polynomial import Polynomial
from core import Logger
from core.exceptions import SingularC
from data.cache import AuxiliaryCache
from data.data_provider import IncomingData
from models import VelocityFunction
from solver.assembly import GalerkinSystem, assemble_system
from solver.basis import BasisSet
from solver.spectral import DampedSolution, EigenDecomposition, generalized_eig, solve_damped
from config import settings

logger = Logger(__name__)

@dataclass(frozen=True)
class AuxiliarySet:
    """
    Вспомогательные решения g_{+,i}, g_{0,j} с данными X_{+,i}, X_{0,j} и матрица C.

    C_ab = ⟨(v+u)X_a, g_b⟩|_{x=0} для a, b из (X_+, X_0).

    Аргументы:
        g_plus (Tuple[DampedSolution, ...]): ν_+ решений
        g_zero (Tuple[DampedSolution, ...]): ν_0 решений
        C (ndarray): Матрица (ν_+ + ν_0)×(ν_+ + ν_0)
        condition_estimate (float): Число обусловленности C (0 для пустого набора)
        labels (Tuple[str, ...]): Имена мод
        system (GalerkinSystem): Система, на которой построены решения
    """
    g_plus: Tuple[DampedSolution, ...]
    g_zero: Tuple[DampedSolution, ...]
    C: ndarray
    condition_estimate: float
    labels: Tuple[str, ...]
    system: GalerkinSystem

    @property
    def solutions(self) -> Tuple[DampedSolution, ...]:
        return self.g_plus + self.g_zero

    @property
    def empty(self) -> bool:
        return not self.solutions

@dataclass(frozen=True)
class EndState:
    """
    Предельное состояние f_∞ = Σ η_{+,i} X_{+,i} + Σ η_{0,j} X_{0,j}.

    Аргументы:
        coefficients (ndarray): η
        modes (Tuple[VelocityFunction, ...]): Моды X_+, X_0
        labels (Tuple[str, ...]): Имена мод
        function (VelocityFunction): f_∞ в замкнутом виде
    """
    coefficients: ndarray
    modes: Tuple[VelocityFunction, ...]
    labels: Tuple[str, ...]
    function: VelocityFunction

    def __call__(self, v: Union[float, ndarray]) -> ndarray:
        return self.function(v)

    def as_dict(self) -> Dict[str, float]:
        return {label: float(value) for label, value in zip(self.labels, self.coefficients)}

@dataclass(frozen=True)
class RecoveredSolution:
    """
    Решение исходной (незатухающей) задачи f_φ = f - Σ η_b g_b + Φ.

    Аргументы:
        damped (DampedSolution): Затухающее решение с данными φ
        eta (ndarray): Коэффициенты η = C⁻¹ (U_+(f), U_0(f))|_{x=0}
        f_infinity (EndState): Φ = f_∞
        aux (AuxiliarySet): Вспомогательные решения
    """
    damped: DampedSolution
    eta: ndarray
    f_infinity: EndState
    aux: AuxiliarySet

    @property
    def basis(self) -> BasisSet:
        """Больший из базисов основного и вспомогательных решений (ψ_p не зависят от N)."""
        if self.aux.empty or self.aux.system.basis.size <= self.damped.basis.size:
            return self.damped.basis
        return self.aux.system.basis

    @property
    def end_function(self) -> VelocityFunction:
        return self.f_infinity.function

    def coefficients(self, x: float) -> ndarray:
        """Коэффициенты части f - Σ η g в базисе self.basis."""
        size = self.basis.size
        result = _padded(self.damped.coefficients(x), size)
        for weight, solution in zip(self.eta, self.aux.solutions):
            result = result - weight * _padded(solution.coefficients(x), size)
        return result

def _padded(coefficients: ndarray, size: int) -> ndarray:
    if len(coefficients) == size:
        return coefficients
    return concatenate([coefficients, zeros(size - len(coefficients))])

def _cache_config(system: GalerkinSystem) -> Dict[str, Any]:
    return {'model': system.model.name, 'u': system.u, 'N': system.N, 'alpha': system.alpha,
            'quad_points': system.basis.quad_points, 'tol_null': system.tol_null,
            'tol_zero': system.tol_zero, 'labels': system.flux_labels}

def build_auxiliary(system: GalerkinSystem, eig: Optional[EigenDecomposition] = None, aux_N: Optional[int] = None,
                    cache: Optional[AuxiliaryCache] = None, workers: Optional[int] = None) -> AuxiliarySet:
    """
    Строит вспомогательные решения и матрицу C.

    Все вспомогательные решения используют одно разложение пучка системы; меняется только
    правая часть граничного условия. Решения выполняются параллельно.

    Аргументы:
        system (GalerkinSystem): Основная система
        eig (Optional[EigenDecomposition]): Разложение пучка основной системы, если уже вычислено
        aux_N (Optional[int]): Порядок вспомогательных решений (по умолчанию N системы)
        cache (Optional[AuxiliaryCache]): Файловый кэш a(0) вспомогательных решений
        workers (Optional[int]): Число потоков (по умолчанию settings.WORKERS)

    Возвращает:
        AuxiliarySet: Пустой набор при ν_+ + ν_0 = 0

    Ошибки:
        SingularC: Если число обусловленности C больше settings.C_CONDITION_LIMIT
    """
    if aux_N is not None and aux_N != system.N:
        system = assemble_system(system.model, aux_N, system.u, system.alpha, tol_null=system.tol_null,
                                 tol_zero=system.tol_zero, boundary_points=system.boundary_points)
        eig = None

    decomposition = system.decomposition
    modes = decomposition.recovery_modes
    labels = tuple(mode.label for mode in modes)
    n_plus = len(decomposition.X_plus)
    if not modes:
        logger.info("ν+ + ν0 = 0: восстановление тождественно")
        return AuxiliarySet(g_plus=(), g_zero=(), C=zeros((0, 0)), condition_estimate=0.0, labels=(), system=system)

    eig = eig or generalized_eig(system.A, system.B, system.tol_zero)
    incoming = [IncomingData.from_function(mode) for mode in modes]
    stored = cache.get(_cache_config(system)) if cache is not None else None

    if stored is not None and tuple(stored[0]) == labels:
        solutions = [DampedSolution.from_coefficients(system, a0, eig, data) for a0, data in zip(stored[1], incoming)]
        logger.info(f"Вспомогательные решения {labels} загружены из кэша")
    else:
        with logger.stage(f"Вспомогательные решения {labels}, N={system.N}"), \
                ThreadPoolExecutor(max_workers=workers or settings.WORKERS) as executor:
            solutions = list(executor.map(lambda data: solve_damped(system, data, eig), incoming))
        if cache is not None:
            cache.set(_cache_config(system), list(labels), stack([solution.a0 for solution in solutions]))

    moments = recovery_moments(system)
    C = stack([moments @ solution.a0 for solution in solutions], axis=1)

    condition = float(cond(C))
    if not condition < settings.C_CONDITION_LIMIT:
        raise SingularC(condition)
    logger.debug(f"Матрица C {C.shape}: cond = {condition:.3e}")
    return AuxiliarySet(g_plus=tuple(solutions[:n_plus]), g_zero=tuple(solutions[n_plus:]), C=C,
                        condition_estimate=condition, labels=labels, system=system)

def recovery_moments(system: GalerkinSystem) -> ndarray:
    """Строки flux_vectors, образующие (U_+, U_0)."""
    decomposition = system.decomposition
    n_plus, n_minus, n_zero = decomposition.dims
    rows = list(range(n_plus)) + [n_plus + n_minus + j for j in range(n_zero)]
    return system.flux_vectors[rows]

def recover(damped: DampedSolution, aux: AuxiliarySet) -> RecoveredSolution:
    """
    Восстанавливает решение незатухающей задачи.

    η решает C η = (U_+(f), U_0(f))|_{x=0}; f_φ = f - Σ η_b g_b + Φ, Φ = Σ η_b X_b.

    Ошибки:
        SingularC: Если C вырождена
    """
    model = damped.system.model
    if aux.empty:
        zero = VelocityFunction(Polynomial([0.0]), model.gaussian, 'zero')
        end = EndState(coefficients=zeros(0), modes=(), labels=(), function=zero)
        return RecoveredSolution(damped=damped, eta=zeros(0), f_infinity=end, aux=aux)

    moments = recovery_moments(damped.system) @ damped.a0
    eta = solve(aux.C, moments)

    modes = tuple(aux.system.decomposition.recovery_modes)
    function = modes[0].scaled(float(eta[0]))
    for weight, mode in zip(eta[1:], modes[1:]):
        function = function + mode.scaled(float(weight))
    end = EndState(coefficients=eta, modes=modes, labels=aux.labels,
                   function=VelocityFunction(function.poly, function.gaussian, 'f_inf'))

    logger.info(f"Восстановление: η = {dict(zip(aux.labels, eta.round(12)))}")
    return RecoveredSolution(damped=damped, eta=eta, f_infinity=end, aux=aux)

def evaluate_recovered(sol: RecoveredSolution, x: float, v: Union[float, ndarray]) -> ndarray:
    """
    f_φ(x, v) = f(x, v) - Σ η_b g_b(x, v) + Φ(v).

    Ошибки:
        OutOfDomain: Если v вне области модели
    """
    if sol.aux.empty:
        return sol.damped.coefficients(x) @ sol.damped.basis.eval(v)
    return sol.coefficients(x) @ sol.basis.eval(v) + sol.end_function(v)

def end_state(sol: RecoveredSolution) -> EndState:
    """f_∞ в замкнутом виде."""
    return sol.f_infinity

def l2_error(recovered: RecoveredSolution, reference: VelocityFunction, x: float = 0.0) -> float:
    """
    ‖f_φ(x, ·) - reference‖_{L²(v)}, вычисленная точно.

    f_φ - reference = Σ b_k ψ_k + h, h = Φ - reference; норма² = bᵀb + 2 bᵀ⟨ψ, h⟩ + ⟨h, h⟩.
    """
    basis = recovered.basis
    b = recovered.coefficients(x)
    h = recovered.end_function + reference.scaled(-1.0)
    model = recovered.damped.system.model
    squared = float(b @ b + 2.0 * b @ basis.project(h) + model.inner(h, h))
    return max(squared, 0.0) ** 0.5

def recovered_moments(sol: RecoveredSolution, x: float) -> ndarray:
    """
    Потоковые моменты U(f_φ)(x) в порядке flux_labels системы.

    Для незатухающего уравнения они не зависят от x.
    """
    coefficients = sol.coefficients(x)
    system = sol.aux.system if len(coefficients) != sol.damped.basis.size else sol.damped.system
    moments = system.flux_vectors @ coefficients
    if sol.aux.empty:
        return moments
    model = system.model
    end = array([model.inner(direction, sol.end_function) for direction in system.decomposition.flux_directions()])
    return moments + end

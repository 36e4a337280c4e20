from math import sqrt
from dataclasses import dataclass
from typing import Optional, Tuple, Union
from numpy import abs as np_abs, asarray, float64, ndarray, ones
from core import Logger
from core.exceptions import NotConverged
from orthopoly import legendre01_rule
from config import settings

logger = Logger(__name__)

@dataclass(frozen=True)
class HFunctionTable:
    """
    H-функция Чандрасекара консервативного изотропного рассеяния на узлах Гаусса-Лежандра.

    Аргументы:
        mu_grid (ndarray): Узлы μ_j на (0, 1)
        weights (ndarray): Веса Гаусса-Лежандра на [0, 1]
        H_values (ndarray): H(μ_j) >= 1
        iteration_residual (float): Последнее изменение итерации
        iterations (int): Число итераций
    """
    mu_grid: ndarray
    weights: ndarray
    H_values: ndarray
    iteration_residual: float
    iterations: int

    def evaluate(self, mu: Union[float, ndarray]) -> ndarray:
        """
        H(μ) для μ ∈ [0, 1] интерполяцией Нистрема:
        1/H(μ) = Σ_j w_j μ_j H_j / (2(μ + μ_j)).
        """
        mu = asarray(mu, dtype=float64)
        kernel = self.weights * self.mu_grid * self.H_values / 2.0
        return 1.0 / (kernel / (mu[..., None] + self.mu_grid)).sum(axis=-1)

    def moments(self) -> Tuple[float, float]:
        """(∫H dμ, ∫μH dμ); для консервативного случая 2 и 2/√3."""
        return float(self.weights @ self.H_values), float(self.weights @ (self.mu_grid * self.H_values))

def _reciprocal_map(H: ndarray, mu: ndarray, weights: ndarray) -> ndarray:
    return 1.0 / ((weights * mu * H / 2.0) / (mu[:, None] + mu[None, :])).sum(axis=1)

def chandrasekhar_H(n_mu: Optional[int] = None, tol: Optional[float] = None,
                    max_iterations: Optional[int] = None) -> HFunctionTable:
    """
    Решает 1/H(μ) = ∫₀¹ (μ'/2) H(μ')/(μ+μ') dμ' итерацией неподвижной точки.

    Отображение T однородно степени -1, поэтому шаг берется как среднее геометрическое
    H ← √(H·T(H)), что убирает колебание масштаба. Остановка при max|ΔH| < tol.

    Аргументы:
        n_mu (Optional[int]): Число узлов (по умолчанию settings.H_NODES)
        tol (Optional[float]): Допуск (по умолчанию settings.H_TOL)
        max_iterations (Optional[int]): Предел итераций (по умолчанию settings.H_MAX_ITERATIONS)

    Возвращает:
        HFunctionTable: Таблица H на узлах

    Ошибки:
        ValueError: Если tol <= 0 или n_mu < 1
        NotConverged: Если предел итераций исчерпан
    """
    n_mu = n_mu or settings.H_NODES
    tol = settings.H_TOL if tol is None else tol
    max_iterations = max_iterations or settings.H_MAX_ITERATIONS
    if tol <= 0:
        raise ValueError(f"tol должен быть положительным, получено {tol}")
    if n_mu < 1:
        raise ValueError(f"n_mu должно быть >= 1, получено {n_mu}")

    rule = legendre01_rule(n_mu)
    mu, weights = rule.nodes, rule.weights
    H = ones(n_mu)
    change = float('inf')
    for iteration in range(1, max_iterations + 1):
        updated = (H * _reciprocal_map(H, mu, weights)) ** 0.5
        change = float(np_abs(updated - H).max())
        H = updated
        if change < tol:
            logger.debug(f"H-функция: {n_mu} узлов, {iteration} итераций, изменение {change:.3e}")
            return HFunctionTable(mu_grid=mu, weights=weights, H_values=H, iteration_residual=change,
                                  iterations=iteration)
    raise NotConverged(max_iterations, change)

def nte_exact_trace(mu: Union[float, ndarray], table: HFunctionTable) -> ndarray:
    """Точный след задачи Милна на выходящих скоростях v = -μ: H(μ)/√3 - μ."""
    mu = asarray(mu, dtype=float64)
    return table.evaluate(mu) / sqrt(3.0) - mu

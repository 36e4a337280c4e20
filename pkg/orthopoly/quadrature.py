from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, Optional
from numpy import argsort, array, float64, ndarray, sqrt
from numpy.linalg import LinAlgError
from scipy.linalg import eigh_tridiagonal
from core.exceptions import EigenFailure, IndexBeyondTable
from orthopoly.recurrence import RecurrenceTable, half_hermite_recurrence, shifted_legendre_recurrence

@dataclass(frozen=True)
class WeightDescriptor:
    """
    Описание веса квадратуры.

    Аргументы:
        kind (str): 'half_gaussian' (e^{-(v-s)²} на [0, ∞)) или 'legendre01' (1 на [0, 1])
        shift (float): Сдвиг s
        scale (float): Масса веса m0
    """
    kind: str
    shift: float
    scale: float

@dataclass(frozen=True)
class QuadratureRule:
    """
    Гауссова квадратура: узлы по возрастанию и положительные веса.

    Аргументы:
        nodes (ndarray): Узлы
        weights (ndarray): Веса, их сумма равна массе веса
        weight_descriptor (WeightDescriptor): Вес, относительно которого построено правило
    """
    nodes: ndarray
    weights: ndarray
    weight_descriptor: WeightDescriptor

    def __len__(self) -> int:
        return len(self.nodes)

    def integrate(self, integrand: Callable[[ndarray], ndarray]) -> float:
        """Σ w_i f(x_i) - интеграл f относительно веса правила."""
        return float(self.weights @ integrand(self.nodes))

def golub_welsch(table: RecurrenceTable, n_points: int) -> QuadratureRule:
    """
    Правило Гаусса по алгоритму Голуба-Уэлша.

    Узлы - собственные значения матрицы Якоби порядка n_points, веса - m0 · (первая компонента
    собственного вектора)². Правило точно для многочленов степени <= 2·n_points - 1.

    Аргументы:
        table (RecurrenceTable): Таблица рекуррентности веса
        n_points (int): Число узлов

    Возвращает:
        QuadratureRule: Узлы по возрастанию и веса

    Ошибки:
        IndexBeyondTable: Если n_points больше длины таблицы
        EigenFailure: Если трехдиагональная задача не сошлась
    """
    if n_points < 1 or n_points > len(table):
        raise IndexBeyondTable(f"Правило из {n_points} узлов требует таблицу длины >= {n_points}, есть {len(table)}")

    descriptor = WeightDescriptor(kind=table.kind, shift=table.shift, scale=table.m0)
    if n_points == 1:
        return QuadratureRule(nodes=_frozen(array([table.alphas[0]])), weights=_frozen(array([table.m0])),
                              weight_descriptor=descriptor)

    try:
        nodes, vectors = eigh_tridiagonal(array(table.alphas[:n_points], dtype=float64),
                                          sqrt(array(table.betas[:n_points - 1], dtype=float64)))
    except (LinAlgError, ValueError) as exc:
        raise EigenFailure(f"Матрица Якоби порядка {n_points} не диагонализовалась: {exc}") from exc

    order = argsort(nodes)
    weights = table.m0 * vectors[0, order] ** 2
    return QuadratureRule(nodes=_frozen(nodes[order]), weights=_frozen(weights), weight_descriptor=descriptor)

@lru_cache(maxsize=256)
def half_gaussian_rule(shift: float, n_points: int, precision_mode: Optional[str] = None) -> QuadratureRule:
    """
    Правило Гаусса для веса e^{-(t-shift)²} на [0, ∞).

    Аргументы:
        shift (float): Сдвиг веса
        n_points (int): Число узлов
        precision_mode (Optional[str]): Режим точности рекуррентности (None - 'extended')

    Пример:
        >>> rule = half_gaussian_rule(0.0, 10)
        >>> round(rule.integrate(lambda t: t ** 5), 12)  # ∫₀^∞ t⁵ e^{-t²} dt = 1
        1.0
    """
    return golub_welsch(half_hermite_recurrence(float(shift), n_points - 1, precision_mode), n_points)

@lru_cache(maxsize=64)
def legendre01_rule(n_points: int) -> QuadratureRule:
    """Правило Гаусса-Лежандра на [0, 1]."""
    return golub_welsch(shifted_legendre_recurrence(n_points - 1), n_points)

def _frozen(values: ndarray) -> ndarray:
    values = array(values, dtype=float64)
    values.flags.writeable = False
    return values

from math import exp as scalar_exp, sqrt
from dataclasses import dataclass
from typing import Optional, Tuple, Union
from numpy import abs as np_abs, arange, argsort, asarray, empty, exp, float64, isclose, ndarray, sign, zeros
from core import Logger
from core.exceptions import AsymmetricGrid, ModelMismatch, OutOfDomain, UnsupportedShift
from models.functions import VelocityFunction
from orthopoly import (RecurrenceTable, evaluate_polys, half_gaussian_rule, half_hermite_recurrence, legendre01_rule,
                       shifted_legendre_recurrence)
from config import settings

logger = Logger(__name__)

BASIS_KINDS = {'bgk': 'bgk_half_hermite', 'bgk_half_hermite': 'bgk_half_hermite',
               'nte': 'nte_legendre', 'nte_legendre': 'nte_legendre'}

SIDES = {'both': (1.0, -1.0), 'positive': (1.0,), 'negative': (-1.0,)}

@dataclass(frozen=True)
class BasisSet:
    """
    2N+1 ортонормированных функций ψ, продолженных четно и нечетно относительно v = -u.

    Индекс p массива хранит ψ_{p+1}: четные p - нечетные функции sign(w)·B_n(|w|)·E(w)/√2,
    нечетные p - четные функции B_n(|w|)·E(w)/√2, где w = v + u, n = p // 2,
    E(w) = e^{-w²/2} для BGK и E = 1 для NTE.

    Аргументы:
        kind (str): 'bgk_half_hermite' или 'nte_legendre'
        N (int): Порядок (2N+1 функций)
        u (float): Объемная скорость
        recurrence (RecurrenceTable): Рекуррентность B_n (полуэрмитова с s = 0 или Лежандра на [0, 1])
        velocity_domain (Tuple[float, float]): Область скоростей
        quad_points (int): Число узлов на полуось для точных перекрестных интегралов
    """
    kind: str
    N: int
    u: float
    recurrence: RecurrenceTable
    velocity_domain: Tuple[float, float]
    quad_points: int

    @property
    def size(self) -> int:
        return 2 * self.N + 1

    @property
    def gaussian(self) -> bool:
        return self.kind == 'bgk_half_hermite'

    @property
    def degrees(self) -> ndarray:
        """Степень n_k полинома, лежащего в основе ψ_k."""
        return arange(self.size) // 2

    @property
    def odd_mask(self) -> ndarray:
        """True для нечетных относительно -u функций."""
        return arange(self.size) % 2 == 0

    def eval(self, v: Union[float, ndarray]) -> ndarray:
        """
        Значения всех ψ в точках v.

        Возвращает:
            ndarray: Массив формы (2N+1,) + shape(v)

        Ошибки:
            OutOfDomain: Если v вне области (NTE: |v| > 1)
        """
        v = asarray(v, dtype=float64)
        low, high = self.velocity_domain
        if ((v < low) | (v > high)).any():
            raise OutOfDomain(f"Скорость вне области [{low}, {high}] базиса {self.kind}")

        w = v + self.u
        t = np_abs(w)
        polys = evaluate_polys(self.recurrence, t, self.N) / sqrt(2.0)
        if self.gaussian:
            polys = polys * exp(-0.5 * t * t)

        values = empty((self.size,) + v.shape)
        values[0::2] = sign(w) * polys
        values[1::2] = polys[:self.N]
        return values

    def project(self, g: VelocityFunction, side: str = 'both', quad_points: Optional[int] = None) -> ndarray:
        """
        Точные интегралы ⟨ψ_k, g⟩ по всей оси или по одной стороне от v = -u.

        Каждая сторона σ = ±1 отображается на t = σ(v+u) ∈ [0, ∞). Для BGK произведение
        огибающих ψ и g сводится к одной гауссиане e^{-(t - σu/2)²}·e^{-u²/4}, и интеграл
        считается правилом Гаусса с весом e^{-(t - σu/2)²}; для NTE - Гаусса-Лежандра на [0, 1].

        Аргументы:
            g (VelocityFunction): Функция замкнутого вида с той же огибающей, что и базис
            side (str): 'both', 'positive' (v+u > 0) или 'negative' (v+u < 0)
            quad_points (Optional[int]): Число узлов (по умолчанию достаточное для точности)

        Возвращает:
            ndarray: Вектор длины 2N+1

        Ошибки:
            ModelMismatch: Если огибающая g не совпадает с огибающей базиса
        """
        if g.gaussian != self.gaussian:
            raise ModelMismatch(f"Функция {g.label or g} несовместима с базисом {self.kind}")
        if side not in SIDES:
            raise ValueError(f"Неизвестная сторона: {side}. Доступные: {list(SIDES.keys())}")

        n_points = max(quad_points or self.quad_points, (self.N + g.degree) // 2 + 2)
        result = zeros(self.size)
        for sigma in SIDES[side]:
            if self.gaussian:
                rule = half_gaussian_rule(sigma * self.u / 2.0, n_points)
                factor = scalar_exp(-0.25 * self.u * self.u) / sqrt(2.0)
            else:
                rule = legendre01_rule(n_points)
                factor = 1.0 / sqrt(2.0)
            t = rule.nodes
            polys = evaluate_polys(self.recurrence, t, self.N)
            base = factor * (polys @ (rule.weights * g.poly(sigma * t - self.u)))
            result[0::2] += sigma * base
            result[1::2] += base[:self.N]
        return result

    def expand(self, g: VelocityFunction) -> ndarray:
        """Коэффициенты ортогональной проекции g на span(ψ)."""
        return self.project(g, 'both')

@dataclass(frozen=True)
class ParityPair:
    """
    Четная и нечетная относительно v = -u части выборки функции.

    Аргументы:
        even_part, odd_part (ndarray): Значения частей на сетке
        grid (ndarray): Сетка скоростей
        u (float): Объемная скорость
    """
    even_part: ndarray
    odd_part: ndarray
    grid: ndarray
    u: float

def build_basis(kind: str, N: int, u: float = 0.0, quad_points: Optional[int] = None) -> BasisSet:
    """
    Строит базис ψ для модели.

    Аргументы:
        kind (str): 'bgk' / 'bgk_half_hermite' или 'nte' / 'nte_legendre'
        N (int): Порядок, N >= 1
        u (float): Объемная скорость (для NTE только 0)
        quad_points (Optional[int]): Узлов на полуось (по умолчанию 2N + settings.QUAD_EXTRA)

    Возвращает:
        BasisSet: Базис из 2N+1 функций

    Ошибки:
        ValueError: Если N < 1 или вид неизвестен
        UnsupportedShift: Если kind = nte и u != 0

    Пример:
        >>> basis = build_basis('nte', 4)
        >>> basis.size
        9
    """
    if kind not in BASIS_KINDS:
        raise ValueError(f"Неизвестный вид базиса: {kind}. Доступные: {list(BASIS_KINDS.keys())}")
    if N < 1:
        raise ValueError(f"N должен быть >= 1, получено {N}")

    kind = BASIS_KINDS[kind]
    quad_points = quad_points or 2 * N + settings.QUAD_EXTRA
    if kind == 'nte_legendre':
        if u != 0.0:
            raise UnsupportedShift(f"Базис Лежандра допускает только u = 0, получено u = {u}")
        recurrence = shifted_legendre_recurrence(N)
        domain = (-1.0, 1.0)
    else:
        recurrence = half_hermite_recurrence(0.0, N)
        domain = (float('-inf'), float('inf'))

    logger.debug(f"Базис {kind}: N={N}, u={u:+.6f}, {2 * N + 1} функций")
    return BasisSet(kind=kind, N=N, u=float(u), recurrence=recurrence, velocity_domain=domain,
                    quad_points=quad_points)

def eval_basis(basis: BasisSet, v: Union[float, ndarray]) -> ndarray:
    """[ψ_1(v), ..., ψ_{2N+1}(v)]."""
    return basis.eval(v)

def parity_decompose(samples: ndarray, grid: ndarray, u: float, atol: float = 1e-12) -> ParityPair:
    """
    Четно-нечетное разложение f = f⁺ + f⁻ относительно v = -u.

    f⁺(v) = (f(v) + f(-2u - v)) / 2,  f⁻ = f - f⁺.

    Аргументы:
        samples (ndarray): Значения f на сетке
        grid (ndarray): Сетка, замкнутая относительно отражения v -> -2u - v
        u (float): Объемная скорость
        atol (float): Допуск совпадения отраженных узлов

    Ошибки:
        AsymmetricGrid: Если отражение какого-либо узла отсутствует в сетке
    """
    grid = asarray(grid, dtype=float64)
    samples = asarray(samples, dtype=float64)
    order = argsort(grid)
    reflected_order = argsort(-2.0 * u - grid)
    if not isclose(grid[order], (-2.0 * u - grid)[reflected_order], rtol=0.0, atol=atol).all():
        raise AsymmetricGrid(f"Сетка из {len(grid)} точек не симметрична относительно v = {-u}")

    mirror = empty(len(grid), dtype=int)
    mirror[reflected_order] = order
    even = 0.5 * (samples + samples[mirror])
    return ParityPair(even_part=even, odd_part=samples - even, grid=grid, u=float(u))

def gram_matrix(basis: BasisSet, n_points: Optional[int] = None) -> ndarray:
    """
    Матрица ⟨ψ_k, ψ_l⟩, вычисленная независимо от рекуррентности проекций: правило Гаусса
    на каждой полуоси от v = -u (для BGK с весом e^{-t²}, компенсированным в весах).
    Для ортонормированного базиса равна единичной.
    """
    n_points = n_points or basis.N + 2
    if basis.gaussian:
        rule = half_gaussian_rule(0.0, n_points)
        weights = rule.weights * exp(rule.nodes * rule.nodes)
    else:
        rule = legendre01_rule(n_points)
        weights = rule.weights

    gram = zeros((basis.size, basis.size))
    for sigma in (1.0, -1.0):
        values = basis.eval(sigma * rule.nodes - basis.u)
        gram += (values * weights) @ values.T
    return gram

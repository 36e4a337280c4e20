from math import erfc, exp, pi, sqrt
from functools import lru_cache
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union
from mpmath.ctx_mp import MPContext
from numpy import allclose, arange, asarray, empty, exp as np_exp, float64, ndarray, ones, tile, zeros
from numpy.polynomial.legendre import leggauss
from core import Logger
from core.exceptions import IndexBeyondTable, NonPositiveBeta, PrecisionExhausted
from config import settings

logger = Logger(__name__)

PRECISION_MODES = ('double', 'extended')

# Составное правило Гаусса-Лежандра процедуры Стилтьеса: панели × узлов на панель
_STIELTJES_PANELS = 40
_STIELTJES_POINTS = 40

@dataclass(frozen=True)
class GaussianMoments:
    """
    Моменты полугауссова веса m_i = ∫₀^∞ vⁱ e^{-(v-s)²} dv, i = 0, 1, 2.

    Аргументы:
        m0, m1, m2 (float): Моменты
        s (float): Сдвиг веса
    """
    m0: float
    m1: float
    m2: float
    s: float

@dataclass(frozen=True)
class RecurrenceTable:
    """
    Таблица трехчленной рекуррентности ортонормированных многочленов.

    √β_{n+1} B_{n+1} = (v - α_n) B_n - √β_n B_{n-1},  B_0 = 1/√m0.

    Аргументы:
        shift (float): Сдвиг веса s (для Лежандра на [0, 1] равен 0)
        alphas (ndarray): α_0..α_{n_max}
        betas (ndarray): β_1..β_{n_max}
        precision_mode (str): 'double' или 'extended'
        m0 (float): Полная масса веса
        kind (str): 'half_gaussian' (вес e^{-(v-s)²} на [0, ∞)) или 'legendre01' (вес 1 на [0, 1])
    """
    shift: float
    alphas: ndarray
    betas: ndarray
    precision_mode: str
    m0: float
    kind: str = 'half_gaussian'

    @property
    def n_max(self) -> int:
        return len(self.alphas) - 1

    def __len__(self) -> int:
        return len(self.alphas)

def gaussian_moments(s: float) -> GaussianMoments:
    """
    Замкнутые формулы моментов полугауссова веса через erfc и exp.

    m0 = √π/2 · erfc(-s),  m1 = e^{-s²}/2 + s·m0,  m2 = (1/2 + s²)·m0 + s·e^{-s²}/2.

    Аргументы:
        s (float): Сдвиг веса

    Возвращает:
        GaussianMoments: Моменты m0, m1, m2

    Пример:
        >>> gaussian_moments(0.0).m1
        0.5
    """
    s = float(s)
    m0 = 0.5 * sqrt(pi) * erfc(-s)
    tail = exp(-s * s)
    m1 = 0.5 * tail + s * m0
    m2 = (0.5 + s * s) * m0 + 0.5 * s * tail
    return GaussianMoments(m0=m0, m1=m1, m2=m2, s=s)

def _extended_moments(ctx: MPContext, s: float):
    """Те же моменты в арифметике mpmath."""
    s = ctx.mpf(s)
    m0 = ctx.sqrt(ctx.pi) / 2 * ctx.erfc(-s)
    tail = ctx.exp(-s * s)
    m1 = tail / 2 + s * m0
    m2 = (ctx.mpf(1) / 2 + s * s) * m0 + s * tail / 2
    return m0, m1, m2

def _forward_recurrence(m0, m1, m2, s, n_max: int):
    """
    Прямая рекуррентность для α_n, β_n полуэрмитовых многочленов.

    Работает с любым числовым типом (float или mpf): α_0 = m1/m0, β_1 = m2/m0 - α_0²,
    далее β_{n+1} = n + 1/2 + s·α_n - α_n² - β_n и α_{n+1} = s - α_n + Σ_{k≤n} α_k / (2β_{n+1}).

    Ошибки:
        NonPositiveBeta: Если какое-либо β_{n+1} <= 0
    """
    alpha = m1 / m0
    alphas = [alpha]
    betas = []
    if n_max == 0:
        return alphas, betas

    beta = m2 / m0 - alpha * alpha
    running_sum = alpha
    for n in range(n_max):
        if n > 0:
            beta = n + 0.5 + s * alphas[n] - alphas[n] * alphas[n] - betas[n - 1]
        if beta <= 0:
            raise NonPositiveBeta(n + 1, float(beta))
        betas.append(beta)
        alpha = s - alphas[n] + running_sum / (2 * beta)
        alphas.append(alpha)
        running_sum = running_sum + alpha

    return alphas, betas

def _resolve_precision(precision_mode: Optional[str]) -> str:
    if precision_mode is None or precision_mode == 'auto':
        return 'extended'
    if precision_mode not in PRECISION_MODES:
        raise ValueError(f"Неизвестный режим точности: {precision_mode}. Доступные: {PRECISION_MODES}")
    return precision_mode

def _agree(first: Tuple[List[float], List[float]], second: Tuple[List[float], List[float]]) -> bool:
    return all(allclose(a, b, rtol=4e-16, atol=0.0) for a, b in zip(first, second))

def _extended_recurrence(s: float, n_max: int) -> Tuple[List[float], List[float]]:
    """
    Прямая рекуррентность в mpmath с контролем точности.

    Прямая рекуррентность теряет около одного десятичного знака на шаг, поэтому она
    повторяется с удвоением числа знаков, пока две последовательные таблицы не совпадут
    после округления до double.

    Ошибки:
        PrecisionExhausted: Если совпадение не достигнуто за settings.RECURRENCE_REFINEMENTS удвоений
    """
    digits = settings.RECURRENCE_DIGITS + 2 * n_max
    previous = None
    for _ in range(settings.RECURRENCE_REFINEMENTS + 1):
        ctx = MPContext()
        ctx.dps = digits
        try:
            m0, m1, m2 = _extended_moments(ctx, s)
            alphas, betas = _forward_recurrence(m0, m1, m2, ctx.mpf(s), n_max)
            current = [float(value) for value in alphas], [float(value) for value in betas]
        except NonPositiveBeta as exc:
            logger.debug(f"s={s:+.6f}, n_max={n_max}: {exc} при {digits} знаках")
            current = None

        if current is not None and previous is not None and _agree(previous, current):
            return current
        previous = current
        digits *= 2

    raise PrecisionExhausted(digits // 2)

def _stieltjes_recurrence(s: float, n_max: int) -> Tuple[ndarray, ndarray]:
    """
    Дискретизированная процедура Стилтьеса в double.

    Вес e^{-(v-s)²} на [0, max(s, 0) + 2√(n_max+1) + 10] заменяется составным правилом
    Гаусса-Лежандра; ортонормированные векторы строятся трехчленной рекуррентностью
    с полной переортогонализацией.
    """
    nodes, weights = leggauss(_STIELTJES_POINTS)
    span = max(s, 0.0) + 2.0 * sqrt(n_max + 1) + 10.0
    width = span / _STIELTJES_PANELS
    starts = arange(_STIELTJES_PANELS) * width
    v = (starts[:, None] + 0.5 * width * (nodes + 1.0)).ravel()
    w = tile(0.5 * width * weights, _STIELTJES_PANELS) * np_exp(-(v - s) ** 2)

    basis = empty((n_max + 1, len(v)))
    alphas = empty(n_max + 1)
    betas = empty(n_max)
    basis[0] = 1.0 / sqrt(w.sum())
    for n in range(n_max + 1):
        alphas[n] = w @ (v * basis[n] ** 2)
        if n == n_max:
            break
        r = (v - alphas[n]) * basis[n] - (sqrt(betas[n - 1]) * basis[n - 1] if n > 0 else 0.0)
        for _ in range(2):
            r = r - basis[:n + 1].T @ (basis[:n + 1] @ (w * r))
        betas[n] = w @ (r * r)
        if betas[n] <= 0.0:
            raise NonPositiveBeta(n + 1, float(betas[n]))
        basis[n + 1] = r / sqrt(betas[n])
    return alphas, betas

@lru_cache(maxsize=256)
def half_hermite_recurrence(s: float, n_max: int, precision_mode: Optional[str] = None) -> RecurrenceTable:
    """
    Коэффициенты рекуррентности многочленов, ортонормированных с весом e^{-(v-s)²} на [0, ∞).

    Аргументы:
        s (float): Сдвиг веса
        n_max (int): Наибольший номер α_n (таблица содержит α_0..α_{n_max}, β_1..β_{n_max})
        precision_mode (Optional[str]): 'extended' (по умолчанию) - прямая рекуррентность в mpmath,
            'double' - дискретизированная процедура Стилтьеса

    Возвращает:
        RecurrenceTable: Таблица с положительными β

    Ошибки:
        ValueError: Если n_max < 0 или режим неизвестен
        NonPositiveBeta: Если процедура Стилтьеса потеряла ортогональность
        PrecisionExhausted: Если рекуррентность в mpmath не стабилизировалась

    Применение:
        Оба режима дают одну и ту же таблицу с точностью около 1e-14; extended служит
        основным, double - независимой проверкой без mpmath.
    """
    if n_max < 0:
        raise ValueError(f"n_max должен быть неотрицательным, получено {n_max}")

    mode = _resolve_precision(precision_mode)
    if mode == 'extended':
        alphas, betas = _extended_recurrence(float(s), n_max)
    else:
        alphas, betas = _stieltjes_recurrence(float(s), n_max)

    table = RecurrenceTable(shift=float(s), alphas=_frozen(alphas), betas=_frozen(betas), precision_mode=mode,
                            m0=gaussian_moments(s).m0, kind='half_gaussian')
    logger.debug(f"Рекуррентность s={s:+.6f}, n_max={n_max}, точность {mode}")
    return table

@lru_cache(maxsize=64)
def shifted_legendre_recurrence(n_max: int) -> RecurrenceTable:
    """
    Коэффициенты ортонормированных многочленов Лежандра на [0, 1] с весом 1.

    α_n = 1/2, β_n = 1 / (4(4 - n⁻²)), m0 = 1.

    Аргументы:
        n_max (int): Наибольший номер α_n

    Возвращает:
        RecurrenceTable: Таблица вида legendre01
    """
    if n_max < 0:
        raise ValueError(f"n_max должен быть неотрицательным, получено {n_max}")

    n = arange(1, n_max + 1, dtype=float64)
    betas = 1.0 / (4.0 * (4.0 - 1.0 / n ** 2)) if n_max > 0 else empty(0)
    return RecurrenceTable(shift=0.0, alphas=_frozen(0.5 * ones(n_max + 1)), betas=_frozen(betas),
                           precision_mode='double', m0=1.0, kind='legendre01')

def evaluate_polys(table: RecurrenceTable, v: Union[float, ndarray], n_max: int) -> ndarray:
    """
    Значения B_0(v)..B_{n_max}(v) по трехчленной рекуррентности.

    Аргументы:
        table (RecurrenceTable): Таблица коэффициентов
        v (float | ndarray): Точка или массив точек (в координатах веса таблицы)
        n_max (int): Наибольшая степень

    Возвращает:
        ndarray: Массив формы (n_max + 1,) + shape(v)

    Ошибки:
        IndexBeyondTable: Если n_max превышает длину таблицы
    """
    if n_max < 0 or n_max > len(table.betas):
        raise IndexBeyondTable(f"Степень {n_max} вне таблицы длины {len(table)}")

    v = asarray(v, dtype=float64)
    values = empty((n_max + 1,) + v.shape)
    values[0] = 1.0 / sqrt(table.m0)
    if n_max >= 1:
        values[1] = (v - table.alphas[0]) * values[0] / sqrt(table.betas[0])
    for n in range(1, n_max):
        values[n + 1] = ((v - table.alphas[n]) * values[n] - sqrt(table.betas[n - 1]) * values[n - 1]) \
                        / sqrt(table.betas[n])
    return values

def jacobi_matrix(table: RecurrenceTable, n: int) -> ndarray:
    """
    Симметричная трехдиагональная матрица Якоби порядка n: J_kk = α_k, J_{k,k+1} = √β_{k+1}.

    Элемент J_kl равен ∫ v B_k B_l w dv по весу таблицы.
    """
    if n < 1 or n > len(table):
        raise IndexBeyondTable(f"Порядок {n} вне таблицы длины {len(table)}")

    matrix = zeros((n, n))
    for k in range(n):
        matrix[k, k] = table.alphas[k]
        if k + 1 < n:
            matrix[k, k + 1] = matrix[k + 1, k] = sqrt(table.betas[k])
    return matrix

def _frozen(values) -> ndarray:
    array = asarray([float(value) for value in values], dtype=float64)
    array.flags.writeable = False
    return array

from math import pi
from dataclasses import dataclass
from numpy import arange, asarray, cos, float64, ndarray, ones
from core.exceptions import ConfigError
from config import settings

FILTER_KINDS = ('none', 'cosine')

@dataclass(frozen=True)
class FilterSpec:
    """
    Фильтр коэффициентов Галеркина σ(θ)^p, σ(θ) = cos(πθ/2).

    Аргументы:
        kind (str): 'none' или 'cosine'
        order (int): Порядок p >= 1

    Ошибки:
        ConfigError: Если вид неизвестен или p < 1
    """
    kind: str = 'none'
    order: int = 2

    def __post_init__(self):
        if self.kind not in FILTER_KINDS:
            raise ConfigError(f"Неизвестный фильтр: {self.kind}. Доступные: {list(FILTER_KINDS)}")
        if int(self.order) != self.order or self.order < 1:
            raise ConfigError(f"Порядок фильтра должен быть целым >= 1, получено {self.order}")

    @classmethod
    def default(cls) -> 'FilterSpec':
        return cls(kind=settings.FILTER_KIND, order=settings.FILTER_ORDER)

    @property
    def active(self) -> bool:
        return self.kind != 'none'

def filter_factors(size: int, spec: FilterSpec) -> ndarray:
    """
    Множители фильтра для вектора длины 2N+1.

    θ_k = n_k / (N+1), n_k = k // 2 - степень полинома под ψ_k; обе функции одной степени
    получают одинаковый множитель.
    """
    if not spec.active:
        return ones(size)
    N = (size - 1) // 2
    theta = (arange(size) // 2) / (N + 1)
    return cos(0.5 * pi * theta) ** spec.order

def apply_filter(coefficients: ndarray, spec: FilterSpec) -> ndarray:
    coefficients = asarray(coefficients, dtype=float64)
    if not spec.active:
        return coefficients.copy()
    return coefficients * filter_factors(len(coefficients), spec)

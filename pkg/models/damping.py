from typing import List
from numpy import asarray, float64, ndarray
from models.base_model import KineticModel, VelocityGrid
from models.decomposition import NullSpaceDecomposition
from models.functions import VelocityFunction

class DampedOperator:
    """
    Затухающий оператор L_d f = L f + α Σ d ⟨d, f⟩.

    Направления d: (v+u)X для всех мод X_+, X_-, X_0 и (v+u)·L⁻¹((v+u)X_0) для мод X_0.
    Все слагаемые затухания - положительно полуопределенные ранговые поправки, поэтому
    L_d симметричен; строгая коэрцитивность проверяется при разложении Холецкого матрицы B.

    Аргументы:
        model (KineticModel): Модель
        decomposition (NullSpaceDecomposition): Разбиение нуль-пространства при заданном u
        alpha (float): Сила затухания α > 0

    Ошибки:
        ValueError: Если alpha <= 0

    Пример:
        >>> operator = DampedOperator(NTEModel(), null_space_decomposition(NTEModel(), 0.0), alpha=0.1)
        >>> len(operator.directions())
        2
    """

    def __init__(self, model: KineticModel, decomposition: NullSpaceDecomposition, alpha: float):
        if alpha <= 0:
            raise ValueError(f"Сила затухания α должна быть положительной, получено {alpha}")
        self.model = model
        self.decomposition = decomposition
        self.alpha = float(alpha)

    @property
    def u(self) -> float:
        return self.decomposition.u

    def directions(self) -> List[VelocityFunction]:
        return self.decomposition.flux_directions()

    def apply(self, samples: ndarray, grid: VelocityGrid) -> ndarray:
        """L_d f на сетке скоростей."""
        samples = asarray(samples, dtype=float64)
        result = self.model.apply_L(samples, grid)
        for direction in self.directions():
            values = grid.sample(direction)
            result = result + self.alpha * values * grid.inner(values, samples)
        return result

    def __repr__(self) -> str:
        return f'DampedOperator(model={self.model.name}, u={self.u}, alpha={self.alpha})'

def apply_damped(op: DampedOperator, samples: ndarray, grid: VelocityGrid) -> ndarray:
    """
    Применяет L_d к выборке функции на квадратурной сетке модели.

    Аргументы:
        op (DampedOperator): Оператор
        samples (ndarray): Значения f в узлах grid
        grid (VelocityGrid): Сетка скоростей

    Возвращает:
        ndarray: Значения L_d f в тех же узлах
    """
    return op.apply(samples, grid)

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union
from numpy import asarray, float64, ndarray
from core.exceptions import OutOfDomain
from models.functions import VelocityFunction

@dataclass(frozen=True)
class VelocityGrid:
    """
    Квадратурная сетка по скорости для операций над выборками функций.

    Аргументы:
        nodes (ndarray): Узлы v_i
        weights (ndarray): Веса, ∫ h dv ≈ Σ weights_i h(v_i)
    """
    nodes: ndarray
    weights: ndarray

    def inner(self, f: ndarray, g: ndarray) -> float:
        """Скалярное произведение ⟨f, g⟩ по сетке."""
        return float(self.weights @ (asarray(f) * asarray(g)))

    def sample(self, function: VelocityFunction) -> ndarray:
        return function(self.nodes)

class KineticModel(ABC):
    """
    Абстрактный базовый класс кинетической модели.

    Определяет интерфейс оператора столкновений L = I - P, где P - ортогональный проектор
    на нуль-пространство, заданное замкнутым ортонормированным базисом.

    Атрибуты:
        name (str): Имя модели ('bgk' или 'nte')
        velocity_domain (Tuple[float, float]): Область скоростей
        sound_speed (Optional[float]): Скорость звука c (только для BGK)
        gaussian (bool): Несут ли функции модели огибающую e^{-v²/2}
    """
    name: str = ''
    velocity_domain: Tuple[float, float] = (float('-inf'), float('inf'))
    sound_speed: Optional[float] = None
    gaussian: bool = True

    @abstractmethod
    def null_basis(self) -> List[VelocityFunction]:
        """
        Ортонормированный базис Null(L) в замкнутом виде.

        Возвращает:
            List[VelocityFunction]: Функции, натягивающие нуль-пространство

        Применение:
            Все конкретные модели должны реализовывать этот метод.
        """
        pass

    @abstractmethod
    def flux_modes(self, u: float) -> List[VelocityFunction]:
        """Ортонормированный базис Null(L), диагонализующий форму ⟨(v+u)·, ·⟩."""
        pass

    @abstractmethod
    def velocity_grid(self, n_points: int) -> VelocityGrid:
        """Сетка, точно интегрирующая произведения функций модели степени <= 2·n_points - 1."""
        pass

    def check_domain(self, v: Union[float, ndarray]) -> ndarray:
        """
        Проверяет, что скорости лежат в области модели.

        Ошибки:
            OutOfDomain: Если какая-либо скорость вне velocity_domain
        """
        v = asarray(v, dtype=float64)
        low, high = self.velocity_domain
        if ((v < low) | (v > high)).any():
            raise OutOfDomain(f"Скорость вне области [{low}, {high}] модели {self.name}")
        return v

    def inner(self, f: VelocityFunction, g: VelocityFunction) -> float:
        """Точное ⟨f, g⟩ для функций замкнутого вида."""
        grid = self.velocity_grid((f.degree + g.degree) // 2 + 2)
        return grid.inner(grid.sample(f), grid.sample(g))

    def apply_L(self, samples: ndarray, grid: VelocityGrid) -> ndarray:
        """
        Применяет L f = f - Σ e ⟨e, f⟩ к выборке f на сетке.

        Аргументы:
            samples (ndarray): Значения f в узлах сетки
            grid (VelocityGrid): Сетка

        Возвращает:
            ndarray: Значения L f в тех же узлах
        """
        result = asarray(samples, dtype=float64).copy()
        for mode in self.null_basis():
            values = grid.sample(mode)
            result -= values * grid.inner(values, samples)
        return result

    def __repr__(self) -> str:
        return f'{type(self).__name__}()'

from dataclasses import dataclass
from typing import Union
from numpy import asarray, exp, float64, ndarray
from numpy.polynomial import Polynomial

@dataclass(frozen=True)
class VelocityFunction:
    """
    Функция скорости замкнутого вида q(v)·e^{-v²/2} (gaussian=True) или q(v) (gaussian=False).

    Моды нуль-пространства, направления затухания и точные входные данные представлены
    в этом виде, поэтому все перекрестные интегралы с базисом вычисляются точно.

    Аргументы:
        poly (Polynomial): Многочлен q(v)
        gaussian (bool): Есть ли множитель e^{-v²/2}
        label (str): Имя для логов и отчетов

    Пример:
        >>> chi = VelocityFunction(Polynomial([0.0, 1.0]), gaussian=True, label='v√M')
        >>> flux = chi.flux(0.5)  # (v + 0.5) v e^{-v²/2}
    """
    poly: Polynomial
    gaussian: bool = True
    label: str = ''

    def __call__(self, v: Union[float, ndarray]) -> ndarray:
        v = asarray(v, dtype=float64)
        values = self.poly(v)
        if self.gaussian:
            values = values * exp(-0.5 * v * v)
        return values

    def flux(self, u: float) -> 'VelocityFunction':
        """(v + u)·f."""
        return VelocityFunction(self.poly * Polynomial([u, 1.0]), self.gaussian, f'(v+u){self.label}')

    def scaled(self, factor: float) -> 'VelocityFunction':
        return VelocityFunction(self.poly * factor, self.gaussian, self.label)

    def __add__(self, other: 'VelocityFunction') -> 'VelocityFunction':
        if self.gaussian != other.gaussian:
            raise ValueError("Нельзя складывать функции с разной огибающей")
        return VelocityFunction(self.poly + other.poly, self.gaussian, f'{self.label}+{other.label}')

    @property
    def degree(self) -> int:
        return self.poly.degree()

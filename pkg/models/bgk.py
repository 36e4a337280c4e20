from math import pi, sqrt
from dataclasses import dataclass
from typing import Dict, List
from numpy import exp
from numpy.polynomial import Polynomial
from numpy.polynomial.hermite import hermgauss
from models.base_model import KineticModel, VelocityGrid
from models.functions import VelocityFunction

SOUND_SPEED = sqrt(1.5)

_NORM = 1.0 / (sqrt(6.0) * pi ** 0.25)

@dataclass(frozen=True)
class ChiModes:
    """
    Замкнутые моды χ_+, χ_-, χ_0 нуль-пространства BGK.

    Атрибуты:
        plus, minus, zero (VelocityFunction): Моды
        speeds (Dict[str, float]): Аналитические потоки ⟨(v+u)χ, χ⟩: u + c, u - c, u
    """
    plus: VelocityFunction
    minus: VelocityFunction
    zero: VelocityFunction
    speeds: Dict[str, float]

    def as_dict(self) -> Dict[str, VelocityFunction]:
        return {'chi_plus': self.plus, 'chi_minus': self.minus, 'chi_zero': self.zero}

def chi_modes(u: float) -> ChiModes:
    """
    Моды χ, диагонализующие форму потока ⟨(v+u)·, ·⟩ на Null(L) линеаризованного BGK.

    χ_0 = (2v² - 3) e^{-v²/2} / (6^{1/2} π^{1/4}),  χ_± = (√6 v ± 2v²) e^{-v²/2} / (6^{1/2} π^{1/4}).

    Аргументы:
        u (float): Объемная скорость

    Возвращает:
        ChiModes: Моды и их потоки u ± c, u

    Пример:
        >>> round(chi_modes(0.5).speeds['chi_plus'], 9)
        1.724744871
    """
    plus = VelocityFunction(Polynomial([0.0, sqrt(6.0), 2.0]) * _NORM, True, 'chi_plus')
    minus = VelocityFunction(Polynomial([0.0, sqrt(6.0), -2.0]) * _NORM, True, 'chi_minus')
    zero = VelocityFunction(Polynomial([-3.0, 0.0, 2.0]) * _NORM, True, 'chi_zero')
    speeds = {'chi_plus': u + SOUND_SPEED, 'chi_minus': u - SOUND_SPEED, 'chi_zero': float(u)}
    return ChiModes(plus=plus, minus=minus, zero=zero, speeds=speeds)

class BGKModel(KineticModel):
    """
    Линеаризованный оператор BGK: L f = f - m(v), где m - проекция f на Span{√M, v√M, v²√M}.

    Максвеллиан M = e^{-v²}/√π, скорость звука c = √(3/2). Моды χ_+, χ_-, χ_0 служат
    ортонормированным базисом нуль-пространства.
    """
    name = 'bgk'
    velocity_domain = (float('-inf'), float('inf'))
    sound_speed = SOUND_SPEED
    gaussian = True

    def null_basis(self) -> List[VelocityFunction]:
        modes = chi_modes(0.0)
        return [modes.plus, modes.minus, modes.zero]

    def flux_modes(self, u: float) -> List[VelocityFunction]:
        """Базис Null(L), в котором форма ⟨(v+u)·, ·⟩ диагональна при любом u."""
        return self.null_basis()

    def velocity_grid(self, n_points: int) -> VelocityGrid:
        """
        Сетка Гаусса-Эрмита на всей оси с весами, пересчитанными под меру dv.

        Произведения двух функций с огибающей e^{-v²/2} интегрируются точно.
        """
        nodes, weights = hermgauss(n_points)
        return VelocityGrid(nodes=nodes, weights=weights * exp(nodes * nodes))

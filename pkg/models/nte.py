from math import sqrt
from typing import List
from numpy.polynomial import Polynomial
from numpy.polynomial.legendre import leggauss
from models.base_model import KineticModel, VelocityGrid
from models.functions import VelocityFunction

class NTEModel(KineticModel):
    """
    Изотропное уравнение переноса нейтронов: L f = f - (1/2) ∫_{-1}^{1} f dv.

    Нуль-пространство - константы, нормированный базис X_0 = 1/√2. Допускается только u = 0.
    """
    name = 'nte'
    velocity_domain = (-1.0, 1.0)
    sound_speed = None
    gaussian = False

    def null_basis(self) -> List[VelocityFunction]:
        return [VelocityFunction(Polynomial([1.0 / sqrt(2.0)]), False, 'constant')]

    def flux_modes(self, u: float) -> List[VelocityFunction]:
        return self.null_basis()

    def velocity_grid(self, n_points: int) -> VelocityGrid:
        """Сетка Гаусса-Лежандра на [-1, 1]."""
        nodes, weights = leggauss(n_points)
        return VelocityGrid(nodes=nodes, weights=weights)

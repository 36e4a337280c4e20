from typing import List
from numpy.polynomial import Polynomial
from core import Logger
from core.exceptions import ConfigError, ModelMismatch
from data.data_provider import IncomingData, IncomingProvider
from models import KineticModel, VelocityFunction, chi_modes

class BuiltinProvider(IncomingProvider):
    """
    Встроенные входящие данные.

    Доступные имена:
        zero: φ = 0
        v: φ = v (задача Милна для NTE)
        v_cubed: φ = v³
        chi_plus, chi_minus, chi_zero: моды χ нуль-пространства BGK

    Для NTE многочлены v и v³ принадлежат тому же классу функций, что и базис, и берутся
    в замкнутом виде; для BGK они не несут гауссовой огибающей и интегрируются квадратурой.

    Пример:
        >>> provider = BuiltinProvider()
        >>> phi = provider.get_incoming('v', make_model('nte'))
        >>> phi.exact is not None
        True
    """
    polynomials = {'zero': [0.0], 'v': [0.0, 1.0], 'v_cubed': [0.0, 0.0, 0.0, 1.0]}
    modes = ('chi_plus', 'chi_minus', 'chi_zero')

    def __init__(self):
        self.logger = Logger(__name__)

    def available(self) -> List[str]:
        return list(self.polynomials.keys()) + list(self.modes)

    def get_incoming(self, name: str, model: KineticModel) -> IncomingData:
        """
        Строит входящие данные по имени.

        Ошибки:
            ConfigError: Если имя неизвестно
            ModelMismatch: Если мода χ запрошена не для BGK
        """
        if name in self.modes:
            if model.name != 'bgk':
                raise ModelMismatch(f"Данные {name} определены только для модели bgk")
            return IncomingData.from_function(chi_modes(0.0).as_dict()[name], name)

        coefficients = self.polynomials.get(name)
        if coefficients is None:
            raise ConfigError(f"Неизвестные входящие данные: {name}. Доступные: {self.available()}")

        function = VelocityFunction(Polynomial(coefficients), False, name)
        if name == 'zero' or not model.gaussian:
            return IncomingData.from_function(VelocityFunction(function.poly, model.gaussian, name), name)
        self.logger.debug(f"Данные {name} для {model.name} интегрируются квадратурой")
        return IncomingData(name=name, function=function, description=f'многочлен {name} без огибающей')

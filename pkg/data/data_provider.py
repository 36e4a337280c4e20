from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Union
from numpy import asarray, float64, isfinite, ndarray
from numpy.polynomial import Polynomial
from models.functions import VelocityFunction

@dataclass(frozen=True)
class IncomingData:
    """
    Входящие данные φ(v) при x = 0 для v + u > 0.

    Аргументы:
        name (str): Имя данных ('v', 'chi_plus', путь к файлу, ...)
        function (Callable[[ndarray], ndarray]): Значения φ в произвольных точках
        exact (Optional[VelocityFunction]): Замкнутый вид, если φ - многочлен с огибающей модели
        description (str): Описание для отчетов
    """
    name: str
    function: Callable[[ndarray], ndarray]
    exact: Optional[VelocityFunction] = None
    description: str = ''

    def __call__(self, v: Union[float, ndarray]) -> ndarray:
        values = asarray(self.function(asarray(v, dtype=float64)), dtype=float64)
        if not isfinite(values).all():
            raise ValueError(f"Входящие данные '{self.name}' не конечны в точках квадратуры")
        return values

    @classmethod
    def from_function(cls, function: VelocityFunction, name: Optional[str] = None) -> 'IncomingData':
        """Данные замкнутого вида: правая часть граничного условия считается точно."""
        name = name or function.label
        return cls(name=name, function=function, exact=function, description=f'замкнутый вид {name}')

    @classmethod
    def zero(cls, gaussian: bool = True) -> 'IncomingData':
        return cls.from_function(VelocityFunction(Polynomial([0.0]), gaussian, 'zero'))

class IncomingProvider(ABC):
    """Абстрактный базовый класс для всех источников входящих данных"""

    @abstractmethod
    def get_incoming(self, name: str, model) -> IncomingData:
        """
        Получение входящих данных

        Аргументы:
            name (str): Имя встроенных данных или путь к таблице
            model (KineticModel): Модель, для которой строятся данные

        Возвращает:
            IncomingData
        """
        pass

    @abstractmethod
    def available(self) -> list:
        """Список доступных имен"""
        pass

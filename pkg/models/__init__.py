from core.exceptions import ConfigError
from .functions import VelocityFunction
from .base_model import KineticModel, VelocityGrid
from .bgk import BGKModel, ChiModes, chi_modes, SOUND_SPEED
from .nte import NTEModel
from .decomposition import NullSpaceDecomposition, null_space_decomposition
from .damping import DampedOperator, apply_damped

model_map = {'bgk': BGKModel, 'nte': NTEModel}

def make_model(name: str) -> KineticModel:
    """
    Создает кинетическую модель по имени.

    Ошибки:
        ConfigError: Если модель неизвестна
    """
    model_class = model_map.get(name)
    if not model_class:
        raise ConfigError(f"Неизвестная модель: {name}. Доступные модели: {list(model_map.keys())}")
    return model_class()

__all__ = ['VelocityFunction', 'KineticModel', 'VelocityGrid', 'BGKModel', 'ChiModes', 'chi_modes', 'SOUND_SPEED',
           'NTEModel', 'NullSpaceDecomposition', 'null_space_decomposition', 'DampedOperator', 'apply_damped',
           'model_map', 'make_model']

from .data_provider import IncomingData, IncomingProvider
from .providers import BuiltinProvider, TabulatedProvider
from .cache import AuxiliaryCache, config_hash, FORMAT_VERSION

def get_incoming(name: str, model) -> IncomingData:
    """Встроенные данные по имени или таблица, если name - путь к файлу."""
    if name in BuiltinProvider().available():
        return BuiltinProvider().get_incoming(name, model)
    return TabulatedProvider().get_incoming(name, model)

__all__ = ['IncomingData', 'IncomingProvider', 'BuiltinProvider', 'TabulatedProvider', 'AuxiliaryCache',
           'config_hash', 'FORMAT_VERSION', 'get_incoming']

from .builtin import BuiltinProvider
from .tabulated import TabulatedProvider

__all__ = ['BuiltinProvider', 'TabulatedProvider']

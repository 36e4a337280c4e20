from .filters import FILTER_KINDS, FilterSpec, filter_factors, apply_filter
from .extrapolation import basis_order_for, extrapolation_length
from .hfunction import HFunctionTable, chandrasekhar_H, nte_exact_trace
from .profiles import sample_profile

__all__ = ['FILTER_KINDS', 'FilterSpec', 'filter_factors', 'apply_filter', 'basis_order_for', 'extrapolation_length',
           'HFunctionTable', 'chandrasekhar_H', 'nte_exact_trace', 'sample_profile']

from .recurrence import (GaussianMoments, RecurrenceTable, gaussian_moments, half_hermite_recurrence,
                         shifted_legendre_recurrence, evaluate_polys, jacobi_matrix)
from .quadrature import WeightDescriptor, QuadratureRule, golub_welsch, half_gaussian_rule, legendre01_rule

__all__ = ['GaussianMoments', 'RecurrenceTable', 'gaussian_moments', 'half_hermite_recurrence',
           'shifted_legendre_recurrence', 'evaluate_polys', 'jacobi_matrix', 'WeightDescriptor', 'QuadratureRule',
           'golub_welsch', 'half_gaussian_rule', 'legendre01_rule']

from .logger import Logger
from .exceptions import (HalfSpaceError, ConfigError, DomainError, OutOfDomain, UnsupportedShift, AsymmetricGrid,
                         IndexBeyondTable, ModelMismatch, AmbiguousClassification, AssemblyError, NonPositiveBeta,
                         PrecisionExhausted, NotPositiveDefinite, EigenError, EigenFailure, SignatureMismatch,
                         SingularError, SingularBoundarySystem, SingularC, QuadratureError, QuadratureNotConverged,
                         NotConverged, EXIT_CODES)

__all__ = ['Logger', 'HalfSpaceError', 'ConfigError', 'DomainError', 'OutOfDomain', 'UnsupportedShift',
           'AsymmetricGrid', 'IndexBeyondTable', 'ModelMismatch', 'AmbiguousClassification', 'AssemblyError',
           'NonPositiveBeta', 'PrecisionExhausted', 'NotPositiveDefinite', 'EigenError', 'EigenFailure',
           'SignatureMismatch', 'SingularError', 'SingularBoundarySystem', 'SingularC', 'QuadratureError',
           'QuadratureNotConverged', 'NotConverged', 'EXIT_CODES']

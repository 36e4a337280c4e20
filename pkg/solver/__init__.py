from .basis import BasisSet, ParityPair, BASIS_KINDS, SIDES, build_basis, eval_basis, gram_matrix, parity_decompose
from .assembly import (BoundaryCondition, GalerkinSystem, assemble_A, assemble_B, assemble_boundary, assemble_system,
                       boundary_rows, cholesky_factor, collision_gram, flux_moment_vectors)
from .spectral import (EigenDecomposition, DampedSolution, generalized_eig, solve_damped, evaluate_solution,
                       solution_moments, galerkin_residual)
from .recovery import (AuxiliarySet, EndState, RecoveredSolution, build_auxiliary, recover, recovery_moments,
                       evaluate_recovered, end_state, l2_error, recovered_moments)

__all__ = ['BasisSet', 'ParityPair', 'BASIS_KINDS', 'SIDES', 'build_basis', 'eval_basis', 'gram_matrix',
           'parity_decompose', 'BoundaryCondition', 'GalerkinSystem', 'assemble_A', 'assemble_B', 'assemble_boundary', 'assemble_system',
           'boundary_rows', 'cholesky_factor', 'collision_gram', 'flux_moment_vectors', 'EigenDecomposition',
           'DampedSolution', 'generalized_eig', 'solve_damped', 'evaluate_solution', 'solution_moments',
           'galerkin_residual', 'AuxiliarySet', 'EndState', 'RecoveredSolution', 'build_auxiliary', 'recover',
           'recovery_moments', 'evaluate_recovered', 'end_state', 'l2_error', 'recovered_moments']

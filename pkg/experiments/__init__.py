from .config import RunConfig
from .services import HalfSpaceService, RunResult, U_CASES, validate_summary
from .selftest import SUITES, SelftestOptions, run_selftest
from .cli import main

__all__ = ['RunConfig', 'HalfSpaceService', 'RunResult', 'U_CASES', 'validate_summary', 'SUITES', 'SelftestOptions',
           'run_selftest', 'main']

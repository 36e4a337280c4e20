from json import dumps, loads
from math import sqrt
from pathlib import Path
from dataclasses import dataclass, replace
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple
from jsonschema import validate
from numpy import abs as np_abs, eye, nan
from pandas import DataFrame
from core import Logger
from core.exceptions import HalfSpaceError
from data import AuxiliaryCache, IncomingData, get_incoming
from models import make_model
from postprocess import HFunctionTable, basis_order_for, chandrasekhar_H, extrapolation_length, sample_profile
from solver import (DampedSolution, GalerkinSystem, RecoveredSolution, assemble_system, build_auxiliary,
                    galerkin_residual, generalized_eig, l2_error, recover, recovery_moments, solve_damped)
from experiments.config import RunConfig
from config import settings

SCHEMA_PATH = Path(__file__).resolve().parent / 'schemas' / 'summary.schema.json'
SCHEMA_VERSION = 1

# Скорости u для каждого из режимов (ν+, ν-, ν0) модели BGK
U_CASES = (-2.0, -sqrt(1.5), -0.5, 0.0, 0.5, sqrt(1.5), 2.0)

@dataclass(frozen=True)
class RunResult:
    """
    Результат одного запуска.

    Аргументы:
        config (RunConfig): Конфигурация
        damped (DampedSolution): Затухающее решение
        recovered (RecoveredSolution): Восстановленное решение
        profiles (Dict[float, DataFrame]): Профили f(x, v) по точкам x
        summary (Dict): Сводка, соответствующая schemas/summary.schema.json
    """
    config: RunConfig
    damped: DampedSolution
    recovered: RecoveredSolution
    profiles: Dict[float, DataFrame]
    summary: Dict

    @property
    def system(self) -> GalerkinSystem:
        return self.damped.system

class HalfSpaceService:
    """
    Сервис запуска полупространственных расчетов и серий экспериментов.

    Связывает конфигурацию, сборку системы, затухающее решение, восстановление и выходные
    файлы. Серии (таблица длины экстраполяции, сходимость по N, точные моды) выполняются
    параллельно по конфигурациям.

    Атрибуты:
        use_cache (bool): Использовать файловый кэш вспомогательных решений
        workers (int): Число потоков для серий

    Пример:
        >>> service = HalfSpaceService(use_cache=False)
        >>> result = service.solve(RunConfig(model='nte', N=11, incoming='v'))
        >>> round(result.summary['extrapolation_length'], 9)
        0.710434524
    """

    def __init__(self, use_cache: bool = True, workers: Optional[int] = None):
        self.use_cache = use_cache
        self.workers = workers or settings.WORKERS
        self.logger = Logger(__name__)

    def _cache(self, config: RunConfig) -> Optional[AuxiliaryCache]:
        return AuxiliaryCache(config.resolved_cache_dir) if self.use_cache else None

    def _recover(self, config: RunConfig) -> Tuple[DampedSolution, RecoveredSolution]:
        config.validate()
        model = make_model(config.model)
        system = assemble_system(model, config.N, config.u, config.resolved_alpha, config.resolved_quad_points,
                                 tol_null=config.tol_null, tol_zero=config.tol_zero)
        eig = generalized_eig(system.A, system.B, system.tol_zero)
        phi = get_incoming(config.incoming, model)
        damped = solve_damped(system, phi, eig)
        aux = build_auxiliary(system, eig, config.aux_N, self._cache(config), self.workers)
        return damped, recover(damped, aux)

    def solve(self, config: RunConfig) -> RunResult:
        """
        Полный расчет: затухающее решение, вспомогательные решения, восстановление, профили.

        Аргументы:
            config (RunConfig): Конфигурация запуска

        Возвращает:
            RunResult: Решения, профили и сводка

        Ошибки:
            ConfigError, AssemblyError, EigenError, SingularError, QuadratureError, DomainError
        """
        self.logger.info(f"Запуск: {config.model}, u={config.u}, N={config.N}, данные '{config.incoming}'")
        try:
            damped, recovered = self._recover(config)
            grid = config.v_grid()
            profiles = {float(x): sample_profile(recovered, x, grid, config.filter) for x in config.x_samples}
        except HalfSpaceError as exc:
            self.logger.error(f"Расчет прерван ({exc.category}): {exc}")
            raise

        summary = self.build_summary(config, damped, recovered, list(profiles))
        self.logger.info(f"Расчет завершен: η = {summary['eta']}")
        return RunResult(config=config, damped=damped, recovered=recovered, profiles=profiles, summary=summary)

    @staticmethod
    def build_summary(config: RunConfig, damped: DampedSolution, recovered: RecoveredSolution,
                      x_samples: Sequence[float]) -> Dict:
        """Машиночитаемая сводка запуска (проверяется схемой перед записью)."""
        system = damped.system
        decomposition = system.decomposition
        nu_plus, nu_minus, nu_zero = decomposition.dims
        positive, negative, zero = damped.eig.counts

        coefficients = recovered.coefficients(0.0)
        flux_system = recovered.aux.system if len(coefficients) != system.basis.size else system
        flux_residual = float(np_abs(recovery_moments(flux_system) @ coefficients).max()) if nu_plus + nu_zero else 0.0

        phi = damped.incoming
        error = None
        if phi.exact is not None and phi.name in recovered.aux.labels:
            error = l2_error(recovered, phi.exact, 0.0)
        length = extrapolation_length(recovered) if system.model.name == 'nte' and phi.name == 'v' else None

        return {
            'schema_version': SCHEMA_VERSION,
            'config_hash': config.config_hash(),
            'model': system.model.name,
            'u': float(system.u),
            'N': int(system.N),
            'aux_N': config.aux_N,
            'alpha': float(system.alpha),
            'quad_points': int(system.basis.quad_points),
            'incoming': phi.name,
            'filter': {'kind': config.filter.kind, 'order': int(config.filter.order)},
            'null_space': {'nu_plus': nu_plus, 'nu_minus': nu_minus, 'nu_zero': nu_zero,
                           'labels': [mode.label for mode in decomposition.recovery_modes]},
            'eigen_counts': {'positive': positive, 'negative': negative, 'zero': zero},
            'condition': {'boundary_system': float(damped.condition),
                          'C': float(recovered.aux.condition_estimate)},
            'diagnostics': {**damped.diagnostics, 'galerkin_residual': galerkin_residual(damped, 0.0),
                            'recovery_flux_residual': flux_residual},
            'eta': recovered.f_infinity.as_dict(),
            'f_infinity': {'gaussian': bool(recovered.end_function.gaussian),
                           'polynomial': [float(c) for c in recovered.end_function.poly.coef]},
            'l2_error': error,
            'extrapolation_length': length,
            'profiles': [profile_name(x) for x in x_samples],
        }

    def write_run(self, result: RunResult, directory: Optional[Path] = None) -> Path:
        """
        Запись каталога запуска: config.ini, summary.json, profile_x<x>.csv.

        Аргументы:
            result (RunResult): Результат
            directory (Optional[Path]): Каталог (по умолчанию <output_dir>/<model>_<hash[:12]>)

        Возвращает:
            Path: Каталог запуска

        Ошибки:
            ValidationError: Если сводка не соответствует схеме
        """
        config = result.config
        directory = Path(directory) if directory is not None else (
            config.resolved_output_dir / f'{config.model}_{config.config_hash()[:12]}')
        validate_summary(result.summary)

        directory.mkdir(parents=True, exist_ok=True)
        (directory / 'config.ini').write_text(config.to_ini(), encoding='utf-8')
        (directory / 'summary.json').write_text(dumps(result.summary, indent=2, sort_keys=True) + '\n',
                                                encoding='utf-8')
        for x, profile in result.profiles.items():
            profile.to_csv(directory / profile_name(x), index=False, float_format='%.17g')

        self.logger.info(f"Результаты записаны в {directory}")
        return directory

    def extrapolation_table(self, orders: Sequence[int], base: Optional[RunConfig] = None) -> DataFrame:
        """
        Длина экстраполяции NTE (φ = v) для каждого порядка приближения.

        Порядок order - многочлены степеней 0..order-1 на полуоси, решение строится при
        N = order - 1.

        Возвращает:
            DataFrame: Столбцы order, N, length, error (|length - точное значение|), в порядке orders

        Ошибки:
            ValueError: Если какой-либо порядок меньше 2
        """
        N_list = [basis_order_for(order) for order in orders]
        base = base or RunConfig(model='nte', incoming='v', x_samples=(0.0,))

        def run(N: int) -> float:
            _, recovered = self._recover(replace(base, N=int(N), quad_points=None))
            return extrapolation_length(recovered)

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            lengths = list(executor.map(run, N_list))

        table = DataFrame({'order': [int(order) for order in orders], 'N': N_list, 'length': lengths})
        table['error'] = (table['length'] - settings.EXTRAPOLATION_EXACT).abs()
        return table

    def convergence(self, config: RunConfig, N_list: Sequence[int]) -> DataFrame:
        """
        Сходимость по N.

        Если входящие данные - мода H⁺ ⊕ H⁰, ошибка - L²-расстояние до нее при x = 0;
        иначе - max-норма разности профилей при x = 0 для соседних N (первая строка NaN).

        Возвращает:
            DataFrame: Столбцы N, error, kind
        """
        N_list = sorted(int(N) for N in N_list)
        grid = config.v_grid()

        def run(N: int) -> Tuple[RecoveredSolution, DataFrame]:
            _, recovered = self._recover(replace(config, N=N, quad_points=None))
            return recovered, sample_profile(recovered, 0.0, grid, config.filter)

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            runs = list(executor.map(run, N_list))

        phi = runs[0][0].damped.incoming
        if phi.exact is not None and phi.name in runs[0][0].aux.labels:
            errors = [l2_error(recovered, phi.exact, 0.0) for recovered, _ in runs]
            kind = 'l2_exact'
        else:
            errors = [nan] + [float(np_abs(current['f'] - previous['f']).max())
                              for (_, previous), (_, current) in zip(runs, runs[1:])]
            kind = 'successive'
        self.logger.info(f"Сходимость ({kind}): {dict(zip(N_list, errors))}")
        return DataFrame({'N': N_list, 'error': errors, 'kind': kind})

    def exact_mode_sweep(self, N: int, u_cases: Sequence[float] = U_CASES,
                         alpha: Optional[float] = None) -> DataFrame:
        """
        Точные моды BGK: для каждого u и каждой χ из H⁺ ⊕ H⁰ решение с данными φ = χ.

        Возвращает:
            DataFrame: Столбцы u, nu (строка 'ν+,ν-,ν0'), mode, l2_error, eta_error (max|η - e_k|)
        """
        model = make_model('bgk')

        def run(u: float) -> List[Dict]:
            system = assemble_system(model, N, u, alpha)
            eig = generalized_eig(system.A, system.B, system.tol_zero)
            aux = build_auxiliary(system, eig, workers=1)
            rows = []
            for k, mode in enumerate(system.decomposition.recovery_modes):
                recovered = recover(solve_damped(system, IncomingData.from_function(mode), eig), aux)
                rows.append({'u': float(u), 'nu': ','.join(str(d) for d in system.decomposition.dims),
                             'mode': mode.label, 'l2_error': l2_error(recovered, mode, 0.0),
                             'eta_error': float(np_abs(recovered.eta - eye(len(aux.labels))[k]).max())})
            return rows

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(run, u_cases))
        return DataFrame([row for rows in results for row in rows],
                         columns=['u', 'nu', 'mode', 'l2_error', 'eta_error'])

    @staticmethod
    def h_function(n_mu: Optional[int] = None, tol: Optional[float] = None) -> Tuple[HFunctionTable, DataFrame]:
        """Таблица H-функции (mu, H) и ее моменты."""
        table = chandrasekhar_H(n_mu, tol)
        return table, DataFrame({'mu': table.mu_grid, 'H': table.H_values})

    @staticmethod
    def get_available_incoming() -> Dict[str, str]:
        """Встроенные входящие данные с описанием."""
        return {
            'zero': 'φ = 0',
            'v': 'φ = v (задача Милна для nte)',
            'v_cubed': 'φ = v³',
            'chi_plus': 'мода χ_+ нуль-пространства (bgk)',
            'chi_minus': 'мода χ_- нуль-пространства (bgk)',
            'chi_zero': 'мода χ_0 нуль-пространства (bgk)',
        }

def profile_name(x: float) -> str:
    return f'profile_x{float(x):g}.csv'

def validate_summary(summary: Dict):
    """
    Проверка сводки по schemas/summary.schema.json.

    Ошибки:
        ValidationError: Если сводка не соответствует схеме
    """
    schema = loads(SCHEMA_PATH.read_text(encoding='utf-8'))
    validate(instance=summary, schema=schema)

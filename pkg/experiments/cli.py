from pathlib import Path
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import List, Optional, Sequence
from core import Logger
from core.exceptions import EXIT_CODES, HalfSpaceError
from postprocess import FilterSpec
from experiments.config import RunConfig
from experiments.selftest import SUITES, SelftestOptions, run_selftest
from experiments.services import HalfSpaceService
from config import settings

logger = Logger(__name__)

TABLE_ORDERS = (4, 8, 12, 16, 20, 24, 28, 32, 36, 40)

def approximation_order(text: str) -> int:
    order = int(text)
    if order < 2:
        raise ArgumentTypeError(f"порядок приближения должен быть не меньше 2: {order}")
    return order

def add_config_arguments(parser: ArgumentParser):
    """Флаги, переопределяющие значения INI-файла."""
    parser.add_argument('--config', type=Path, help='INI-файл конфигурации')
    parser.add_argument('--model', choices=['bgk', 'nte'])
    parser.add_argument('--u', type=float)
    parser.add_argument('--N', type=int)
    parser.add_argument('--alpha', type=float)
    parser.add_argument('--quad-points', type=int)
    parser.add_argument('--aux-N', type=int)
    parser.add_argument('--tol-null', type=float)
    parser.add_argument('--tol-zero', type=float)
    parser.add_argument('--incoming', help='Имя встроенных данных или путь к таблице (v, phi)')
    parser.add_argument('--filter', choices=['none', 'cosine'])
    parser.add_argument('--filter-order', type=int)
    parser.add_argument('--x', type=float, nargs='+', dest='x_samples')
    parser.add_argument('--v-count', type=int)
    parser.add_argument('--v-min', type=float)
    parser.add_argument('--v-max', type=float)
    parser.add_argument('--output-dir', type=Path)
    parser.add_argument('--cache-dir', type=Path)
    parser.add_argument('--no-cache', action='store_true', help='Не использовать кэш вспомогательных решений')

def config_from_args(args: Namespace) -> RunConfig:
    config = RunConfig.from_ini(args.config) if args.config else RunConfig()
    if args.filter is not None or args.filter_order is not None:
        filter_spec = FilterSpec(kind=args.filter or config.filter.kind,
                                 order=args.filter_order or config.filter.order)
    else:
        filter_spec = None
    return config.with_overrides(model=args.model, u=args.u, N=args.N, alpha=args.alpha, quad_points=args.quad_points,
                                 aux_N=args.aux_N, tol_null=args.tol_null, tol_zero=args.tol_zero,
                                 incoming=args.incoming, filter=filter_spec, x_samples=args.x_samples,
                                 v_count=args.v_count, v_min=args.v_min, v_max=args.v_max,
                                 output_dir=args.output_dir, cache_dir=args.cache_dir)

def cmd_solve(args: Namespace) -> int:
    config = config_from_args(args).validate()
    service = HalfSpaceService(use_cache=not args.no_cache)
    result = service.solve(config)
    directory = service.write_run(result, args.run_dir)
    summary = result.summary
    print(f"η = {summary['eta']}")
    if summary['l2_error'] is not None:
        print(f"L²-ошибка при x = 0: {summary['l2_error']:.3e}")
    if summary['extrapolation_length'] is not None:
        print(f"Длина экстраполяции: {summary['extrapolation_length']:.15f}")
    print(f"Результаты: {directory}")
    return 0

def cmd_extrapolation_table(args: Namespace) -> int:
    service = HalfSpaceService(use_cache=not args.no_cache)
    base = RunConfig(model='nte', incoming='v', x_samples=(0.0,), cache_dir=args.cache_dir)
    table = service.extrapolation_table(args.orders, base)
    print(table.to_string(index=False, float_format=lambda value: f'{value:.15f}'))

    exact = settings.EXTRAPOLATION_EXACT
    print(f"точное значение: {exact:.15f}")
    if 12 in table['order'].values:
        ours = float(table.loc[table['order'] == 12, 'error'].iloc[0])
        coron = abs(settings.EXTRAPOLATION_CORON - exact)
        print(f"Порядок 12: ошибка {ours:.3e}, эталон {settings.EXTRAPOLATION_CORON} с 70 модами: {coron:.3e}")
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(args.output, index=False, float_format='%.17g')
    return 0

def cmd_convergence(args: Namespace) -> int:
    config = config_from_args(args).validate()
    table = HalfSpaceService(use_cache=not args.no_cache).convergence(config, args.N_list)
    print(table.to_string(index=False))
    output = args.output or config.resolved_output_dir / f'convergence_{config.config_hash()[:12]}.csv'
    output.parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(output, index=False, float_format='%.17g')
    print(f"Результаты: {output}")
    return 0

def cmd_h_function(args: Namespace) -> int:
    table, frame = HalfSpaceService.h_function(args.n_mu, args.tol)
    zeroth, first = table.moments()
    print(f"узлов {len(table.mu_grid)}, итераций {table.iterations}, невязка {table.iteration_residual:.3e}")
    print(f"∫H dμ = {zeroth:.12f} (2), ∫μH dμ = {first:.12f} (2/√3 = {2.0 / 3.0 ** 0.5:.12f})")
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(args.output, index=False, float_format='%.17g')
    return 0

def cmd_selftest(args: Namespace) -> int:
    options = SelftestOptions(alpha=args.inject_alpha, tol_zero=args.inject_tol_zero, b_shift=args.inject_b_shift)
    results = run_selftest(args.suite, options)
    for name, failure in results.items():
        print(f"{name:<12} {'OK' if failure is None else 'FAIL ' + failure}")
    return 0 if all(failure is None for failure in results.values()) else 1

def cmd_print_config(args: Namespace) -> int:
    print(config_from_args(args).to_ini(), end='')
    return 0

def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='manage.py', description='Спектральный решатель полупространственных задач BGK и NTE')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve', help='Решение с восстановлением и записью результатов')
    add_config_arguments(solve)
    solve.add_argument('--run-dir', type=Path, help='Каталог запуска (по умолчанию по хэшу конфигурации)')
    solve.set_defaults(handler=cmd_solve)

    table = commands.add_parser('extrapolation-table', help='Длина экстраполяции задачи Милна по порядку приближения')
    table.add_argument('--orders', type=approximation_order, nargs='+', default=list(TABLE_ORDERS),
                       help='Порядки кусочно-полиномиального приближения (решение при N = порядок - 1)')
    table.add_argument('--output', type=Path)
    table.add_argument('--cache-dir', type=Path)
    table.add_argument('--no-cache', action='store_true')
    table.set_defaults(handler=cmd_extrapolation_table)

    convergence = commands.add_parser('convergence', help='Сходимость по N')
    add_config_arguments(convergence)
    convergence.add_argument('--N-list', type=int, nargs='+', required=True)
    convergence.add_argument('--output', type=Path)
    convergence.set_defaults(handler=cmd_convergence)

    h_function = commands.add_parser('h-function', help='Таблица H-функции Чандрасекара')
    h_function.add_argument('--n-mu', type=int, default=settings.H_NODES)
    h_function.add_argument('--tol', type=float, default=settings.H_TOL)
    h_function.add_argument('--output', type=Path)
    h_function.set_defaults(handler=cmd_h_function)

    selftest = commands.add_parser('selftest', help='Проверка инвариантов')
    selftest.add_argument('--suite', nargs='+', choices=list(SUITES))
    selftest.add_argument('--inject-alpha', type=float)
    selftest.add_argument('--inject-tol-zero', type=float)
    selftest.add_argument('--inject-b-shift', type=float, help='Вычесть сдвиг·I из B в наборе assembly')
    selftest.set_defaults(handler=cmd_selftest)

    print_config = commands.add_parser('print-config', help='Эффективная конфигурация в формате INI')
    add_config_arguments(print_config)
    print_config.set_defaults(handler=cmd_print_config)
    return parser

def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Точка входа командной строки.

    Возвращает:
        int: 0 при успехе; код категории ошибки (config 2, assembly 3, eigen 4, singular 5,
            quadrature 6, domain 7); 1 для прочих ошибок
    """
    args = build_parser().parse_args(argv)
    logger.info(f"Команда {args.command}")
    try:
        return args.handler(args)
    except HalfSpaceError as exc:
        print(f"ошибка [{exc.category}]: {exc}")
        logger.error(f"Команда {args.command} завершилась ошибкой {exc.category}: {exc}")
        return EXIT_CODES.get(exc.category, 1)
    except Exception as exc:
        print(f"ошибка: {exc}")
        logger.error(f"Команда {args.command} завершилась ошибкой: {exc}")
        return 1

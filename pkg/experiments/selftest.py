from math import pi, sqrt
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional
from numpy import abs as np_abs, eye
from core import Logger
from data import get_incoming
from models import make_model
from orthopoly import half_gaussian_rule, half_hermite_recurrence, legendre01_rule
from postprocess import basis_order_for, chandrasekhar_H, extrapolation_length
from solver import (assemble_system, build_auxiliary, build_basis, cholesky_factor, generalized_eig, gram_matrix,
                    l2_error, recover, recovered_moments, solve_damped)
from experiments.services import U_CASES

logger = Logger(__name__)

@dataclass(frozen=True)
class SelftestOptions:
    """
    Параметры самопроверки; ненулевые значения подменяют настройки по умолчанию.

    Аргументы:
        alpha (Optional[float]): Сила затухания
        tol_zero (Optional[float]): Допуск нулевого собственного значения
        b_shift (Optional[float]): Сдвиг B - b_shift·I перед проверкой разложения Холецкого
        N (int): Порядок базиса наборов
    """
    alpha: Optional[float] = None
    tol_zero: Optional[float] = None
    b_shift: Optional[float] = None
    N: int = 8

def _require(condition: bool, message: str):
    if not condition:
        raise AssertionError(message)

def check_orthopoly(options: SelftestOptions):
    table = half_hermite_recurrence(0.0, 10)
    _require(abs(table.alphas[0] - 0.5641895835) < 1e-9, f"α_0 = {table.alphas[0]}")
    _require(abs(table.betas[0] - 0.181690113) < 1e-8, f"β_1 = {table.betas[0]}")
    rule = legendre01_rule(5)
    _require(abs(rule.weights @ rule.nodes ** 9 - 0.1) < 1e-13, "правило Гаусса-Лежандра неточно")
    half = half_gaussian_rule(0.0, 8)
    _require(abs(half.weights.sum() - sqrt(pi) / 2.0) < 1e-13, "веса полугауссова правила")

def check_basis(options: SelftestOptions):
    for kind, u in (('bgk', 0.0), ('bgk', 0.5), ('nte', 0.0)):
        basis = build_basis(kind, options.N, u)
        deviation = float(np_abs(gram_matrix(basis) - eye(basis.size)).max())
        _require(deviation < 1e-11, f"{kind}, u={u}: отклонение от ортонормальности {deviation:.3e}")

def check_assembly(options: SelftestOptions):
    model = make_model('bgk')
    reference = assemble_system(model, options.N, 0.0, options.alpha).A
    for u in U_CASES:
        system = assemble_system(model, options.N, u, options.alpha)
        _require(float(np_abs(system.A - system.A.T).max()) < 1e-13, f"u={u}: A не симметрична")
        _require(float(np_abs(system.A - reference).max()) < 1e-13, f"u={u}: A зависит от u")
        _require(float(np_abs(system.B - system.B.T).max()) < 1e-13, f"u={u}: B не симметрична")
        cholesky_factor(system.B - (options.b_shift or 0.0) * eye(system.B.shape[0]))
    assemble_system(make_model('nte'), options.N, 0.0, options.alpha)

def check_spectral(options: SelftestOptions):
    systems = [assemble_system(make_model('bgk'), options.N, u, options.alpha, tol_zero=options.tol_zero)
               for u in U_CASES]
    systems.append(assemble_system(make_model('nte'), options.N, 0.0, options.alpha, tol_zero=options.tol_zero))
    for system in systems:
        eig = generalized_eig(system.A, system.B, system.tol_zero)
        phi = get_incoming('v', system.model) if system.model.name == 'nte' else get_incoming('chi_zero', system.model)
        solution = solve_damped(system, phi, eig)
        for name in ('constraint_residual', 'boundary_residual'):
            _require(solution.diagnostics[name] < 1e-9, f"{system.model.name}, u={system.u}: {name} = "
                                                         f"{solution.diagnostics[name]:.3e}")

def check_recovery(options: SelftestOptions):
    model = make_model('bgk')
    system = assemble_system(model, options.N, 0.0, options.alpha, tol_zero=options.tol_zero)
    eig = generalized_eig(system.A, system.B, system.tol_zero)
    aux = build_auxiliary(system, eig, workers=1)
    phi = get_incoming('chi_plus', model)
    recovered = recover(solve_damped(system, phi, eig), aux)
    error = l2_error(recovered, phi.exact, 0.0)
    _require(error < 1e-8, f"χ_+ при u=0 восстановлена с ошибкой {error:.3e}")

    system = assemble_system(model, 2 * options.N, 0.5, options.alpha, tol_zero=options.tol_zero)
    eig = generalized_eig(system.A, system.B, system.tol_zero)
    recovered = recover(solve_damped(system, get_incoming('v_cubed', model), eig),
                        build_auxiliary(system, eig, workers=1))
    start = recovered_moments(recovered, 0.0)
    for x in (0.5, 1.0, 5.0):
        drift = float(np_abs(recovered_moments(recovered, x) - start).max())
        _require(drift < 1e-8, f"Потоковые моменты меняются по x: {drift:.3e} при x={x}")

def check_postprocess(options: SelftestOptions):
    table = chandrasekhar_H()
    zeroth, first = table.moments()
    _require(abs(zeroth - 2.0) < 5e-6, f"∫H = {zeroth}")
    _require(abs(first - 2.0 / sqrt(3.0)) < 5e-6, f"∫μH = {first}")

    model = make_model('nte')
    system = assemble_system(model, basis_order_for(4), 0.0, options.alpha, tol_zero=options.tol_zero)
    eig = generalized_eig(system.A, system.B, system.tol_zero)
    recovered = recover(solve_damped(system, get_incoming('v', model), eig), build_auxiliary(system, eig, workers=1))
    length = extrapolation_length(recovered)
    _require(abs(length - 0.709324539775964) < 1e-9, f"Длина экстраполяции при порядке 4: {length}")

SUITES: Dict[str, Callable[[SelftestOptions], None]] = {
    'orthopoly': check_orthopoly,
    'basis': check_basis,
    'assembly': check_assembly,
    'spectral': check_spectral,
    'recovery': check_recovery,
    'postprocess': check_postprocess,
}

def run_selftest(suites: Optional[Iterable[str]] = None,
                 options: Optional[SelftestOptions] = None) -> Dict[str, Optional[str]]:
    """
    Запускает наборы проверок инвариантов.

    Аргументы:
        suites (Optional[Iterable[str]]): Имена наборов (по умолчанию все)
        options (Optional[SelftestOptions]): Подменяемые параметры

    Возвращает:
        Dict[str, Optional[str]]: None для пройденного набора, иначе "<Исключение>: <сообщение>"

    Ошибки:
        ValueError: Если имя набора неизвестно
    """
    options = options or SelftestOptions()
    names = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Неизвестные наборы: {unknown}. Доступные: {list(SUITES)}")

    results = {}
    for name in names:
        try:
            SUITES[name](options)
            results[name] = None
            logger.info(f"Набор {name}: пройден")
        except Exception as exc:
            results[name] = f"{type(exc).__name__}: {exc}"
            logger.error(f"Набор {name}: {results[name]}")
    return results

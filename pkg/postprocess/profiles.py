from typing import Optional, Union
from numpy import asarray, float64, ndarray
from pandas import DataFrame
from postprocess.filters import FilterSpec, apply_filter
from solver.recovery import RecoveredSolution
from solver.spectral import DampedSolution

def sample_profile(solution: Union[DampedSolution, RecoveredSolution], x: float, v_grid: ndarray,
                   filter_spec: Optional[FilterSpec] = None) -> DataFrame:
    """
    Профиль f(x, v) на сетке скоростей.

    Для восстановленного решения фильтруется только часть f - Σ η g; f_∞ добавляется без изменений.

    Аргументы:
        solution (Union[DampedSolution, RecoveredSolution]): Решение
        x (float): Точка x >= 0
        v_grid (ndarray): Скорости
        filter_spec (Optional[FilterSpec]): Фильтр коэффициентов

    Возвращает:
        DataFrame: Столбцы v, f

    Ошибки:
        OutOfDomain: Если скорость вне области модели
    """
    v = asarray(v_grid, dtype=float64)
    coefficients = solution.coefficients(x)
    if filter_spec is not None:
        coefficients = apply_filter(coefficients, filter_spec)

    values = coefficients @ solution.basis.eval(v)
    if isinstance(solution, RecoveredSolution) and not solution.aux.empty:
        values = values + solution.end_function(v)
    return DataFrame({'v': v, 'f': values})

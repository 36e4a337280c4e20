from core import Logger
from core.exceptions import ModelMismatch
from solver.recovery import RecoveredSolution
from config import settings

logger = Logger(__name__)

def basis_order_for(order: int) -> int:
    """
    Порядок базиса N для кусочно-полиномиального приближения порядка order.

    Порядок order означает многочлены степеней 0..order-1 на каждой полуоси
    (2·order - 1 функций), то есть N = order - 1.

    Ошибки:
        ValueError: Если order < 2
    """
    if order < 2:
        raise ValueError(f"Порядок приближения должен быть не меньше 2, получено {order}")
    return int(order) - 1

def extrapolation_length(recovered: RecoveredSolution) -> float:
    """
    Длина экстраполяции задачи Милна: постоянное значение f_∞ для NTE с данными φ = v.

    f_∞ = η_0 X_0, X_0 = 1/√2, поэтому длина равна η_0/√2.

    Ошибки:
        ModelMismatch: Если модель не NTE или данные не φ = v
    """
    system = recovered.damped.system
    name = recovered.damped.incoming.name
    if system.model.name != 'nte' or name != 'v':
        raise ModelMismatch(f"Длина экстраполяции определена для nte с данными 'v', получено "
                            f"{system.model.name} с '{name}'")

    length = float(recovered.end_function(0.0))
    logger.info(f"N={system.N} (порядок {system.N + 1}): длина экстраполяции {length:.15f}, "
                f"ошибка {abs(length - settings.EXTRAPOLATION_EXACT):.3e}")
    return length

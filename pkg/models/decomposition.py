from dataclasses import dataclass
from typing import List, Optional, Tuple
from core import Logger
from core.exceptions import AmbiguousClassification, ModelMismatch, UnsupportedShift
from models.base_model import KineticModel
from models.functions import VelocityFunction
from config import settings

logger = Logger(__name__)

@dataclass(frozen=True)
class NullSpaceDecomposition:
    """
    Разбиение Null(L) = H⁺ ⊕ H⁻ ⊕ H⁰ по знаку потока γ = ⟨(v+u)X, X⟩.

    Аргументы:
        u (float): Объемная скорость
        X_plus, X_minus, X_zero (Tuple[VelocityFunction, ...]): Моды семейств +, -, 0
        gammas_plus, gammas_minus (Tuple[float, ...]): Потоки γ_{+,i} > 0 и |γ_{-,j}|
        linv_images (Tuple[VelocityFunction, ...]): L⁻¹((v+u)X_{0,k}) для каждой моды X_0
        tolerance (float): Абсолютный допуск, с которым γ считается нулем
    """
    u: float
    X_plus: Tuple[VelocityFunction, ...]
    X_minus: Tuple[VelocityFunction, ...]
    X_zero: Tuple[VelocityFunction, ...]
    gammas_plus: Tuple[float, ...]
    gammas_minus: Tuple[float, ...]
    linv_images: Tuple[VelocityFunction, ...]
    tolerance: float

    @property
    def dims(self) -> Tuple[int, int, int]:
        """(ν_+, ν_-, ν_0)."""
        return len(self.X_plus), len(self.X_minus), len(self.X_zero)

    @property
    def recovery_modes(self) -> List[VelocityFunction]:
        """Моды H⁺ ⊕ H⁰ в порядке (X_+, X_0), задающие вспомогательные решения и η."""
        return list(self.X_plus) + list(self.X_zero)

    def flux_directions(self) -> List[VelocityFunction]:
        """
        Функции, чьи моменты образуют вектор U(f) = (U_+, U_-, U_0, U_{L,0}).

        Возвращает:
            List[VelocityFunction]: (v+u)X для X_+, X_-, X_0, затем (v+u)·L⁻¹((v+u)X_0)
        """
        directions = [mode.flux(self.u) for mode in self.X_plus + self.X_minus + self.X_zero]
        directions += [image.flux(self.u) for image in self.linv_images]
        return directions

    def flux_labels(self) -> List[str]:
        return ([f'U+[{mode.label}]' for mode in self.X_plus] + [f'U-[{mode.label}]' for mode in self.X_minus] +
                [f'U0[{mode.label}]' for mode in self.X_zero] + [f'UL0[{mode.label}]' for mode in self.X_zero])

def null_space_decomposition(model: KineticModel, u: float,
                             tol_null: Optional[float] = None) -> NullSpaceDecomposition:
    """
    Классифицирует моды нуль-пространства по знаку ⟨(v+u)X, X⟩.

    Потоки γ вычисляются квадратурой; |γ| <= tol_null·max|γ| считается нулем. Для мод H⁰
    образ L⁻¹((v+u)X_0) равен (v+u)X_0, поскольку L - тождество на ортогональном
    дополнении Null(L); это условие проверяется.

    Аргументы:
        model (KineticModel): Модель
        u (float): Объемная скорость
        tol_null (Optional[float]): Относительный допуск (по умолчанию settings.TOL_NULL)

    Возвращает:
        NullSpaceDecomposition: Разбиение с размерностями (ν_+, ν_-, ν_0)

    Ошибки:
        ValueError: Если tol_null <= 0
        UnsupportedShift: Если модель допускает только u = 0
        AmbiguousClassification: Если какое-либо |γ| попало в (tol, 10·tol)

    Пример:
        >>> null_space_decomposition(BGKModel(), 0.0).dims
        (1, 1, 1)
    """
    tol_null = settings.TOL_NULL if tol_null is None else tol_null
    if tol_null <= 0:
        raise ValueError(f"tol_null должен быть положительным, получено {tol_null}")
    if model.sound_speed is None and u != 0.0:
        raise UnsupportedShift(f"Модель {model.name} допускает только u = 0, получено u = {u}")

    modes = model.flux_modes(u)
    gammas = [model.inner(mode.flux(u), mode) for mode in modes]
    scale = max(abs(gamma) for gamma in gammas)
    tolerance = tol_null * (scale if scale > 0 else 1.0)

    plus, minus, zero = [], [], []
    for mode, gamma in zip(modes, gammas):
        if abs(gamma) <= tolerance:
            zero.append(mode)
        elif abs(gamma) < 10 * tolerance:
            raise AmbiguousClassification(gamma, tolerance)
        elif gamma > 0:
            plus.append((mode, gamma))
        else:
            minus.append((mode, -gamma))

    images = []
    null_basis = model.null_basis()
    for mode in zero:
        image = mode.flux(u)
        leak = max(abs(model.inner(image, basis_mode)) for basis_mode in null_basis)
        if leak > 1e-12 * max(1.0, scale):
            raise ModelMismatch(f"(v+u){mode.label} не ортогонален Null(L): утечка {leak:.3e}")
        images.append(VelocityFunction(image.poly, image.gaussian, f'Linv(v+u){mode.label}'))

    decomposition = NullSpaceDecomposition(
        u=float(u), X_plus=tuple(mode for mode, _ in plus), X_minus=tuple(mode for mode, _ in minus),
        X_zero=tuple(zero), gammas_plus=tuple(gamma for _, gamma in plus),
        gammas_minus=tuple(gamma for _, gamma in minus), linv_images=tuple(images), tolerance=tolerance)
    logger.debug(f"Null(L) модели {model.name} при u={u:+.6f}: (ν+, ν-, ν0) = {decomposition.dims}")
    return decomposition

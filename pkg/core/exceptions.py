from typing import Optional, Tuple

class HalfSpaceError(Exception):
    """
    Базовое исключение решателя полупространственных кинетических задач.

    Каждое исключение несет категорию диагностики, по которой командная строка
    выбирает код возврата.

    Атрибуты:
        category (str): Категория ошибки: config, assembly, eigen, singular, quadrature, domain
    """
    category = 'solver'

class ConfigError(HalfSpaceError):
    """Некорректная конфигурация запуска."""
    category = 'config'

class DomainError(HalfSpaceError):
    """Аргумент вне области определения."""
    category = 'domain'

class OutOfDomain(DomainError):
    """Скорость вне области определения модели (|v| > 1 для NTE)."""

class UnsupportedShift(DomainError):
    """Ненулевой сдвиг u для модели, где допускается только u = 0."""

class AsymmetricGrid(DomainError):
    """Сетка не замкнута относительно отражения v -> -2u - v."""

class IndexBeyondTable(DomainError):
    """Запрошенная степень превышает длину таблицы рекуррентных коэффициентов."""

class ModelMismatch(DomainError):
    """Операция вызвана для неподходящей модели или неподходящих входных данных."""

class AmbiguousClassification(DomainError):
    """
    Поток ⟨(v+u)X, X⟩ слишком близок к нулю для надежной классификации моды.

    Аргументы:
        gamma (float): Значение потока
        tolerance (float): Используемый допуск
    """

    def __init__(self, gamma: float, tolerance: float):
        self.gamma = gamma
        self.tolerance = tolerance
        super().__init__(f"Неоднозначная классификация: |γ| = {abs(gamma):.3e} в интервале "
                         f"({tolerance:.3e}, {10 * tolerance:.3e})")

class AssemblyError(HalfSpaceError):
    """Ошибка построения рекуррентных таблиц или матриц Галеркина."""
    category = 'assembly'

class NonPositiveBeta(AssemblyError):
    """
    Рекуррентный коэффициент β_n оказался неположительным (потеря точности).

    Аргументы:
        n (int): Номер коэффициента
        value (float): Вычисленное значение
    """

    def __init__(self, n: int, value: float):
        self.n = n
        self.value = value
        super().__init__(f"β_{n} = {value:.6e} <= 0: рекуррентность потеряла точность")

class PrecisionExhausted(AssemblyError):
    """
    Рекуррентность не дала совпадающих таблиц ни при какой из испробованных точностей mpmath.

    Аргументы:
        digits (int): Последняя испробованная точность (десятичных знаков)
    """

    def __init__(self, digits: int):
        self.digits = digits
        super().__init__(f"Коэффициенты рекуррентности не стабилизировались до {digits} знаков")

class NotPositiveDefinite(AssemblyError):
    """
    Матрица B не допускает разложения Холецкого.

    Аргументы:
        min_eigenvalue (float): Оценка наименьшего собственного значения B
    """

    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(f"Матрица B не положительно определена, λ_min(B) ≈ {min_eigenvalue:.3e}")

class EigenError(HalfSpaceError):
    """Ошибка спектральных вычислений."""
    category = 'eigen'

class EigenFailure(EigenError):
    """Трехдиагональная или обобщенная задача на собственные значения не сошлась."""

class SignatureMismatch(EigenError):
    """
    Число положительных, отрицательных и нулевых обобщенных собственных значений отличается от (N, N, 1).

    Аргументы:
        counts (Tuple[int, int, int]): Фактическая сигнатура
        expected (Tuple[int, int, int]): Ожидаемая сигнатура
    """

    def __init__(self, counts: Tuple[int, int, int], expected: Tuple[int, int, int]):
        self.counts = counts
        self.expected = expected
        super().__init__(f"Сигнатура пучка (A, B) = {counts}, ожидалось {expected}")

class SingularError(HalfSpaceError):
    """Вырожденная линейная система."""
    category = 'singular'

    def __init__(self, condition: float, message: Optional[str] = None):
        self.condition = condition
        super().__init__(message or f"Число обусловленности {condition:.3e} превышает допустимое")

class SingularBoundarySystem(SingularError):
    """Вырожденная система ограничений и граничных условий для a(0)."""

class SingularC(SingularError):
    """Вырожденная матрица C восстановления."""

class QuadratureError(HalfSpaceError):
    """Ошибка численного интегрирования или итерационного процесса."""
    category = 'quadrature'

class QuadratureNotConverged(QuadratureError):
    """
    Расхождение правил с G и 2G узлами превышает допуск.

    Аргументы:
        discrepancy (float): Максимальное расхождение
        tolerance (float): Допуск
    """

    def __init__(self, discrepancy: float, tolerance: float):
        self.discrepancy = discrepancy
        self.tolerance = tolerance
        super().__init__(f"Квадратура не сошлась: расхождение G/2G = {discrepancy:.3e} > {tolerance:.3e}")

class NotConverged(QuadratureError):
    """
    Итерация неподвижной точки не сошлась.

    Аргументы:
        iterations (int): Число выполненных итераций
        residual (float): Последнее изменение
    """

    def __init__(self, iterations: int, residual: float):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"Итерация не сошлась за {iterations} шагов, невязка {residual:.3e}")

EXIT_CODES = {'config': 2, 'assembly': 3, 'eigen': 4, 'singular': 5, 'quadrature': 6, 'domain': 7}

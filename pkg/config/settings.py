from pathlib import Path
from decouple import config

# Базовые пути проекта
# BASE_DIR - абсолютный путь к директории проекта
BASE_DIR = Path(__file__).resolve().parent.parent

# Логирование: уровень и необязательный файл (пустая строка - только stdout)
LOG_LEVEL = config('HALFSPACE_LOG_LEVEL', default='INFO')
LOG_FILE = config('HALFSPACE_LOG_FILE', default='')

# Затухание: сила α оператора L_d
DEFAULT_ALPHA = config('HALFSPACE_ALPHA', default=0.1, cast=float)

# Допуски классификации мод нуль-пространства и нулевого собственного значения
TOL_NULL = config('HALFSPACE_TOL_NULL', default=1e-12, cast=float)
TOL_ZERO = config('HALFSPACE_TOL_ZERO', default=1e-10, cast=float)

# Квадратуры: узлов на полуось при сборке = 2N + QUAD_EXTRA, узлов для правой части граничного условия
QUAD_EXTRA = config('HALFSPACE_QUAD_EXTRA', default=8, cast=int)
BOUNDARY_POINTS = config('HALFSPACE_BOUNDARY_POINTS', default=64, cast=int)
QUADRATURE_TOL = config('HALFSPACE_QUADRATURE_TOL', default=1e-8, cast=float)

# Рекуррентность полуэрмитовых многочленов в mpmath: начальная точность 30 + 2·n_max знаков,
# не более RECURRENCE_REFINEMENTS удвоений до совпадения двух последовательных таблиц
RECURRENCE_DIGITS = config('HALFSPACE_RECURRENCE_DIGITS', default=30, cast=int)
RECURRENCE_REFINEMENTS = config('HALFSPACE_RECURRENCE_REFINEMENTS', default=5, cast=int)

# Пределы числа обусловленности
CONDITION_LIMIT = config('HALFSPACE_CONDITION_LIMIT', default=1e14, cast=float)
C_CONDITION_LIMIT = config('HALFSPACE_C_CONDITION_LIMIT', default=1e12, cast=float)

# Фильтр по умолчанию
FILTER_KIND = config('HALFSPACE_FILTER_KIND', default='none')
FILTER_ORDER = config('HALFSPACE_FILTER_ORDER', default=2, cast=int)

# H-функция Чандрасекара
H_NODES = config('HALFSPACE_H_NODES', default=64, cast=int)
H_TOL = config('HALFSPACE_H_TOL', default=1e-10, cast=float)
H_MAX_ITERATIONS = config('HALFSPACE_H_MAX_ITERATIONS', default=100000, cast=int)

# Каталоги кэша вспомогательных решений и результатов
CACHE_DIR = Path(config('HALFSPACE_CACHE_DIR', default=str(BASE_DIR / '.cache' / 'auxiliary')))
OUTPUT_DIR = Path(config('HALFSPACE_OUTPUT_DIR', default=str(BASE_DIR / 'results')))

# Параллельные вспомогательные решения и серии запусков
WORKERS = config('HALFSPACE_WORKERS', default=4, cast=int)

# Эталонные значения длины экстраполяции
EXTRAPOLATION_EXACT = 0.710446089598763
EXTRAPOLATION_CORON = 0.71040377

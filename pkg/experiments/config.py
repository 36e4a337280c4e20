from io import StringIO
from json import dumps
from pathlib import Path
from hashlib import sha256
from dataclasses import asdict, dataclass, field, replace
from configparser import ConfigParser, Error as ConfigParserError
from typing import Any, Dict, Optional, Tuple, Union
from numpy import linspace, ndarray
from core.exceptions import ConfigError
from models import model_map
from postprocess.filters import FilterSpec
from config import settings

# Диапазон скоростей по умолчанию для профилей
DEFAULT_V_RANGE = {'bgk': (-5.0, 5.0), 'nte': (-1.0, 1.0)}

@dataclass(frozen=True)
class RunConfig:
    """
    Конфигурация одного запуска решателя.

    Аргументы:
        model (str): 'bgk' или 'nte'
        u (float): Объемная скорость (для nte только 0)
        N (int): Порядок базиса
        alpha (Optional[float]): Сила затухания (по умолчанию settings.DEFAULT_ALPHA)
        quad_points (Optional[int]): Узлов на полуось, >= 2N+8 (по умолчанию 2N + settings.QUAD_EXTRA)
        aux_N (Optional[int]): Порядок вспомогательных решений
        tol_null (Optional[float]): Допуск классификации мод
        tol_zero (Optional[float]): Допуск нулевого собственного значения
        incoming (str): Имя встроенных данных или путь к таблице
        filter (FilterSpec): Фильтр профилей
        x_samples (Tuple[float, ...]): Точки x для профилей
        v_count (int): Число точек сетки скоростей
        v_min, v_max (Optional[float]): Диапазон скоростей (по умолчанию по модели)
        output_dir (Optional[Path]): Каталог результатов (по умолчанию settings.OUTPUT_DIR)
        cache_dir (Optional[Path]): Каталог кэша (по умолчанию settings.CACHE_DIR)

    Пример:
        >>> config = RunConfig(model='nte', N=12, incoming='v')
        >>> config.validate().resolved_quad_points
        32
    """
    model: str = 'bgk'
    u: float = 0.0
    N: int = 16
    alpha: Optional[float] = None
    quad_points: Optional[int] = None
    aux_N: Optional[int] = None
    tol_null: Optional[float] = None
    tol_zero: Optional[float] = None
    incoming: str = 'chi_plus'
    filter: FilterSpec = field(default_factory=FilterSpec)
    x_samples: Tuple[float, ...] = (0.0, 0.5, 1.0, 5.0)
    v_count: int = 201
    v_min: Optional[float] = None
    v_max: Optional[float] = None
    output_dir: Optional[Path] = None
    cache_dir: Optional[Path] = None

    @property
    def resolved_alpha(self) -> float:
        return settings.DEFAULT_ALPHA if self.alpha is None else self.alpha

    @property
    def resolved_quad_points(self) -> int:
        return self.quad_points or 2 * self.N + settings.QUAD_EXTRA

    @property
    def resolved_output_dir(self) -> Path:
        return Path(self.output_dir) if self.output_dir is not None else settings.OUTPUT_DIR

    @property
    def resolved_cache_dir(self) -> Path:
        return Path(self.cache_dir) if self.cache_dir is not None else settings.CACHE_DIR

    def v_grid(self) -> ndarray:
        low, high = DEFAULT_V_RANGE.get(self.model, (-5.0, 5.0))
        low = low if self.v_min is None else self.v_min
        high = high if self.v_max is None else self.v_max
        return linspace(low, high, self.v_count)

    def validate(self) -> 'RunConfig':
        """
        Проверка инвариантов конфигурации.

        Ошибки:
            ConfigError: При нарушении любого из условий
        """
        if self.model not in model_map:
            raise ConfigError(f"Неизвестная модель: {self.model}. Доступные модели: {list(model_map.keys())}")
        if self.model == 'nte' and self.u != 0.0:
            raise ConfigError(f"Для модели nte допускается только u = 0, получено {self.u}")
        if int(self.N) != self.N or self.N < 1:
            raise ConfigError(f"N должно быть целым >= 1, получено {self.N}")
        if not self.resolved_alpha > 0:
            raise ConfigError(f"alpha должно быть положительным, получено {self.resolved_alpha}")
        if self.quad_points is not None and self.quad_points < 2 * self.N + 8:
            raise ConfigError(f"quad_points должно быть >= 2N+8 = {2 * self.N + 8}, получено {self.quad_points}")
        if self.aux_N is not None and self.aux_N < 1:
            raise ConfigError(f"aux_N должно быть >= 1, получено {self.aux_N}")
        for name in ('tol_null', 'tol_zero'):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ConfigError(f"{name} должен быть положительным, получено {value}")
        if any(x < 0 for x in self.x_samples):
            raise ConfigError(f"Точки x должны быть неотрицательными: {self.x_samples}")
        if self.v_count < 2:
            raise ConfigError(f"v_count должно быть >= 2, получено {self.v_count}")
        grid = self.v_grid()
        if grid[0] >= grid[-1]:
            raise ConfigError(f"v_min должно быть меньше v_max: [{grid[0]}, {grid[-1]}]")
        if self.model == 'nte' and (grid[0] < -1.0 or grid[-1] > 1.0):
            raise ConfigError(f"Сетка скоростей nte должна лежать в [-1, 1]: [{grid[0]}, {grid[-1]}]")
        return self

    def with_overrides(self, **overrides) -> 'RunConfig':
        """Копия с замененными полями; значения None пропускаются."""
        values = {key: value for key, value in overrides.items() if value is not None}
        unknown = set(values) - set(self.__dataclass_fields__)
        if unknown:
            raise ConfigError(f"Неизвестные параметры конфигурации: {sorted(unknown)}")
        if 'x_samples' in values:
            values['x_samples'] = tuple(float(x) for x in values['x_samples'])
        return replace(self, **values)

    def as_dict(self) -> Dict[str, Any]:
        """Параметры, определяющие результат (без каталогов)."""
        values = asdict(self)
        values.pop('output_dir')
        values.pop('cache_dir')
        values['u'] = float(self.u)
        values['alpha'] = float(self.resolved_alpha)
        values['quad_points'] = self.resolved_quad_points
        values['tol_null'] = settings.TOL_NULL if self.tol_null is None else self.tol_null
        values['tol_zero'] = settings.TOL_ZERO if self.tol_zero is None else self.tol_zero
        values['x_samples'] = [float(x) for x in self.x_samples]
        grid = self.v_grid()
        values['v_min'], values['v_max'] = float(grid[0]), float(grid[-1])
        return values

    def config_hash(self) -> str:
        return sha256(dumps(self.as_dict(), sort_keys=True).encode('utf-8')).hexdigest()

    def to_ini(self) -> str:
        """Эффективная конфигурация в формате INI."""
        parser = ConfigParser()
        parser.optionxform = str
        parser['model'] = {'name': self.model, 'u': repr(float(self.u))}
        parser['discretization'] = {'N': str(self.N), 'alpha': repr(self.resolved_alpha),
                                    'quad_points': str(self.resolved_quad_points), 'aux_N': _text(self.aux_N),
                                    'tol_null': _text(self.tol_null if self.tol_null is not None else settings.TOL_NULL),
                                    'tol_zero': _text(self.tol_zero if self.tol_zero is not None else settings.TOL_ZERO)}
        parser['incoming'] = {'name': self.incoming}
        parser['filter'] = {'kind': self.filter.kind, 'order': str(self.filter.order)}
        grid = self.v_grid()
        parser['output'] = {'x_samples': ', '.join(repr(float(x)) for x in self.x_samples),
                            'v_count': str(self.v_count), 'v_min': repr(float(grid[0])), 'v_max': repr(float(grid[-1])),
                            'output_dir': str(self.resolved_output_dir), 'cache_dir': str(self.resolved_cache_dir)}
        stream = StringIO()
        parser.write(stream)
        return stream.getvalue()

    @classmethod
    def from_ini(cls, source: Union[str, Path]) -> 'RunConfig':
        """
        Чтение конфигурации из INI-файла.

        Ошибки:
            ConfigError: Если файл не найден или значение не разбирается
        """
        path = Path(source)
        if not path.is_file():
            raise ConfigError(f"Файл конфигурации не найден: {path}")

        parser = ConfigParser()
        try:
            parser.read(path, encoding='utf-8')
            values = _parse_sections(parser)
        except (ConfigParserError, ValueError) as exc:
            raise ConfigError(f"Ошибка разбора {path}: {exc}") from exc
        return cls().with_overrides(**values)

def _text(value: Any) -> str:
    return '' if value is None else repr(value)

def _optional(section, key: str, cast):
    raw = section.get(key, '').strip() if section is not None else ''
    return cast(raw) if raw else None

def _parse_sections(parser: ConfigParser) -> Dict[str, Any]:
    model = parser['model'] if parser.has_section('model') else None
    discretization = parser['discretization'] if parser.has_section('discretization') else None
    incoming = parser['incoming'] if parser.has_section('incoming') else None
    filter_section = parser['filter'] if parser.has_section('filter') else None
    output = parser['output'] if parser.has_section('output') else None

    values = {
        'model': _optional(model, 'name', str),
        'u': _optional(model, 'u', float),
        'N': _optional(discretization, 'N', int),
        'alpha': _optional(discretization, 'alpha', float),
        'quad_points': _optional(discretization, 'quad_points', int),
        'aux_N': _optional(discretization, 'aux_N', int),
        'tol_null': _optional(discretization, 'tol_null', float),
        'tol_zero': _optional(discretization, 'tol_zero', float),
        'incoming': _optional(incoming, 'name', str),
        'x_samples': _optional(output, 'x_samples', lambda raw: tuple(float(x) for x in raw.split(','))),
        'v_count': _optional(output, 'v_count', int),
        'v_min': _optional(output, 'v_min', float),
        'v_max': _optional(output, 'v_max', float),
        'output_dir': _optional(output, 'output_dir', Path),
        'cache_dir': _optional(output, 'cache_dir', Path),
    }
    kind = _optional(filter_section, 'kind', str)
    order = _optional(filter_section, 'order', int)
    if kind is not None or order is not None:
        values['filter'] = FilterSpec(kind=kind or 'none', order=order or settings.FILTER_ORDER)
    return values

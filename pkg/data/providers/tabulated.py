from pathlib import Path
from typing import List
from numpy import asarray, float64, nan_to_num, ndarray
from pandas import read_csv, to_numeric
from scipy.interpolate import CubicSpline
from core import Logger
from core.exceptions import ConfigError
from data.data_provider import IncomingData, IncomingProvider

class TabulatedProvider(IncomingProvider):
    """
    Входящие данные из двухколоночной таблицы (v, φ).

    Разделитель определяется автоматически (запятая, пробелы, табуляция), строки с '#'
    пропускаются, нечисловой заголовок отбрасывается. Значения интерполируются кубическим
    сплайном; вне диапазона таблицы φ = 0.

    Пример:
        >>> phi = TabulatedProvider().get_incoming('boundary.csv', make_model('bgk'))
    """

    def __init__(self):
        self.logger = Logger(__name__)

    def available(self) -> List[str]:
        return []

    def get_incoming(self, name: str, model) -> IncomingData:
        """
        Ошибки:
            ConfigError: Если файл не найден или содержит меньше четырех точек
        """
        path = Path(name)
        if not path.is_file():
            raise ConfigError(f"Файл входящих данных не найден: {path}")

        table = read_csv(path, sep=None, engine='python', header=None, comment='#')
        if table.shape[1] < 2:
            raise ConfigError(f"Ожидались две колонки (v, φ) в {path}, найдено {table.shape[1]}")

        table = table.iloc[:, :2].apply(to_numeric, errors='coerce').dropna()
        table.columns = ['v', 'phi']
        table = table.sort_values('v').drop_duplicates('v')
        if len(table) < 4:
            raise ConfigError(f"Слишком мало точек в {path}: {len(table)}")

        spline = CubicSpline(table['v'].to_numpy(), table['phi'].to_numpy(), extrapolate=False)

        def function(v: ndarray) -> ndarray:
            return nan_to_num(spline(asarray(v, dtype=float64)), nan=0.0)

        self.logger.info(f"Загружена таблица {path.name}: {len(table)} точек, v ∈ [{table['v'].min()}, "
                         f"{table['v'].max()}]")
        return IncomingData(name=str(path), function=function, description=f'сплайн по таблице {path.name}')

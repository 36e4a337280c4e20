from os import replace
from json import dumps
from pathlib import Path
from hashlib import sha256
from tempfile import NamedTemporaryFile
from typing import Any, Dict, List, Optional, Tuple, Union
from numpy import array, asarray, float64, load, ndarray, savez
from core import Logger
from config import settings

FORMAT_VERSION = 1

def config_hash(config: Dict[str, Any]) -> str:
    """sha256 канонического JSON конфигурации (ключи отсортированы)."""
    return sha256(dumps(config, sort_keys=True).encode('utf-8')).hexdigest()

class AuxiliaryCache:
    """
    Файловый кэш вспомогательных решений восстановления.

    Каждая запись - файл <hash>.npz с полями format_version, config_hash, config_json, labels
    и a0 (по строке на вспомогательное решение). Запись идет во временный файл в том же
    каталоге и переносится на место через os.replace, поэтому параллельные запуски не
    портят записи. Файлы другой версии формата или с несовпадающим хэшем игнорируются.

    Аргументы:
        directory (Union[str, Path, None]): Каталог кэша (по умолчанию settings.CACHE_DIR)

    Пример:
        >>> cache = AuxiliaryCache('/tmp/aux')
        >>> key = cache.set({'model': 'nte', 'N': 4}, ['chi'], a0)
        >>> labels, coefficients = cache.get({'model': 'nte', 'N': 4})
    """

    def __init__(self, directory: Union[str, Path, None] = None):
        self.directory = Path(directory) if directory is not None else settings.CACHE_DIR
        self.logger = Logger(__name__)
        self._hits = 0
        self._misses = 0

    def path_for(self, config: Dict[str, Any]) -> Path:
        return self.directory / f'{config_hash(config)}.npz'

    def get(self, config: Dict[str, Any]) -> Optional[Tuple[List[str], ndarray]]:
        """
        Получение вспомогательных решений по конфигурации.

        Возвращает:
            (labels, a0) или None, если записи нет, она другой версии или повреждена
        """
        path = self.path_for(config)
        if not path.is_file():
            self._misses += 1
            return None

        try:
            with load(path, allow_pickle=False) as entry:
                version = int(entry['format_version'])
                stored_hash = str(entry['config_hash'])
                labels = [str(label) for label in entry['labels']]
                a0 = array(entry['a0'], dtype=float64)
        except (OSError, KeyError, ValueError) as exc:
            self.logger.warning(f"Запись кэша {path.name} повреждена: {exc}")
            self._misses += 1
            return None

        if version != FORMAT_VERSION or stored_hash != config_hash(config):
            self.logger.warning(f"Запись кэша {path.name} несовместима (версия {version})")
            self._misses += 1
            return None

        self._hits += 1
        self.logger.debug(f"Кэш попадание: {path.name}")
        return labels, a0

    def set(self, config: Dict[str, Any], labels: List[str], a0: ndarray) -> str:
        """
        Сохранение вспомогательных решений.

        Аргументы:
            config (Dict[str, Any]): Конфигурация (model, u, N, alpha, ...), задающая ключ
            labels (List[str]): Имена мод, по одной на строку a0
            a0 (ndarray): Коэффициенты a(0), форма (len(labels), 2N+1)

        Возвращает:
            str: Хэш записи
        """
        key = config_hash(config)
        self.directory.mkdir(parents=True, exist_ok=True)
        with NamedTemporaryFile(dir=self.directory, suffix='.tmp', delete=False) as handle:
            savez(handle, format_version=FORMAT_VERSION, config_hash=key, config_json=dumps(config, sort_keys=True),
                  labels=array(labels, dtype=str), a0=asarray(a0, dtype=float64))
            temporary = handle.name
        replace(temporary, self.directory / f'{key}.npz')
        self.logger.debug(f"Вспомогательные решения сохранены: {key}.npz")
        return key

    def delete(self, config: Dict[str, Any]):
        path = self.path_for(config)
        if path.is_file():
            path.unlink()
            self.logger.debug(f"Запись кэша удалена: {path.name}")

    def clear(self):
        """Удаляет все записи каталога."""
        if self.directory.is_dir():
            for path in self.directory.glob('*.npz'):
                path.unlink()
        self.logger.info("Кэш вспомогательных решений очищен")

    def get_stats(self) -> dict:
        entries = list(self.directory.glob('*.npz')) if self.directory.is_dir() else []
        return {'total_items': len(entries), 'cache_size': sum(path.stat().st_size for path in entries),
                'hits': self._hits, 'misses': self._misses}

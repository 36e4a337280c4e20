import logging
from time import perf_counter, time
from sys import stdout
from contextlib import contextmanager
from typing import Iterator, Optional
from config import settings

class Logger:
    """
    Логгер модулей решателя.

    Пишет в stdout и, если задан settings.LOG_FILE, в файл журнала. Уровень по умолчанию
    берется из settings.LOG_LEVEL. Сообщения помечаются иконкой и названием уровня на русском;
    этапы расчета (сборка, разложение пучка, вспомогательные решения) логируются вместе со
    временем выполнения через stage().

    Аргументы:
        name (str): Имя логгера, обычно __name__ модуля
        level (Optional[int]): Уровень логирования модуля logging

    Пример:
        >>> logger = Logger(__name__)
        >>> with logger.stage('Сборка матриц N=8'):
        ...     system = assemble_system(model, 8)
        2024-10-01 12:00:00 - solver.assembly - INFO - ⏱️ Этап: Сборка матриц N=8 (0.012 с)
    """

    _PREFIXES = {
        logging.DEBUG: '🔍 Отладка',
        logging.INFO: 'ℹ️ Информация',
        logging.WARNING: '⚠️ Предупреждение',
        logging.ERROR: '❌ Ошибка',
        logging.CRITICAL: '💥 Критическая ошибка'
    }
    _STAGE_PREFIX = '⏱️ Этап'

    # Записей в минуту на один логгер; длинные переборы по N и u не засоряют журнал
    _RATE_LIMIT = 10000

    def __init__(self, name: str, level: Optional[int] = None):
        self._window_start = time()
        self._emitted = 0
        self.logger = logging.getLogger(name)

        if not self.logger.handlers:
            self.logger.setLevel(level if level is not None else logging.getLevelName(settings.LOG_LEVEL.upper()))
            self.logger.propagate = False
            for handler in self._make_handlers():
                self.logger.addHandler(handler)

    def _make_handlers(self) -> Iterator[logging.Handler]:
        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                                      datefmt='%Y-%m-%d %H:%M:%S')
        handlers = [logging.StreamHandler(stdout)]
        if settings.LOG_FILE:
            handlers.append(logging.FileHandler(settings.LOG_FILE))
        for handler in handlers:
            handler.setFormatter(formatter)
            handler.addFilter(self._within_rate)
            yield handler

    def _within_rate(self, record: logging.LogRecord) -> bool:
        """Пропускает не больше _RATE_LIMIT записей за минуту."""
        now = time()
        if now - self._window_start > 60:
            self._window_start, self._emitted = now, 0
        self._emitted += 1
        if self._emitted == self._RATE_LIMIT + 1:
            logging.warning(f"Логгер {self.logger.name}: лимит записей в минуту исчерпан")
        return self._emitted <= self._RATE_LIMIT

    def _log(self, level: int, message: str, exc_info: bool = False, prefix: Optional[str] = None) -> None:
        self.logger.log(level, f'{prefix or self._PREFIXES[level]}: {message}', exc_info=exc_info)

    def debug(self, message: str) -> None:
        self._log(logging.DEBUG, message)

    def info(self, message: str) -> None:
        self._log(logging.INFO, message)

    def warning(self, message: str) -> None:
        self._log(logging.WARNING, message)

    def error(self, message: str, info: bool = False) -> None:
        """Ошибка; при info=True к записи добавляется traceback."""
        self._log(logging.ERROR, message, exc_info=info)

    def critical(self, message: str, info: bool = False) -> None:
        self._log(logging.CRITICAL, message, exc_info=info)

    @contextmanager
    def stage(self, title: str, level: int = logging.INFO) -> Iterator[None]:
        """
        Логирует этап расчета с временем выполнения.

        При исключении внутри этапа пишет ошибку с прошедшим временем и пробрасывает исключение дальше.

        Аргументы:
            title (str): Описание этапа
            level (int): Уровень записи об успешном завершении
        """
        started = perf_counter()
        try:
            yield
        except Exception as error:
            self._log(logging.ERROR, f'{title} прерван через {perf_counter() - started:.3f} с: {error}')
            raise
        self._log(level, f'{title} ({perf_counter() - started:.3f} с)', prefix=self._STAGE_PREFIX)

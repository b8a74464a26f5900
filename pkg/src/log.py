import inspect
import logging
import sys

from loguru import logger

from .config import config


class InterceptHandler(logging.Handler):
    """Пересылает записи стандартного logging в loguru.

    Так в общие sink попадают логи сторонних библиотек и предупреждения
    warnings (логгер py.warnings), например DeprecationWarning из networkx.
    Имя исходного логгера сохраняется в extra['source'].
    """
    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # первый кадр вне модуля logging - место вызова
        frame, depth = inspect.currentframe(), 0
        while frame and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.bind(source=record.name).opt(depth=depth, exception=record.exc_info).log(
            level, record.getMessage()
        )


def setup_logger() -> None:
    """Настраивает систему логирования приложения.

    Алгоритм работы:
    1. Включает логи пакета src (библиотека по умолчанию молчит)
    2. Заменяет стандартный sink loguru на stderr с уровнем из конфига
    3. Добавляет файловый sink, если задан LoggerConfig.FILE
    4. Перенаправляет стандартный logging и warnings в loguru;
       уровень фильтруют sink loguru
    """
    logger.enable('src')
    logger.remove()
    logger.add(
        sys.stderr,
        level=config.logger_config.LEVEL,
        backtrace=config.logger_config.BACKTRACE,
        diagnose=config.logger_config.DIAGNOSE,
        catch=config.logger_config.CATCH,
    )
    if config.logger_config.FILE is not None:
        logger.add(
            config.logger_config.FILE,
            rotation=config.logger_config.ROTATION,
            level=config.logger_config.LEVEL,
            backtrace=config.logger_config.BACKTRACE,
            diagnose=config.logger_config.DIAGNOSE,
            enqueue=config.logger_config.ENQUEUE,
            catch=config.logger_config.CATCH,
            compression=config.logger_config.COMPRESSION,
        )

    logging.basicConfig(handlers=[InterceptHandler()], level=logging.NOTSET, force=True)
    logging.captureWarnings(True)

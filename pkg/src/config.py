from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path
from loguru import logger

from .approx.config import ApproxConfig
from .oracle.config import OracleConfig
from .cli.config import CliConfig


class LoggerConfig(BaseSettings):
    """Класс конфигурации логирования.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        LEVEL: Уровень логирования
        FILE: Путь к файлу логов (None - только stderr)
        ROTATION: При каком условии происходит ротация логов
        COMPRESSION: Формат сжатия логов
        BACKTRACE: Включает подробный трейсбек при ошибках
        DIAGNOSE: Добавляет информацию о переменных в стектрейс
        ENQUEUE: Асинхронная запись логов
        CATCH: Перехватывание исключения
    """
    LEVEL: str = 'WARNING'
    FILE: Path | None = None
    ROTATION: str | None = None
    COMPRESSION: str | None = None
    BACKTRACE: bool = False
    DIAGNOSE: bool = False
    ENQUEUE: bool = False
    CATCH: bool = True

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )


class Config(BaseSettings):
    """Основной класс конфигурации приложения.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        TITLE: Имя проекта
        VERSION: Версия проекта
        DESCRIPTION: Описание проекта для --help
    """
    logger_config: LoggerConfig = LoggerConfig()
    approx_config: ApproxConfig = ApproxConfig()
    oracle_config: OracleConfig = OracleConfig()
    cli_config: CliConfig = CliConfig()

    TITLE: str = 'subcubic-tsp'
    VERSION: str = '1.0.0'
    DESCRIPTION: str | None = None

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )

    @property
    def description_project(self) -> str:
        """Возвращает описание проекта"""
        return self.DESCRIPTION or (
            'TSP-обход 2-связного подкубического графа длины не более (5n + n2)/4 - 1'
        )


try:
    config = Config()
except Exception as e:
    logger.error(f'Во время парсинга .env произошла ошибка: {e}')
    raise

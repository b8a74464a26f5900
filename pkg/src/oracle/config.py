from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path


class OracleConfig(BaseSettings):
    """Класс конфигурации точного перебора.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        ORACLE_LIMIT: Максимальное число вершин, при котором перебор разрешен без --force
    """
    ORACLE_LIMIT: int = 16

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )

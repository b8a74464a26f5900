from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path


class CliConfig(BaseSettings):
    """Класс конфигурации командной строки.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        BENCH_SIZES: Размеры графов для bench по умолчанию (через запятую)
        BENCH_SEED: Зерно генератора для bench по умолчанию
    """
    BENCH_SIZES: str = "100,200,400,800,1600"
    BENCH_SEED: int = 0

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )

    @property
    def bench_sizes(self) -> list[int]:
        """Возвращает размеры bench списком"""
        return [int(size) for size in self.BENCH_SIZES.split(',') if size.strip()]

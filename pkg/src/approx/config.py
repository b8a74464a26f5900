from pydantic_settings import BaseSettings, SettingsConfigDict
from pathlib import Path


class ApproxConfig(BaseSettings):
    """Класс конфигурации приближенного алгоритма.

    Загружает настройки из .env файла или переменных окружения.

    Attributes:
        CHECK_BOUNDS: Проверять каждое покрытие рекурсии на сертифицированную оценку
        CHECK_CONTRACTS: Проверять корректность пары (G, e) на входе каждого вызова
        RECURSION_LIMIT: Лимит рекурсии интерпретатора на время solve
    """
    CHECK_BOUNDS: bool = True
    CHECK_CONTRACTS: bool = True
    RECURSION_LIMIT: int = 50_000

    model_config = SettingsConfigDict(
        env_file=Path(__file__).parent.parent.parent / ".env",
        env_file_encoding='utf-8',
        extra="ignore"
    )

class BaseAppException(Exception):
    """Базовое исключение приложения.

    Каждое исключение несет человекочитаемое описание и код выхода,
    с которым завершается CLI (см. src/cli/handler.py).

    Attributes:
        exit_code: Код выхода процесса
        detail: Описание ошибки
    """
    exit_code: int = 1
    detail: str = 'Внутренняя ошибка'

    def __init__(self, detail: str | None = None) -> None:
        self.detail = detail or self.detail
        super().__init__(self.detail)


class ParseException(BaseAppException):
    """Входной файл или аргументы не удалось разобрать."""
    exit_code = 2
    detail = 'Ошибка разбора входных данных'


class InputException(BaseAppException):
    """Граф не подходит под предусловия операции."""
    exit_code = 3
    detail = 'Граф не удовлетворяет предусловиям'


class LimitException(BaseAppException):
    """Превышен ограничитель размера."""
    exit_code = 4
    detail = 'Слишком большой вход'


class CheckException(BaseAppException):
    """Проверка сертификата не пройдена."""
    exit_code = 5
    detail = 'Проверка не пройдена'


class InternalException(BaseAppException):
    """Нарушен внутренний инвариант алгоритма (ошибка в коде, а не во входе)."""
    exit_code = 1
    detail = 'Нарушен внутренний инвариант'

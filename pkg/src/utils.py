from fractions import Fraction

from .exceptions import (
    BaseAppException,
    CheckException,
    InputException,
    InternalException,
    LimitException,
    ParseException,
)

EXIT_CATEGORIES: tuple[type[BaseAppException], ...] = (
    ParseException,
    InputException,
    LimitException,
    CheckException,
    InternalException,
)


def exit_codes_epilog() -> str:
    """Генерирует таблицу кодов выхода для --help.

    Returns:
        Строки "код - описание" по категориям исключений, начиная с успеха
    """
    rows = ['коды выхода:', '  0 - успех']
    for error in sorted(EXIT_CATEGORIES, key=lambda category: category.exit_code):
        rows.append(f'  {error.exit_code} - {error.detail}')
    return '\n'.join(rows)


def format_flag(value: bool | None) -> str:
    """Флаг в выводе CLI: true, false или n/a"""
    if value is None:
        return 'n/a'
    return 'true' if value else 'false'


def format_fraction(value: Fraction | None) -> str:
    return 'n/a' if value is None else str(value)

import sys
from typing import Callable

from loguru import logger

from ..exceptions import BaseAppException, InternalException


def app_exception_handler(error: BaseAppException) -> int:
    """Обработчик BaseAppException:

    1. пишет описание ошибки в stderr
    2. возвращает код выхода категории исключения
    """
    if isinstance(error, InternalException):
        logger.opt(exception=error).error(f'Нарушен внутренний инвариант: {error.detail}')
    else:
        logger.error(f'Команда завершилась ошибкой: {error.detail}')
    print(f'error: {error.detail}', file=sys.stderr)
    return error.exit_code


def run_handled(command: Callable[[], None]) -> int:
    """Выполняет команду и переводит исключения в коды выхода.

    Returns:
        int: 0 при успехе, код категории для BaseAppException, 1 для прочих ошибок
    """
    try:
        command()
    except BaseAppException as e:
        return app_exception_handler(e)
    except RecursionError as e:
        logger.opt(exception=e).error('Превышена глубина рекурсии')
        print('error: превышена глубина рекурсии', file=sys.stderr)
        return InternalException.exit_code
    except Exception as e:
        logger.opt(exception=e).error(f'Непредвиденная ошибка: {e}')
        print(f'error: {e}', file=sys.stderr)
        return 1
    return 0

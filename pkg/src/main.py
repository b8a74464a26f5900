import argparse
import sys

from loguru import logger

from src.cli.commands import add_commands
from src.cli.handler import run_handled
from src.config import config
from src.log import setup_logger
from src.utils import exit_codes_epilog


def create_parser() -> argparse.ArgumentParser:
    """Фабрика для создания парсера командной строки.

    Алгоритм работы:
    1. Создает парсер с описанием проекта и таблицей кодов выхода
    2. Подключает подкоманды solve, oracle, classify, gen, check, bench

    Returns:
        argparse.ArgumentParser: Настроенный парсер
    """
    parser = argparse.ArgumentParser(
        prog=config.TITLE,
        description=config.description_project,
        epilog=exit_codes_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--version', action='version', version=f'{config.TITLE} {config.VERSION}')
    subparsers = parser.add_subparsers(dest='command', required=True)
    add_commands(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Разбирает аргументы и выполняет подкоманду.

    Returns:
        int: Код выхода
    """
    setup_logger()
    args = create_parser().parse_args(argv)
    logger.info(f'Запуск команды {args.command}')
    return run_handled(lambda: args.handler(args))


if __name__ == '__main__':
    try:
        sys.exit(main())
    except Exception as e:
        logger.error(f'Во время запуска приложения произошла ошибка: {e}')
        sys.exit(1)

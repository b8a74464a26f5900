import sys
from pathlib import Path

from loguru import logger

from ..graph.multigraph import Multigraph
from .exceptions import ParseError


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Непустые строки без комментариев с их номерами (с единицы)"""
    return [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith('#')
    ]


def _ints(line: str, number: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f'ожидалось {count} числа, получено {len(parts)}', number)
    try:
        return [int(part) for part in parts]
    except ValueError:
        raise ParseError(f'не число в {line!r}', number) from None


def parse_graph(text: str) -> Multigraph:
    """Разбирает файл графа: заголовок "n m", затем m строк "u v".

    Строки, начинающиеся с '#', и пустые строки пропускаются. Повторяющиеся
    строки задают параллельные ребра; id ребер - номера строк по порядку.

    Raises:
        ParseError: Если формат нарушен
        IndexOutOfRange: Если вершина вне 0..n-1
    """
    lines = _content_lines(text)
    if not lines:
        raise ParseError('пустой файл графа')
    number, header = lines[0]
    n, m = _ints(header, number, 2)
    if n < 1 or m < 0:
        raise ParseError(f'некорректный заголовок {header!r}', number)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f'заявлено {m} ребер, найдено {len(body)}')
    pairs = [tuple(_ints(line, number, 2)) for number, line in body]
    return Multigraph.build(n, pairs)


def read_graph(path: Path) -> Multigraph:
    """Читает граф из файла (или stdin при пути "-")"""
    logger.info(f'Чтение графа из {path}...')
    graph = parse_graph(_read_text(path))
    logger.info(f'Граф прочитан: {graph}')
    return graph


def format_graph(graph: Multigraph) -> str:
    """Файл графа для графа на вершинах 0..n-1, ребра в порядке id"""
    lines = [f'{graph.n} {graph.m}']
    lines.extend(f'{a} {b}' for a, b in (graph.endpoints(edge_id) for edge_id in graph.edge_ids))
    return '\n'.join(lines) + '\n'


def parse_walk(text: str) -> list[int]:
    """Вершины обхода: строка "walk: ..." вывода solve или первая значимая строка.

    Raises:
        ParseError: Если обход не найден или содержит не числа
    """
    lines = _content_lines(text)
    walk_lines = [(number, line) for number, line in lines if line.startswith('walk:')]
    if walk_lines:
        number, line = walk_lines[0]
        line = line.removeprefix('walk:')
    elif lines:
        number, line = lines[0]
    else:
        raise ParseError('файл обхода пуст')
    try:
        return [int(part) for part in line.split()]
    except ValueError:
        raise ParseError(f'не число в обходе {line!r}', number) from None


def read_walk(path: Path) -> list[int]:
    return parse_walk(_read_text(path))


def _read_text(path: Path) -> str:
    if str(path) == '-':
        return sys.stdin.read()
    try:
        return path.read_text(encoding='utf-8')
    except OSError as e:
        logger.error(f'Не удалось прочитать {path}: {e}')
        raise ParseError(f'не удалось прочитать {path}: {e.strerror}') from e

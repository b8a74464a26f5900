from ..exceptions import InputException, ParseException


class ParseError(ParseException):
    """Файл графа или обхода не соответствует формату."""

    def __init__(self, detail: str, line: int | None = None) -> None:
        where = f'строка {line}: ' if line is not None else ''
        super().__init__(f'{where}{detail}')
        self.line = line


class NoSuchEdge(InputException):
    """Между указанными вершинами нет ребра."""

    def __init__(self, u: int, v: int) -> None:
        super().__init__(f'В графе нет ребра {u} {v}')
        self.u = u
        self.v = v

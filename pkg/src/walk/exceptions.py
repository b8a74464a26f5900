from ..exceptions import CheckException, InternalException


class InvalidCover(CheckException):
    """Переданное множество ребер не является четным покрытием графа."""
    detail = 'Покрытие некорректно'


class NotClosed(CheckException):
    """Обход не замкнут или пуст."""
    detail = 'Обход не замкнут'


class NotSpanning(CheckException):
    """Обход пропускает вершины графа."""

    def __init__(self, missing: list[int]) -> None:
        shown = ' '.join(map(str, missing[:10]))
        super().__init__(f'Обход не посещает вершины: {shown}')
        self.missing = missing


class MissingEdge(CheckException):
    """Соседние вершины обхода не соединены ребром."""

    def __init__(self, a: int, b: int) -> None:
        super().__init__(f'Между вершинами {a} и {b} нет ребра')
        self.a = a
        self.b = b


class LengthMismatch(InternalException):
    """Длина построенного обхода не равна n + exc - 2."""

    def __init__(self, actual: int, expected: int) -> None:
        super().__init__(f'Длина обхода {actual}, ожидалась {expected}')
        self.actual = actual
        self.expected = expected

from ..exceptions import InputException, ParseException


class BadDegree(InputException):
    """Вершина имеет не ту степень, которую требует операция."""

    def __init__(self, vertex: int, degree: int, expected: int = 2) -> None:
        super().__init__(f'Вершина {vertex} имеет степень {degree}, ожидалась {expected}')
        self.vertex = vertex
        self.degree = degree


class BadSize(InputException):
    """Параметр размера вне допустимого диапазона."""

    def __init__(self, name: str, value: int, minimum: int) -> None:
        super().__init__(f'Параметр {name}={value} должен быть не меньше {minimum}')
        self.value = value


class UnknownName(ParseException):
    """Нет именованного графа с таким именем."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(f'Неизвестный граф {name!r}, доступны: {", ".join(known)}')
        self.name = name


class BadSeed(ParseException):
    """Зерно не является 64-битным беззнаковым целым."""

    def __init__(self, seed: int) -> None:
        super().__init__(f'Зерно {seed} вне диапазона 0..2^64-1')
        self.seed = seed

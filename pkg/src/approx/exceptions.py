from ..exceptions import InputException, InternalException


class BadInput(InputException):
    """Граф не подходит для алгоритма."""
    detail = 'Граф не подходит для алгоритма'


class NotSubcubic(BadInput):
    """Степень некоторой вершины больше 3."""
    detail = 'Граф не подкубический'


class NotTwoConnected(BadInput):
    """Граф не 2-связен или слишком мал."""
    detail = 'Граф не 2-связен'


class BoundViolation(InternalException):
    """Покрытие рекурсии превысило свою сертифицированную оценку."""

    def __init__(self, exc: int, bound: str) -> None:
        super().__init__(f'Избыток {exc} превышает оценку {bound}')
        self.exc = exc
        self.bound = bound


class SpliceArithmeticError(InternalException):
    """Избыток склейки не совпал с суммой избытков частей."""

    def __init__(self, actual: int, expected: int) -> None:
        super().__init__(f'Избыток склейки {actual}, ожидался {expected}')
        self.actual = actual
        self.expected = expected


class RelabelingError(InternalException):
    """Ни одна перестановка меток не удовлетворяет неравенству."""
    detail = 'Перемаркировка невозможна'


class PartitionError(InternalException):
    """Части сборки не разбивают вершины графа."""
    detail = 'Части сборки не разбивают вершины графа'


class ContainmentError(InternalException):
    """Покрытие содержит корневое ребро вопреки флагу (или не содержит его)."""

    def __init__(self, edge_id: int, flag: bool) -> None:
        expected = 'содержать' if flag else 'не содержать'
        super().__init__(f'Покрытие должно {expected} ребро {edge_id}')
        self.edge_id = edge_id
        self.flag = flag

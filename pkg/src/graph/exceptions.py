from ..exceptions import ParseException, InputException, InternalException


class IndexOutOfRange(ParseException):
    """Конец ребра ссылается на несуществующую вершину."""

    def __init__(self, index: int, num_vertices: int) -> None:
        super().__init__(f'Индекс вершины {index} вне диапазона 0..{num_vertices - 1}')
        self.index = index
        self.num_vertices = num_vertices


class Disconnected(InputException):
    """Граф несвязен, а операция требует связности."""
    detail = 'Граф несвязен'


class BadNeighborhood(InternalException):
    """Подавляемое множество имеет не одного и не двух внешних соседей."""

    def __init__(self, size: int) -> None:
        super().__init__(f'Подавление требует |N(S)| из {{1, 2}}, получено {size}')
        self.size = size


class UnknownEdge(InternalException):
    """Ребро с таким id отсутствует в графе."""

    def __init__(self, edge_id: int) -> None:
        super().__init__(f'Ребро {edge_id} не принадлежит графу')
        self.edge_id = edge_id


class UnknownVertex(InternalException):
    """Вершина отсутствует в графе."""

    def __init__(self, vertex: int) -> None:
        super().__init__(f'Вершина {vertex} не принадлежит графу')
        self.vertex = vertex


class NotSimple(InputException):
    """Граф содержит петли или параллельные ребра."""
    detail = 'Граф не простой'

from ..exceptions import InternalException


class DegreeViolation(InternalException):
    """Вершина имеет в покрытии степень не 0 и не 2."""

    def __init__(self, vertex: int, degree: int) -> None:
        super().__init__(f'Вершина {vertex} имеет в покрытии степень {degree}')
        self.vertex = vertex
        self.degree = degree


class ForeignEdge(InternalException):
    """Ребро покрытия не принадлежит графу."""

    def __init__(self, edge_id: int) -> None:
        super().__init__(f'Ребро {edge_id} не принадлежит графу покрытия')
        self.edge_id = edge_id


class EdgeNotInCycle(InternalException):
    """Ребро не лежит ни на одном цикле покрытия."""

    def __init__(self, edge_id: int) -> None:
        super().__init__(f'Ребро {edge_id} не лежит на цикле покрытия')
        self.edge_id = edge_id


class NotACycle(InternalException):
    """Склейка не дает ровно один цикл."""
    detail = 'Склейка не образует один цикл'


class Overlap(InternalException):
    """Объединяемые покрытия пересекаются по вершинам или ребрам."""
    detail = 'Покрытия пересекаются'

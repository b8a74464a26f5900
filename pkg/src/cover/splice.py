from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from loguru import logger

from ..graph.multigraph import Multigraph
from .cover import EvenCover
from .exceptions import EdgeNotInCycle, NotACycle, Overlap


@dataclass(frozen=True)
class OpenPath:
    """Цикл покрытия, разрезанный по одному ребру.

    Attributes:
        edges: Ребра пути по порядку от ends[0] к ends[1]
        ends: Концы пути (совпадают для пустого пути)
        vertices: Вершины пути по порядку
    """
    edges: tuple[int, ...]
    ends: tuple[int, int]
    vertices: tuple[int, ...]


def open_at(cover: EvenCover, edge_id: int) -> tuple[OpenPath, EvenCover]:
    """Разрезает цикл покрытия по ребру.

    Args:
        cover: Четное покрытие
        edge_id: Ребро на одном из циклов

    Returns:
        Путь (цикл без ребра, концы - концы ребра) и остаток покрытия
        на графе без вершин пути

    Raises:
        EdgeNotInCycle: Если ребро не лежит на цикле покрытия
    """
    cycle = cover.cycle_of(edge_id)
    if cycle is None:
        raise EdgeNotInCycle(edge_id)
    size = len(cycle.edges)
    position = cycle.edges.index(edge_id)
    order = [(position + 1 + step) % size for step in range(size)]
    vertices = tuple(cycle.vertices[index] for index in order)
    edges = tuple(cycle.edges[index] for index in order[:-1])
    if size == 1:
        vertices = vertices[:1]
    first, second = cover.host.endpoints(edge_id)
    if vertices[0] != first:
        vertices, edges = vertices[::-1], edges[::-1]
    path = OpenPath(edges, (vertices[0], vertices[-1]), vertices)
    remainder = EvenCover(
        cover.host.without_vertices(cycle.vertices),
        cover.edges - set(cycle.edges),
    )
    return path, remainder


def splice_cycle(
        graph: Multigraph,
        segments: Sequence[OpenPath],
        links: Iterable[int],
        extra_vertices: Iterable[int] = (),
) -> EvenCover:
    """Сшивает пути и связующие ребра в один цикл.

    Args:
        graph: Граф, которому принадлежат связующие ребра
        segments: Вершинно непересекающиеся пути
        links: Ребра, соединяющие концы путей по циклу
        extra_vertices: Вершины, через которые проходят только связующие ребра

    Returns:
        EvenCover: Покрытие из одного цикла на графе-носителе этого цикла

    Raises:
        NotACycle: Если объединение не является одним циклом
    """
    links = list(links)
    extra = set(extra_vertices)
    endpoints: dict[int, tuple[int, int]] = {}
    path_vertices: list[int] = []
    for segment in segments:
        path_vertices.extend(segment.vertices)
        # ребро i пути соединяет vertices[i] и vertices[i + 1]
        for index, edge_id in enumerate(segment.edges):
            if edge_id in endpoints:
                raise NotACycle(f'Ребро {edge_id} встречается в двух путях')
            endpoints[edge_id] = (segment.vertices[index], segment.vertices[index + 1])
    if len(path_vertices) != len(set(path_vertices)):
        raise NotACycle('Пути пересекаются по вершинам')
    if extra & set(path_vertices):
        raise NotACycle('Дополнительные вершины лежат на путях')
    for edge_id in links:
        if edge_id in endpoints:
            raise NotACycle(f'Связующее ребро {edge_id} уже лежит на пути')
        endpoints[edge_id] = graph.endpoints(edge_id)

    degree: Counter[int] = Counter()
    for a, b in endpoints.values():
        degree[a] += 1
        degree[b] += 1
    touched = set(path_vertices) | extra | set(degree)
    bad = sorted(v for v in touched if degree[v] != 2)
    if bad:
        logger.error(f'Склейка некорректна: вершины {bad} имеют степень не 2')
        raise NotACycle(f'Вершины {bad} имеют степень не 2')

    support = Multigraph(touched, endpoints, graph.next_edge_id)
    if len(support.components()) != 1:
        raise NotACycle('Объединение распадается на несколько циклов')
    return EvenCover(support, frozenset(endpoints))


def disjoint_union(
        parts: Iterable[EvenCover],
        isolated_extra: Iterable[int] = (),
) -> EvenCover:
    """Объединяет вершинно непересекающиеся покрытия.

    Избыток результата равен сумме избытков частей плюс число
    дополнительных изолированных вершин.

    Raises:
        Overlap: Если части пересекаются по вершинам или ребрам
    """
    vertices: list[int] = list(isolated_extra)
    endpoints: dict[int, tuple[int, int]] = {}
    next_edge_id = 0
    for part in parts:
        vertices.extend(part.host.vertices)
        next_edge_id = max(next_edge_id, part.host.next_edge_id)
        for edge_id in part.edges:
            if edge_id in endpoints:
                raise Overlap(f'Ребро {edge_id} есть в двух частях')
            endpoints[edge_id] = part.host.endpoints(edge_id)
    if len(vertices) != len(set(vertices)):
        logger.error('Объединяемые покрытия пересекаются по вершинам')
        raise Overlap
    support = Multigraph(vertices, endpoints, next_edge_id)
    return EvenCover(support, frozenset(endpoints))

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import networkx as nx
from loguru import logger

from ..cover.cover import EvenCover, validate
from ..cover.exceptions import DegreeViolation, ForeignEdge
from ..graph.exceptions import Disconnected
from ..graph.multigraph import Multigraph
from .exceptions import InvalidCover, LengthMismatch, MissingEdge, NotClosed, NotSpanning


@dataclass(frozen=True)
class TspWalk:
    """Замкнутый остовный обход.

    Attributes:
        vertices: Последовательность вершин, первая совпадает с последней
        edges: id ребер, edges[i] соединяет vertices[i] и vertices[i + 1]
    """
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        """Число проходов по ребрам"""
        return len(self.edges)


def _components_of(cover: EvenCover) -> dict[int, int]:
    """Номер компоненты покрытия для каждой вершины"""
    component_of: dict[int, int] = {}
    for index, cycle in enumerate(cover.cycles):
        for v in cycle.vertices:
            component_of[v] = index
    offset = len(cover.cycles)
    for index, v in enumerate(cover.isolated):
        component_of[v] = offset + index
    return component_of


def _spanning_tree_edges(graph: Multigraph, component_of: dict[int, int]) -> list[int]:
    """Ребра остовного дерева стянутого графа в порядке обхода в ширину.

    Обход начинается с компоненты наименьшей вершины; каждая новая компонента
    присоединяется ребром с наименьшим id из текущей компоненты.
    """
    members: dict[int, list[int]] = {}
    for v in graph.vertices:
        members.setdefault(component_of[v], []).append(v)
    start = component_of[graph.vertices[0]]
    visited = {start}
    queue = deque([start])
    tree = []
    while queue:
        current = queue.popleft()
        outgoing = sorted(
            edge_id for v in members[current] for edge_id in graph.incident(v)
        )
        for edge_id in outgoing:
            a, b = graph.endpoints(edge_id)
            for end in (a, b):
                target = component_of[end]
                if target not in visited:
                    visited.add(target)
                    queue.append(target)
                    tree.append(edge_id)
    if len(visited) != len(members):
        raise Disconnected
    return tree


def cover_to_walk(graph: Multigraph, cover: EvenCover) -> TspWalk:
    """Строит TSP-обход длины n + exc(F) - 2 по четному покрытию.

    Алгоритм работы:
    1. Стягивает компоненты покрытия в узлы и строит остовное дерево
       стянутого графа обходом в ширину
    2. Берет ребра покрытия по одному разу, а ребра дерева - дважды
    3. Выписывает эйлеров цикл полученного мультиграфа от наименьшей вершины

    Копии ребер добавляются в мультиграф по возрастанию id, поэтому
    nx.eulerian_circuit на простом графе всегда уходит по неиспользованному
    ребру с наименьшим id. networkx выдает цикл с конца, он разворачивается.

    Args:
        graph: Связный граф
        cover: Четное покрытие графа

    Returns:
        TspWalk: Замкнутый остовный обход

    Raises:
        InvalidCover: Если покрытие некорректно
        Disconnected: Если граф несвязен
    """
    try:
        cover = validate(graph, cover.edges)
    except (ForeignEdge, DegreeViolation) as e:
        logger.error(f'Покрытие не подходит для графа {graph}: {e.detail}')
        raise InvalidCover(e.detail) from e
    logger.info(f'Построение обхода графа {graph} по покрытию с exc={cover.exc}...')
    if not graph.is_connected():
        logger.error(f'Граф {graph} несвязен, обход невозможен')
        raise Disconnected

    start = graph.vertices[0]
    tree = _spanning_tree_edges(graph, _components_of(cover))
    copies = [(edge_id, 0) for edge_id in cover.edges]
    copies += [(edge_id, copy) for edge_id in tree for copy in (0, 1)]
    euler = nx.MultiGraph()
    euler.add_nodes_from(graph.vertices)
    for key in sorted(copies):
        euler.add_edge(*graph.endpoints(key[0]), key=key)

    if euler.number_of_edges() == 0:
        walk = TspWalk((start,), ())
    else:
        if any(degree % 2 for _, degree in euler.degree()):
            logger.error('Мультиграф обхода имеет вершины нечетной степени')
            raise InvalidCover('Мультиграф обхода не эйлеров')
        vertices = [start]
        edges = []
        for _, b, (edge_id, _) in nx.eulerian_circuit(euler, source=start, keys=True):
            vertices.append(b)
            edges.append(edge_id)
        walk = TspWalk(tuple(reversed(vertices)), tuple(reversed(edges)))

    expected = graph.n + cover.exc - 2
    if walk.length != expected:
        logger.error(f'Длина обхода {walk.length} не равна n + exc - 2 = {expected}')
        raise LengthMismatch(walk.length, expected)
    logger.info(f'Обход построен: длина {walk.length}')
    return walk


def walk_from_vertices(graph: Multigraph, vertices: Iterable[int]) -> TspWalk:
    """Восстанавливает ребра обхода по последовательности вершин.

    Между соседними вершинами берется ребро с наименьшим id.

    Raises:
        MissingEdge: Если соседние вершины не смежны
    """
    sequence = tuple(vertices)
    edges = []
    for a, b in zip(sequence, sequence[1:]):
        between = graph.edges_between(a, b) if graph.has_vertex(a) and graph.has_vertex(b) else []
        if not between:
            raise MissingEdge(a, b)
        edges.append(min(between))
    return TspWalk(sequence, tuple(edges))


def validate_walk(graph: Multigraph, walk: TspWalk) -> int:
    """Проверяет, что обход замкнут, остовен и идет по ребрам графа.

    Returns:
        int: Длина обхода

    Raises:
        NotClosed: Если обход пуст или не замкнут
        MissingEdge: Если ребро обхода не соединяет соседние вершины
        NotSpanning: Если обход посещает не все вершины
    """
    vertices = walk.vertices
    if not vertices or vertices[0] != vertices[-1] or len(walk.edges) != len(vertices) - 1:
        logger.error('Обход пуст или не замкнут')
        raise NotClosed
    for a, b, edge_id in zip(vertices, vertices[1:], walk.edges):
        if not graph.has_edge(edge_id) or sorted((a, b)) != list(graph.endpoints(edge_id)):
            logger.error(f'Шаг обхода {a} -> {b} не идет по ребру {edge_id}')
            raise MissingEdge(a, b)
    missing = sorted(set(graph.vertices) - set(vertices))
    if missing:
        logger.error(f'Обход пропускает {len(missing)} вершин')
        raise NotSpanning(missing)
    return walk.length


def serialize_walk(walk: TspWalk) -> str:
    """Одна строка: id вершин через пробел, первая равна последней"""
    return ' '.join(map(str, walk.vertices))

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

import networkx as nx
from loguru import logger

from .exceptions import BadNeighborhood, Disconnected
from .multigraph import Multigraph


class ConnectivityClass(str, Enum):
    """Класс связности графа"""
    DISCONNECTED = 'disconnected'
    HAS_CUT_VERTEX = 'has_cut_vertex'
    TWO_CONNECTED = 'two_connected'
    TINY = 'tiny'


@dataclass(frozen=True)
class Block:
    """Блок графа: максимальный 2-связный подграф, мост, петля или одиночная вершина.

    Attributes:
        vertices: Вершины блока
        edges: id ребер блока
    """
    vertices: frozenset[int]
    edges: frozenset[int]


@dataclass(frozen=True)
class BlockDecomposition:
    """Разложение связного графа на блоки.

    Attributes:
        blocks: Блоки в порядке их закрытия обходом в глубину
        cut_vertices: Точки сочленения
        cut_edges: Мосты (блоки из одного ребра, не петли)
    """
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    cut_edges: frozenset[int]

    @cached_property
    def block_cut_tree(self) -> nx.Graph:
        """Дерево блоков и точек сочленения.

        Узлы ("B", i) соответствуют блокам, узлы ("C", v) - точкам сочленения.
        """
        tree = nx.Graph()
        for index, block in enumerate(self.blocks):
            tree.add_node(("B", index))
            for v in block.vertices & self.cut_vertices:
                tree.add_edge(("B", index), ("C", v))
        return tree


def block_decomposition(graph: Multigraph) -> BlockDecomposition:
    """Разбивает связный граф на блоки одним обходом в глубину.

    Алгоритм работы:
    1. Итеративный обход Тарьяна со стеком ребер; родительское ребро
       пропускается по id, поэтому параллельная копия считается обратным ребром
    2. Когда low[w] >= disc[v], ребра стека до ребра (v, w) образуют блок
    3. Петли выносятся в отдельные блоки

    Args:
        graph: Связный мультиграф

    Returns:
        BlockDecomposition: Блоки, точки сочленения и мосты

    Raises:
        Disconnected: Если граф несвязен или пуст
    """
    if not graph.is_connected():
        logger.error(f'Разложение на блоки невозможно: граф {graph} несвязен')
        raise Disconnected

    root = graph.vertices[0]
    disc = {root: 0}
    low = {root: 0}
    counter = 1
    root_children = 0
    cut_vertices: set[int] = set()
    blocks: list[Block] = []
    edge_stack: list[int] = []

    def walkable(v: int) -> list[int]:
        return [edge_id for edge_id in graph.incident(v) if not graph.is_loop(edge_id)]

    frames = [(root, None, iter(walkable(root)))]
    while frames:
        v, parent_edge, edges_iter = frames[-1]
        descended = False
        for edge_id in edges_iter:
            if edge_id == parent_edge:
                continue
            w = graph.other_end(edge_id, v)
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append(edge_id)
                if v == root:
                    root_children += 1
                frames.append((w, edge_id, iter(walkable(w))))
                descended = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(edge_id)
                low[v] = min(low[v], disc[w])
        if descended:
            continue
        frames.pop()
        if not frames:
            break
        parent = frames[-1][0]
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != root:
                cut_vertices.add(parent)
            block_edges = []
            while True:
                top = edge_stack.pop()
                block_edges.append(top)
                if top == parent_edge:
                    break
            block_vertices = {end for edge_id in block_edges for end in graph.endpoints(edge_id)}
            blocks.append(Block(frozenset(block_vertices), frozenset(block_edges)))

    if root_children > 1:
        cut_vertices.add(root)

    for edge_id in graph.edge_ids:
        if graph.is_loop(edge_id):
            blocks.append(Block(frozenset(graph.endpoints(edge_id)), frozenset([edge_id])))
    if not blocks:
        blocks.append(Block(frozenset([root]), frozenset()))

    cut_edges = frozenset(
        next(iter(block.edges)) for block in blocks
        if len(block.edges) == 1 and len(block.vertices) == 2
    )
    return BlockDecomposition(tuple(blocks), frozenset(cut_vertices), cut_edges)


def bridge_components(
        graph: Multigraph,
        bridges: Iterable[int],
) -> tuple[list[tuple[int, ...]], dict[int, int]]:
    """Компоненты графа без мостов.

    Returns:
        Список компонент (упорядочен по наименьшей вершине) и отображение
        вершина -> индекс компоненты
    """
    components = graph.without_edges(bridges).components()
    component_of = {v: index for index, component in enumerate(components) for v in component}
    return components, component_of


def connectivity_class(graph: Multigraph) -> ConnectivityClass:
    """Классифицирует граф по связности.

    Графы с n <= 2 всегда tiny и никогда не two_connected.
    """
    if graph.n <= 2:
        return ConnectivityClass.TINY
    if not graph.is_connected():
        return ConnectivityClass.DISCONNECTED
    if block_decomposition(graph).cut_vertices:
        return ConnectivityClass.HAS_CUT_VERTEX
    return ConnectivityClass.TWO_CONNECTED


def suppress(
        graph: Multigraph,
        subset: Iterable[int],
) -> tuple[Multigraph, int, dict[int, tuple[int, ...]]]:
    """Подавляет множество вершин S.

    Удаляет S и добавляет одно ребро между вершинами N(S); при |N(S)| = 1
    это петля, а если ребро между ними уже было - параллельное ребро.

    Args:
        graph: Исходный граф
        subset: Подавляемое множество S

    Returns:
        Новый граф, id добавленного ребра и отображение {id добавленного ребра:
        id удаленных ребер, инцидентных S}; по нему ребро разворачивается обратно

    Raises:
        BadNeighborhood: Если |N(S)| не 1 и не 2
    """
    removed = set(subset)
    outside = sorted({
        graph.other_end(edge_id, v)
        for v in removed
        for edge_id in graph.incident(v)
    } - removed)
    if len(outside) not in (1, 2):
        logger.error(f'Подавление {sorted(removed)}: внешних соседей {len(outside)}')
        raise BadNeighborhood(len(outside))
    reduced = graph.without_vertices(removed)
    a, b = outside[0], outside[-1]
    result, new_edge = reduced.with_edge(a, b)
    replaced = tuple(sorted({edge_id for v in removed for edge_id in graph.incident(v)}))
    return result, new_edge, {new_edge: replaced}

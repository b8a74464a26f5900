from dataclasses import dataclass
from enum import Enum

import networkx as nx
from loguru import logger

from ..graph.blocks import block_decomposition, bridge_components
from ..graph.multigraph import Multigraph
from .chain import SubcubicChain
from .decompose import make_chain
from .exceptions import BadPrecondition


class ZMode(str, Enum):
    SPLIT = 'split'
    MERGED = 'merged'


@dataclass(frozen=True)
class ZDecomposition:
    """Разложение (G, e) вокруг компонент Z_1, Z_2 графа G - {u, v}.

    Индекс 0 в парах соответствует меткам u_1, v_1, индекс 1 - меткам u_2, v_2.

    Attributes:
        mode: split при Z_1 != Z_2, merged при Z_1 = Z_2
        u: Меньший конец e
        v: Больший конец e
        edge: Ребро e
        z1: Вершины Z_1
        z2: Вершины Z_2 (совпадает с z1 в режиме merged)
        u_neighbors: Соседи u_1, u_2 вершины u
        v_neighbors: Соседи v_1, v_2 вершины v
        u_attach: Точки присоединения u_1', u_2' в Z
        v_attach: Точки присоединения v_1', v_2' в Z
        u_chains: Цепи U_1, U_2 от u до u_i'
        v_chains: Цепи V_1, V_2 от v до v_j'
        y_chain: Цепь Y от Z_1 до Z_2 (только split)
        z: Граф Z (в режиме split - Z_1 вместе с Y и Z_2)
    """
    mode: ZMode
    u: int
    v: int
    edge: int
    z1: tuple[int, ...]
    z2: tuple[int, ...]
    u_neighbors: tuple[int, int]
    v_neighbors: tuple[int, int]
    u_attach: tuple[int, int]
    v_attach: tuple[int, int]
    u_chains: tuple[SubcubicChain, SubcubicChain]
    v_chains: tuple[SubcubicChain, SubcubicChain]
    y_chain: SubcubicChain | None
    z: Multigraph


class _BridgeTree:
    """Дерево компонент G - {u, v} без мостов, соединенных мостами."""

    def __init__(self, graph: Multigraph) -> None:
        bridges = block_decomposition(graph).cut_edges
        self.components, self.component_of = bridge_components(graph, bridges)
        self.tree = nx.Graph()
        self.tree.add_nodes_from(range(len(self.components)))
        for edge_id in sorted(bridges):
            a, b = graph.endpoints(edge_id)
            self.tree.add_edge(self.component_of[a], self.component_of[b], edge_id=edge_id)
        self._distances: dict[int, dict[int, int]] = {}

    def distances(self, node: int) -> dict[int, int]:
        if node not in self._distances:
            self._distances[node] = nx.single_source_shortest_path_length(self.tree, node)
        return self._distances[node]

    def median(self, a: int, b: int, c: int) -> int:
        """Медиана трех узлов дерева: узел с наименьшей суммой расстояний"""
        da, db, dc = self.distances(a), self.distances(b), self.distances(c)
        return min(self.tree.nodes, key=lambda node: (da[node] + db[node] + dc[node], node))

    def path(self, a: int, b: int) -> list[int]:
        return nx.shortest_path(self.tree, a, b)

    def bridge(self, a: int, b: int) -> int:
        return self.tree.edges[a, b]['edge_id']


def _chain_to(
        graph: Multigraph,
        tree: _BridgeTree,
        hub: int,
        neighbor: int,
        target: int,
) -> tuple[SubcubicChain, int]:
    """Цепь от hub через neighbor до компоненты target и ее точка присоединения."""
    head = next(
        edge_id for edge_id in graph.incident(hub)
        if graph.other_end(edge_id, hub) == neighbor
    )
    path = tree.path(tree.component_of[neighbor], target)
    if len(path) == 1:
        return make_chain(graph, (), hub, head, neighbor, head), neighbor
    tail = tree.bridge(path[-2], path[-1])
    a, b = graph.endpoints(tail)
    attach = a if tree.component_of[a] == target else b
    interior = [w for node in path[:-1] for w in tree.components[node]]
    return make_chain(graph, interior, hub, head, attach, tail), attach


def _try_labeling(
        graph: Multigraph,
        tree: _BridgeTree,
        edge: int,
        u: int,
        v: int,
        u_neighbors: tuple[int, int],
        v_neighbors: tuple[int, int],
) -> ZDecomposition | None:
    node = tree.component_of
    u1, u2 = (node[w] for w in u_neighbors)
    v1, v2 = (node[w] for w in v_neighbors)
    z1 = tree.median(u1, v1, u2)
    if tree.median(u1, v1, v2) != z1:
        return None
    z2 = tree.median(u2, v2, u1)
    if tree.median(u2, v2, v1) != z2:
        return None

    u_parts = [_chain_to(graph, tree, u, w, z) for w, z in zip(u_neighbors, (z1, z2))]
    v_parts = [_chain_to(graph, tree, v, w, z) for w, z in zip(v_neighbors, (z1, z2))]

    y_chain = None
    if z1 == z2:
        mode = ZMode.MERGED
        z_vertices = list(tree.components[z1])
    else:
        mode = ZMode.SPLIT
        path = tree.path(z1, z2)
        head = tree.bridge(path[0], path[1])
        tail = tree.bridge(path[-2], path[-1])
        ha, hb = graph.endpoints(head)
        ta, tb = graph.endpoints(tail)
        x = ha if node[ha] == z1 else hb
        y = ta if node[ta] == z2 else tb
        interior = [w for part in path[1:-1] for w in tree.components[part]]
        y_chain = make_chain(graph, interior, x, head, y, tail)
        z_vertices = [w for part in path for w in tree.components[part]]

    decomposition = ZDecomposition(
        mode=mode,
        u=u,
        v=v,
        edge=edge,
        z1=tree.components[z1],
        z2=tree.components[z2],
        u_neighbors=u_neighbors,
        v_neighbors=v_neighbors,
        u_attach=(u_parts[0][1], u_parts[1][1]),
        v_attach=(v_parts[0][1], v_parts[1][1]),
        u_chains=(u_parts[0][0], u_parts[1][0]),
        v_chains=(v_parts[0][0], v_parts[1][0]),
        y_chain=y_chain,
        z=graph.subgraph(z_vertices),
    )
    return decomposition if _partitions(graph, decomposition) else None


def _partitions(graph: Multigraph, decomposition: ZDecomposition) -> bool:
    """Проверяет, что части разложения разбивают V(G)"""
    parts = [decomposition.u, decomposition.v, *decomposition.z.vertices]
    for chain in (*decomposition.u_chains, *decomposition.v_chains):
        parts.extend(chain.interior)
    if len(parts) != len(set(parts)) or set(parts) != set(graph.vertices):
        return False
    if decomposition.mode is ZMode.MERGED:
        attach = [*decomposition.u_attach, *decomposition.v_attach]
        return len(set(attach)) == 4
    return True


def z_decomposition(graph: Multigraph, edge: int) -> ZDecomposition:
    """Строит разложение U/V/Y/Z для пары (G, e) со Scan = (-1, 1).

    Алгоритм работы:
    1. Строит дерево мостов графа H = G - {u, v}
    2. Для меток (v_1, v_2) и затем (v_2, v_1) ищет Z_i как медиану
       компонент u_i, v_i, u_{3-i}; обе медианы каждой стороны должны совпасть
    3. Строит цепи U_i, V_j вдоль путей дерева до Z_i, а в режиме split - цепь Y
    4. Проверяет, что части разбивают вершины G

    Args:
        graph: Граф, у которого G - e прост и 2-связен
        edge: Ребро e без параллельных

    Returns:
        ZDecomposition: Разложение

    Raises:
        BadPrecondition: Если ни одна разметка не дает корректного разложения
    """
    if graph.is_loop(edge) or graph.parallel_edges(edge):
        raise BadPrecondition('Разложение Z требует ребро без петель и параллелей')
    u, v = graph.endpoints(edge)
    u_neighbors = tuple(w for w in graph.neighbors(u) if w != v)
    v_neighbors = tuple(w for w in graph.neighbors(v) if w != u)
    if len(u_neighbors) != 2 or len(v_neighbors) != 2:
        raise BadPrecondition(f'Концы ребра {edge} должны иметь степень 3')
    rest = graph.without_vertices([u, v])
    if not rest.is_connected():
        raise BadPrecondition('G - {u, v} несвязен')
    tree = _BridgeTree(rest)
    for labeling in (v_neighbors, v_neighbors[::-1]):
        decomposition = _try_labeling(graph, tree, edge, u, v, u_neighbors, labeling)
        if decomposition is not None:
            logger.debug(
                f'Разложение Z для ребра {edge}: режим {decomposition.mode.value}, '
                f'Z_1={decomposition.z1}, Z_2={decomposition.z2}'
            )
            return decomposition
    logger.error(f'Не найдено разложение Z для ребра {edge} графа {graph}')
    raise BadPrecondition('Не найдены компоненты Z_1, Z_2')

from functools import cache
from itertools import combinations

import networkx as nx
import pytest

from src.config import config
from src.generators.constructions import cycle, k23_constructible, random_two_connected_subcubic, subdivide, theta
from src.generators.named import named
from src.graph.multigraph import Multigraph


@pytest.fixture
def k23() -> Multigraph:
    """K_{2,3}: полюса 0 и 1, листья 2, 3, 4"""
    return theta(1)


@pytest.fixture
def k4() -> Multigraph:
    return named('K4')


@pytest.fixture
def diamond() -> Multigraph:
    """K4 без ребра 2-3: хорда 0-1 имеет id 0"""
    return named('diamond')


@pytest.fixture
def petersen() -> Multigraph:
    return named('Petersen')


@pytest.fixture
def c6() -> Multigraph:
    return cycle(6)


@pytest.fixture
def loop() -> Multigraph:
    return Multigraph.build(1, [(0, 0)])


@pytest.fixture
def two_cycle() -> Multigraph:
    return Multigraph.build(2, [(0, 1), (0, 1)])


@pytest.fixture
def oracle_limit(monkeypatch):
    """Позволяет тесту менять ORACLE_LIMIT"""
    def set_limit(limit: int) -> None:
        monkeypatch.setattr(config.oracle_config, 'ORACLE_LIMIT', limit)
    return set_limit


def small_corpus() -> list[tuple[str, Multigraph]]:
    """Графы с n <= 10 для сверки с перебором"""
    graphs = [
        ('K4', named('K4')),
        ('K23', theta(1)),
        ('diamond', named('diamond')),
        ('prism', named('prism')),
        ('cube', named('cube')),
        ('petersen', named('petersen')),
        ('theta2', theta(2)),
        ('k23_step1', k23_constructible(1, 0)),
        ('k4_subdivided', subdivide(named('K4'), 5, 2)),
    ]
    graphs += [(f'C{n}', cycle(n)) for n in range(3, 8)]
    graphs += [(f'random{n}_{seed}', random_two_connected_subcubic(n, seed)) for n in (5, 6, 7, 8, 9, 10) for seed in (1, 2)]
    return graphs


def acceptance_corpus() -> list[tuple[str, Multigraph]]:
    """Корпус для проверки оценки solve"""
    graphs = [
        ('K4', named('K4')),
        ('diamond', named('diamond')),
        ('prism', named('prism')),
        ('cube', named('cube')),
        ('petersen', named('petersen')),
    ]
    graphs += [(f'C{n}', cycle(n)) for n in range(3, 13)]
    graphs += [(f'theta{k}', theta(k)) for k in range(1, 6)]
    return graphs


def _is_block_with_three_degree2(graph: nx.Graph) -> bool:
    if graph.number_of_nodes() < 3:
        return False
    degrees = [d for _, d in graph.degree()]
    return max(degrees) <= 3 and degrees.count(2) >= 3 and nx.is_biconnected(graph)


@cache
def added_edge_corpus() -> list[tuple[str, Multigraph]]:
    """Все 2-связные простые подкубические графы с n <= 8 и хотя бы тремя вершинами степени 2.

    Графы до 7 вершин берутся из атласа networkx. 8-вершинный граф G с вершиной
    w степени 2 равен H + w, где H = G - w связен и есть в атласе, поэтому
    8-вершинные графы получаются присоединением w к двум вершинам степени <= 2
    связных подкубических 7-вершинных графов. Изоморфные копии отбрасываются.
    """
    atlas = nx.graph_atlas_g()
    found = [graph for graph in atlas if _is_block_with_three_degree2(graph)]
    buckets: dict[str, list[nx.Graph]] = {}
    for base in atlas:
        if base.number_of_nodes() != 7 or not nx.is_connected(base):
            continue
        if max(d for _, d in base.degree()) > 3:
            continue
        low = [v for v, d in base.degree() if d <= 2]
        for a, b in combinations(low, 2):
            graph = base.copy()
            graph.add_edges_from([(7, a), (7, b)])
            if not _is_block_with_three_degree2(graph):
                continue
            bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(graph), [])
            if not any(nx.is_isomorphic(graph, other) for other in bucket):
                bucket.append(graph)
    found += [graph for bucket in buckets.values() for graph in bucket]
    return [
        (f'n{graph.number_of_nodes()}_{index}', Multigraph.from_networkx(graph))
        for index, graph in enumerate(found)
    ]

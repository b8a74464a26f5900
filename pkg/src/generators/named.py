from typing import Callable

import networkx as nx

from ..graph.multigraph import Multigraph
from .exceptions import UnknownName


def _diamond() -> nx.Graph:
    graph = nx.complete_graph(4)
    graph.remove_edge(2, 3)
    return graph


NAMED_GRAPHS: dict[str, Callable[[], nx.Graph]] = {
    'k4': lambda: nx.complete_graph(4),
    'k23': lambda: nx.complete_bipartite_graph(2, 3),
    'diamond': _diamond,
    'petersen': nx.petersen_graph,
    'prism': lambda: nx.circular_ladder_graph(3),
    'cube': lambda: nx.hypercube_graph(3),
}


def named(name: str) -> Multigraph:
    """Именованный граф: K4, K23, diamond, Petersen, prism, cube.

    Вершины перенумеровываются в 0..n-1 в порядке сортировки меток networkx.

    Raises:
        UnknownName: Если имя неизвестно
    """
    key = name.lower().replace('_', '').replace(',', '')
    factory = NAMED_GRAPHS.get(key)
    if factory is None:
        raise UnknownName(name, sorted(NAMED_GRAPHS))
    return Multigraph.from_networkx(factory())

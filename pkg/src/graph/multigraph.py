from collections import deque
from typing import Iterable, Mapping, NamedTuple

import networkx as nx

from .exceptions import IndexOutOfRange, UnknownEdge, UnknownVertex


class DegreeProfile(NamedTuple):
    """Счетчики степеней графа.

    Attributes:
        n: Число вершин
        n2: Число вершин степени 2
        max_degree: Максимальная степень (петля считается дважды)
    """
    n: int
    n2: int
    max_degree: int


class Multigraph:
    """Неизменяемый мультиграф с идентифицируемыми ребрами.

    Вершины - целые числа, их естественный порядок служит линейным порядком
    для всех тай-брейков. Ребро хранится как пара концов (a, b) с a <= b,
    петля - пара (v, v). Параллельные ребра различаются по id.

    Каждый граф помнит next_edge_id - первый свободный id. Подграфы
    наследуют его от родителя, поэтому ребра, добавленные в рекурсии,
    никогда не совпадают по id с ребрами предков.

    Attributes:
        vertices: Отсортированный кортеж вершин
        next_edge_id: Первый свободный id ребра
    """
    __slots__ = ('_vertices', '_vertex_set', '_edges', '_incidence', '_next_edge_id')

    def __init__(
            self,
            vertices: Iterable[int],
            edges: Mapping[int, tuple[int, int]],
            next_edge_id: int | None = None,
    ) -> None:
        self._vertices: tuple[int, ...] = tuple(sorted(set(vertices)))
        self._vertex_set = frozenset(self._vertices)
        self._edges: dict[int, tuple[int, int]] = {}
        incidence: dict[int, list[int]] = {v: [] for v in self._vertices}
        for edge_id in sorted(edges):
            a, b = edges[edge_id]
            if a not in self._vertex_set:
                raise UnknownVertex(a)
            if b not in self._vertex_set:
                raise UnknownVertex(b)
            if a > b:
                a, b = b, a
            self._edges[edge_id] = (a, b)
            incidence[a].append(edge_id)
            incidence[b].append(edge_id)
        self._incidence = {v: tuple(ids) for v, ids in incidence.items()}
        top = max(self._edges, default=-1) + 1
        self._next_edge_id = top if next_edge_id is None else max(top, next_edge_id)

    @classmethod
    def build(cls, num_vertices: int, edge_list: Iterable[tuple[int, int]]) -> "Multigraph":
        """Строит граф на вершинах 0..num_vertices-1.

        Args:
            num_vertices: Число вершин
            edge_list: Пары концов; id ребер назначаются в порядке списка

        Returns:
            Multigraph: Построенный граф

        Raises:
            IndexOutOfRange: Если конец ребра вне 0..num_vertices-1
        """
        edges = {}
        for edge_id, (a, b) in enumerate(edge_list):
            for end in (a, b):
                if not 0 <= end < num_vertices:
                    raise IndexOutOfRange(end, num_vertices)
            edges[edge_id] = (a, b)
        return cls(range(num_vertices), edges)

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def next_edge_id(self) -> int:
        return self._next_edge_id

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertex_set

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def edges(self) -> dict[int, tuple[int, int]]:
        """Возвращает копию отображения id -> концы"""
        return dict(self._edges)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        try:
            return self._edges[edge_id]
        except KeyError:
            raise UnknownEdge(edge_id) from None

    def other_end(self, edge_id: int, v: int) -> int:
        a, b = self.endpoints(edge_id)
        if v == a:
            return b
        if v == b:
            return a
        raise UnknownVertex(v)

    def incident(self, v: int) -> tuple[int, ...]:
        """Инцидентные ребра вершины; петля встречается дважды"""
        try:
            return self._incidence[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def neighbors(self, v: int) -> list[int]:
        """Отсортированные соседи вершины без нее самой"""
        return sorted({self.other_end(edge_id, v) for edge_id in self.incident(v)} - {v})

    def is_loop(self, edge_id: int) -> bool:
        a, b = self.endpoints(edge_id)
        return a == b

    def edges_between(self, a: int, b: int) -> list[int]:
        """Все ребра между a и b по возрастанию id"""
        key = (a, b) if a <= b else (b, a)
        return sorted({edge_id for edge_id in self.incident(a) if self._edges[edge_id] == key})

    def parallel_edges(self, edge_id: int) -> list[int]:
        """Ребра с теми же концами, кроме самого edge_id"""
        a, b = self.endpoints(edge_id)
        return [other for other in self.edges_between(a, b) if other != edge_id]

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self._edges.values():
            if a == b or (a, b) in seen:
                return False
            seen.add((a, b))
        return True

    def degree_profile(self) -> DegreeProfile:
        degrees = [len(ids) for ids in self._incidence.values()]
        return DegreeProfile(
            n=len(degrees),
            n2=sum(1 for d in degrees if d == 2),
            max_degree=max(degrees, default=0),
        )

    def is_subcubic(self) -> bool:
        return self.degree_profile().max_degree <= 3

    def subgraph(self, vertices: Iterable[int], edges: Iterable[int] | None = None) -> "Multigraph":
        """Подграф на заданных вершинах.

        Args:
            vertices: Вершины подграфа
            edges: Ребра подграфа; None означает индуцированный подграф

        Returns:
            Multigraph: Подграф с унаследованным next_edge_id
        """
        keep = set(vertices)
        if edges is None:
            chosen = {
                edge_id: ends for edge_id, ends in self._edges.items()
                if ends[0] in keep and ends[1] in keep
            }
        else:
            chosen = {edge_id: self.endpoints(edge_id) for edge_id in edges}
        return Multigraph(keep, chosen, self._next_edge_id)

    def without_edges(self, edges: Iterable[int]) -> "Multigraph":
        drop = set(edges)
        kept = {edge_id: ends for edge_id, ends in self._edges.items() if edge_id not in drop}
        return Multigraph(self._vertices, kept, self._next_edge_id)

    def without_vertices(self, vertices: Iterable[int]) -> "Multigraph":
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def with_edge(self, a: int, b: int, edge_id: int | None = None) -> tuple["Multigraph", int]:
        """Возвращает копию графа с новым ребром ab и id этого ребра"""
        if edge_id is None:
            edge_id = self._next_edge_id
        if edge_id in self._edges:
            raise ValueError(f'Ребро {edge_id} уже есть в графе')
        edges = dict(self._edges)
        edges[edge_id] = (a, b)
        return Multigraph(self._vertices, edges, max(self._next_edge_id, edge_id + 1)), edge_id

    def components(self) -> list[tuple[int, ...]]:
        """Компоненты связности, упорядоченные по наименьшей вершине"""
        seen: set[int] = set()
        result = []
        for start in self._vertices:
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            component = [start]
            while queue:
                v = queue.popleft()
                for edge_id in self._incidence[v]:
                    w = self.other_end(edge_id, v)
                    if w not in seen:
                        seen.add(w)
                        component.append(w)
                        queue.append(w)
            result.append(tuple(sorted(component)))
        return result

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def to_networkx(self) -> nx.MultiGraph:
        """Конвертирует граф в networkx.MultiGraph с ключами ребер = id"""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self._vertices)
        for edge_id, (a, b) in self._edges.items():
            graph.add_edge(a, b, key=edge_id)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Multigraph":
        """Строит граф из networkx, перенумеровывая вершины в 0..n-1.

        Вершины нумеруются в порядке сортировки меток, id ребер назначаются
        в порядке отсортированных пар концов.
        """
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        pairs = sorted(
            tuple(sorted((index[a], index[b])))
            for a, b in graph.edges()
        )
        return cls.build(len(index), pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f'Multigraph(n={self.n}, m={self.m})'

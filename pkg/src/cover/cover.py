from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from loguru import logger

from ..graph.multigraph import Multigraph
from .exceptions import DegreeViolation, ForeignEdge


@dataclass(frozen=True)
class Cycle:
    """Цикл покрытия.

    Обход начинается с наименьшей вершины и идет к меньшему соседу
    (при равенстве - по меньшему id ребра). Ребро edges[i] соединяет
    vertices[i] и vertices[i + 1] (по модулю длины).
    """
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class EvenCover:
    """Четное покрытие: остовный подграф, где все степени равны 0 или 2.

    Attributes:
        host: Граф, который покрывается
        edges: id ребер покрытия
    """
    host: Multigraph
    edges: frozenset[int]

    @cached_property
    def _cover_incidence(self) -> dict[int, list[int]]:
        incidence: dict[int, list[int]] = {v: [] for v in self.host.vertices}
        for edge_id in sorted(self.edges):
            if not self.host.has_edge(edge_id):
                raise ForeignEdge(edge_id)
            a, b = self.host.endpoints(edge_id)
            incidence[a].append(edge_id)
            incidence[b].append(edge_id)
        return incidence

    def _pair(self, v: int) -> list[int]:
        """Два ребра покрытия при v"""
        ids = self._cover_incidence[v]
        if len(ids) != 2:
            raise DegreeViolation(v, len(ids))
        return ids

    @cached_property
    def cycles(self) -> tuple[Cycle, ...]:
        """Циклы покрытия.

        Raises:
            DegreeViolation: Если степень вершины в покрытии не 0 и не 2
            ForeignEdge: Если ребро покрытия не принадлежит графу
        """
        incidence = self._cover_incidence
        seen: set[int] = set()
        result = []
        for start in self.host.vertices:
            if start in seen or not incidence[start]:
                continue
            seen.add(start)
            first, second = self._pair(start)
            if first == second:
                result.append(Cycle((start,), (first,)))
                continue
            edge_id = min(first, second, key=lambda e: (self.host.other_end(e, start), e))
            vertices, edges = [start], [edge_id]
            current = self.host.other_end(edge_id, start)
            while current != start:
                seen.add(current)
                vertices.append(current)
                a, b = self._pair(current)
                edge_id = b if a == edge_id else a
                edges.append(edge_id)
                current = self.host.other_end(edge_id, current)
            result.append(Cycle(tuple(vertices), tuple(edges)))
        return tuple(result)

    @cached_property
    def isolated(self) -> tuple[int, ...]:
        return tuple(v for v, ids in self._cover_incidence.items() if not ids)

    @property
    def exc(self) -> int:
        """Избыток 2c + i"""
        return 2 * len(self.cycles) + len(self.isolated)

    def cycle_of(self, edge_id: int) -> Cycle | None:
        for cycle in self.cycles:
            if edge_id in cycle.edges:
                return cycle
        return None

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edges


def validate(graph: Multigraph, edges: Iterable[int]) -> EvenCover:
    """Проверяет, что множество ребер - четное покрытие графа.

    Args:
        graph: Граф
        edges: id ребер покрытия

    Returns:
        EvenCover: Покрытие с восстановленными циклами

    Raises:
        ForeignEdge: Если ребро не принадлежит графу
        DegreeViolation: Если у вершины степень 1 или больше 2
    """
    chosen = frozenset(edges)
    degree: Counter[int] = Counter()
    for edge_id in chosen:
        if not graph.has_edge(edge_id):
            raise ForeignEdge(edge_id)
        a, b = graph.endpoints(edge_id)
        degree[a] += 1
        degree[b] += 1
    for v, d in sorted(degree.items()):
        if d != 2:
            logger.error(f'Покрытие некорректно: степень вершины {v} равна {d}')
            raise DegreeViolation(v, d)
    return EvenCover(graph, chosen)


def serialize_cover(cover: EvenCover) -> list[str]:
    """Текстовая форма покрытия: строки "cycle: ..." и одна строка "isolated: ..."."""
    lines = [f"cycle: {' '.join(map(str, cycle.vertices))}" for cycle in cover.cycles]
    lines.append(f"isolated: {' '.join(map(str, cover.isolated))}".rstrip())
    return lines

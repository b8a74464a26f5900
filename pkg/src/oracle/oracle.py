from fractions import Fraction
from itertools import combinations
from typing import Iterator

from loguru import logger

from ..chains.decompose import rooted_theta_split
from ..chains.exceptions import BadPrecondition
from ..config import config
from ..cover.cover import EvenCover
from ..graph.exceptions import Disconnected
from ..graph.multigraph import Multigraph
from .exceptions import NotATheta, TooLarge
from .schemes import ClassifyReport, ExactReport


def _ensure_enumerable(graph: Multigraph, force: bool) -> None:
    limit = config.oracle_config.ORACLE_LIMIT
    if graph.n > limit and not force:
        logger.error(f'Перебор для графа {graph} превышает лимит {limit}')
        raise TooLarge(graph.n, limit)
    if not graph.is_connected():
        logger.error(f'Граф {graph} несвязен')
        raise Disconnected


def even_covers(graph: Multigraph) -> Iterator[EvenCover]:
    """Перечисляет все четные покрытия графа.

    Алгоритм работы:
    1. Обходит вершины по возрастанию; на шаге вершины v решает судьбу
       всех еще не рассмотренных ребер при v
    2. Берет только такие подмножества, после которых степень v равна 0 или 2,
       а степень соседей не превышает 2
    3. После последней вершины все степени окончательны и покрытие выдается
    """
    order = graph.vertices
    degree = {v: 0 for v in order}
    decided: set[int] = set()
    chosen: list[int] = []

    def weight(edge_id: int) -> int:
        return 2 if graph.is_loop(edge_id) else 1

    def extend(index: int) -> Iterator[EvenCover]:
        if index == len(order):
            yield EvenCover(graph, frozenset(chosen))
            return
        v = order[index]
        undecided = list(dict.fromkeys(e for e in graph.incident(v) if e not in decided))
        decided.update(undecided)
        for size in range(len(undecided) + 1):
            for subset in combinations(undecided, size):
                if degree[v] + sum(weight(e) for e in subset) not in (0, 2):
                    continue
                others = [graph.other_end(e, v) for e in subset if not graph.is_loop(e)]
                if any(degree[w] + others.count(w) > 2 for w in others):
                    continue
                for e in subset:
                    for end in graph.endpoints(e):
                        degree[end] += 1
                chosen.extend(subset)
                yield from extend(index + 1)
                del chosen[len(chosen) - size:]
                for e in subset:
                    for end in graph.endpoints(e):
                        degree[end] -= 1
        decided.difference_update(undecided)

    yield from extend(0)


def exact(graph: Multigraph, edge: int | None = None, force: bool = False) -> ExactReport:
    """Точные exc(G), exc(G, e), δ и δ̂ полным перебором четных покрытий.

    Args:
        graph: Связный граф
        edge: Ребро e; если не задано, считается только exc(G)
        force: Разрешить перебор сверх ORACLE_LIMIT

    Returns:
        ExactReport: Точные значения и оптимальные покрытия

    Raises:
        TooLarge: Если n > ORACLE_LIMIT и force не задан
        Disconnected: Если граф несвязен
    """
    _ensure_enumerable(graph, force)
    logger.info(f'Перебор покрытий графа {graph}...')
    best: EvenCover | None = None
    best_with: EvenCover | None = None
    best_without: EvenCover | None = None
    for cover in even_covers(graph):
        if best is None or cover.exc < best.exc:
            best = cover
        if edge is None:
            continue
        if edge in cover:
            if best_with is None or cover.exc < best_with.exc:
                best_with = cover
        elif best_without is None or cover.exc < best_without.exc:
            best_without = cover

    profile = graph.degree_profile()
    center = Fraction(profile.n + profile.n2, 4)
    exc_with = None if best_with is None else best_with.exc - 2
    exc_without = None if best_without is None else best_without.exc
    report = ExactReport(
        n=profile.n,
        n2=profile.n2,
        exc=best.exc,
        exc_with=exc_with,
        exc_without=exc_without,
        delta=None if exc_with is None else exc_with - center,
        delta_hat=None if exc_without is None else exc_without - center,
        witness=sorted(best.edges),
        witness_with=None if best_with is None else sorted(best_with.edges),
        witness_without=None if best_without is None else sorted(best_without.edges),
    )
    logger.info(f'Перебор завершен: exc={report.exc}, delta={report.delta}, delta_hat={report.delta_hat}')
    return report


def classify(graph: Multigraph, edge: int, strict: bool = False, force: bool = False) -> ClassifyReport:
    """Структурные флаги пары (G, e): корневая θ-цепь, tight, balanced, minimal.

    Цепи оцениваются точным перебором на своих замыканиях. Пара tight,
    если δ + δ̂ = 0; цепи balanced, если δ их замыканий равны; цепь minimal,
    если она tight и δ = -1/2, и near-minimal, если tight и δ ∈ {-1/2, -1}.

    Args:
        graph: Граф
        edge: Корневое ребро e
        strict: Бросать NotATheta, если пара не является корневой θ-цепью
        force: Разрешить перебор сверх ORACLE_LIMIT

    Raises:
        TooLarge: Если граф слишком велик
        NotATheta: Если strict и пара не является корневой θ-цепью
    """
    report = exact(graph, edge, force)
    try:
        split = rooted_theta_split(graph, edge)
    except BadPrecondition:
        split = None
    if split is None:
        if strict:
            logger.error(f'Пара ({graph}, {edge}) не является корневой θ-цепью')
            raise NotATheta
        return ClassifyReport(is_rooted_theta=False, tight=report.tight)

    chain_reports = []
    for chain in split:
        closure = chain.closure()
        chain_reports.append(exact(closure.graph, closure.root, force))
    deltas = [chain_report.delta for chain_report in chain_reports]
    tight = [chain_report.tight for chain_report in chain_reports]
    return ClassifyReport(
        is_rooted_theta=True,
        tight=report.tight,
        chains_tight=all(tight),
        balanced=deltas[0] == deltas[1],
        minimal=all(t and d == Fraction(-1, 2) for t, d in zip(tight, deltas)),
        near_minimal=all(t and d in (Fraction(-1, 2), Fraction(-1)) for t, d in zip(tight, deltas)),
        chain_deltas=deltas,
    )


def is_extremal(graph: Multigraph, force: bool = False) -> bool:
    """exc(G) = (n + n2)/4 + 1"""
    report = exact(graph, force=force)
    return 4 * report.exc == report.n + report.n2 + 4


def edge_profile(graph: Multigraph, force: bool = False) -> dict[int, tuple[Fraction | None, Fraction]]:
    """(δ(G, e), δ̂(G, e)) для каждого ребра за один перебор.

    Ребро, не лежащее ни на одном цикле, получает δ = None.
    """
    _ensure_enumerable(graph, force)
    best_with: dict[int, int] = {}
    best_without: dict[int, int] = {}
    for cover in even_covers(graph):
        exc = cover.exc
        for edge_id in graph.edge_ids:
            target = best_with if edge_id in cover else best_without
            if edge_id not in target or exc < target[edge_id]:
                target[edge_id] = exc
    profile = graph.degree_profile()
    center = Fraction(profile.n + profile.n2, 4)
    return {
        edge_id: (
            best_with[edge_id] - 2 - center if edge_id in best_with else None,
            best_without[edge_id] - center,
        )
        for edge_id in graph.edge_ids
    }

from loguru import logger

from ..graph.exceptions import NotSimple
from ..graph.multigraph import Multigraph
from .exceptions import BadDegree, BadSize
from .prng import SplitMix64


def _pairs(graph: Multigraph, skip: set[int] = frozenset()) -> list[tuple[int, int]]:
    return [graph.endpoints(edge_id) for edge_id in graph.edge_ids if edge_id not in skip]


def _build(num_vertices: int, pairs: list[tuple[int, int]]) -> Multigraph:
    """Граф на 0..num_vertices-1 с id ребер в порядке сортировки концов"""
    return Multigraph.build(num_vertices, sorted(tuple(sorted(pair)) for pair in pairs))


def theta(k: int) -> Multigraph:
    """Θ_k: три пути с k внутренними вершинами между полюсами 0 и 1.

    Внутренние вершины пути p - это 2 + p*k .. 1 + (p+1)*k.

    Raises:
        BadSize: Если k < 1
    """
    if k < 1:
        raise BadSize('k', k, 1)
    pairs = []
    for path in range(3):
        inner = [2 + path * k + i for i in range(k)]
        chain = [0, *inner, 1]
        pairs.extend(zip(chain, chain[1:]))
    return _build(3 * k + 2, pairs)


def cycle(n: int) -> Multigraph:
    """Цикл C_n на вершинах 0..n-1.

    Raises:
        BadSize: Если n < 3
    """
    if n < 3:
        raise BadSize('n', n, 3)
    return _build(n, [(i, (i + 1) % n) for i in range(n)])


def subdivide(graph: Multigraph, edge: int, times: int) -> Multigraph:
    """Заменяет ребро путем с times новыми вершинами n, n+1, ...

    Raises:
        BadSize: Если times < 0
    """
    if times < 0:
        raise BadSize('times', times, 0)
    a, b = graph.endpoints(edge)
    inner = list(range(graph.n, graph.n + times))
    path = [a, *inner, b]
    pairs = _pairs(graph, {edge}) + list(zip(path, path[1:]))
    return _build(graph.n + times, pairs)


def diamond_op(graph: Multigraph, v: int) -> Multigraph:
    """◇-операция: заменяет вершину степени 2 на 4-цикл.

    Вершина v становится вершиной a 4-цикла a, b, c, d с b = n, c = n+1,
    d = n+2; меньший сосед v присоединяется к a, больший - к c.
    n растет на 3, n + n2 - на 4.

    Raises:
        BadDegree: Если степень v не равна 2
        NotSimple: Если граф не простой
    """
    if not graph.is_simple():
        raise NotSimple
    if graph.degree(v) != 2:
        logger.error(f'◇-операция в вершине {v} степени {graph.degree(v)}')
        raise BadDegree(v, graph.degree(v))
    x, y = graph.neighbors(v)
    n = graph.n
    b, c, d = n, n + 1, n + 2
    pairs = _pairs(graph, set(graph.incident(v)))
    pairs += [(x, v), (y, c), (v, b), (b, c), (c, d), (d, v)]
    return _build(n + 3, pairs)


def k23_constructible(steps: int, seed: int) -> Multigraph:
    """Граф из K_{2,3} после steps ◇-операций в случайных вершинах степени 2.

    Raises:
        BadSize: Если steps < 0
        BadSeed: Если зерно вне 0..2^64-1
    """
    if steps < 0:
        raise BadSize('steps', steps, 0)
    rng = SplitMix64(seed)
    graph = theta(1)
    for _ in range(steps):
        candidates = [v for v in graph.vertices if graph.degree(v) == 2]
        graph = diamond_op(graph, candidates[rng.below(len(candidates))])
    logger.debug(f'K23-конструируемый граф: {steps} шагов, {graph}')
    return graph


def random_two_connected_subcubic(n: int, seed: int) -> Multigraph:
    """Случайный простой 2-связный подкубический граф на n вершинах.

    Алгоритм работы:
    1. Строит гамильтонов цикл по случайной перестановке вершин
    2. Пока есть вершины степени 2, берет случайную такую вершину a и
       случайную несмежную с ней вершину степени 2
    3. Хорда принимается с вероятностью 3/4; при отказе или отсутствии
       пары вершина a остается степени 2 навсегда

    Гамильтонов цикл гарантирует 2-связность, хорды только между
    вершинами степени 2 сохраняют подкубичность.

    Raises:
        BadSize: Если n < 3
        BadSeed: Если зерно вне 0..2^64-1
    """
    if n < 3:
        raise BadSize('n', n, 3)
    rng = SplitMix64(seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)}
    adjacent = {v: set() for v in range(n)}
    for a, b in pairs:
        adjacent[a].add(b)
        adjacent[b].add(a)

    open_vertices = list(range(n))
    while len(open_vertices) >= 2:
        a = open_vertices.pop(rng.below(len(open_vertices)))
        candidates = [b for b in open_vertices if b not in adjacent[a]]
        if not candidates or rng.below(4) == 0:
            continue
        b = candidates[rng.below(len(candidates))]
        open_vertices.remove(b)
        pairs.add((min(a, b), max(a, b)))
        adjacent[a].add(b)
        adjacent[b].add(a)
    graph = _build(n, list(pairs))
    logger.debug(f'Случайный подкубический граф: n={n}, seed={seed}, {graph}')
    return graph

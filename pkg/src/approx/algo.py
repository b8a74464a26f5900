import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

from loguru import logger

from ..chains.chain import ClosureKind, SubcubicChain
from ..chains.decompose import as_chain_closure, block_closures, rooted_theta_split, suppress_endpoint
from ..chains.exceptions import BadPrecondition
from ..chains.zdecomp import ZDecomposition, ZMode, z_decomposition
from ..config import config
from ..cover.cover import EvenCover, validate
from ..cover.splice import disjoint_union, open_at, splice_cycle
from ..graph.blocks import ConnectivityClass, connectivity_class, suppress
from ..graph.multigraph import Multigraph
from .exceptions import BoundViolation, ContainmentError, PartitionError, RelabelingError, SpliceArithmeticError
from .scan import chain_scan, classify_pair, ensure_solvable, scan
from .schemes import DeltaPair, ScanCase


class SubroutineResult(NamedTuple):
    """Результат subroutine.

    Attributes:
        index: Выбранный индекс i (1 или 2)
        cover: Покрытие Z + u v_i, содержащее корень
        root: id добавленного ребра u v_i
    """
    index: int
    cover: EvenCover
    root: int


Traversed = list[tuple[EvenCover, int]]


@contextmanager
def recursion_limit(limit: int) -> Iterator[None]:
    """Временно поднимает лимит рекурсии интерпретатора"""
    previous = sys.getrecursionlimit()
    sys.setrecursionlimit(max(previous, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


def _check_bound(graph: Multigraph, cover: EvenCover, offset4: int) -> None:
    """Проверяет 4 exc <= n + n2 + offset4"""
    if not config.approx_config.CHECK_BOUNDS:
        return
    profile = graph.degree_profile()
    limit4 = profile.n + profile.n2 + offset4
    if 4 * cover.exc > limit4:
        logger.error(f'Покрытие {graph} с избытком {cover.exc} нарушает оценку {Fraction(limit4, 4)}')
        raise BoundViolation(cover.exc, str(Fraction(limit4, 4)))


def _finish(graph: Multigraph, union: EvenCover, expected: int) -> EvenCover:
    """Переносит объединение частей на граф и сверяет избыток"""
    if set(union.host.vertices) != set(graph.vertices):
        logger.error(f'Части сборки покрывают {union.host.n} вершин из {graph.n}')
        raise PartitionError
    cover = validate(graph, union.edges)
    if cover.exc != expected:
        logger.error(f'Избыток сборки {cover.exc} не равен сумме частей {expected}')
        raise SpliceArithmeticError(cover.exc, expected)
    return cover


def _assemble(
        graph: Multigraph,
        traversed: Traversed,
        avoided: Sequence[EvenCover],
        links: Iterable[int],
        extra: Iterable[int],
) -> EvenCover:
    """Собирает покрытие: цикл через разрезанные части и остальные части как есть.

    Избыток результата равен 2 + Σ(exc(F_t) - 2) + Σ exc(F_a).

    Args:
        graph: Граф, покрытие которого собирается
        traversed: Покрытия, через корни которых проходит новый цикл, с их корнями
        avoided: Покрытия, которые входят в результат без изменений
        links: Ребра графа, соединяющие пути в цикл
        extra: Вершины нового цикла вне путей
    """
    segments = []
    rests = []
    for cover, root in traversed:
        path, rest = open_at(cover, root)
        segments.append(path)
        rests.append(rest)
    cycle = splice_cycle(graph, segments, links, extra)
    union = disjoint_union([cycle, *rests, *avoided])
    expected = 2 + sum(cover.exc - 2 for cover, _ in traversed) + sum(cover.exc for cover in avoided)
    return _finish(graph, union, expected)


def _through(chain: SubcubicChain) -> tuple[Traversed, list[int]]:
    """Покрытие замыкания цепи через корень и ребра цепи для нового цикла"""
    closure = chain.closure()
    if closure.kind is ClosureKind.TRIVIAL:
        return [], [chain.head]
    return [(algo(closure.graph, closure.root, True), closure.root)], [chain.head, chain.tail]


def _avoid(chain: SubcubicChain) -> list[EvenCover]:
    """Покрытие замыкания цепи, обходящее корень"""
    closure = chain.closure()
    if closure.kind is ClosureKind.TRIVIAL:
        return []
    return [algo(closure.graph, closure.root, False)]


def _chain_cover(graph: Multigraph, edge: int, flag: bool) -> EvenCover:
    chain = as_chain_closure(graph, edge)
    closures = block_closures(chain)
    if flag:
        traversed = [(algo(closure.graph, closure.root, True), closure.root) for closure in closures]
        return _assemble(graph, traversed, [], [edge, *chain.links], ())
    parts = [algo(closure.graph, closure.root, False) for closure in closures]
    return _finish(graph, disjoint_union(parts), sum(part.exc for part in parts))


def _outer_edge(graph: Multigraph, vertex: int, skip: set[int]) -> int:
    return next(edge_id for edge_id in graph.incident(vertex) if edge_id not in skip)


def _parallel_cover(graph: Multigraph, edge: int, flag: bool) -> EvenCover:
    """Покрытие пары с параллельным ребром e*.

    {u, v} подавляется в e', покрытие (G', e') через e' перенаправляется
    по u_0 u, затем e (flag=True) или e* (flag=False), затем v v_0.
    """
    u, v = graph.endpoints(edge)
    twin = graph.parallel_edges(edge)[0]
    reduced, reduced_edge, _ = suppress(graph, [u, v])
    inner = algo(reduced, reduced_edge, True)
    pair = {edge, twin}
    links = [_outer_edge(graph, u, pair), edge if flag else twin, _outer_edge(graph, v, pair)]
    return _assemble(graph, [(inner, reduced_edge)], [], links, (u, v))


def bec(graph: Multigraph, edge: int) -> EvenCover:
    """Покрытие, обходящее e: (F' - f_u) + {u} + {u_1 u, u u_2} для F' = algo(G_u, f_u, true).

    Args:
        graph: Граф, у которого G - e прост и 2-связен
        edge: Ребро e = uv, u <= v

    Returns:
        EvenCover: Покрытие без e с exc <= (n + n2)/4 + Δ̂(G, e)

    Raises:
        BadPrecondition: Если G - e не прост или не 2-связен
    """
    u, _ = graph.endpoints(edge)
    reduced, f_u = suppress_endpoint(graph, edge, u)
    inner = algo(reduced, f_u, True)
    u1, u2 = reduced.endpoints(f_u)
    links = [graph.edges_between(u, u1)[0], graph.edges_between(u, u2)[0]]
    return _assemble(graph, [(inner, f_u)], [], links, (u,))


def _theta_cover(graph: Multigraph, edge: int, through: SubcubicChain, avoided: SubcubicChain) -> EvenCover:
    traversed, links = _through(through)
    return _assemble(graph, traversed, _avoid(avoided), [edge, *links], graph.endpoints(edge))


def _ec_theta(graph: Multigraph, edge: int) -> EvenCover:
    """EC при Δ = -1/2: цикл через одну цепь корневой θ-цепи"""
    first, second = rooted_theta_split(graph, edge)
    scans = {id(first): chain_scan(first), id(second): chain_scan(second)}
    for through, avoided in ((first, second), (second, first)):
        if scans[id(through)].delta2 + scans[id(avoided)].delta_hat2 <= 0:
            return _theta_cover(graph, edge, through, avoided)
    logger.error(f'θ-цепь ({graph}, {edge}): нет порядка цепей с Δ + Δ̂ <= 0')
    raise RelabelingError


def subroutine(z: Multigraph, u: int, v1: int, v2: int) -> SubroutineResult:
    """Покрытие Z + u v_i через u v_i с exc <= (n + n2)/4 + 1 для одного из i.

    Алгоритм работы:
    1. Для i = 1, 2 вычисляет Scan(Z + u v_i, u v_i)
    2. Если где-то Δ_i <= -1, возвращает algo(Z + u v_i, u v_i, true)
    3. Иначе обе пары - корневые θ-цепи; ищет i и порядок цепей
       с Δ(C_t) + Δ̂(C_a) <= -1/2 и строит цикл через C_t

    Args:
        z: Простой 2-связный подкубический граф
        u: Вершина степени 2
        v1: Вершина степени 2
        v2: Вершина степени 2

    Returns:
        SubroutineResult: Индекс, покрытие и корень

    Raises:
        BadPrecondition: Если вход некорректен
        RelabelingError: Если ни один вариант не удовлетворяет неравенству
    """
    if config.approx_config.CHECK_CONTRACTS:
        if len({u, v1, v2}) != 3 or any(z.degree(w) != 2 for w in (u, v1, v2)):
            raise BadPrecondition('subroutine требует три различные вершины степени 2')
        if not z.is_simple() or connectivity_class(z) is not ConnectivityClass.TWO_CONNECTED:
            raise BadPrecondition('subroutine требует простой 2-связный граф')
    options = []
    for index, target in ((1, v1), (2, v2)):
        extended, root = z.with_edge(u, target)
        options.append((index, extended, root, scan(extended, root)))

    for index, extended, root, pair in options:
        if pair.delta2 <= -2:
            cover = algo(extended, root, True)
            return SubroutineResult(index, cover, root)

    for index, extended, root, _ in options:
        split = rooted_theta_split(extended, root)
        if split is None:
            continue
        first, second = split
        first_scan, second_scan = chain_scan(first), chain_scan(second)
        for through, through_scan, avoided, avoided_scan in (
                (first, first_scan, second, second_scan),
                (second, second_scan, first, first_scan),
        ):
            if through_scan.delta2 + avoided_scan.delta_hat2 <= -1:
                cover = _theta_cover(extended, root, through, avoided)
                _check_bound(extended, cover, 4)
                return SubroutineResult(index, cover, root)
    logger.error(f'subroutine({z}, {u}, {v1}, {v2}): перемаркировка невозможна')
    raise RelabelingError


def _thread(
        graph: Multigraph,
        decomposition: ZDecomposition,
        inner: EvenCover,
        root: int,
        through: Sequence[SubcubicChain],
        avoided: Sequence[SubcubicChain],
) -> EvenCover:
    """Цикл e -> цепь стороны u -> Z -> цепь стороны v -> e"""
    traversed: Traversed = [(inner, root)]
    links = [decomposition.edge]
    for chain in through:
        parts, chain_links = _through(chain)
        traversed.extend(parts)
        links.extend(chain_links)
    avoided_covers = [cover for chain in avoided for cover in _avoid(chain)]
    return _assemble(graph, traversed, avoided_covers, links, (decomposition.u, decomposition.v))


def _ec_z(graph: Multigraph, edge: int) -> EvenCover:
    """EC при Δ = -1 через разложение U/V/Y/Z"""
    z = z_decomposition(graph, edge)
    u_scans = [chain_scan(chain) for chain in z.u_chains]
    v_scans = [chain_scan(chain) for chain in z.v_chains]

    if z.mode is ZMode.SPLIT:
        for t in (0, 1):
            a = 1 - t
            # сторона u идет через U_{t}, сторона v через V_{a}: они лежат в разных Z_i
            total = u_scans[t].delta2 + v_scans[a].delta2 + u_scans[a].delta_hat2 + v_scans[t].delta_hat2
            if total <= 0:
                extended, root = z.z.with_edge(z.u_attach[t], z.v_attach[a])
                inner = algo(extended, root, True)
                return _thread(
                    graph, z, inner, root,
                    (z.u_chains[t], z.v_chains[a]),
                    (z.u_chains[a], z.v_chains[t]),
                )
        logger.error(f'Разложение Z ({graph}, {edge}): перемаркировка в режиме split невозможна')
        raise RelabelingError

    sides = ((z.u_chains, u_scans, z.u_attach), (z.v_chains, v_scans, z.v_attach))
    for p_side in (0, 1):
        p_chains, p_scans, p_attach = sides[p_side]
        q_chains, q_scans, q_attach = sides[1 - p_side]
        for p1 in (0, 1):
            p2 = 1 - p1
            feasible = all(
                p_scans[p1].delta2 + q_scans[i].delta2 + p_scans[p2].delta_hat2 + q_scans[1 - i].delta_hat2 <= 0
                for i in (0, 1)
            )
            if not feasible:
                continue
            result = subroutine(z.z, p_attach[p1], q_attach[0], q_attach[1])
            qi = result.index - 1
            return _thread(
                graph, z, result.cover, result.root,
                (p_chains[p1], q_chains[qi]),
                (p_chains[p2], q_chains[1 - qi]),
            )
    logger.error(f'Разложение Z ({graph}, {edge}): перемаркировка в режиме merged невозможна')
    raise RelabelingError


def _ec_three_halves(graph: Multigraph, edge: int) -> tuple[EvenCover, int]:
    """EC при Δ = -3/2; возвращает покрытие и удвоенную сертифицированную Δ.

    Алгоритм работы:
    1. Строит (G_u, f_u) и цепи C_1 ∋ v, C_2 корневой θ-цепи (G_u, f_u)
    2. Находит блок B ∋ v цепи C_1 и режет C_1 вокруг него на D_1, D_2
    3. Идет через D_t, если Δ(D_t) + Δ̂(D_a) <= 0, и через C_2 и B + bv
    4. Если структура не найдена, откатывается к построению для Δ = -1
    """
    u, v = graph.endpoints(edge)
    reduced, f_u = suppress_endpoint(graph, edge, u)
    try:
        split = rooted_theta_split(reduced, f_u)
    except BadPrecondition:
        split = None
    if split is not None and v not in split[0].interior:
        split = (split[1], split[0])
    if split is None or v not in split[0].interior or split[1].is_trivial:
        logger.warning(f'({graph}, {edge}): (G_u, f_u) не дает цепей для Δ = -3/2, построение для Δ = -1')
        return _ec_z(graph, edge), -2

    c1, c2 = split
    index = next(i for i, block in enumerate(c1.blocks) if v in block.vertices)
    block = c1.blocks[index]
    left, right = c1.split_at_block(index)
    left_scan, right_scan = chain_scan(left), chain_scan(right)
    u1, u2 = c1.x, c1.y
    if left_scan.delta2 + right_scan.delta_hat2 <= 0:
        through, avoided, attach, other = left, right, block.entry, u2
    elif right_scan.delta2 + left_scan.delta_hat2 <= 0:
        through, avoided, attach, other = right, left, block.exit, u1
    else:
        logger.error(f'({graph}, {edge}): нет порядка D_1, D_2 с Δ + Δ̂ <= 0')
        raise RelabelingError

    block_graph, block_root = reduced.subgraph(block.vertices, block.edges).with_edge(attach, v)
    traversed: Traversed = [(algo(block_graph, block_root, True), block_root)]
    links = [edge, graph.edges_between(u, other)[0]]
    for chain in (through, c2):
        parts, chain_links = _through(chain)
        traversed.extend(parts)
        links.extend(chain_links)
    cover = _assemble(graph, traversed, _avoid(avoided), links, (u, u1, u2))
    return cover, -3


def _ec(graph: Multigraph, edge: int, case: ScanCase) -> tuple[EvenCover, int]:
    if case is ScanCase.THETA:
        return _ec_theta(graph, edge), -1
    if case is ScanCase.THREE_HALVES:
        return _ec_three_halves(graph, edge)
    return _ec_z(graph, edge), -2


def ec(graph: Multigraph, edge: int, delta: Fraction) -> EvenCover:
    """Покрытие через e с exc <= (n + n2)/4 + Δ + 2.

    Args:
        graph: Граф, у которого G - e прост и 2-связен, e без параллелей
        edge: Ребро e
        delta: Значение Δ(G, e) из Scan: -1/2, -1 или -3/2

    Raises:
        BadPrecondition: Если Scan(G, e) не совпадает с delta или пара не подходит
    """
    case, pair = classify_pair(graph, edge)
    if case not in (ScanCase.THETA, ScanCase.GENERIC, ScanCase.THREE_HALVES) or pair.delta != delta:
        raise BadPrecondition(f'Scan дает {pair} [{case.value}], а не Δ = {delta}')
    cover, _ = _ec(graph, edge, case)
    return cover


def algo(graph: Multigraph, edge: int, flag: bool) -> EvenCover:
    """Четное покрытие графа, содержащее e (flag=True) или обходящее его (flag=False).

    Алгоритм работы:
    1. Петля: сама петля или изолированная вершина
    2. G - e не 2-связен: покрытия замыканий блоков цепи сшиваются через e
       и мосты цепи (flag=True) или объединяются (flag=False)
    3. У e есть параллельная копия: рекурсия на подавлении {u, v}
    4. Иначе EC по значению Δ (flag=True) или bec (flag=False)

    Args:
        graph: Петля или 2-связный подкубический граф
        edge: Ребро e, для которого G - e прост
        flag: Проходить ли через e

    Returns:
        EvenCover: Покрытие с exc <= (n + n2)/4 + Δ + 2 или <= (n + n2)/4 + Δ̂

    Raises:
        BadInput: Если пара некорректна
        BoundViolation: Если оценка нарушена (ошибка алгоритма)
    """
    case, pair = classify_pair(graph, edge)
    certified = pair
    if case is ScanCase.LOOP:
        cover = EvenCover(graph, frozenset([edge]) if flag else frozenset())
    elif case is ScanCase.CHAIN:
        cover = _chain_cover(graph, edge, flag)
    elif case is ScanCase.PARALLEL:
        cover = _parallel_cover(graph, edge, flag)
    elif flag:
        cover, delta2 = _ec(graph, edge, case)
        certified = DeltaPair(delta2=delta2, delta_hat2=pair.delta_hat2)
    else:
        cover = bec(graph, edge)
    logger.debug(f'algo({graph}, {edge}, {flag}) [{case.value}]: exc={cover.exc}')

    if config.approx_config.CHECK_CONTRACTS and (edge in cover.edges) != flag:
        raise ContainmentError(edge, flag)
    if flag:
        _check_bound(graph, cover, 2 * certified.delta2 + 8)
    else:
        _check_bound(graph, cover, 2 * certified.delta_hat2)
    return cover


def solve(graph: Multigraph) -> EvenCover:
    """Четное покрытие с exc <= (n + n2)/4 + 1 для простого 2-связного подкубического графа.

    Запускает algo(G, e, true) и algo(G, e, false) для ребра с наименьшим id
    и возвращает покрытие с меньшим избытком (при равенстве - первое).

    Raises:
        NotSimple: Если граф не простой
        NotSubcubic: Если граф не подкубический
        NotTwoConnected: Если граф не 2-связен
    """
    logger.info(f'Поиск покрытия для графа {graph}...')
    ensure_solvable(graph)
    edge = min(graph.edge_ids)
    with recursion_limit(config.approx_config.RECURSION_LIMIT):
        through = algo(graph, edge, True)
        avoiding = algo(graph, edge, False)
    best = through if through.exc <= avoiding.exc else avoiding
    logger.info(
        f'Покрытие найдено: exc={best.exc} '
        f'(через ребро {edge}: {through.exc}, в обход: {avoiding.exc})'
    )
    return best

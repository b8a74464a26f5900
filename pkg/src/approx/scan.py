from loguru import logger

from ..chains.chain import ChainClosure, ClosureKind, SubcubicChain
from ..chains.decompose import as_chain_closure, block_closures, suppress_endpoint
from ..config import config
from ..graph.blocks import ConnectivityClass, connectivity_class, suppress
from ..graph.multigraph import Multigraph
from ..graph.exceptions import NotSimple
from .exceptions import BadInput, NotSubcubic, NotTwoConnected
from .schemes import HALF, ONE, THREE_HALVES, ZERO, DeltaPair, ScanCase


def ensure_solvable(graph: Multigraph) -> None:
    """Проверяет вход solve: простой, подкубический, 2-связный, n >= 3.

    Raises:
        NotSimple: Если есть петли или параллельные ребра
        NotSubcubic: Если есть вершина степени больше 3
        NotTwoConnected: Если граф не 2-связен
    """
    if not graph.is_simple():
        logger.error(f'Граф {graph} не простой')
        raise NotSimple
    profile = graph.degree_profile()
    if profile.max_degree > 3:
        logger.error(f'Граф {graph} имеет вершину степени {profile.max_degree}')
        raise NotSubcubic
    if connectivity_class(graph) is not ConnectivityClass.TWO_CONNECTED:
        logger.error(f'Граф {graph} не 2-связен')
        raise NotTwoConnected


def ensure_valid_pair(graph: Multigraph, edge: int) -> None:
    """Проверяет корректность пары (G, e) для рекурсии.

    G - петля, 2-цикл или 2-связный граф; G - e простой; G подкубический.

    Raises:
        BadInput: Если пара некорректна
    """
    if not graph.has_edge(edge):
        raise BadInput(f'Ребро {edge} не принадлежит графу')
    if graph.degree_profile().max_degree > 3:
        raise NotSubcubic
    if graph.n == 1:
        if graph.m != 1 or not graph.is_loop(edge):
            raise BadInput('Одновершинный граф должен быть петлей')
        return
    if not graph.without_edges([edge]).is_simple():
        raise NotSimple('G - e не простой')
    if graph.n == 2:
        if graph.m != 2 or graph.is_loop(edge):
            raise NotTwoConnected('Двухвершинный граф должен быть 2-циклом')
        return
    if connectivity_class(graph) is not ConnectivityClass.TWO_CONNECTED:
        raise NotTwoConnected


def classify_pair(graph: Multigraph, edge: int) -> tuple[ScanCase, DeltaPair]:
    """Scan с указанием сработавшей ветки.

    Алгоритм работы:
    1. Петля дает (-1/2, 1/2)
    2. Если G - e не 2-связен, оценка - сумма оценок замыканий блоков цепи
    3. Если у e есть параллельная копия, {u, v} подавляется в e' и
       возвращается (Δ' - 1/2, Δ' + 3/2)
    4. Если G - {u, v} несвязен - (-1/2, 1/2)
    5. Если G_u - {u_1, u_2} несвязен - (-3/2, 3/2)
    6. Иначе (-1, 1)

    Args:
        graph: Петля или 2-связный подкубический граф
        edge: Ребро e, для которого G - e прост

    Returns:
        Ветка и оценка (Δ, Δ̂)

    Raises:
        BadInput: Если пара некорректна (при включенной проверке контрактов)
    """
    if config.approx_config.CHECK_CONTRACTS:
        ensure_valid_pair(graph, edge)
    if graph.n == 1:
        return ScanCase.LOOP, HALF
    rest = graph.without_edges([edge])
    if connectivity_class(rest) is not ConnectivityClass.TWO_CONNECTED:
        chain = as_chain_closure(graph, edge)
        total = ZERO
        for closure in block_closures(chain):
            total = total + scan(closure.graph, closure.root)
        return ScanCase.CHAIN, total
    u, v = graph.endpoints(edge)
    if graph.parallel_edges(edge):
        reduced, reduced_edge, _ = suppress(graph, [u, v])
        inner = scan(reduced, reduced_edge)
        return ScanCase.PARALLEL, DeltaPair(delta2=inner.delta2 - 1, delta_hat2=inner.delta2 + 3)
    if not graph.without_vertices([u, v]).is_connected():
        return ScanCase.THETA, HALF
    reduced, f_u = suppress_endpoint(graph, edge, u)
    if not reduced.without_vertices(reduced.endpoints(f_u)).is_connected():
        return ScanCase.THREE_HALVES, THREE_HALVES
    return ScanCase.GENERIC, ONE


def scan(graph: Multigraph, edge: int) -> DeltaPair:
    """Оценка (Δ(G, e), Δ̂(G, e)), ограничивающая сверху (δ, δ̂)"""
    case, pair = classify_pair(graph, edge)
    logger.debug(f'Scan({graph}, {edge}) = {pair} [{case.value}]')
    return pair


def closure_scan(closure: ChainClosure) -> DeltaPair:
    """Scan замыкания цепи; тривиальная цепь дает (0, 0)"""
    if closure.kind is ClosureKind.TRIVIAL:
        return ZERO
    return scan(closure.graph, closure.root)


def chain_scan(chain: SubcubicChain) -> DeltaPair:
    return closure_scan(chain.closure())

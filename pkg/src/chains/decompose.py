from typing import Iterable

from loguru import logger

from ..graph.blocks import ConnectivityClass, block_decomposition, bridge_components, connectivity_class, suppress
from ..graph.multigraph import Multigraph
from .chain import ChainBlock, ChainClosure, SubcubicChain
from .exceptions import BadPrecondition, NotAChainCase, TrivialChain


def string_blocks(interior: Multigraph, start: int, end: int) -> tuple[tuple[ChainBlock, ...], tuple[int, ...]]:
    """Раскладывает внутренность цепи на блоки вдоль пути мостов.

    Алгоритм работы:
    1. Находит мосты внутренности и компоненты без мостов
    2. Идет от компоненты start к компоненте end, на каждом шаге выходя
       по единственному мосту в еще не посещенную компоненту
    3. Проверяет, что все компоненты посещены (ответвлений нет)

    Args:
        interior: Связный граф C - {x, y}
        start: Вершина x_1
        end: Вершина y_k

    Returns:
        Блоки в порядке от start к end и мосты между ними

    Raises:
        NotAChainCase: Если компоненты не выстраиваются в цепочку
    """
    bridges = block_decomposition(interior).cut_edges
    components, component_of = bridge_components(interior, bridges)
    exits: dict[int, list[int]] = {index: [] for index in range(len(components))}
    for edge_id in sorted(bridges):
        a, b = interior.endpoints(edge_id)
        exits[component_of[a]].append(edge_id)
        exits[component_of[b]].append(edge_id)

    blocks = []
    links = []
    visited = set()
    current = component_of[start]
    entry = start
    while True:
        visited.add(current)
        members = components[current]
        member_set = set(members)
        inner = frozenset(
            edge_id
            for v in members
            for edge_id in interior.incident(v)
            if edge_id not in bridges and interior.other_end(edge_id, v) in member_set
        )
        if current == component_of[end]:
            blocks.append(ChainBlock(members, inner, entry, end))
            break
        forward = [
            edge_id for edge_id in exits[current]
            if not {component_of[v] for v in interior.endpoints(edge_id)} <= visited
        ]
        if len(forward) != 1:
            logger.error(f'Компонента {members} имеет {len(forward)} выходов вперед')
            raise NotAChainCase
        bridge = forward[0]
        a, b = interior.endpoints(bridge)
        exit_vertex, next_entry = (a, b) if a in member_set else (b, a)
        blocks.append(ChainBlock(members, inner, entry, exit_vertex))
        links.append(bridge)
        current = component_of[next_entry]
        entry = next_entry

    if len(visited) != len(components):
        logger.error(f'Цепь обошла {len(visited)} из {len(components)} компонент')
        raise NotAChainCase
    return tuple(blocks), tuple(links)


def make_chain(
        graph: Multigraph,
        interior: Iterable[int],
        x: int,
        head: int,
        y: int,
        tail: int,
) -> SubcubicChain:
    """Собирает цепь графа по ее внутренним вершинам и концевым ребрам.

    При head == tail цепь тривиальна, а interior должен быть пуст.
    """
    if head == tail:
        return SubcubicChain(graph, (), (), x, y, head, tail)
    start = graph.other_end(head, x)
    end = graph.other_end(tail, y)
    blocks, links = string_blocks(graph.subgraph(interior), start, end)
    return SubcubicChain(graph, blocks, links, x, y, head, tail)


def as_chain_closure(graph: Multigraph, edge: int) -> SubcubicChain:
    """Записывает (G, e) как замыкание подкубической цепи.

    Порядок блоков начинается с блока, содержащего меньший конец e.
    closure(root_id=e) возвращаемой цепи воспроизводит G.

    Args:
        graph: 2-связный граф или 2-цикл
        edge: Корневое ребро e

    Returns:
        SubcubicChain: Цепь без концов x, y

    Raises:
        NotAChainCase: Если G - петля или G - e 2-связен
    """
    if graph.n == 1:
        raise NotAChainCase('Петля не является замыканием цепи с k >= 2')
    rest = graph.without_edges([edge])
    if connectivity_class(rest) is ConnectivityClass.TWO_CONNECTED:
        raise NotAChainCase('G - e 2-связен')
    u, v = graph.endpoints(edge)
    blocks, links = string_blocks(rest, u, v)
    logger.debug(f'Пара ({graph}, {edge}) разложена в цепь из {len(blocks)} блоков')
    return SubcubicChain(graph, blocks, links)


def block_closures(chain: SubcubicChain) -> list[ChainClosure]:
    """Замыкания блоков цепи B_i + x_i y_i в порядке цепи.

    Raises:
        TrivialChain: Если цепь тривиальна
    """
    if chain.is_trivial:
        raise TrivialChain
    closures = []
    for block in chain.blocks:
        graph, root = chain.host.subgraph(block.vertices, block.edges).with_edge(block.entry, block.exit)
        closures.append(ChainClosure.of(graph, root))
    return closures


def _single_edge(graph: Multigraph, a: int, b: int) -> int:
    edges = graph.edges_between(a, b)
    if len(edges) != 1:
        raise BadPrecondition(f'Между {a} и {b} ожидалось одно ребро, найдено {len(edges)}')
    return edges[0]


def rooted_theta_split(graph: Multigraph, edge: int) -> tuple[SubcubicChain, SubcubicChain] | None:
    """Находит две цепи корневой θ-цепи (G, e), если они есть.

    Обе цепи идут от меньшего конца e к большему. Первой идет цепь,
    содержащая наименьшую внутреннюю вершину.

    Returns:
        Пара цепей, если G - {u, v} распадается ровно на две компоненты, иначе None

    Raises:
        BadPrecondition: Если e - петля или у e есть параллельное ребро
    """
    if graph.is_loop(edge) or graph.parallel_edges(edge):
        raise BadPrecondition('Корневая θ-цепь требует ребро без петель и параллелей')
    u, v = graph.endpoints(edge)
    components = graph.without_vertices([u, v]).components()
    if len(components) != 2:
        return None
    chains = []
    for component in components:
        members = set(component)
        into = [
            (w, edge_id)
            for w in (u, v)
            for edge_id in graph.incident(w)
            if edge_id != edge and graph.other_end(edge_id, w) in members
        ]
        if len(into) != 2 or into[0][0] != u or into[1][0] != v:
            raise BadPrecondition(f'Компонента {component} присоединена не одним ребром к каждому концу')
        chains.append(make_chain(graph, component, u, into[0][1], v, into[1][1]))
    return chains[0], chains[1]


def suppress_endpoint(graph: Multigraph, edge: int, u: int) -> tuple[Multigraph, int]:
    """Удаляет e = uv и подавляет u в ребро f_u = u_1 u_2.

    Args:
        graph: Граф, у которого G - e прост и 2-связен
        edge: Ребро e
        u: Меньший конец e

    Returns:
        Граф G_u и id ребра f_u

    Raises:
        BadPrecondition: Если предусловия нарушены
    """
    a, b = graph.endpoints(edge)
    if a == b or u != a:
        raise BadPrecondition(f'{u} не является меньшим концом ребра {edge}')
    rest = graph.without_edges([edge])
    if not rest.is_simple() or connectivity_class(rest) is not ConnectivityClass.TWO_CONNECTED:
        raise BadPrecondition('G - e должен быть простым и 2-связным')
    if rest.degree(u) != 2:
        raise BadPrecondition(f'Степень {u} в G - e равна {rest.degree(u)}, ожидалась 2')
    reduced, new_edge, _ = suppress(rest, [u])
    return reduced, new_edge


def chain_with_end_edges(graph: Multigraph, head: int, tail: int, x: int) -> SubcubicChain:
    """Цепь графа с концевыми ребрами head = e_0 и tail = e_k.

    Внутренность - компонента G - {e_0, e_k}, содержащая второй конец e_0.

    Args:
        graph: Граф
        head: Ребро e_0
        tail: Ребро e_k
        x: Внешний конец e_0

    Raises:
        BadPrecondition: Если {e_0, e_k} не отделяет цепь
    """
    start = graph.other_end(head, x)
    if head == tail:
        return make_chain(graph, (), x, head, start, tail)
    cut = graph.without_edges([head, tail])
    interior = next(component for component in cut.components() if start in component)
    a, b = graph.endpoints(tail)
    inside = [end for end in (a, b) if end in interior]
    if x in interior or len(inside) != 1 or a == b:
        raise BadPrecondition(f'Ребра {head}, {tail} не являются концами цепи')
    y = b if inside[0] == a else a
    return make_chain(graph, interior, x, head, y, tail)


def suppress_chain(graph: Multigraph, chain: SubcubicChain) -> tuple[Multigraph, int]:
    """Подавляет внутренность цепи: G/C и новое ребро e_{G/C}.

    Raises:
        TrivialChain: Если цепь тривиальна
    """
    if chain.is_trivial:
        raise TrivialChain
    reduced = graph.without_vertices(chain.interior)
    return reduced.with_edge(chain.x, chain.y)

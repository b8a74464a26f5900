import argparse
import time
from pathlib import Path

from loguru import logger

from ..approx.algo import solve
from ..approx.exceptions import BoundViolation, NotTwoConnected
from ..config import config
from ..cover.cover import serialize_cover
from ..generators.constructions import cycle, k23_constructible, random_two_connected_subcubic, theta
from ..generators.named import named
from ..graph.blocks import ConnectivityClass, connectivity_class
from ..graph.multigraph import Multigraph
from ..oracle.oracle import classify, exact
from ..schemes import SolveCertificate
from ..utils import format_flag, format_fraction
from ..walk.walk import cover_to_walk, serialize_walk, validate_walk, walk_from_vertices
from .exceptions import NoSuchEdge, ParseError
from .graph_file import format_graph, read_graph, read_walk

GENERATOR_KINDS = ('theta', 'cycle', 'k23', 'random', 'named')


def _edge_between(graph: Multigraph, u: int, v: int) -> int:
    """Ребро с наименьшим id между u и v"""
    if not (graph.has_vertex(u) and graph.has_vertex(v)):
        raise NoSuchEdge(u, v)
    edges = graph.edges_between(u, v)
    if not edges:
        raise NoSuchEdge(u, v)
    return min(edges)


def _ensure_oracle_input(graph: Multigraph) -> None:
    if connectivity_class(graph) in (ConnectivityClass.DISCONNECTED, ConnectivityClass.HAS_CUT_VERTEX):
        logger.error(f'Граф {graph} не 2-связен, перебор не выполняется')
        raise NotTwoConnected


def cmd_solve(path: Path) -> None:
    """Печатает покрытие, обход и строку сертификата.

    Raises:
        ParseError: Если файл не разобран
        NotSimple: Если граф не простой
        BadInput: Если граф не подкубический или не 2-связен
    """
    graph = read_graph(path)
    cover = solve(graph)
    walk = cover_to_walk(graph, cover)
    length = validate_walk(graph, walk)
    profile = graph.degree_profile()
    certificate = SolveCertificate.of(profile.n, profile.n2, cover.exc, length)
    if not certificate.holds:
        raise BoundViolation(length, str(certificate.bound_raw))
    for line in serialize_cover(cover):
        print(line)
    print(f'walk: {serialize_walk(walk)}')
    print(certificate.line())


def cmd_oracle(path: Path, edge: tuple[int, int] | None = None, force: bool = False, as_json: bool = False) -> None:
    """Печатает точные exc, exc_with, exc_without, delta, delta_hat.

    Raises:
        TooLarge: Если n > ORACLE_LIMIT без force
        NotTwoConnected: Если граф не 2-связен
    """
    graph = read_graph(path)
    _ensure_oracle_input(graph)
    edge_id = None if edge is None else _edge_between(graph, *edge)
    report = exact(graph, edge_id, force)
    if as_json:
        print(report.model_dump_json())
        return
    print(f'n={report.n} n2={report.n2} exc={report.exc}')
    if edge_id is not None:
        print(
            f'exc_with={report.exc_with} exc_without={report.exc_without} '
            f'delta={format_fraction(report.delta)} delta_hat={format_fraction(report.delta_hat)}'
        )


def cmd_classify(
        path: Path,
        edge: tuple[int, int],
        force: bool = False,
        as_json: bool = False,
        strict: bool = False,
) -> None:
    """Печатает флаги rooted θ, tight, balanced, minimal пары (G, e)"""
    graph = read_graph(path)
    _ensure_oracle_input(graph)
    report = classify(graph, _edge_between(graph, *edge), strict=strict, force=force)
    if as_json:
        print(report.model_dump_json())
        return
    print(
        f'is_rooted_theta={format_flag(report.is_rooted_theta)} tight={format_flag(report.tight)} '
        f'chains_tight={format_flag(report.chains_tight)} balanced={format_flag(report.balanced)} '
        f'minimal={format_flag(report.minimal)} near_minimal={format_flag(report.near_minimal)}'
    )


def generate(kind: str, param: str, seed: int = 0) -> Multigraph:
    """Граф по виду генератора и его параметру.

    Raises:
        ParseError: Если вид неизвестен или параметр не число
        UnknownName: Если именованный граф неизвестен
    """
    if kind == 'named':
        return named(param)
    if kind not in GENERATOR_KINDS:
        raise ParseError(f'неизвестный генератор {kind!r}, доступны: {", ".join(GENERATOR_KINDS)}')
    try:
        value = int(param)
    except ValueError:
        raise ParseError(f'параметр генератора {kind} должен быть числом, получено {param!r}') from None
    if kind == 'theta':
        return theta(value)
    if kind == 'cycle':
        return cycle(value)
    if kind == 'k23':
        return k23_constructible(value, seed)
    return random_two_connected_subcubic(value, seed)


def cmd_gen(kind: str, param: str, seed: int = 0) -> None:
    """Печатает файл сгенерированного графа"""
    print(format_graph(generate(kind, param, seed)), end='')


def cmd_check(graph_path: Path, walk_path: Path) -> None:
    """Проверяет обход и печатает его длину.

    Raises:
        NotClosed, NotSpanning, MissingEdge: Если обход некорректен
    """
    graph = read_graph(graph_path)
    walk = walk_from_vertices(graph, read_walk(walk_path))
    print(validate_walk(graph, walk))


def cmd_bench(sizes: list[int], seed: int) -> None:
    """Печатает таблицу "n m exc seconds" для K23-конструируемых графов размера около sizes"""
    print('n m exc seconds')
    for size in sizes:
        graph = k23_constructible(max(0, (size - 5) // 3), seed)
        started = time.perf_counter()
        cover = solve(graph)
        cover_to_walk(graph, cover)
        elapsed = time.perf_counter() - started
        logger.info(f'bench: n={graph.n} за {elapsed:.3f} с')
        print(f'{graph.n} {graph.m} {cover.exc} {elapsed:.3f}')


def _edge_arg(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument(
        'edge', nargs=2 if required else '*', type=int, metavar='U V',
        help='ребро e, заданное концами',
    )


def _optional_edge(values: list[int]) -> tuple[int, int] | None:
    if not values:
        return None
    if len(values) != 2:
        raise ParseError(f'ребро задается двумя вершинами, получено {len(values)}')
    return values[0], values[1]


def _sizes(value: str) -> list[int]:
    try:
        return [int(size) for size in value.split(',') if size.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'ожидался список чисел через запятую: {value!r}') from None


def add_commands(subparsers: argparse._SubParsersAction) -> None:
    """Регистрирует подкоманды CLI.

    Каждая подкоманда сохраняет в handler функцию, принимающую Namespace.
    """
    solve_parser = subparsers.add_parser('solve', help='покрытие, обход и сертификат')
    solve_parser.add_argument('path', type=Path)
    solve_parser.set_defaults(handler=lambda args: cmd_solve(args.path))

    oracle_parser = subparsers.add_parser('oracle', help='точные значения перебором')
    oracle_parser.add_argument('path', type=Path)
    _edge_arg(oracle_parser, required=False)
    oracle_parser.add_argument('--force', action='store_true', help='разрешить перебор сверх ORACLE_LIMIT')
    oracle_parser.add_argument('--json', action='store_true', help='вывод в JSON')
    oracle_parser.set_defaults(
        handler=lambda args: cmd_oracle(args.path, _optional_edge(args.edge), args.force, args.json)
    )

    classify_parser = subparsers.add_parser('classify', help='структурные флаги пары (G, e)')
    classify_parser.add_argument('path', type=Path)
    _edge_arg(classify_parser, required=True)
    classify_parser.add_argument('--force', action='store_true')
    classify_parser.add_argument('--json', action='store_true')
    classify_parser.add_argument('--strict', action='store_true', help='ошибка, если пара не θ-цепь')
    classify_parser.set_defaults(
        handler=lambda args: cmd_classify(args.path, tuple(args.edge), args.force, args.json, args.strict)
    )

    gen_parser = subparsers.add_parser('gen', help='сгенерировать файл графа')
    gen_parser.add_argument('kind', choices=GENERATOR_KINDS)
    gen_parser.add_argument('param', help='k, n, число шагов или имя графа')
    gen_parser.add_argument('--seed', type=int, default=0)
    gen_parser.set_defaults(handler=lambda args: cmd_gen(args.kind, args.param, args.seed))

    check_parser = subparsers.add_parser('check', help='проверить обход и напечатать длину')
    check_parser.add_argument('graph_path', type=Path)
    check_parser.add_argument('walk_path', type=Path)
    check_parser.set_defaults(handler=lambda args: cmd_check(args.graph_path, args.walk_path))

    bench_parser = subparsers.add_parser('bench', help='время solve на K23-конструируемых графах')
    bench_parser.add_argument('--sizes', type=_sizes, default=config.cli_config.bench_sizes)
    bench_parser.add_argument('--seed', type=int, default=config.cli_config.BENCH_SEED)
    bench_parser.set_defaults(handler=lambda args: cmd_bench(args.sizes, args.seed))

from fractions import Fraction
from itertools import combinations

import pytest

from src.approx.algo import algo, bec, ec, solve, subroutine
from src.approx.exceptions import BadInput, NotSubcubic, NotTwoConnected
from src.approx.scan import classify_pair, ensure_solvable, ensure_valid_pair, scan
from src.approx.schemes import HALF, ONE, THREE_HALVES, DeltaPair, ScanCase
from src.chains.decompose import suppress_endpoint
from src.chains.exceptions import BadPrecondition
from src.generators.constructions import cycle, k23_constructible, theta
from src.generators.named import named
from src.graph.exceptions import NotSimple
from src.graph.multigraph import Multigraph
from src.oracle.oracle import exact

from .conftest import small_corpus

# K_{2,3} с хордой между листьями 2 и 3; хорда имеет id 6
K23_CHORD = Multigraph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])


def _bound_holds(graph: Multigraph, exc: int, offset4: int) -> bool:
    profile = graph.degree_profile()
    return 4 * exc <= profile.n + profile.n2 + offset4


class TestScan:
    def test_loop(self, loop):
        assert classify_pair(loop, 0) == (ScanCase.LOOP, HALF)

    def test_k4(self, k4):
        pair = scan(k4, 0)
        assert (pair.delta, pair.delta_hat) == (-1, 1)
        assert classify_pair(k4, 0)[0] is ScanCase.GENERIC

    def test_k23_hub_leaf_is_chain_sum(self, k23):
        assert classify_pair(k23, 0) == (ScanCase.CHAIN, ONE)

    def test_k23_chord(self):
        case, pair = classify_pair(K23_CHORD, 6)
        assert case is ScanCase.THREE_HALVES
        assert pair == THREE_HALVES
        assert pair.delta == Fraction(-3, 2)

    def test_diamond_chord(self, diamond):
        assert classify_pair(diamond, 0) == (ScanCase.THETA, HALF)

    def test_two_cycle(self, two_cycle):
        assert classify_pair(two_cycle, 0) == (ScanCase.CHAIN, ONE)

    def test_parallel(self, k4):
        reduced, f_u = suppress_endpoint(k4, 0, 0)
        case, pair = classify_pair(reduced, f_u)
        assert case is ScanCase.PARALLEL
        assert pair == DeltaPair(delta2=-2, delta_hat2=2)

    def test_cycle_chain(self):
        # замыкание цепи из n петель
        assert scan(cycle(6), 0) == DeltaPair(delta2=-6, delta_hat2=6)

    def test_antisymmetry_and_half_integrality(self):
        for name, graph in small_corpus():
            for edge in graph.edge_ids:
                case, pair = classify_pair(graph, edge)
                assert pair.delta2 + pair.delta_hat2 <= 0, (name, edge)
                if case not in (ScanCase.CHAIN, ScanCase.PARALLEL):
                    assert pair.delta2 + pair.delta_hat2 == 0, (name, edge)
                assert pair.delta.denominator in (1, 2)
                assert pair.delta <= Fraction(-1, 2)

    def test_domination_of_exact(self, k4, k23, diamond):
        for graph in (k4, k23, diamond, K23_CHORD, theta(2)):
            for edge in graph.edge_ids:
                pair = scan(graph, edge)
                report = exact(graph, edge)
                assert pair.delta >= report.delta
                assert pair.delta_hat >= report.delta_hat


class TestPreconditions:
    def test_not_simple(self, two_cycle):
        with pytest.raises(NotSimple):
            ensure_solvable(two_cycle)

    def test_not_subcubic(self):
        k5 = Multigraph.build(5, list(combinations(range(5), 2)))
        with pytest.raises(NotSubcubic):
            ensure_solvable(k5)

    def test_not_two_connected(self):
        path = Multigraph.build(4, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(NotTwoConnected):
            ensure_solvable(path)

    def test_foreign_edge(self, k4):
        with pytest.raises(BadInput):
            ensure_valid_pair(k4, 17)

    def test_rest_not_simple(self):
        triple = Multigraph.build(2, [(0, 1), (0, 1), (0, 1)])
        with pytest.raises(NotSimple):
            ensure_valid_pair(triple, 0)

    def test_solve_rejects_path(self):
        with pytest.raises(NotTwoConnected):
            solve(cycle(5).without_edges([0]))


class TestAlgo:
    def test_k23_through_hub_leaf(self, k23):
        cover = algo(k23, 0, True)
        assert 0 in cover
        assert cover.exc == 3
        assert len(cover.cycles) == 1

    def test_k23_avoiding_hub_leaf(self, k23):
        cover = algo(k23, 0, False)
        assert 0 not in cover
        assert cover.exc == 3
        assert cover.isolated == (2,)

    def test_loop(self, loop):
        assert algo(loop, 0, True).exc == 2
        assert algo(loop, 0, False).exc == 1

    def test_two_cycle(self, two_cycle):
        assert algo(two_cycle, 0, True).edges == {0, 1}
        assert algo(two_cycle, 0, False).exc == 2

    def test_every_edge_of_corpus(self):
        for name, graph in small_corpus():
            for edge in graph.edge_ids:
                pair = scan(graph, edge)
                through = algo(graph, edge, True)
                avoiding = algo(graph, edge, False)
                assert edge in through, (name, edge)
                assert edge not in avoiding, (name, edge)
                assert _bound_holds(graph, through.exc, 2 * pair.delta2 + 8), (name, edge)
                assert _bound_holds(graph, avoiding.exc, 2 * pair.delta_hat2), (name, edge)


class TestEc:
    def test_k4(self, k4):
        cover = ec(k4, 0, Fraction(-1))
        assert 0 in cover
        assert cover.exc == 2

    def test_k23_chord(self):
        cover = ec(K23_CHORD, 6, Fraction(-3, 2))
        assert 6 in cover
        assert cover.exc == 2

    def test_diamond_chord(self, diamond):
        cover = ec(diamond, 0, Fraction(-1, 2))
        assert 0 in cover
        assert cover.exc == 3

    def test_wrong_delta(self, k4):
        with pytest.raises(BadPrecondition):
            ec(k4, 0, Fraction(-1, 2))

    def test_chain_case(self, k23):
        with pytest.raises(BadPrecondition):
            ec(k23, 0, Fraction(-1))


class TestBec:
    def test_k4(self, k4):
        cover = bec(k4, 0)
        assert 0 not in cover
        assert cover.exc == 2

    def test_k23_chord(self):
        cover = bec(K23_CHORD, 6)
        assert 6 not in cover
        assert cover.exc == 3


class TestSubroutine:
    def test_c5(self):
        result = subroutine(cycle(5), 0, 2, 3)
        assert result.index == 1
        assert result.root in result.cover
        assert result.cover.exc == 3

    def test_precondition(self, k23):
        with pytest.raises(BadPrecondition):
            subroutine(k23, 0, 2, 3)

    @pytest.mark.parametrize('z', [cycle(4), cycle(5), cycle(6), theta(1), theta(2), k23_constructible(1, 3)])
    def test_all_triples(self, z):
        degree2 = [v for v in z.vertices if z.degree(v) == 2]
        for u in degree2:
            for v1, v2 in combinations([v for v in degree2 if v != u], 2):
                result = subroutine(z, u, v1, v2)
                extended = result.cover.host
                assert result.root in result.cover
                assert extended.endpoints(result.root) == tuple(sorted((u, (v1, v2)[result.index - 1])))
                assert _bound_holds(extended, result.cover.exc, 4)


class TestSolve:
    @pytest.mark.parametrize(('name', 'expected'), [('K4', 2), ('petersen', 3), ('prism', 2), ('cube', 2)])
    def test_named(self, name, expected):
        assert solve(named(name)).exc == expected

    def test_k23(self, k23):
        assert solve(k23).exc == 3

    def test_c6(self, c6):
        assert solve(c6).exc == 2

    @pytest.mark.parametrize('k', [1, 2])
    def test_theta_forced_by_bound(self, k):
        assert solve(theta(k)).exc == k + 2

    @pytest.mark.parametrize('k', [3, 4, 5])
    def test_theta_within_bound(self, k):
        graph = theta(k)
        exc = solve(graph).exc
        assert k + 2 <= exc
        assert _bound_holds(graph, exc, 4)

    def test_deterministic(self, petersen):
        assert solve(petersen).edges == solve(petersen).edges

import pytest

from src.graph.exceptions import NotSimple
from src.generators.constructions import (
    cycle,
    diamond_op,
    k23_constructible,
    random_two_connected_subcubic,
    subdivide,
    theta,
)
from src.generators.exceptions import BadDegree, BadSeed, BadSize, UnknownName
from src.generators.named import named
from src.generators.prng import SplitMix64
from src.graph.blocks import ConnectivityClass, connectivity_class
from src.graph.multigraph import Multigraph


class TestTheta:
    def test_theta1_is_k23(self):
        assert theta(1) == named('K23')

    def test_profile(self):
        profile = theta(2).degree_profile()
        assert (profile.n, profile.n2, profile.max_degree) == (8, 6, 3)

    def test_bad_size(self):
        with pytest.raises(BadSize):
            theta(0)


class TestCycleAndSubdivide:
    def test_cycle(self):
        graph = cycle(5)
        assert (graph.n, graph.m) == (5, 5)
        assert all(graph.degree(v) == 2 for v in graph.vertices)

    def test_cycle_too_small(self):
        with pytest.raises(BadSize):
            cycle(2)

    def test_subdivide(self, k4):
        graph = subdivide(k4, 0, 3)
        assert (graph.n, graph.m) == (7, 9)
        assert graph.edges_between(0, 1) == []
        assert graph.degree_profile().n2 == 3


class TestDiamondOp:
    def test_k23(self, k23):
        graph = diamond_op(k23, 2)
        profile = graph.degree_profile()
        assert (profile.n, profile.n2) == (8, 4)
        assert graph.is_simple()
        assert connectivity_class(graph) is ConnectivityClass.TWO_CONNECTED

    def test_degree_three(self, k23):
        with pytest.raises(BadDegree):
            diamond_op(k23, 0)

    def test_not_simple(self):
        with pytest.raises(NotSimple):
            diamond_op(Multigraph.build(3, [(0, 1), (0, 1), (1, 2), (2, 0)]), 2)


class TestK23Constructible:
    def test_zero_steps(self):
        assert k23_constructible(0, 7) == named('K23')

    @pytest.mark.parametrize('steps', [1, 2, 5, 10])
    def test_growth(self, steps):
        profile = k23_constructible(steps, 3).degree_profile()
        assert profile.n == 5 + 3 * steps
        assert profile.n + profile.n2 == 8 + 4 * steps
        assert profile.max_degree <= 3

    def test_deterministic(self):
        assert k23_constructible(6, 11) == k23_constructible(6, 11)

    def test_bad_size(self):
        with pytest.raises(BadSize):
            k23_constructible(-1, 0)


class TestRandom:
    def test_triangle(self):
        assert random_two_connected_subcubic(3, 5) == cycle(3)

    @pytest.mark.parametrize('n', [4, 5, 8, 13, 20])
    @pytest.mark.parametrize('seed', [0, 1, 42])
    def test_properties(self, n, seed):
        graph = random_two_connected_subcubic(n, seed)
        assert graph.n == n
        assert graph.is_simple()
        assert graph.is_subcubic()
        assert connectivity_class(graph) is ConnectivityClass.TWO_CONNECTED

    def test_deterministic(self):
        assert random_two_connected_subcubic(30, 9) == random_two_connected_subcubic(30, 9)

    def test_bad_seed(self):
        with pytest.raises(BadSeed):
            random_two_connected_subcubic(5, 2 ** 64)


class TestNamed:
    @pytest.mark.parametrize(('name', 'n', 'm'), [
        ('K4', 4, 6),
        ('K_23', 5, 6),
        ('diamond', 4, 5),
        ('Petersen', 10, 15),
        ('prism', 6, 9),
        ('cube', 8, 12),
    ])
    def test_sizes(self, name, n, m):
        graph = named(name)
        assert (graph.n, graph.m) == (n, m)

    def test_diamond_chord_is_first(self, diamond):
        assert diamond.endpoints(0) == (0, 1)

    def test_unknown(self):
        with pytest.raises(UnknownName):
            named('dodecahedron')


class TestSplitMix64:
    def test_reference_output(self):
        assert SplitMix64(0).next() == 0xE220A8397B1DCDAF

    def test_below_range(self):
        rng = SplitMix64(1)
        assert all(0 <= rng.below(7) < 7 for _ in range(100))

    def test_shuffle_is_permutation(self):
        items = list(range(10))
        SplitMix64(2).shuffle(items)
        assert sorted(items) == list(range(10))

    def test_bad_seed(self):
        with pytest.raises(BadSeed):
            SplitMix64(-1)

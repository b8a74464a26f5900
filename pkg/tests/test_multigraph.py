import pytest

from src.generators.constructions import cycle, theta
from src.graph.blocks import ConnectivityClass, block_decomposition, connectivity_class, suppress
from src.graph.exceptions import BadNeighborhood, Disconnected, IndexOutOfRange
from src.graph.multigraph import Multigraph

from .conftest import small_corpus

TWO_SQUARES = Multigraph.build(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (3, 4)])


class TestBuild:
    def test_k23_profile(self):
        graph = Multigraph.build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        assert graph.degree_profile() == (5, 3, 3)
        assert graph.is_simple()

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            Multigraph.build(3, [(0, 3)])

    def test_loop_counts_twice(self, loop):
        assert loop.degree(0) == 2
        assert loop.degree_profile() == (1, 1, 2)
        assert not loop.is_simple()

    def test_parallel_edges_keep_ids(self, two_cycle):
        assert two_cycle.edges_between(1, 0) == [0, 1]
        assert two_cycle.parallel_edges(0) == [1]
        assert not two_cycle.is_simple()

    def test_profiles(self, petersen):
        assert theta(2).degree_profile() == (8, 6, 3)
        assert petersen.degree_profile() == (10, 0, 3)

    def test_handshake(self):
        for name, graph in small_corpus():
            assert sum(graph.degree(v) for v in graph.vertices) == 2 * graph.m, name

    def test_subgraph_keeps_next_edge_id(self, k4):
        sub = k4.subgraph([0, 1, 2])
        assert sub.m == 3
        assert sub.next_edge_id == k4.next_edge_id
        extended, new_edge = sub.with_edge(0, 1)
        assert new_edge == 6
        assert extended.edges_between(0, 1) == [0, 6]

    def test_with_existing_id(self, k4):
        with pytest.raises(ValueError):
            k4.with_edge(0, 1, 3)

    def test_networkx_round_trip(self, k4):
        nx_graph = k4.to_networkx()
        assert nx_graph.number_of_nodes() == 4
        assert nx_graph.number_of_edges() == 6
        assert Multigraph.from_networkx(nx_graph) == k4


def _brute_cut_vertices(graph: Multigraph) -> set[int]:
    if graph.n <= 2:
        return set()
    return {v for v in graph.vertices if not graph.without_vertices([v]).is_connected()}


def _brute_bridges(graph: Multigraph) -> set[int]:
    return {edge_id for edge_id in graph.edge_ids if not graph.without_edges([edge_id]).is_connected()}


class TestBlocks:
    def test_cycle_is_one_block(self):
        decomposition = block_decomposition(cycle(5))
        assert len(decomposition.blocks) == 1
        assert not decomposition.cut_vertices
        assert not decomposition.cut_edges

    def test_two_squares_with_bridge(self):
        decomposition = block_decomposition(TWO_SQUARES)
        assert len(decomposition.blocks) == 3
        assert decomposition.cut_vertices == {3, 4}
        assert decomposition.cut_edges == {8}
        sizes = sorted(len(block.edges) for block in decomposition.blocks)
        assert sizes == [1, 4, 4]

    def test_block_cut_tree(self):
        tree = block_decomposition(TWO_SQUARES).block_cut_tree
        assert tree.number_of_nodes() == 5
        assert tree.number_of_edges() == 4

    def test_k4_is_one_block(self, k4):
        assert len(block_decomposition(k4).blocks) == 1

    def test_parallel_copy_is_not_bridge(self, two_cycle):
        decomposition = block_decomposition(two_cycle)
        assert len(decomposition.blocks) == 1
        assert not decomposition.cut_edges

    def test_path_is_all_bridges(self):
        path = Multigraph.build(4, [(0, 1), (1, 2), (2, 3)])
        decomposition = block_decomposition(path)
        assert decomposition.cut_edges == {0, 1, 2}
        assert decomposition.cut_vertices == {1, 2}

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            block_decomposition(Multigraph.build(2, []))

    @pytest.mark.parametrize('graph', [
        TWO_SQUARES,
        Multigraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        Multigraph.build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
    ])
    def test_matches_brute_force(self, graph):
        decomposition = block_decomposition(graph)
        assert decomposition.cut_vertices == _brute_cut_vertices(graph)
        assert decomposition.cut_edges == _brute_bridges(graph)

    def test_corpus_matches_brute_force(self):
        for name, graph in small_corpus():
            decomposition = block_decomposition(graph)
            assert decomposition.cut_vertices == _brute_cut_vertices(graph), name
            assert decomposition.cut_edges == _brute_bridges(graph), name


class TestSuppress:
    def test_path_middle(self):
        path = Multigraph.build(3, [(0, 1), (1, 2)])
        reduced, new_edge, edge_map = suppress(path, [1])
        assert reduced.vertices == (0, 2)
        assert reduced.endpoints(new_edge) == (0, 2)
        assert edge_map == {new_edge: (0, 1)}

    def test_triangle_gives_two_cycle(self):
        triangle = cycle(3)
        reduced, new_edge, edge_map = suppress(triangle, [2])
        assert reduced.vertices == (0, 1)
        assert reduced.edges_between(0, 1) == [0, new_edge]
        assert edge_map == {new_edge: (1, 2)}

    def test_two_cycle_gives_loop(self, two_cycle):
        reduced, new_edge, edge_map = suppress(two_cycle, [1])
        assert reduced.vertices == (0,)
        assert reduced.is_loop(new_edge)
        assert edge_map == {new_edge: (0, 1)}

    def test_pair_maps_all_incident_edges(self, diamond):
        # хорда 0-1 и четыре ребра к вершинам 2, 3
        reduced, new_edge, edge_map = suppress(diamond, [0, 1])
        assert reduced.vertices == (2, 3)
        assert edge_map == {new_edge: tuple(diamond.edge_ids)}

    def test_new_edge_is_fresh(self, k23):
        reduced, new_edge, _ = suppress(k23, [2])
        assert new_edge == k23.next_edge_id
        assert reduced.endpoints(new_edge) == (0, 1)

    def test_bad_neighborhood(self, k4):
        with pytest.raises(BadNeighborhood):
            suppress(k4, [0])

    def test_reexpansion_restores_graph(self, k23):
        reduced, new_edge, edge_map = suppress(k23, [2])
        assert edge_map == {new_edge: (0, 3)}
        restored = Multigraph(
            [*reduced.vertices, 2],
            {
                **reduced.without_edges([new_edge]).edges(),
                **{edge_id: k23.endpoints(edge_id) for edge_id in edge_map[new_edge]},
            },
        )
        assert restored == k23


class TestConnectivityClass:
    def test_k2_is_tiny(self):
        assert connectivity_class(Multigraph.build(2, [(0, 1)])) is ConnectivityClass.TINY

    def test_path_has_cut_vertex(self):
        path = cycle(6).without_edges([0])
        assert connectivity_class(path) is ConnectivityClass.HAS_CUT_VERTEX

    def test_diamond(self, diamond):
        assert connectivity_class(diamond) is ConnectivityClass.TWO_CONNECTED

    def test_disconnected(self):
        graph = Multigraph.build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert connectivity_class(graph) is ConnectivityClass.DISCONNECTED

import time

import pytest

from src.approx.algo import solve
from src.generators.constructions import k23_constructible, random_two_connected_subcubic, theta
from src.generators.named import named
from src.oracle.oracle import exact, is_extremal
from src.schemes import SolveCertificate
from src.walk.walk import cover_to_walk, validate_walk

from .conftest import acceptance_corpus


def _certificate(graph) -> SolveCertificate:
    cover = solve(graph)
    length = validate_walk(graph, cover_to_walk(graph, cover))
    profile = graph.degree_profile()
    return SolveCertificate.of(profile.n, profile.n2, cover.exc, length)


class TestBound:
    @pytest.mark.parametrize(('name', 'graph'), acceptance_corpus())
    def test_corpus(self, name, graph):
        certificate = _certificate(graph)
        assert certificate.walk_len == certificate.n + certificate.exc - 2
        assert 4 * certificate.exc <= certificate.n + certificate.n2 + 4
        assert certificate.holds, name

    @pytest.mark.parametrize('n', range(4, 65))
    @pytest.mark.parametrize('seed', range(17))
    def test_random(self, n, seed):
        certificate = _certificate(random_two_connected_subcubic(n, seed))
        assert certificate.walk_len == certificate.n + certificate.exc - 2
        assert 4 * certificate.exc <= certificate.n + certificate.n2 + 4
        assert certificate.holds

    def test_deterministic(self):
        graph = random_two_connected_subcubic(40, 3)
        first, second = solve(graph), solve(graph)
        assert first.edges == second.edges
        assert cover_to_walk(graph, first) == cover_to_walk(graph, second)


class TestPointValues:
    def test_k23_meets_bound(self):
        certificate = _certificate(named('K23'))
        assert (certificate.walk_len, certificate.bound, certificate.bound_raw) == (6, 6, 6)

    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_theta_excess(self, k):
        assert exact(theta(k)).exc == k + 2

    def test_k4(self):
        graph = named('K4')
        assert graph.n + exact(graph).exc - 2 == 4
        assert _certificate(graph).walk_len == 4

    def test_petersen(self):
        graph = named('Petersen')
        assert graph.n + exact(graph).exc - 2 == 11
        assert _certificate(graph).walk_len == 11


class TestExtremal:
    @pytest.mark.parametrize('steps', range(7))
    @pytest.mark.parametrize('seed', range(20))
    def test_solve_meets_lower_bound(self, steps, seed):
        certificate = _certificate(k23_constructible(steps, seed))
        assert 4 * certificate.exc == certificate.n + certificate.n2 + 4
        assert certificate.walk_len == certificate.bound == certificate.bound_raw

    @pytest.mark.parametrize('steps', range(4))
    @pytest.mark.parametrize('seed', range(5))
    def test_oracle_confirms(self, steps, seed):
        graph = k23_constructible(steps, seed)
        assert solve(graph).exc == exact(graph).exc == steps + 3
        assert is_extremal(graph)


@pytest.mark.slow
def test_bench_scaling():
    timings = []
    for steps in (33, 66, 133, 266, 533):
        graph = k23_constructible(steps, 0)
        started = time.perf_counter()
        cover = solve(graph)
        assert validate_walk(graph, cover_to_walk(graph, cover)) == graph.n + cover.exc - 2
        timings.append(max(time.perf_counter() - started, 1e-3))
        assert 4 * cover.exc == graph.n + graph.degree_profile().n2 + 4
    assert all(later <= 5 * earlier for earlier, later in zip(timings, timings[1:]))

import itertools
import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from vlgraph.census import enumerate_pitch_sets
from vlgraph.centrality import (
    DisconnectedGraphError,
    betweenness_centrality,
    betweenness_raw,
    betweenness_raw_by_paths,
    closeness_centrality,
    communicability,
    degree_centrality,
    expm,
    katz_centrality,
    katz_series,
    spectral_radius,
)
from vlgraph.classical import find_isomorphism, geodesic_distances
from vlgraph.graph import VoiceLeadingGraph, adjacency_matrix, build_graph, walk_matrix
from vlgraph.pitch import PitchClassSet

from conftest import C_MAJOR_PLUS, graph_of, to_nx, vertex


def complete(n):
    return VoiceLeadingGraph(PitchClassSet(()), (None,) * n, frozenset(itertools.combinations(range(n), 2)))


def abstract(n, edges):
    return VoiceLeadingGraph(PitchClassSet(()), (None,) * n, frozenset((min(e), max(e)) for e in edges))


@st.composite
def random_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return abstract(n, chosen)


class TestDegreeCentrality:
    def test_table_values(self, harmonic_minor):
        dc = degree_centrality(harmonic_minor)
        assert dc[vertex(harmonic_minor, "c")] == Fraction(2, 9)
        assert dc[vertex(harmonic_minor, "ab")] == Fraction(4, 9)

    def test_edge(self):
        assert degree_centrality(abstract(2, [(0, 1)])) == [1, 1]

    def test_too_small(self):
        with pytest.raises(ValueError):
            degree_centrality(abstract(1, []))


class TestCloseness:
    def test_table_values(self, harmonic_minor):
        c = closeness_centrality(harmonic_minor)
        assert c[vertex(harmonic_minor, "c")] == pytest.approx(0.45, abs=1e-3)
        assert c[vertex(harmonic_minor, "ab")] == pytest.approx(0.563, abs=1e-3)

    def test_complete(self):
        assert closeness_centrality(complete(5)) == [1.0] * 5

    def test_disconnected(self, whole_tone):
        with pytest.raises(DisconnectedGraphError):
            closeness_centrality(whole_tone)

    def test_against_networkx(self, chromatic):
        ref = nx.closeness_centrality(to_nx(chromatic))
        assert closeness_centrality(chromatic) == pytest.approx([ref[i] for i in range(40)], abs=1e-12)


class TestBetweenness:
    def test_table_values(self, harmonic_minor):
        b = betweenness_centrality(harmonic_minor)
        assert b[vertex(harmonic_minor, "ab")] == pytest.approx(0.255, abs=1e-3)
        assert b[vertex(harmonic_minor, "c")] == pytest.approx(0.032, abs=1e-3)
        assert min(b) == b[vertex(harmonic_minor, "c")]
        assert sorted(b)[1] > b[vertex(harmonic_minor, "c")]

    def test_leaf_is_zero(self):
        g = graph_of("enigmatic-minor")
        b = betweenness_centrality(g)
        for v, d in enumerate(g.degrees()):
            if d == 1:
                assert b[v] == 0

    def test_disconnected(self, whole_tone):
        with pytest.raises(ValueError):
            betweenness_centrality(whole_tone)

    def test_within_unit_interval(self, chromatic):
        assert all(0 <= x <= 1 for x in betweenness_centrality(chromatic))

    def test_against_networkx(self, chromatic):
        ref = nx.betweenness_centrality(to_nx(chromatic), normalized=True)
        assert betweenness_centrality(chromatic) == pytest.approx([ref[i] for i in range(40)], abs=1e-12)

    def test_exact_agreement_on_scale_graphs(self):
        checked = 0
        for scale in enumerate_pitch_sets(3, 12):
            g = build_graph(scale)
            if g.order <= 12:
                assert betweenness_raw(g) == betweenness_raw_by_paths(g)
                checked += 1
        assert checked > 3000

    @settings(max_examples=200, deadline=None)
    @given(random_graphs())
    def test_exact_agreement_random(self, g):
        assert betweenness_raw(g) == betweenness_raw_by_paths(g)


class TestSpectralRadius:
    def test_harmonic_minor(self, harmonic_minor):
        assert spectral_radius(adjacency_matrix(harmonic_minor)) == pytest.approx(2.768, abs=1e-3)

    def test_cycle_and_bipartite(self, diatonic, hexatonic):
        assert spectral_radius(adjacency_matrix(diatonic)) == pytest.approx(2, abs=1e-6)
        # cube is bipartite: eigenvalues +3 and -3
        assert spectral_radius(adjacency_matrix(hexatonic)) == pytest.approx(3, abs=1e-6)

    def test_zero(self, caplog):
        assert spectral_radius(np.zeros((1, 1))) == 0
        assert "zero matrix" in caplog.text

    def test_against_eigvalsh_and_bounds(self):
        for scale in enumerate_pitch_sets(3, 12):
            if scale.bitmask % 9:
                continue
            g = build_graph(scale)
            if g.size == 0:
                continue
            a = adjacency_matrix(g)
            rho = spectral_radius(a)
            assert rho == pytest.approx(np.linalg.eigvalsh(a).max(), abs=1e-7)
            degrees = g.degrees()
            assert max(degrees) + 1e-9 >= rho >= sum(degrees) / len(degrees) - 1e-9


class TestKatz:
    def test_alpha_zero(self, harmonic_minor):
        a = adjacency_matrix(harmonic_minor)
        assert not katz_series(a, 0.0, terms=50).any()
        assert not katz_centrality(a, 0.0).raw.any()

    def test_harmonic_minor_ranks(self, harmonic_minor):
        k = katz_centrality(adjacency_matrix(harmonic_minor), 0.35).raw
        ab = vertex(harmonic_minor, "ab")
        dims = {vertex(harmonic_minor, "do"), vertex(harmonic_minor, "bo")}
        assert all(k[ab] > k[v] for v in range(10) if v != ab)
        low = min(k)
        assert {v for v in range(10) if math.isclose(k[v], low, rel_tol=1e-12)} == dims
        assert all(k[v] > low + 1e-6 for v in range(10) if v not in dims)
        assert k[vertex(harmonic_minor, "fo")] > k[vertex(harmonic_minor, "do")]

    def test_inclusive_matches_published_column(self, harmonic_minor):
        k = katz_centrality(adjacency_matrix(harmonic_minor), 0.35).inclusive_normalized
        published = {"c": 0.276, "do": 0.180, "bo": 0.180, "Eb+": 0.380, "Ab": 0.380,
                     "f": 0.305, "G": 0.305, "fo": 0.283, "abo": 0.283, "ab": 0.474}
        for name, value in published.items():
            assert k[vertex(harmonic_minor, name)] == pytest.approx(value, abs=1e-3)

    def test_unit_norm(self, harmonic_minor):
        k = katz_centrality(adjacency_matrix(harmonic_minor))
        assert np.linalg.norm(k.normalized) == pytest.approx(1)
        assert np.allclose(k.normalized * np.linalg.norm(k.raw), k.raw)

    def test_alpha_out_of_range(self, harmonic_minor):
        a = adjacency_matrix(harmonic_minor)
        with pytest.raises(ValueError):
            katz_centrality(a, 0.37)
        with pytest.raises(ValueError):
            katz_centrality(a, -0.1)

    @pytest.mark.parametrize("fraction", [0.1, 0.5, 0.85])
    def test_series_200_terms(self, harmonic_minor, chromatic, fraction):
        for g in (harmonic_minor, chromatic, graph_of("octatonic")):
            a = adjacency_matrix(g)
            alpha = fraction / spectral_radius(a)
            assert np.abs(katz_centrality(a, alpha).raw - katz_series(a, alpha, terms=200)).max() < 1e-9

    @pytest.mark.parametrize("fraction", [0.9, 0.95])
    def test_series_adaptive(self, harmonic_minor, chromatic, fraction):
        for g in (harmonic_minor, chromatic):
            a = adjacency_matrix(g)
            alpha = fraction / spectral_radius(a)
            assert np.abs(katz_centrality(a, alpha).raw - katz_series(a, alpha)).max() < 1e-9

    def test_series_at_published_alpha(self, harmonic_minor):
        a = adjacency_matrix(harmonic_minor)
        assert np.abs(katz_centrality(a, 0.35).raw - katz_series(a, 0.35)).max() < 1e-9


def exact_exponential(graph, tail_tol=Fraction(1, 10**13)):
    """Rational Taylor sum of exp(A) over exact walk counts, plus its tail bound.

    Entries of A^k are at most D^k (D = max degree), so the remainder after
    N terms is at most D^(N+1) / (N+1)! * e^D.
    """
    d = max(graph.degrees(), default=0)
    n_terms = 0
    while Fraction(d ** (n_terms + 1), math.factorial(n_terms + 1)) * math.ceil(math.e ** d) > tail_tol:
        n_terms += 1
    n = graph.order
    total = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n_terms + 1):
        w = walk_matrix(graph, k)
        f = math.factorial(k)
        for i in range(n):
            for j in range(n):
                total[i][j] += Fraction(w[i][j], f)
    return np.array([[float(x) for x in row] for row in total])


class TestCommunicability:
    def test_published_values(self, harmonic_minor):
        c = communicability(adjacency_matrix(harmonic_minor))
        v = lambda name: vertex(harmonic_minor, name)
        assert c[v("c"), v("f")] == pytest.approx(0.998, abs=1e-3)
        assert c[v("c"), v("ab")] == pytest.approx(1.859, abs=1e-3)
        diag = c.diagonal()
        assert diag.max() == pytest.approx(4.500, abs=1e-3) and diag.argmax() == v("ab")
        assert diag[v("bo")] == pytest.approx(2.343, abs=1e-3)
        assert diag[v("do")] == pytest.approx(2.343, abs=1e-3)
        assert diag.min() == pytest.approx(2.343, abs=1e-3)

    def test_zero_matrix(self):
        assert np.array_equal(expm(np.zeros((3, 3))), np.eye(3))

    def test_against_exact_series(self, harmonic_minor, hexatonic, octatonic):
        for g in (harmonic_minor, hexatonic, octatonic, graph_of(C_MAJOR_PLUS["G#"])):
            assert np.abs(communicability(adjacency_matrix(g)) - exact_exponential(g)).max() < 1e-9

    def test_against_scipy(self, chromatic):
        a = adjacency_matrix(chromatic)
        ref = scipy.linalg.expm(a.astype(float))
        assert np.abs(expm(a) - ref).max() < 1e-9 * max(1, np.abs(ref).max())

    def test_shortest_path_lower_bound(self, harmonic_minor, chromatic):
        for g in (harmonic_minor, chromatic):
            c = communicability(adjacency_matrix(g))
            d = geodesic_distances(g)
            assert (c.diagonal() >= 1).all()
            assert np.allclose(c, c.T)
            walks = {s: walk_matrix(g, s) for s in set(d.flatten().tolist())}
            for i in range(g.order):
                for j in range(g.order):
                    s = int(d[i, j])
                    n_shortest = walks[s][i][j]
                    assert c[i, j] >= n_shortest / math.factorial(s) - 1e-12

    @settings(max_examples=60, deadline=None)
    @given(random_graphs(max_n=9), st.data())
    def test_adding_an_edge_never_decreases(self, g, data):
        missing = [e for e in itertools.combinations(range(g.order), 2) if e not in g.edges]
        if not missing:
            return
        extra = data.draw(st.sampled_from(missing))
        before = communicability(adjacency_matrix(g))
        after = communicability(adjacency_matrix(abstract(g.order, set(g.edges) | {extra})))
        assert (after >= before - 1e-12).all()


def katz_half_critical(g):
    a = adjacency_matrix(g)
    return list(katz_centrality(a, 0.5 / spectral_radius(a)).raw)


class TestInvariance:
    def test_measures_permute_under_isomorphism(self):
        graphs = [graph_of(C_MAJOR_PLUS[k]) for k in ("C#", "D#", "F#", "A#")]
        g1 = graphs[0]
        for g2 in graphs[1:]:
            mapping = find_isomorphism(g1, g2)
            for measure in (degree_centrality, closeness_centrality, betweenness_centrality,
                            lambda g: katz_centrality(adjacency_matrix(g)).raw):
                m1, m2 = measure(g1), measure(g2)
                for v, w in mapping.items():
                    assert m1[v] == pytest.approx(m2[w], abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(["harmonic-minor", "melodic-minor", "octatonic", "0,2,4,5,7,8,9,11", "major"]),
           st.integers(1, 11))
    def test_transposition_preserves_rank_orders(self, name, k):
        g = graph_of(name)
        h = graph_of(f"{name}@{k}" if name[0].isalpha() else ",".join(str((int(p) + k) % 12) for p in name.split(",")))
        image = [h.index_of(t.transpose(k)) for t in g.vertices]

        def ranks(values):
            return [sorted(set(np.round(values, 12))).index(round(x, 12)) for x in values]

        for measure in (lambda x: [float(f) for f in degree_centrality(x)], closeness_centrality,
                        betweenness_centrality, katz_half_critical):
            mg, mh = measure(g), measure(h)
            assert ranks(mg) == ranks([mh[image[v]] for v in range(g.order)])

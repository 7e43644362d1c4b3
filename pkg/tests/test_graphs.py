import random

import pytest

from charideals import (BlowupSpec, Graph, Graph6Error, adjacency_matrix, blowup,
                        induced_subgraph, is_isomorphic, laplacian_matrix,
                        parse_edge_list, parse_graph6, to_graph6, twin_quotient)
from charideals.catalog import (complete_graph, complete_multipartite_graph,
                                cycle_graph, path_graph, star_graph)
from charideals.graphs import (closed_twin_classes, format_edge_list,
                               open_twin_classes, true_twin_quotient)

import oracles


def test_parse_diamond():
    g = parse_graph6("C^")
    assert g.n == 4
    assert sorted(g.edges()) == [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_parse_k1():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count == 0


def test_parse_edo():
    g = parse_graph6("Edo_")
    assert g.n == 6
    assert sorted(g.edges()) == [(0, 1), (0, 3), (0, 4), (1, 4), (2, 3), (2, 5)]


def test_graph6_round_trip_random():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 30)
        g = oracles.random_graph(rng, n, rng.random())
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_header_tolerated():
    assert parse_graph6(">>graph6<<C^") == parse_graph6("C^")


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as err:
        parse_graph6("C^^")
    assert err.value.offset == 2  # first byte past the expected adjacency bytes
    with pytest.raises(Graph6Error) as err:
        parse_graph6("C")
    with pytest.raises(Graph6Error) as err:
        parse_graph6("C" + chr(20))
    assert err.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6("~??")  # multi-byte size
    with pytest.raises(Graph6Error) as err:
        parse_graph6("B" + chr(63 + 0b000100))  # padding bit set after the 3 used bits
    assert err.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("Ã^")


def test_to_graph6_rejects_large():
    with pytest.raises(ValueError):
        to_graph6(Graph(63))


def test_adjacency_matrix_diamond():
    a = adjacency_matrix(parse_graph6("C^"))
    assert a.to_lists() == [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]


def test_adjacency_and_laplacian_k1_k3():
    k1 = complete_graph(1)
    assert adjacency_matrix(k1).to_lists() == [[0]]
    assert laplacian_matrix(k1).to_lists() == [[0]]
    lap = laplacian_matrix(complete_graph(3))
    assert all(sum(row) == 0 for row in lap.to_lists())


def test_induced_subgraph_examples():
    diamond = parse_graph6("C^")
    p3 = diamond.subgraph([0, 2, 1])
    assert is_isomorphic(p3, path_graph(3))
    assert induced_subgraph(diamond, range(4)) == diamond
    k5 = complete_graph(5)
    assert induced_subgraph(k5, [0, 2, 3, 4]) == complete_graph(4)
    with pytest.raises(ValueError):
        induced_subgraph(k5, [0, 9])


def test_edge_list_round_trip():
    g = cycle_graph(5)
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("0 1\n1 2").n == 3
    assert parse_edge_list("n 4\n0 1").n == 4
    with pytest.raises(ValueError):
        parse_edge_list("0 1 2")


def test_connectivity_and_components():
    assert cycle_graph(4).is_connected()
    g = Graph(4, [(0, 1), (2, 3)])
    assert not g.is_connected()
    assert g.components() == [[0, 1], [2, 3]]
    assert Graph(1).is_connected()


def test_regular_degree():
    assert cycle_graph(5).regular_degree() == 2
    assert complete_graph(4).regular_degree() == 3
    assert path_graph(3).regular_degree() is None
    assert Graph(1).regular_degree() == 0


def test_blowup_identity_and_size():
    g = cycle_graph(4)
    assert blowup(BlowupSpec(g, (1, 1, 1, 1))) == g
    big = blowup(BlowupSpec(g, (-4, -4, -4, -4)))
    assert big.n == 16
    assert big.regular_degree() == 11
    with pytest.raises(ValueError):
        BlowupSpec(g, (1, 0, 1, 1))


def test_blowup_star_figure():
    # apex first: stable pair, then a stable singleton and two clique pairs
    got = blowup(BlowupSpec(star_graph(4), (2, 1, -2, -2)))
    drawn = Graph(7, [(0, 4), (0, 2), (1, 2), (1, 5), (1, 6), (2, 3),
                      (4, 5), (0, 5), (0, 3), (1, 3), (1, 4), (0, 6)])
    assert got.n == 7
    # apex class is a 2-element stable set adjacent to all other vertices
    assert not got.has_edge(0, 1)
    assert all(got.has_edge(0, v) and got.has_edge(1, v) for v in range(2, 7))
    assert is_isomorphic(got, drawn)


def test_blowup_clique_classes():
    g = blowup(BlowupSpec(path_graph(2), (-2, 3)))
    # one clique pair fully joined to a stable triple
    assert g.n == 5
    assert g.has_edge(0, 1)
    assert not g.has_edge(2, 3)
    assert all(g.has_edge(u, v) for u in (0, 1) for v in (2, 3, 4))


def test_twin_classes():
    km = complete_multipartite_graph((2, 2))
    assert sorted(map(sorted, open_twin_classes(km))) == [[0, 1], [2, 3]]
    assert sorted(map(len, closed_twin_classes(km))) == [1, 1, 1, 1]
    k3 = complete_graph(3)
    assert sorted(map(len, closed_twin_classes(k3))) == [3]


def test_twin_quotient_examples():
    c4 = cycle_graph(4)
    big = blowup(BlowupSpec(c4, (-2, -2, -2, -2)))
    spec = twin_quotient(big)
    assert spec is not None
    assert is_isomorphic(spec.underlying, c4)
    assert spec.d == (-2, -2, -2, -2)
    assert is_isomorphic(blowup(spec), big)

    spec = twin_quotient(complete_graph(5))
    assert spec.underlying.n == 1 and spec.d == (-5,)

    c5 = cycle_graph(5)
    spec = twin_quotient(c5)
    assert spec.d == (1, 1, 1, 1, 1)
    assert blowup(spec) == c5


def test_twin_quotient_mixed_classes():
    # diamond: one stable pair of false twins, one clique pair of true twins
    spec = twin_quotient(parse_graph6("C^"))
    assert sorted(spec.d) == [-2, 2]
    assert is_isomorphic(blowup(spec), parse_graph6("C^"))


def test_twin_quotient_round_trip_random():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(1, 7)
        g = oracles.random_graph(rng, n)
        spec = twin_quotient(g)
        if spec is not None:
            assert is_isomorphic(blowup(spec), g)


def test_true_twin_quotient():
    big = blowup(BlowupSpec(cycle_graph(4), (-3, -1, -2, -1)))
    q, sizes = true_twin_quotient(big)
    assert is_isomorphic(q, cycle_graph(4))
    assert sorted(sizes) == [1, 1, 2, 3]


def test_blowup_then_quotient_round_trip_on_twin_free_bases():
    rng = random.Random(17)
    bases = [cycle_graph(5), path_graph(4), cycle_graph(4), star_graph(4)]
    for _ in range(100):
        base = rng.choice(bases)
        d = tuple(rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(base.n))
        g = blowup(BlowupSpec(base, d))
        spec = twin_quotient(g)
        if spec is not None:
            assert is_isomorphic(blowup(spec), g)

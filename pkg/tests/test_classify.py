import random

import pytest

from charideals import (BlowupSpec, adjacency_matrix, algebraic_corank, blowup,
                        canonical_form, classify, count_unit_factors, cross_check,
                        invariant_factors_from_deltas, delta_sequence, is_C_leq,
                        is_K_leq_regular, is_S_leq, laplacian_matrix, lookup,
                        snf_diagonal)
from charideals.catalog import (complete_graph, complete_multipartite_graph,
                                cycle_graph, path_graph, prism_graph, star_graph)
from charideals.classify import complete_multipartite_parts
from charideals.graphs import Graph

import oracles


def test_classify_rejects_disconnected_and_empty():
    with pytest.raises(ValueError):
        classify(Graph(2))
    with pytest.raises(ValueError):
        classify(Graph(0))


def test_c5_report():
    rep = classify(cycle_graph(5))
    assert rep.memberships["C<=3"] and not rep.memberships["C<=2"]
    assert rep.memberships["K<=3"] and not rep.memberships["K<=2"]
    assert rep.corank == 3
    assert rep.phi_laplacian is not None


def test_regular_tripartite_in_k2():
    g = complete_multipartite_graph((2, 2, 2))
    rep = classify(g)
    assert rep.memberships["K<=2"]
    lap = snf_diagonal(laplacian_matrix(g))
    assert lap.factors[2] != 1


def test_paw_not_in_s3():
    rep = classify(lookup("paw"))
    assert not rep.memberships["S<=3"]
    assert rep.phi_adjacency == 4


def test_k4_s_memberships():
    member2, _ = is_S_leq(complete_graph(4), 2)
    member3, _ = is_S_leq(complete_graph(4), 3)
    assert not member2 and member3


def test_k123_in_s2():
    member, cert = is_S_leq(complete_multipartite_graph((1, 2, 3)), 2)
    assert member
    assert cert["form"] == "complete-multipartite"


def test_k1_in_s1():
    member, cert = is_S_leq(complete_graph(1), 1)
    assert member and cert["form"] == "K1"
    assert not is_S_leq(complete_graph(2), 1)[0]


def test_k5_minus_e_not_in_c2():
    member, cert = is_C_leq(lookup("k5-e"), 2)
    assert not member
    assert cert["forbidden"] == "k5-e"


def test_prism_in_c3():
    member, cert = is_C_leq(prism_graph(), 3)
    assert member


def test_mixed_sign_star_blowup_is_outside_c3():
    # A star blow-up with a stable apex pair is NOT covered by the structural
    # theorem (which requires all-clique classes): the stable pair joined to
    # K_2 + 2K_1 is exactly one of the 14 obstructions, so the co-rank is 4.
    g = blowup(BlowupSpec(star_graph(4), (2, 1, -2, -2)))
    member, cert = is_C_leq(g, 3)
    assert not member
    assert algebraic_corank(g) == 4
    assert cert["forbidden"] == "co-diamond-k2"
    # with every class a clique, membership holds as the theorem states
    g = blowup(BlowupSpec(star_graph(4), (-2, -1, -2, -2)))
    member, _ = is_C_leq(g, 3)
    assert member
    assert algebraic_corank(g) <= 3


def test_all_clique_star_blowups_in_c3():
    rng = random.Random(11)
    for _ in range(20):
        r = tuple(rng.choice((-1, -2, -3)) for _ in range(4))
        assert is_C_leq(blowup(BlowupSpec(star_graph(4), r)), 3)[0]
        assert is_C_leq(blowup(BlowupSpec(cycle_graph(4), r)), 3)[0]


def test_petersen_not_in_k3():
    pet = lookup("petersen")
    member, _ = is_K_leq_regular(pet, 3)
    assert not member
    assert count_unit_factors(laplacian_matrix(pet)) >= 4
    # independent delta route on the Laplacian
    assert invariant_factors_from_deltas(delta_sequence(laplacian_matrix(pet))).ones >= 4


def test_cycle_blowups_in_k3():
    for r in (1, 2, 3):
        g = blowup(BlowupSpec(cycle_graph(4), (-r,) * 4))
        assert is_K_leq_regular(g, 3)[0]


def test_k6_in_k1():
    member, cert = is_K_leq_regular(complete_graph(6), 1)
    assert member and cert["form"] == "complete"


def test_k_routes_reject_irregular():
    with pytest.raises(ValueError):
        is_K_leq_regular(path_graph(3), 2)


def test_k_closed_list_members():
    assert is_K_leq_regular(complete_multipartite_graph((3, 3)), 2)[0]
    assert is_K_leq_regular(complete_multipartite_graph((3, 3, 3)), 2)[0]
    assert not is_K_leq_regular(cycle_graph(5), 2)[0]
    assert is_K_leq_regular(prism_graph(), 3)[0]
    assert is_K_leq_regular(complete_multipartite_graph((2, 2, 2, 2)), 3)[0]
    assert not is_K_leq_regular(cycle_graph(6), 3)[0]


def test_invalid_k_values():
    with pytest.raises(ValueError):
        is_S_leq(complete_graph(2), 4)
    with pytest.raises(ValueError):
        is_C_leq(complete_graph(2), 0)
    with pytest.raises(ValueError):
        is_K_leq_regular(complete_graph(2), 5)


def test_complete_multipartite_recognition():
    assert complete_multipartite_parts(complete_multipartite_graph((3, 2, 1))) == (3, 2, 1)
    assert complete_multipartite_parts(complete_graph(4)) == (1, 1, 1, 1)
    assert complete_multipartite_parts(path_graph(4)) is None
    assert complete_multipartite_parts(cycle_graph(4)) == (2, 2)


def test_s4_screen_finds_witness():
    # K_6 has phi = 5 and is itself one of the 43 minimal graphs
    rep = classify(complete_graph(6))
    assert not rep.memberships["S<=4"]
    assert "forbidden" in rep.certificates["S<=4"]
    assert rep.certificates["S<=4"]["route"] == "partial"


def test_report_json_shape():
    rep = classify(lookup("diamond"))
    d = rep.to_json_dict()
    assert d["graph6"] == canonical_form(lookup("diamond"))
    assert set(d) == {"graph6", "phi_adjacency", "phi_laplacian", "corank",
                      "memberships", "certificates"}
    import json
    json.dumps(d)


def test_cross_check_n1():
    res = cross_check(1)
    assert res.graphs_checked == 1
    assert not res.violations
    assert all(res.family_counts[f] == 1 for f in res.family_counts)


def test_cross_check_parallel_matches_sequential():
    seq = cross_check(4)
    par = cross_check(4, workers=2)
    assert seq.family_counts == par.family_counts
    assert seq.graphs_checked == par.graphs_checked == 10
    assert not par.violations


def test_cross_check_n5():
    res = cross_check(5)
    assert res.graphs_checked == 31
    assert not res.violations
    assert res.family_counts["S<=1"] == 1
    assert res.family_counts["C<=1"] == 5  # K_1 .. K_5


def test_hereditary_closure_sampled():
    rng = random.Random(91)
    fams = [("S<=2", lambda g: is_S_leq(g, 2)[0]), ("C<=2", lambda g: is_C_leq(g, 2)[0]),
            ("S<=3", lambda g: is_S_leq(g, 3)[0]), ("C<=3", lambda g: is_C_leq(g, 3)[0])]
    for _ in range(60):
        g = oracles.random_connected_graph(rng, rng.randint(2, 6))
        results = {name: fn(g) for name, fn in fams}
        keep = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
        h = g.subgraph(keep)
        if not h.is_connected():
            continue
        for name, fn in fams:
            if results[name]:
                assert fn(h), (name, canonical_form(g), keep)


def test_blowup_stability_of_s4():
    # stable-set blow-ups preserve nonzero adjacency invariant factors,
    # hence membership
    rng = random.Random(93)
    cases = 0
    while cases < 60:
        g = oracles.random_connected_graph(rng, rng.randint(2, 5))
        phi = count_unit_factors(adjacency_matrix(g))
        if phi > 4:
            continue
        d = tuple(rng.randint(1, 3) for _ in range(g.n))
        if sum(d) > 10:
            continue
        big = blowup(BlowupSpec(g, d))
        small_nz = [v for v in snf_diagonal(adjacency_matrix(g)) if v]
        big_snf = snf_diagonal(adjacency_matrix(big))
        big_nz = [v for v in big_snf if v]
        assert small_nz == big_nz
        assert big_snf.ones <= 4
        cases += 1

"""Named-graph catalog: parametric families, small named graphs, the
14-graph obstruction family for three trivial characteristic ideals, and
the 43 minimal forbidden graphs for the four-unit-invariant Smith family.
"""

from __future__ import annotations

import re
from difflib import get_close_matches

from .graphs import Graph, parse_graph6


class UnknownGraphError(KeyError):
    def __init__(self, name, suggestions):
        hint = f"; close matches: {', '.join(suggestions)}" if suggestions else ""
        super().__init__(f"unknown catalog graph {name!r}{hint}")
        self.suggestions = suggestions


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_minus_edge(n):
    if n < 2:
        raise ValueError("K_n - e needs at least 2 vertices")
    g = complete_graph(n)
    adj = list(g.adj)
    adj[0] &= ~2
    adj[1] &= ~1
    return Graph.from_adj(adj)


def star_graph(n):
    """Star with n vertices: apex 0 plus n-1 leaves."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_multipartite_graph(parts):
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    edges = []
    start = 0
    blocks = []
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            edges.extend((u, v) for u in blocks[a] for v in blocks[b])
    return Graph(n, edges)


def prism_graph():
    """The triangular prism: two triangles joined by a perfect matching."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def diamond_graph():
    return complete_minus_edge(4)


def paw_graph():
    return Graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


def house_graph():
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])


# The 14 minimal obstructions to having at most three trivial characteristic
# ideals, with the edge lists of their standard drawings.
FAMILY_F = {
    "fork": Graph(5, [(0, 3), (0, 4), (1, 4), (2, 4)]),
    "4-pan": Graph(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]),
    "bull": Graph(5, [(0, 3), (0, 4), (1, 3), (2, 4), (3, 4)]),
    "dart": Graph(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 4), (3, 4)]),
    "p5": Graph(5, [(0, 2), (0, 4), (1, 3), (1, 4)]),
    "co-4-pan": Graph(5, [(0, 2), (0, 4), (1, 3), (1, 4), (2, 4)]),
    "3-fan": Graph(5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4), (3, 4)]),
    "kite": Graph(5, [(0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (2, 4)]),
    "s6+e": Graph(6, [(0, 4), (0, 5), (1, 5), (2, 5), (3, 5), (4, 5)]),
    "co-diamond-k2": Graph(6, [(0, 3), (0, 4), (0, 5), (1, 4), (1, 5),
                               (2, 4), (2, 5), (3, 4), (3, 5)]),
    "k33+e": Graph(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
                       (2, 3), (2, 4), (2, 5), (3, 5)]),
    "co-p3-cop3": Graph(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3),
                            (1, 4), (1, 5), (2, 4), (2, 5), (3, 5), (4, 5)]),
    "k1,1,1,2,2": complete_multipartite_graph((2, 2, 1, 1, 1)),
    "k1,1,1,1,4": complete_multipartite_graph((4, 1, 1, 1, 1)),
}

# Join-form alternative names for the members that are joins (used as a
# cross-check on the edge lists above).
FAMILY_F_JOINS = {
    "dart": lambda: complete_graph(1).join(path_graph(3).disjoint_union(complete_graph(1))),
    "3-fan": lambda: path_graph(4).join(complete_graph(1)),
    "s6+e": lambda: complete_graph(1).join(
        complete_graph(2).disjoint_union(Graph(3))),
    "co-diamond-k2": lambda: Graph(2).join(
        complete_graph(2).disjoint_union(Graph(2))),
    "k33+e": lambda: Graph(3).join(complete_graph(2).disjoint_union(Graph(1))),
    "co-p3-cop3": lambda: path_graph(3).join(
        complete_graph(2).disjoint_union(Graph(1))),
    "k1,1,1,2,2": lambda: complete_graph(3).join(cycle_graph(4)),
    "k1,1,1,1,4": lambda: complete_graph(4).join(Graph(4)),
}

# Caption strings of the figure listing the minimal forbidden graphs for the
# family with at most four unit invariant factors of the adjacency matrix.
FORBIDDEN_S4 = (
    "Edo_", "Eto_", "Elo_", "E|o_", "Elw_", "E|w_", "Epoo",
    "Exwo", "ExGG", "ExGg", "E~_G", "E~cG", "E~sG", "E~{G",
    "Ep_G", "EpgG", "EpOG", "ExOG", "ExoG", "ExwG", "EpWG",
    "ExWG", "EpSG", "EpsG", "Ep{G", "E|OW", "E~oW", "E~sW",
    "E|qW", "E|SW", "E~TW", "EzSW", "ErOW", "EzOW", "EzPW",
    "EroW", "EvoW", "EvsW", "Ezow", "Ez{w", "E~~w", "E~YW",
    "E~}W",
)

_FIXED = {
    "diamond": diamond_graph,
    "paw": paw_graph,
    "house": house_graph,
    "prism": prism_graph,
    "k3xk2": prism_graph,
    "petersen": lambda: Graph(10, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                                   (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                                   (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]),
}

_COLLECTIONS = {
    "family-f": lambda: [FAMILY_F[k] for k in sorted(FAMILY_F)],
    "forbidden-s4": lambda: [parse_graph6(s) for s in FORBIDDEN_S4],
}


def collection(name):
    key = name.lower()
    if key not in _COLLECTIONS:
        raise UnknownGraphError(name, get_close_matches(key, _COLLECTIONS, n=3))
    return _COLLECTIONS[key]()


def names():
    dynamic = ["p<n>", "c<n>", "k<n>", "k<n>-e", "s<n>", "k<a>,<b>,..."]
    return sorted(_FIXED) + sorted(FAMILY_F) + dynamic + sorted(_COLLECTIONS)


def lookup(name):
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    if key in FAMILY_F:
        return FAMILY_F[key]
    m = re.fullmatch(r"p(\d+)", key)
    if m:
        return path_graph(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)", key)
    if m:
        return cycle_graph(int(m.group(1)))
    m = re.fullmatch(r"k(\d+)", key)
    if m:
        return complete_graph(int(m.group(1)))
    m = re.fullmatch(r"k(\d+)-e", key)
    if m:
        return complete_minus_edge(int(m.group(1)))
    m = re.fullmatch(r"s(\d+)", key)
    if m:
        return star_graph(int(m.group(1)))
    m = re.fullmatch(r"k(\d+(?:,\d+)+)", key)
    if m:
        return complete_multipartite_graph(tuple(int(p) for p in m.group(1).split(",")))
    pool = list(_FIXED) + list(FAMILY_F) + list(_COLLECTIONS)
    raise UnknownGraphError(name, get_close_matches(key, pool, n=3))

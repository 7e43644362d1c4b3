"""Family membership for connected graphs, by three independent routes.

Three hereditary families are decided:

* at most k unit invariant factors of the adjacency matrix (k = 1..4),
* at most k trivial characteristic ideals (k = 1..3),
* for regular graphs, at most k unit invariant factors of the Laplacian
  (k = 1..3).

Each membership is decided by direct computation, by a forbidden induced
subgraph list, and by structural recognition; any disagreement raises,
naming the graph.  The k = 4 adjacency family has no completeness theorem,
so only the count route plus a screen against the known 43 minimal
forbidden graphs runs there, and the certificate marks the route partial.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import (FAMILY_F, FORBIDDEN_S4, complete_graph, complete_minus_edge,
                      cycle_graph, path_graph, paw_graph, prism_graph, star_graph)
from .graphs import (adjacency_matrix, laplacian_matrix, parse_graph6,
                     to_graph6, true_twin_quotient)
from .graph_ideals import algebraic_corank
from .intlinalg import ConsistencyError, count_unit_factors, snf_diagonal
from .isomorphism import canonical_form, find_induced, is_isomorphic
from .mining import enumerate_connected


class RouteDisagreement(ConsistencyError):
    def __init__(self, graph6, family, routes):
        detail = ", ".join(f"{name}={val}" for name, val in routes.items())
        super().__init__(f"routes disagree on {family} for {graph6}: {detail}")
        self.graph6 = graph6
        self.family = family
        self.routes = routes


_PATTERNS = {
    "p2": path_graph(2),
    "p3": path_graph(3),
    "p4": path_graph(4),
    "paw": paw_graph(),
    "k4": complete_graph(4),
    "k5": complete_graph(5),
    "k5-e": complete_minus_edge(5),
}

_S_FORBIDDEN = {1: ("p2",), 2: ("p4", "paw", "k4"), 3: ("p4", "paw", "k5")}
_C_FORBIDDEN = {1: ("p3",), 2: ("p4", "paw", "k5-e")}

_S4_PATTERNS = tuple(parse_graph6(s) for s in FORBIDDEN_S4)


def _find_forbidden(g, names):
    for name in names:
        emb = find_induced(g, _PATTERNS[name])
        if emb is not None:
            return name, emb
    return None


def _find_family_f(g):
    for name in sorted(FAMILY_F):
        emb = find_induced(g, FAMILY_F[name])
        if emb is not None:
            return name, emb
    return None


def complete_multipartite_parts(g):
    """Part sizes (descending) if g is complete multipartite, else None."""
    comp = g.complement()
    parts = comp.components()
    for part in parts:
        mask = 0
        for v in part:
            mask |= 1 << v
        want = len(part) - 1
        for v in part:
            if (comp.adj[v] & mask).bit_count() != want:
                return None
    return tuple(sorted((len(p) for p in parts), reverse=True))


def _clique_blowup_form(g):
    """Recognise clique blow-ups of induced subgraphs of the 4-cycle or the
    4-vertex star by quotienting true twins."""
    q, sizes = true_twin_quotient(g)
    if q.n > 4:
        return None
    if find_induced(cycle_graph(4), q) is not None:
        return {"form": "clique-blowup-of-4-cycle", "class_sizes": list(sizes)}
    if find_induced(star_graph(4), q) is not None:
        return {"form": "clique-blowup-of-4-star", "class_sizes": list(sizes)}
    return None


def _structural_s(g, k):
    if k == 1:
        return {"form": "K1"} if g.n == 1 else None
    parts = complete_multipartite_parts(g)
    if parts is not None and len(parts) <= k + 1:
        return {"form": "complete-multipartite", "parts": list(parts)}
    return None


def _structural_c(g, k):
    parts = complete_multipartite_parts(g)
    if parts is not None and all(p == 1 for p in parts):
        return {"form": "complete", "n": g.n}
    if k == 1:
        return None
    if parts is not None and len(parts) <= (3 if k == 2 else 4):
        return {"form": "complete-multipartite", "parts": list(parts)}
    if k == 2:
        return None
    if g.n <= 5 and find_induced(cycle_graph(5), g) is not None:
        return {"form": "induced-in-5-cycle"}
    if g.n <= 6 and find_induced(prism_graph(), g) is not None:
        return {"form": "induced-in-prism"}
    return _clique_blowup_form(g)


def _check_connected(g):
    if g.n == 0:
        raise ValueError("the empty graph cannot be classified")
    if not g.is_connected():
        raise ValueError("disconnected graph: the families are defined for connected graphs")


def _routes_agree(g, family, member_by_count, forbidden_hit, structural):
    by_forb = forbidden_hit is None
    by_struct = structural is not None
    if member_by_count != by_forb or member_by_count != by_struct:
        raise RouteDisagreement(canonical_form(g), family, {
            "count": member_by_count,
            "forbidden-free": by_forb,
            "structural": by_struct,
        })


def _certificate(member, structural, forbidden_hit, counts):
    cert = dict(counts)
    if member:
        cert.update(structural)
    else:
        name, emb = forbidden_hit
        cert["forbidden"] = name
        cert["embedding"] = list(emb)
    return cert


def is_S_leq(g, k, _phi=None):
    """Membership in the family with at most k unit adjacency invariant factors."""
    if k not in (1, 2, 3):
        raise ValueError("structural characterisations exist for k in {1, 2, 3}")
    _check_connected(g)
    phi = count_unit_factors(adjacency_matrix(g)) if _phi is None else _phi
    member = phi <= k
    hit = _find_forbidden(g, _S_FORBIDDEN[k])
    structural = _structural_s(g, k)
    _routes_agree(g, f"S<={k}", member, hit, structural)
    return member, _certificate(member, structural, hit, {"phi_adjacency": phi})


def is_C_leq(g, k, _gamma=None):
    """Membership in the family with at most k trivial characteristic ideals."""
    if k not in (1, 2, 3):
        raise ValueError("characterisations exist for k in {1, 2, 3}")
    _check_connected(g)
    gamma = algebraic_corank(g) if _gamma is None else _gamma
    member = gamma <= k
    hit = _find_forbidden(g, _C_FORBIDDEN[k]) if k <= 2 else _find_family_f(g)
    structural = _structural_c(g, k)
    _routes_agree(g, f"C<={k}", member, hit, structural)
    return member, _certificate(member, structural, hit, {"corank": gamma})


def _k_regular_structural(g, k):
    parts = complete_multipartite_parts(g)
    if parts is not None:
        if all(p == 1 for p in parts):
            return {"form": "complete", "n": g.n}
        if k >= 2 and len(parts) in (2, 3) and len(set(parts)) == 1:
            return {"form": "balanced-complete-multipartite", "parts": list(parts)}
        if k >= 3 and len(parts) == 4 and len(set(parts)) == 1:
            return {"form": "balanced-complete-multipartite", "parts": list(parts)}
    if k >= 3:
        if is_isomorphic(g, cycle_graph(5)):
            return {"form": "5-cycle"}
        if is_isomorphic(g, prism_graph()):
            return {"form": "triangular-prism"}
        q, sizes = true_twin_quotient(g)
        if q.n == 4 and len(set(sizes)) == 1 and is_isomorphic(q, cycle_graph(4)):
            return {"form": "balanced-clique-blowup-of-4-cycle", "class_sizes": list(sizes)}
    return None


def is_K_leq_regular(g, k, _phi_l=None):
    """Membership, for regular g, in the family with at most k unit Laplacian
    invariant factors; matched against the closed list and cross-checked
    against the directly computed count."""
    if k not in (1, 2, 3):
        raise ValueError("the closed lists cover k in {1, 2, 3}")
    _check_connected(g)
    if g.regular_degree() is None:
        raise ValueError(f"graph is not regular: degrees {sorted(set(g.degrees()))}")
    phi_l = count_unit_factors(laplacian_matrix(g)) if _phi_l is None else _phi_l
    member = phi_l <= k
    structural = _k_regular_structural(g, k)
    by_struct = structural is not None
    if member != by_struct:
        raise RouteDisagreement(canonical_form(g), f"K<={k}", {
            "count": member, "structural": by_struct})
    cert = {"phi_laplacian": phi_l}
    if member:
        cert.update(structural)
    return member, cert


def _s4_partial(g, phi):
    member = phi <= 4
    cert = {"phi_adjacency": phi, "route": "partial",
            "invariant_factors": list(snf_diagonal(adjacency_matrix(g)).factors)}
    hit = None
    if g.n >= 6:
        for idx, pat in enumerate(_S4_PATTERNS):
            emb = find_induced(g, pat)
            if emb is not None:
                hit = (FORBIDDEN_S4[idx], emb)
                break
    if hit is not None:
        if member:
            raise RouteDisagreement(canonical_form(g), "S<=4", {
                "count": member, "forbidden-witness": hit[0]})
        cert["forbidden"] = hit[0]
        cert["embedding"] = list(hit[1])
    return member, cert


@dataclass
class ClassificationReport:
    graph6: str
    phi_adjacency: int
    phi_laplacian: int | None
    corank: int
    memberships: dict
    certificates: dict

    def to_json_dict(self):
        return {
            "graph6": self.graph6,
            "phi_adjacency": self.phi_adjacency,
            "phi_laplacian": self.phi_laplacian,
            "corank": self.corank,
            "memberships": dict(self.memberships),
            "certificates": dict(self.certificates),
        }


def classify(g):
    """Full per-graph record: counts, memberships and certificates, with every
    available route executed and cross-checked."""
    _check_connected(g)
    g6 = canonical_form(g)
    phi_a = count_unit_factors(adjacency_matrix(g))
    gamma = algebraic_corank(g)
    rdeg = g.regular_degree()
    phi_l = count_unit_factors(laplacian_matrix(g)) if rdeg is not None else None
    memberships = {}
    certificates = {}
    for k in (1, 2, 3):
        member, cert = is_S_leq(g, k, _phi=phi_a)
        memberships[f"S<={k}"] = member
        certificates[f"S<={k}"] = cert
    member, cert = _s4_partial(g, phi_a)
    memberships["S<=4"] = member
    certificates["S<=4"] = cert
    for k in (1, 2, 3):
        member, cert = is_C_leq(g, k, _gamma=gamma)
        memberships[f"C<={k}"] = member
        certificates[f"C<={k}"] = cert
    if rdeg is not None:
        for k in (1, 2, 3):
            member, cert = is_K_leq_regular(g, k, _phi_l=phi_l)
            memberships[f"K<={k}"] = member
            certificates[f"K<={k}"] = cert
    return ClassificationReport(g6, phi_a, phi_l, gamma, memberships, certificates)


_NESTING = (
    ("S<=1", "S<=2"), ("S<=2", "S<=3"), ("S<=3", "S<=4"),
    ("C<=1", "C<=2"), ("C<=2", "C<=3"),
    ("K<=1", "K<=2"), ("K<=2", "K<=3"),
    ("S<=1", "C<=1"), ("S<=2", "C<=2"), ("S<=3", "C<=3"),
    ("K<=1", "C<=1"), ("K<=2", "C<=2"), ("K<=3", "C<=3"),
)


@dataclass
class CrossCheckResult:
    max_n: int
    graphs_checked: int
    family_counts: dict
    violations: list

    def to_json_dict(self):
        return {
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "family_counts": dict(self.family_counts),
            "violations": list(self.violations),
        }


def _check_one(g6):
    g = parse_graph6(g6)
    try:
        rep = classify(g)
    except ConsistencyError as exc:
        return {"graph6": g6, "error": str(exc)}
    out = {"graph6": rep.graph6, "memberships": rep.memberships}
    return out


def cross_check(max_n, workers=1):
    """Classify every connected graph up to isomorphism with at most max_n
    vertices, recording route disagreements and nesting violations.  Graphs
    are distributed over a process pool when workers > 1; counters merge in
    the parent either way."""
    todo = []
    for n in range(1, max_n + 1):
        todo.extend(to_graph6(g) for g in enumerate_connected(n))
    if workers and workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, todo, chunksize=16))
    else:
        results = [_check_one(g6) for g6 in todo]
    counts = {}
    violations = []
    for res in results:
        if "error" in res:
            violations.append({"graph6": res["graph6"], "detail": res["error"]})
            continue
        m = res["memberships"]
        for fam, member in m.items():
            counts[fam] = counts.get(fam, 0) + bool(member)
        for small, big in _NESTING:
            if m.get(small) and big in m and not m[big]:
                violations.append({
                    "graph6": res["graph6"],
                    "detail": f"nesting violated: in {small} but not {big}",
                })
    return CrossCheckResult(max_n, len(todo), counts, violations)

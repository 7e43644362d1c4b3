"""Simple undirected graphs on vertex sets {0..n-1}, adjacency as row bitsets.

Includes the graph6 codec (single-byte sizes, n <= 62), the edge-list text
format, blow-ups, and twin-class machinery.  Graphs are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlinalg import IntMatrix


def bits(mask):
    """Yield set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("negative vertex count")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj_masks):
        g = object.__new__(cls)
        g.n = len(adj_masks)
        g.adj = tuple(adj_masks)
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph({self.n}, {sorted(self.edges())!r})"

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    yield (u, v)
                m >>= 1
                v += 1

    @property
    def edge_count(self):
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return tuple(a.bit_count() for a in self.adj)

    def neighbors(self, v):
        return bits(self.adj[v])

    def is_connected(self):
        if self.n <= 1:
            return True
        full = (1 << self.n) - 1
        seen = 1
        frontier = 1
        adj = self.adj
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full

    def components(self):
        out = []
        left = (1 << self.n) - 1
        adj = self.adj
        while left:
            start = (left & -left).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & ~seen
                seen |= frontier
            out.append(list(bits(seen)))
            left &= ~seen
        return out

    def regular_degree(self):
        """Common degree if the graph is regular, else None."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def complement(self):
        full = (1 << self.n) - 1
        return Graph.from_adj(tuple(~a & full & ~(1 << v) for v, a in enumerate(self.adj)))

    def subgraph(self, vertices):
        """Induced subgraph, relabelled 0..len-1 preserving the given order."""
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex in induced set")
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            m = self.adj[v]
            for w in vs:
                if m >> w & 1:
                    adj[i] |= 1 << pos[w]
        return Graph.from_adj(adj)

    def relabelled(self, order):
        if len(order) != self.n:
            raise ValueError("relabelling must list every vertex")
        return self.subgraph(order)

    def delete_vertex(self, v):
        return self.subgraph([u for u in range(self.n) if u != v])

    def disjoint_union(self, other):
        off = self.n
        adj = list(self.adj) + [a << off for a in other.adj]
        return Graph.from_adj(adj)

    def join(self, other):
        g = self.disjoint_union(other)
        left = (1 << self.n) - 1
        right = ((1 << other.n) - 1) << self.n
        adj = list(g.adj)
        for v in range(self.n):
            adj[v] |= right
        for v in range(self.n, g.n):
            adj[v] |= left
        return Graph.from_adj(adj)


def induced_subgraph(g, vertices):
    return g.subgraph(vertices)


def adjacency_matrix(g):
    return IntMatrix([[g.adj[i] >> j & 1 for j in range(g.n)] for i in range(g.n)])


def laplacian_matrix(g):
    rows = []
    for i in range(g.n):
        row = [-(g.adj[i] >> j & 1) for j in range(g.n)]
        row[i] = g.degree(i)
        rows.append(row)
    return IntMatrix(rows)


# -- graph6 codec ------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


_G6_HEADER = ">>graph6<<"


def parse_graph6(text):
    if isinstance(text, bytes):
        data = text
    else:
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character in graph6 string", exc.start) from None
    data = data.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", i)
    if data[0] == 126:
        raise Graph6Error("multi-byte vertex counts (n > 62) not supported", 0)
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - 1}",
            min(len(data), 1 + nbytes),
        )
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    adj = [0] * n
    idx = 0
    for bi in range(nbytes):
        chunk = data[1 + bi] - 63
        for k in range(5, -1, -1):
            bit = chunk >> k & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bit", 1 + bi)
            idx += 1
    return Graph.from_adj(adj)


def to_graph6(g):
    if g.n > 62:
        raise ValueError("graph6 output limited to n <= 62")
    out = [g.n + 63]
    chunk = 0
    nfill = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (col >> i & 1)
            nfill += 1
            if nfill == 6:
                out.append(chunk + 63)
                chunk = 0
                nfill = 0
    if nfill:
        out.append((chunk << (6 - nfill)) + 63)
    return bytes(out).decode("ascii")


# -- edge-list text ----------------------------------------------------------

def parse_edge_list(text):
    """One "u v" pair per line; an optional leading "n <count>" line fixes n."""
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def format_edge_list(g):
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


# -- blow-ups and twins ------------------------------------------------------

@dataclass(frozen=True)
class BlowupSpec:
    """Replace each vertex u by a clique of size -d[u] (d[u] < 0) or a stable
    set of size d[u] (d[u] > 0), joining classes completely along edges."""

    underlying: Graph
    d: tuple

    def __post_init__(self):
        d = tuple(int(v) for v in self.d)
        object.__setattr__(self, "d", d)
        if len(d) != self.underlying.n:
            raise ValueError("one multiplicity per underlying vertex required")
        if any(v == 0 for v in d):
            raise ValueError("zero blow-up multiplicity")

    @property
    def size(self):
        return sum(abs(v) for v in self.d)


def blowup(spec):
    """Vertex classes are laid out consecutively in underlying-vertex order."""
    g = spec.underlying
    sizes = [abs(v) for v in spec.d]
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    edges = []
    for u in range(g.n):
        base = offsets[u]
        if spec.d[u] < 0:
            for i in range(sizes[u]):
                for j in range(i + 1, sizes[u]):
                    edges.append((base + i, base + j))
        for v in bits(g.adj[u] >> (u + 1)):
            v += u + 1
            for i in range(sizes[u]):
                for j in range(sizes[v]):
                    edges.append((base + i, offsets[v] + j))
    return Graph(total, edges)


def _partition_by(g, key):
    groups = {}
    for v in range(g.n):
        groups.setdefault(key(v), []).append(v)
    return list(groups.values())


def open_twin_classes(g):
    """Maximal classes of false twins (equal open neighbourhoods)."""
    return _partition_by(g, lambda v: g.adj[v])


def closed_twin_classes(g):
    """Maximal classes of true twins (equal closed neighbourhoods)."""
    return _partition_by(g, lambda v: g.adj[v] | 1 << v)


def twin_quotient(g):
    """Collapse maximal twin classes into one BlowupSpec, or None if ambiguous.

    False twins become stable classes (positive multiplicity), true twins
    clique classes (negative), in a single deterministic pass keyed on the
    smallest label of each class.  The blow-up of the result is isomorphic
    to g; classifiers cross-check that rather than relying on this alone.
    """
    in_open = {}
    for cls in open_twin_classes(g):
        if len(cls) > 1:
            for v in cls:
                in_open[v] = cls
    in_closed = {}
    for cls in closed_twin_classes(g):
        if len(cls) > 1:
            for v in cls:
                in_closed[v] = cls
    if set(in_open) & set(in_closed):
        return None
    assigned = set()
    classes = []
    for v in range(g.n):
        if v in assigned:
            continue
        if v in in_open:
            cls, sign = in_open[v], 1
        elif v in in_closed:
            cls, sign = in_closed[v], -1
        else:
            cls, sign = [v], 1
        assigned.update(cls)
        classes.append((cls, sign))
    reps = [cls[0] for cls, _ in classes]
    underlying = g.subgraph(reps)
    d = tuple(sign * len(cls) for cls, sign in classes)
    return BlowupSpec(underlying, d)


def true_twin_quotient(g):
    """Collapse only true-twin classes; returns (quotient, class sizes).

    Every class is a clique and the quotient's blow-up by cliques of the
    returned sizes is isomorphic to g.  Used to recognise clique blow-ups
    of small underlying graphs.
    """
    classes = sorted(closed_twin_classes(g), key=lambda c: c[0])
    reps = [cls[0] for cls in classes]
    return g.subgraph(reps), tuple(len(cls) for cls in classes)

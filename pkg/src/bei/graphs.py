"""Simple undirected graphs on vertices 1..n, their clique complexes, and I/O.

Vertices are 1-based everywhere in the public API. Internally adjacency is
kept as integer bitmasks (bit v = vertex v; bit 0 unused), which is what makes
the exhaustive subset scans elsewhere in the package cheap.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property


class GraphFormatError(ValueError):
    """Malformed graph input (edgelist or graph6)."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex set {1..n}, edges as (u, v) pairs with u < v.

    n = 0 (the empty graph) is permitted as an internal value, e.g. as an
    induced subgraph on the empty vertex set; parsers and constructors reject it.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        for e in self.edges:
            u, v = e
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge {e} not of the form (u, v) with 1 <= u < v <= {self.n}")

    @cached_property
    def adj(self):
        """Adjacency bitmasks indexed by vertex (index 0 unused)."""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def full_mask(self):
        """Bitmask of the whole vertex set."""
        return ((1 << (self.n + 1)) - 1) & ~1

    def vertices(self):
        return range(1, self.n + 1)

    def has_edge(self, u, v):
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v):
        return mask_to_vertices(self.adj[v])

    def sorted_edges(self):
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of (u, v) pairs (either endpoint order)."""
    es = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        es.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(es))


# -- bitmask helpers ---------------------------------------------------------

def vertices_to_mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def mask_to_vertices(mask: int) -> tuple:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def component_masks(adj, mask: int) -> list:
    """Connected components of the induced subgraph on `mask`, as bitmasks.

    Ordered by smallest member vertex.
    """
    comps = []
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                grow |= adj[b.bit_length() - 1]
            frontier = grow & mask & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def count_components_mask(adj, mask: int) -> int:
    return len(component_masks(adj, mask))


# -- basic operations --------------------------------------------------------

def induced_subgraph(G: Graph, S) -> tuple:
    """Induced subgraph on S, relabeled 1..|S|.

    Returns (H, labels) where labels[i-1] is the G-vertex that became vertex i
    of H. S may be any iterable of vertices of G; S = {} yields the n = 0 graph.
    """
    vs = sorted(set(S))
    for v in vs:
        if not 1 <= v <= G.n:
            raise ValueError(f"vertex {v} not in 1..{G.n}")
    index = {v: i + 1 for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(index[u], index[v]) for u, v in G.edges if u in keep and v in keep]
    return graph(len(vs), edges), tuple(vs)


def connected_components(G: Graph) -> list:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    return [mask_to_vertices(m) for m in component_masks(G.adj, G.full_mask)]


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(component_masks(G.adj, G.full_mask)) == 1


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


# -- maximal cliques and the clique complex ----------------------------------

@dataclass(frozen=True)
class CliqueComplex:
    """The clique complex of a graph, given by its facets (the maximal cliques).

    Facets are sorted vertex tuples; the list is sorted lexicographically.
    """

    facets: tuple

    @property
    def omega(self) -> int:
        """Clique number: the size of the largest facet."""
        return max((len(f) for f in self.facets), default=0)

    def facet_masks(self) -> list:
        return [vertices_to_mask(f) for f in self.facets]


def maximal_cliques(G: Graph) -> CliqueComplex:
    """All maximal cliques via Bron-Kerbosch with pivoting.

    Isolated vertices appear as singleton facets, so the facets cover every
    vertex and every edge.
    """
    adj = G.adj
    out = []

    def expand(r_mask, p_mask, x_mask):
        if p_mask == 0 and x_mask == 0:
            out.append(r_mask)
            return
        pool = p_mask | x_mask
        pivot = (pool & -pool).bit_length() - 1
        best = -1
        m = pool
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            k = (p_mask & adj[u]).bit_count()
            if k > best:
                best, pivot = k, u
        cand = p_mask & ~adj[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(r_mask | b, p_mask & adj[v], x_mask & adj[v])
            p_mask &= ~b
            x_mask |= b

    if G.n:
        expand(0, G.full_mask, 0)
    return CliqueComplex(tuple(sorted(mask_to_vertices(m) for m in out)))


def is_chordal(G: Graph) -> bool:
    """Chordality via maximum cardinality search plus elimination-order check."""
    order = _mcs_order(G)
    position = {v: i for i, v in enumerate(order)}
    adj = G.adj
    # reversed MCS order must be a perfect elimination ordering
    for v in reversed(order):
        later = 0
        for u in mask_to_vertices(adj[v]):
            if position[u] < position[v]:
                later |= 1 << u
        m = later
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if later & ~adj[u] & ~b:
                return False
    return True


def _mcs_order(G: Graph) -> list:
    """Maximum cardinality search visit order (ties to the smallest vertex)."""
    weight = {v: 0 for v in G.vertices()}
    order = []
    unnumbered = set(G.vertices())
    while unnumbered:
        v = max(sorted(unnumbered), key=lambda u: weight[u])
        order.append(v)
        unnumbered.discard(v)
        for u in mask_to_vertices(G.adj[v]):
            if u in unnumbered:
                weight[u] += 1
    return order


def leaf_order(complex_: CliqueComplex):
    """A facet order in which every facet is a leaf of its predecessors.

    Returns the ordered facet list, or None when no such order exists (the
    complex is not a quasi-forest). A facet F is a leaf when some other facet
    B (a branch) satisfies H & F <= B & F for every remaining facet H.
    """
    remaining = list(complex_.facets)
    if not remaining:
        return []
    masks = {f: vertices_to_mask(f) for f in remaining}
    peeled = []
    while len(remaining) > 1:
        leaf = None
        for f in remaining:
            fm = masks[f]
            inters = [masks[h] & fm for h in remaining if h is not f]
            big = max(inters, key=lambda m: m.bit_count())
            if all(i & ~big == 0 for i in inters):
                leaf = f
                break
        if leaf is None:
            return None
        remaining.remove(leaf)
        peeled.append(leaf)
    peeled.append(remaining[0])
    peeled.reverse()
    return peeled


# -- named families ----------------------------------------------------------

def _require_positive(n: int):
    if n < 1:
        raise ValueError("vertex count must be >= 1")


def complete(n: int) -> Graph:
    _require_positive(n)
    return graph(n, itertools.combinations(range(1, n + 1), 2))


def path(n: int) -> Graph:
    _require_positive(n)
    return graph(n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    _require_positive(n)
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_multipartite(*parts: int) -> Graph:
    """K_{n1,...,nt} with parts labeled consecutively."""
    if not parts:
        raise ValueError("at least one part required")
    for p in parts:
        _require_positive(p)
    bounds = list(itertools.accumulate(parts))
    starts = [b - p for b, p in zip(bounds, parts)]
    edges = []
    for a, b in itertools.combinations(range(len(parts)), 2):
        for u in range(starts[a] + 1, bounds[a] + 1):
            for v in range(starts[b] + 1, bounds[b] + 1):
                edges.append((u, v))
    return graph(bounds[-1], edges)


def complement(G: Graph) -> Graph:
    return graph(G.n, (e for e in itertools.combinations(range(1, G.n + 1), 2)
                       if e not in G.edges))


def disjoint_union(*graphs_: Graph) -> Graph:
    """Disjoint union with vertex blocks numbered consecutively."""
    if not graphs_:
        raise ValueError("at least one graph required")
    n = 0
    edges = []
    for g in graphs_:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return graph(n, edges)


# -- edgelist format ---------------------------------------------------------

def parse_edgelist(text) -> Graph:
    """Parse the edgelist format: first data line n, then one "u v" per line.

    '#' starts a comment; blank lines are skipped. Rejects n < 1, vertices
    outside 1..n, self-loops and duplicate edges.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    lines = []
    for raw in text.splitlines():
        data = raw.split("#", 1)[0].strip()
        if data:
            lines.append(data)
    if not lines:
        raise GraphFormatError("empty edgelist input")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}")
    if n < 1:
        raise GraphFormatError(f"vertex count must be >= 1, got {n}")
    edges = set()
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n} in {line!r}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise GraphFormatError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def to_edgelist(G: Graph) -> str:
    lines = [str(G.n)]
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


# -- graph6 format (short form, n <= 62) --------------------------------------

def parse_graph6(text) -> Graph:
    """Decode a short-form graph6 string (n <= 62; the extended forms are rejected)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    first = ord(s[0])
    if first == 126:
        raise GraphFormatError("extended graph6 forms (n > 62) are not supported")
    if not 63 <= first <= 125:
        raise GraphFormatError(f"invalid graph6 size byte {s[0]!r}")
    n = first - 63
    if n < 1:
        raise GraphFormatError("vertex count must be >= 1")
    body = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r}")
        val = c - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 input")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return graph(n, edges)


def to_graph6(G: Graph) -> str:
    """Encode as short-form graph6 (requires 1 <= n <= 62)."""
    if not 1 <= G.n <= 62:
        raise GraphFormatError("graph6 short form covers 1 <= n <= 62 only")
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if (i + 1, j + 1) in G.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_graph(text, format: str = "edgelist") -> Graph:
    """Parse a graph in the named format ('edgelist' or 'graph6')."""
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {format!r}")


def encode_graph(G: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return to_edgelist(G)
    if format == "graph6":
        return to_graph6(G) + "\n"
    raise ValueError(f"unknown graph format {format!r}")

"""Minimal-prime combinatorics of the binomial edge ideal of a graph.

Everything here is expressed through vertex subsets T and component counts
c(T) of the graph minus T: the cut-point-property family, the prime
descriptors P_T with height n + |T| - c(T), the ring dimension 2n - height,
and the unmixedness decisions for a single graph and for a pair (K_m, G).
No polynomial ring is ever materialized.
"""

from dataclasses import dataclass

from .graphs import (
    Graph,
    component_masks,
    induced_subgraph,
    is_complete,
    is_connected,
    mask_to_vertices,
    vertices_to_mask,
)

#: Largest vertex count the exhaustive subset scans accept by default.
DEFAULT_MAX_N = 22


class SizeBoundError(ValueError):
    """Graph too large for an exhaustive subset scan."""


@dataclass(frozen=True)
class CutSet:
    """A subset T with the component count c of G minus T and its cut-point status."""

    T: tuple
    c: int
    has_cpp: bool

    def __post_init__(self):
        object.__setattr__(self, "T", tuple(sorted(self.T)))


@dataclass(frozen=True)
class PrimeDescriptor:
    """The prime P_T: the set T, the components of G minus T, and the height."""

    T: tuple
    components: tuple
    height: int


@dataclass(frozen=True)
class Verdict:
    """Three-valued decision with the name of the criterion that produced it."""

    status: str  # "yes" | "no" | "unknown"
    rule: str
    witness: CutSet | None = None

    @classmethod
    def yes(cls, rule):
        return cls("yes", rule)

    @classmethod
    def no(cls, rule, witness=None):
        return cls("no", rule, witness)

    @classmethod
    def unknown(cls, rule):
        return cls("unknown", rule)


def _check_bound(G: Graph, max_n) -> int:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if G.n > bound:
        raise SizeBoundError(f"graph has {G.n} vertices, exhaustive scan bounded at {bound}")
    return bound


def _cpp_scan(adj, full: int, tmask: int):
    """(c, has_cpp) for one subset mask.

    i is a cut point of the graph induced on (V - T) + {i} exactly when the
    neighbors of i meet at least two components of the graph induced on V - T.
    """
    rest = full & ~tmask
    comps = component_masks(adj, rest)
    m = tmask
    while m:
        b = m & -m
        m ^= b
        nb = adj[b.bit_length() - 1] & rest
        touched = 0
        for cm in comps:
            if cm & nb:
                touched += 1
                if touched == 2:
                    break
        if touched < 2:
            return len(comps), False
    return len(comps), True


def has_cut_point_property(G: Graph, T) -> bool:
    """Whether every vertex of T is a cut point of G induced on (V - T) + {that vertex}."""
    tmask = vertices_to_mask(T)
    if tmask & ~G.full_mask:
        raise ValueError("T is not a subset of the vertex set")
    return _cpp_scan(G.adj, G.full_mask, tmask)[1]


def cut_sets(G: Graph, max_n=None) -> list:
    """All subsets with the cut point property, the empty set included.

    Exhaustive over all 2^n subsets; sorted by (size, lexicographic).
    """
    _check_bound(G, max_n)
    adj, full = G.adj, G.full_mask
    found = []
    for t in range(1 << G.n):
        tmask = t << 1
        c, ok = _cpp_scan(adj, full, tmask)
        if ok:
            found.append(CutSet(mask_to_vertices(tmask), c, True))
    found.sort(key=lambda cs: (len(cs.T), cs.T))
    return found


def prime_of(G: Graph, T) -> PrimeDescriptor:
    """Descriptor of P_T: components of G minus T and height n + |T| - c(T)."""
    tvs = tuple(sorted(set(T)))
    tmask = vertices_to_mask(tvs)
    if tmask & ~G.full_mask:
        raise ValueError("T is not a subset of the vertex set")
    comps = tuple(mask_to_vertices(m) for m in component_masks(G.adj, G.full_mask & ~tmask))
    return PrimeDescriptor(tvs, comps, G.n + len(tvs) - len(comps))


def minimal_primes(G: Graph, max_n=None) -> list:
    """Descriptors of all minimal primes: P_T for T ranging over cut_sets(G)."""
    return [prime_of(G, cs.T) for cs in cut_sets(G, max_n)]


def height_J(G: Graph, max_n=None) -> int:
    """Height of the ideal: the minimum of n + |T| - c(T) over the cut sets."""
    return min(G.n + len(cs.T) - cs.c for cs in cut_sets(G, max_n))


def dim_S_mod_J(G: Graph, max_n=None) -> int:
    """Krull dimension of the quotient ring: 2n minus the ideal height."""
    return 2 * G.n - height_J(G, max_n)


RULE_BALANCED = "every cut-point set satisfies c(T) = |T| + 1"
RULE_COMPONENTWISE = "a graph is unmixed exactly when all its connected components are"
RULE_PAIR_BALANCED = "every cut-point set satisfies (c(T) - 1)(m - 1) = |T|"


def is_unmixed(G: Graph, max_n=None) -> Verdict:
    """Whether all minimal primes share one height.

    Connected case: c(T) = |T| + 1 for every cut-point set. Disconnected
    graphs are unmixed exactly when every component is; a failing component's
    witness is reported in the labels of the full graph.
    """
    _check_bound(G, max_n)
    if is_connected(G):
        for cs in cut_sets(G, max_n):
            if cs.c != len(cs.T) + 1:
                return Verdict.no(RULE_BALANCED, witness=cs)
        return Verdict.yes(RULE_BALANCED)
    for comp in (mask_to_vertices(m) for m in component_masks(G.adj, G.full_mask)):
        H, labels = induced_subgraph(G, comp)
        sub = is_unmixed(H, max_n)
        if sub.status == "no":
            w = sub.witness
            lifted = CutSet(tuple(labels[v - 1] for v in w.T), w.c, w.has_cpp) if w else None
            return Verdict.no(RULE_COMPONENTWISE, witness=lifted)
    return Verdict.yes(RULE_COMPONENTWISE)


def is_pair_unmixed(m: int, G: Graph, max_n=None) -> Verdict:
    """Unmixedness of the ideal of the pair (complete graph on m vertices, G).

    G must be connected. The criterion is (c(T) - 1)(m - 1) = |T| for every
    cut-point set T of G; with m = 2 this is exactly is_unmixed.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    if not is_connected(G):
        raise ValueError("pair unmixedness is defined here for connected G")
    for cs in cut_sets(G, max_n):
        if (cs.c - 1) * (m - 1) != len(cs.T):
            return Verdict.no(RULE_PAIR_BALANCED, witness=cs)
    return Verdict.yes(RULE_PAIR_BALANCED)

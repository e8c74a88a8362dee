"""Simple undirected graphs stored as closed-neighbourhood bitsets.

Vertices are the dense indices ``0..n-1``. A vertex set is a plain Python
``int`` used as a bitmask (bit ``v`` set means ``v`` is in the set), which
keeps unions and intersections cheap and makes sets hashable.
"""

import numpy as np

from .errors import CapExceededError, InvalidInputError
from .rng import SplitMix64

MAX_VERTICES = 4096


def vset(vertices=()):
    """Bitmask of an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask):
    """Sorted list of the vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def size(mask):
    return mask.bit_count()


class Graph:
    """Immutable simple undirected graph.

    ``rows[v]`` is the closed neighbourhood N[v] as a bitmask, so bit ``v`` of
    ``rows[v]`` is always set. Open adjacency is ``rows[v] & ~(1 << v)``.
    """

    __slots__ = ("n", "rows", "full")

    def __init__(self, n, rows):
        if not 0 <= n <= MAX_VERTICES:
            raise CapExceededError(f"graph order {n} outside 0..{MAX_VERTICES}")
        rows = tuple(rows)
        if len(rows) != n:
            raise InvalidInputError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidInputError(f"row {v} references a vertex >= {n}")
            if not row >> v & 1:
                raise InvalidInputError(f"row {v} is missing its own vertex")
        for v, row in enumerate(rows):
            for u in members(row):
                if not rows[u] >> v & 1:
                    raise InvalidInputError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "full", full)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # default slot pickling goes through __setattr__
        return (Graph._trusted, (self.n, self.rows))

    @classmethod
    def from_edges(cls, n, edges):
        rows = [1 << v for v in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def _trusted(cls, n, rows):
        # Skips the O(n^2) symmetry check; callers must build symmetric rows.
        if n > MAX_VERTICES:
            raise CapExceededError(f"graph order {n} exceeds {MAX_VERTICES}")
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        object.__setattr__(g, "full", (1 << n) - 1)
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def neighbors(self, v):
        return self.rows[v] & ~(1 << v)

    def degree(self, v):
        return self.rows[v].bit_count() - 1

    def edges(self):
        return [(u, v) for u in range(self.n) for v in members(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self):
        return (sum(r.bit_count() for r in self.rows) - self.n) // 2

    def check_set(self, s):
        if s < 0 or s & ~self.full:
            raise InvalidInputError(f"vertex set {bin(s)} has bits outside 0..{self.n - 1}")

    def with_edge(self, u, v):
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def disjoint_union(self, other):
        shift = self.n
        edges = self.edges() + [(u + shift, v + shift) for u, v in other.edges()]
        return Graph.from_edges(self.n + other.n, edges)


def closed_neighborhood(g, s):
    """N[s]: the union of N[v] over v in s."""
    g.check_set(s)
    out = 0
    rows = g.rows
    while s:
        low = s & -s
        out |= rows[low.bit_length() - 1]
        s ^= low
    return out


def is_dominating(g, s):
    return closed_neighborhood(g, s) == g.full


# -- small named graphs, used by tests, docs and the CLI ---------------------

def empty_graph(n):
    return Graph.from_edges(n, [])


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def all_labeled_graphs(n):
    """Every labelled graph on n vertices, ordered by edge bitmask."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


# -- random graphs ------------------------------------------------------------

def sample_gnp(n, p, stream):
    """Draw G(n, p) from ``stream``.

    Unordered pairs are visited row-major (u ascending, then v > u ascending);
    pair number i consumes the i-th float of the stream and becomes an edge
    iff that float is < p.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"edge probability {p} outside [0, 1]")
    if n < 1:
        raise InvalidInputError("G(n, p) needs n >= 1")
    if n > MAX_VERTICES:
        raise CapExceededError(f"graph order {n} exceeds {MAX_VERTICES}")
    iu, iv = np.triu_indices(n, 1)
    keep = stream.random_block(len(iu)) < p
    adj = np.zeros((n, n), dtype=bool)
    adj[iu[keep], iv[keep]] = True
    adj |= adj.T
    np.fill_diagonal(adj, True)
    packed = np.packbits(adj, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[v].tobytes(), "little") for v in range(n)]
    return Graph._trusted(n, rows)


def erdos_renyi(n, p, seed):
    """G(n, p) driven by the SplitMix64 stream keyed by ``seed``."""
    return sample_gnp(n, p, SplitMix64(seed))

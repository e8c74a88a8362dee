"""Cartesian product G □ H with its coordinate bijection.

Product vertex (u, v), u in V(G), v in V(H), has flat index ``u * h_size + v``.
"""

from dataclasses import dataclass

from .errors import CapExceededError
from .graph import Graph, MAX_VERTICES, members


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    g_size: int
    h_size: int

    def flat(self, u, v):
        return u * self.h_size + v

    def unflat(self, x):
        return divmod(x, self.h_size)

    def column(self, u, h_part=None):
        """Bitmask of {u} x h_part (all of V(H) when h_part is None)."""
        if h_part is None:
            return ((1 << self.h_size) - 1) << (u * self.h_size)
        return h_part << (u * self.h_size)

    def row(self, v, g_part=None):
        """Bitmask of g_part x {v} (all of V(G) when g_part is None)."""
        mask = 0
        us = range(self.g_size) if g_part is None else members(g_part)
        for u in us:
            mask |= 1 << (u * self.h_size + v)
        return mask

    def rectangle(self, g_part, h_part):
        """Bitmask of the product vertices g_part x h_part."""
        mask = 0
        for u in members(g_part):
            mask |= h_part << (u * self.h_size)
        return mask

    def transpose_index(self, x):
        """Flat index of the same vertex in H □ G."""
        u, v = divmod(x, self.h_size)
        return v * self.g_size + u

    def transpose_set(self, s):
        out = 0
        for x in members(s):
            out |= 1 << self.transpose_index(x)
        return out


def cartesian_product(g, h):
    if g.n * h.n > MAX_VERTICES:
        raise CapExceededError(
            f"product order {g.n}*{h.n} = {g.n * h.n} exceeds {MAX_VERTICES}")
    hs = h.n
    rows = []
    for u in range(g.n):
        g_nbrs = members(g.neighbors(u))
        for v in range(hs):
            row = h.rows[v] << (u * hs)
            for w in g_nbrs:
                row |= 1 << (w * hs + v)
            rows.append(row)
    return ProductGraph(Graph._trusted(g.n * hs, rows), g.n, hs)


def project_to_g(pg, s):
    out = 0
    col = (1 << pg.h_size) - 1
    for u in range(pg.g_size):
        if s >> (u * pg.h_size) & col:
            out |= 1 << u
    return out


def project_to_h(pg, s):
    out = 0
    col = (1 << pg.h_size) - 1
    for u in range(pg.g_size):
        out |= s >> (u * pg.h_size) & col
    return out


def transposed(pg):
    """The same graph viewed as H □ G (flat index v * g_size + u)."""
    rows = [0] * pg.graph.n
    for x, row in enumerate(pg.graph.rows):
        rows[pg.transpose_index(x)] = pg.transpose_set(row)
    return ProductGraph(Graph._trusted(pg.graph.n, rows), pg.h_size, pg.g_size)

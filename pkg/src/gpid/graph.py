"""Generalized Petersen graphs P(n, k).

Vertex numbering: even ids 0, 2, ..., 2n-2 form the outer cycle, odd ids
1, 3, ..., 2n-1 are the inner vertices.  Column i is the spoke pair
(v_{2i}, v_{2i+1}).  The outer vertex of column i is adjacent to the outer
vertices of columns i+-1 (mod n) and to its spoke partner; the inner
vertex is adjacent to the inner vertices of columns i+-k (mod n) and to
its spoke partner.  Requiring 2k < n keeps the graph simple and 3-regular.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameters, OutOfRange


@dataclass(frozen=True)
class PetersenGraph:
    """Immutable adjacency structure of P(n, k)."""

    n: int
    k: int
    adjacency: tuple[tuple[int, int, int], ...]

    @property
    def num_vertices(self) -> int:
        return 2 * self.n

    @property
    def num_edges(self) -> int:
        return 3 * self.n

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted ascending."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out


@dataclass(frozen=True)
class ColumnView:
    """Spoke pair (outer, inner) of one column."""

    index: int
    vertices: tuple[int, int]

    @property
    def outer(self) -> int:
        return self.vertices[0]

    @property
    def inner(self) -> int:
        return self.vertices[1]


@lru_cache(maxsize=None)
def build_petersen(n: int, k: int) -> PetersenGraph:
    """Construct P(n, k).

    Requires n >= 3 and 1 <= k with 2k < n.  Identical arguments always
    yield an identical (cached, shared, immutable) graph.  Neighbor lists
    are stored in ascending id order so serialized output is canonical.
    """
    if not isinstance(n, int) or not isinstance(k, int):
        raise InvalidParameters(f"n and k must be integers, got n={n!r}, k={k!r}")
    if n < 3 or k < 1 or 2 * k >= n:
        raise InvalidParameters(
            f"P(n,k) requires n >= 3, k >= 1, 2k < n; got n={n}, k={k}"
        )
    adj = []
    for i in range(n):
        outer = 2 * i
        inner = 2 * i + 1
        adj.append(tuple(sorted((2 * ((i + 1) % n), 2 * ((i - 1) % n), inner))))
        adj.append(
            tuple(sorted((2 * ((i + k) % n) + 1, 2 * ((i - k) % n) + 1, outer)))
        )
    return PetersenGraph(n=n, k=k, adjacency=tuple(adj))


def neighbors(g: PetersenGraph, v: int) -> set[int]:
    """Open neighborhood of vertex v."""
    if not 0 <= v < g.num_vertices:
        raise OutOfRange(f"vertex id {v} outside 0..{g.num_vertices - 1}")
    return set(g.adjacency[v])


def column(g: PetersenGraph, i: int) -> ColumnView:
    """Column i as its spoke pair (v_{2i}, v_{2i+1})."""
    if not 0 <= i < g.n:
        raise OutOfRange(f"column index {i} outside 0..{g.n - 1}")
    return ColumnView(index=i, vertices=(2 * i, 2 * i + 1))


def export_edge_list(g: PetersenGraph) -> str:
    """Edge-list text: one `u v` pair per line, pairs sorted ascending."""
    return "\n".join(f"{u} {v}" for u, v in g.edges()) + "\n"


def graph_descriptor(g: PetersenGraph) -> dict:
    """JSON-ready descriptor of the graph."""
    return {"n": g.n, "k": g.k, "vertices": g.num_vertices, "edges": g.num_edges}


def export_descriptor_json(g: PetersenGraph) -> str:
    return json.dumps(graph_descriptor(g), sort_keys=True)

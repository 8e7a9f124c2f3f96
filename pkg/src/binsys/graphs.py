"""Moving between tables and (di)graphs on the same vertex set.

An edge {x, y} stands for a pair where each element wins its own row
(t[x][y] = x and t[y][x] = y); a non-edge is encoded the opposite way.
Tables built from graphs are always locally zero, and on that class the
two translations are mutually inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Groupoid, has_orientation
from .errors import BadShape, NotOP


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph; edges stored as sorted index pairs."""

    order: int
    edges: frozenset

    def __post_init__(self):
        if self.order < 1:
            raise BadShape("graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            x, y = e
            if x == y:
                raise BadShape(f"loop at vertex {x}")
            if not (0 <= x < self.order and 0 <= y < self.order):
                raise BadShape(f"edge {e} outside 0..{self.order - 1}")
            norm.add((min(x, y), max(x, y)))
        object.__setattr__(self, "edges", frozenset(norm))


@dataclass(frozen=True)
class Digraph:
    """Directed loopless graph; arcs are ordered index pairs."""

    order: int
    arcs: frozenset

    def __post_init__(self):
        if self.order < 1:
            raise BadShape("digraph needs at least one vertex")
        for a in self.arcs:
            x, y = a
            if x == y:
                raise BadShape(f"loop at vertex {x}")
            if not (0 <= x < self.order and 0 <= y < self.order):
                raise BadShape(f"arc {a} outside 0..{self.order - 1}")
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))


def to_graph(g: Groupoid) -> SimpleGraph:
    """Edge {x,y} wherever the pair restricts to the left projection."""
    t = g.table
    n = g.order
    edges = {
        (x, y)
        for x, y in combinations(range(n), 2)
        if t[x][y] == x and t[y][x] == y
    }
    return SimpleGraph(n, frozenset(edges))


def from_graph(graph: SimpleGraph) -> Groupoid:
    """The locally-zero table encoding a graph (idempotent diagonal,
    edges as left-projection pairs, non-edges as right-projection pairs)."""
    n = graph.order
    table = [[y for y in range(n)] for _ in range(n)]
    for x in range(n):
        table[x][x] = x
    for x, y in graph.edges:
        table[x][y] = x
        table[y][x] = y
    return Groupoid(tuple(tuple(row) for row in table))


def to_digraph(g: Groupoid) -> Digraph:
    """Arc (x, y) wherever the left operand wins; needs every product to
    land on an operand."""
    if not has_orientation(g):
        raise NotOP("digraph translation needs x∘y ∈ {x, y} everywhere")
    t = g.table
    n = g.order
    arcs = {
        (x, y)
        for x in range(n)
        for y in range(n)
        if x != y and t[x][y] == x
    }
    return Digraph(n, frozenset(arcs))


def all_graphs(order: int):
    """Every simple graph on the given vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(order), 2))
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        yield SimpleGraph(order, edges)

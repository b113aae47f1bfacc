"""Immutable simple graphs on dense vertex sets ``0..n-1``.

Besides plain construction this module provides the three structural
operations used by the reduction: a canonical bipartition, the join of a
graph with a fresh clique, and the quotient by a partition into
independent classes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidEdge, NotIndependent, VertexOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Edges are stored as sorted pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Edge]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, renumbered in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def connected_components(self) -> list[list[int]]:
        """Components as sorted vertex lists, ordered by their lowest vertex."""
        seen = [False] * self.n
        out = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Duplicate edges (in either orientation) collapse to one. Loops raise
    :class:`InvalidEdge`; endpoints outside ``0..n-1`` raise
    :class:`VertexOutOfRange`.
    """
    if n < 0:
        raise VertexOutOfRange(f"vertex count must be non-negative, got {n}")
    normalized = set()
    for edge in edges:
        u, v = edge
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        for w in (u, v):
            if not 0 <= w < n:
                raise VertexOutOfRange(f"endpoint {w} not in 0..{n - 1}")
        normalized.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(normalized))


def complete_graph(m: int) -> Graph:
    return Graph(m, frozenset(combinations(range(m), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidEdge(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class Bipartition:
    """Two color classes of a proper 2-coloring.

    ``side_a`` holds the lowest vertex of every connected component; each
    component's sides could be swapped independently, which
    ``component_roots`` records.
    """

    side_a: frozenset[int]
    side_b: frozenset[int]
    component_roots: tuple[int, ...] = ()

    def side_of(self, v: int) -> int:
        return 0 if v in self.side_a else 1

    def as_coloring_vector(self, n: int, color_a: int = 0, color_b: int = 1) -> tuple[int, ...]:
        return tuple(color_a if v in self.side_a else color_b for v in range(n))

    def is_valid_for(self, g: Graph) -> bool:
        if self.side_a & self.side_b or (self.side_a | self.side_b) != frozenset(range(g.n)):
            return False
        return all((u in self.side_a) != (v in self.side_a) for u, v in g.edges)


def bipartition(g: Graph) -> Bipartition | None:
    """Canonical bipartition of ``g``, or ``None`` if ``g`` has an odd cycle."""
    side = [-1] * g.n
    roots = []
    for root in range(g.n):
        if side[root] != -1:
            continue
        roots.append(root)
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(
        frozenset(v for v in range(g.n) if side[v] == 0),
        frozenset(v for v in range(g.n) if side[v] == 1),
        tuple(roots),
    )


def join_clique(b: Graph, m: int) -> Graph:
    """Append ``m`` new vertices ``n..n+m-1`` forming a clique complete to ``b``."""
    if m < 0:
        raise ValueError(f"clique size must be non-negative, got {m}")
    n = b.n
    new = range(n, n + m)
    edges = set(b.edges)
    edges.update(combinations(new, 2))
    edges.update((u, x) for x in new for u in range(n))
    return Graph(n + m, frozenset(edges))


@dataclass(frozen=True)
class QuotientMap:
    """Partition of ``0..n-1``; class ``i`` becomes quotient vertex ``i``."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> QuotientMap:
        return cls(tuple(frozenset(c) for c in classes))

    @classmethod
    def identity(cls, n: int) -> QuotientMap:
        return cls(tuple(frozenset((v,)) for v in range(n)))

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cls_ in enumerate(self.classes) for v in cls_}

    def __len__(self) -> int:
        return len(self.classes)


def quotient(g: Graph, q: QuotientMap) -> Graph:
    """Identify each class of ``q`` to a single vertex.

    Raises :class:`NotIndependent` if a class spans an edge of ``g`` and
    ``ValueError`` if the classes do not partition the vertex set.
    """
    owner = q.class_of()
    if sum(len(c) for c in q.classes) != g.n or set(owner) != set(range(g.n)):
        raise ValueError("quotient classes must be disjoint and cover every vertex")
    edges = set()
    for u, v in g.edges:
        cu, cv = owner[u], owner[v]
        if cu == cv:
            raise NotIndependent(f"class {cu} contains edge ({u}, {v})")
        edges.add((min(cu, cv), max(cu, cv)))
    return Graph(len(q.classes), frozenset(edges))

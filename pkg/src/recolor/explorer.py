"""Exhaustive exploration of the configuration graph of proper k-colorings.

Nodes are proper colorings, edges join colorings that differ on exactly one
vertex. A coloring is packed into a *state code*, the base-``k`` integer
whose digit ``i`` is the color of vertex ``i``.

The full census (:func:`census`) enumerates every proper coloring in
lexicographic order of the color vector, builds all single-vertex moves in
vectorized form and labels connected components. Certificate searches
(:func:`reachable`, :func:`path_to_two_coloring`) run a plain BFS with
parent pointers so the returned sequences are shortest.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .coloring import Coloring, RecoloringSequence, Step, require_proper
from .errors import TooLarge
from .graph import Graph

log = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 2**26
# state codes live in signed 64-bit integers
CODE_LIMIT = 2**63


def state_space_bound(n: int, k: int) -> int:
    """Upper bound ``k**n`` on the number of proper colorings."""
    return k**n


def check_budget(n: int, k: int, max_states: int | None = None) -> None:
    cap = DEFAULT_MAX_STATES if max_states is None else max_states
    bound = state_space_bound(n, k)
    if bound >= CODE_LIMIT:
        raise TooLarge(f"{k}^{n} states do not fit a 63-bit state code")
    if bound > cap:
        raise TooLarge(f"state space bound {k}^{n} = {bound} exceeds budget {cap}")


def encode(colors: tuple[int, ...] | Coloring, k: int) -> int:
    """Pack a color vector into its state code (vertex 0 is the least significant digit)."""
    if isinstance(colors, Coloring):
        colors = colors.colors
    if state_space_bound(len(colors), k) >= CODE_LIMIT:
        raise TooLarge(f"{k}^{len(colors)} states do not fit a 63-bit state code")
    code = 0
    for c in reversed(colors):
        code = code * k + c
    return code


def decode(code: int, n: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        code, c = divmod(code, k)
        out.append(c)
    return tuple(out)


def iter_colorings(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Stream proper ``k``-colorings of ``g`` in lexicographic order by backtracking."""
    n = g.n
    earlier = [[u for u in g.adjacency[v] if u < v] for v in range(n)]
    colors = [0] * n

    def extend(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(colors)
            return
        for a in range(k):
            if all(colors[u] != a for u in earlier[v]):
                colors[v] = a
                yield from extend(v + 1)

    if k < 1:
        raise ValueError(f"palette size must be positive, got {k}")
    yield from extend(0)


def _coloring_matrix(g: Graph, k: int) -> np.ndarray:
    """Proper colorings as rows, lexicographically ordered.

    Same order and content as :func:`iter_colorings`, built one vertex at a
    time over all partial colorings at once.
    """
    dtype = np.int16 if k < 2**15 else np.int64
    rows = np.zeros((1, 0), dtype=dtype)
    palette = np.arange(k, dtype=dtype)
    for v in range(g.n):
        r = rows.shape[0]
        prefix = np.repeat(rows, k, axis=0)
        col = np.tile(palette, r)
        mask = np.ones(r * k, dtype=bool)
        for u in g.adjacency[v]:
            if u < v:
                mask &= prefix[:, u] != col
        rows = np.column_stack([prefix[mask], col[mask]])
        if rows.shape[0] == 0:
            break
    if rows.shape[1] != g.n:
        return np.zeros((0, g.n), dtype=dtype)
    return rows


def enumerate_colorings(g: Graph, k: int, max_states: int | None = None) -> int:
    """Exact number of proper ``k``-colorings of ``g``."""
    if k < 1:
        raise ValueError(f"palette size must be positive, got {k}")
    check_budget(g.n, k, max_states)
    return int(_coloring_matrix(g, k).shape[0])


@dataclass(frozen=True)
class ConfigStats:
    num_colorings: int
    num_components: int
    num_frozen: int
    is_connected: bool
    largest_component: int

    def as_dict(self) -> dict[str, int | bool]:
        return {
            "num_colorings": self.num_colorings,
            "num_components": self.num_components,
            "num_frozen": self.num_frozen,
            "is_connected": self.is_connected,
            "largest_component": self.largest_component,
        }


@dataclass(frozen=True, eq=False)
class Census:
    """Complete configuration graph of ``g`` with palette ``k``.

    Row ``i`` of ``colorings`` is the ``i``-th proper coloring in
    lexicographic order. Component labels are numbered by first appearance
    in that order, so label 0 is the component of the least coloring.
    """

    graph: Graph
    k: int
    colorings: np.ndarray
    codes: np.ndarray
    edges: tuple[np.ndarray, np.ndarray]
    labels: np.ndarray
    sizes: np.ndarray
    degrees: np.ndarray

    def __len__(self) -> int:
        return int(self.colorings.shape[0])

    def coloring(self, i: int) -> Coloring:
        return Coloring(self.k, tuple(int(c) for c in self.colorings[i]))

    def index_of(self, c: Coloring) -> int:
        code = encode(c, self.k)
        hits = np.nonzero(self.codes == code)[0]
        if len(hits) == 0:
            raise KeyError(c.colors)
        return int(hits[0])

    @property
    def num_components(self) -> int:
        return int(self.sizes.shape[0])

    def frozen_indices(self) -> np.ndarray:
        return np.nonzero(self.degrees == 0)[0]

    def component_size_of(self, i: int) -> int:
        return int(self.sizes[self.labels[i]])

    def stats(self) -> ConfigStats:
        n = len(self)
        return ConfigStats(
            num_colorings=n,
            num_components=self.num_components,
            num_frozen=int((self.degrees == 0).sum()),
            is_connected=self.num_components <= 1,
            largest_component=int(self.sizes.max()) if n else 0,
        )

    def num_edges(self) -> int:
        return int(self.edges[0].shape[0])


def census(g: Graph, k: int, max_states: int | None = None) -> Census:
    if k < 1:
        raise ValueError(f"palette size must be positive, got {k}")
    check_budget(g.n, k, max_states)
    rows = _coloring_matrix(g, k)
    count = rows.shape[0]
    powers = np.array([k**v for v in range(g.n)], dtype=np.int64)
    codes = rows.astype(np.int64) @ powers if g.n else np.zeros(count, dtype=np.int64)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]

    src_parts, dst_parts = [], []
    for v in range(g.n):
        current = rows[:, v].astype(np.int64)
        for a in range(k):
            # each undirected move once: towards the larger color
            sel = np.nonzero(current < a)[0]
            if sel.size == 0:
                continue
            target = codes[sel] + (a - current[sel]) * powers[v]
            pos = np.searchsorted(sorted_codes, target)
            pos_clip = np.minimum(pos, count - 1)
            hit = sorted_codes[pos_clip] == target
            src_parts.append(sel[hit])
            dst_parts.append(order[pos_clip[hit]])
    if src_parts:
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
    else:
        src = dst = np.zeros(0, dtype=np.int64)

    degrees = np.bincount(src, minlength=count) + np.bincount(dst, minlength=count)
    if count:
        adj = coo_matrix((np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(count, count))
        _, raw = connected_components(adj, directed=False)
        _, first = np.unique(raw, return_index=True)
        # renumber components by their first (lexicographically least) member
        relabel = np.empty(first.shape[0], dtype=np.int64)
        relabel[np.argsort(first, kind="stable")] = np.arange(first.shape[0])
        labels = relabel[raw]
        sizes = np.bincount(labels)
    else:
        labels = np.zeros(0, dtype=np.int64)
        sizes = np.zeros(0, dtype=np.int64)
    return Census(g, k, rows, codes, (src, dst), labels, sizes, degrees)


def components(g: Graph, k: int, max_states: int | None = None) -> ConfigStats:
    return census(g, k, max_states).stats()


def is_mixing_bruteforce(g: Graph, k: int, max_states: int | None = None) -> bool:
    """True iff the configuration graph is connected (vacuously true with no colorings)."""
    return components(g, k, max_states).is_connected


def _neighbors(g: Graph, k: int, colors: tuple[int, ...]) -> Iterator[tuple[Step, tuple[int, ...]]]:
    for v in range(g.n):
        blocked = {colors[w] for w in g.adjacency[v]}
        blocked.add(colors[v])
        for a in range(k):
            if a not in blocked:
                nxt = list(colors)
                nxt[v] = a
                yield Step(v, a), tuple(nxt)


def bfs_path(
    g: Graph,
    start: Coloring,
    goal: Callable[[tuple[int, ...]], bool],
    max_states: int | None = None,
) -> RecoloringSequence | None:
    """Shortest sequence from ``start`` to the first coloring satisfying ``goal``.

    Neighbors are expanded in admissible-move order, so the result is
    deterministic. Returns ``None`` when no reachable coloring satisfies
    ``goal``.
    """
    require_proper(g, start, "start coloring")
    check_budget(g.n, start.k, max_states)
    k = start.k
    origin = start.colors
    if goal(origin):
        return ()
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Step] | None] = {origin: None}
    queue = deque([origin])
    while queue:
        state = queue.popleft()
        for step, nxt in _neighbors(g, k, state):
            if nxt in parent:
                continue
            parent[nxt] = (state, step)
            if goal(nxt):
                steps = []
                node = nxt
                while parent[node] is not None:
                    prev, s = parent[node]
                    steps.append(s)
                    node = prev
                return tuple(reversed(steps))
            queue.append(nxt)
    return None


def component_of(g: Graph, start: Coloring, max_states: int | None = None) -> list[tuple[int, ...]]:
    """Every coloring reachable from ``start``, in BFS order."""
    require_proper(g, start, "start coloring")
    check_budget(g.n, start.k, max_states)
    seen = {start.colors}
    order = [start.colors]
    queue = deque([start.colors])
    while queue:
        state = queue.popleft()
        for _, nxt in _neighbors(g, start.k, state):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


def reachable(
    g: Graph, k: int, c1: Coloring, c2: Coloring, max_states: int | None = None
) -> RecoloringSequence | None:
    """Shortest recoloring sequence from ``c1`` to ``c2``, or ``None`` if disconnected."""
    c1, c2 = c1.with_palette(k), c2.with_palette(k)
    require_proper(g, c2, "target coloring")
    target = c2.colors
    return bfs_path(g, c1, lambda s: s == target, max_states)


def _at_most_two_colors(colors: tuple[int, ...]) -> bool:
    return len(set(colors)) <= 2


def path_to_two_coloring(g: Graph, c: Coloring, max_states: int | None = None) -> RecoloringSequence | None:
    """Shortest sequence from ``c`` to some coloring using at most two colors."""
    return bfs_path(g, c, _at_most_two_colors, max_states)


def reaches_two_coloring(g: Graph, c: Coloring, max_states: int | None = None) -> bool:
    if c.k != 3:
        raise ValueError(f"reaches_two_coloring is defined for 3-colorings, got k={c.k}")
    return path_to_two_coloring(g, c, max_states) is not None

"""Reduction from 3-to-2 to k-mixing: join a bipartite graph with a (k-3)-clique.

If some 3-coloring of ``B`` is stuck (never reaches a 2-coloring), embedding
it next to a rainbow ``X`` pins every vertex of ``X``: each sees the three
colors of ``B`` plus the other ``k-4`` clique colors. That yields a pair of
colorings of the joined graph in different components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring, is_proper, require_proper
from .errors import BadWitness, NotBipartite, PaletteClash, PaletteTooSmall, ShapeError, TooLarge
from .explorer import check_budget, reachable, reaches_two_coloring
from .graph import Graph, bipartition, join_clique


@dataclass(frozen=True)
class ReductionInstance:
    g: Graph
    source: Graph
    k: int

    @property
    def n_b(self) -> int:
        return self.source.n

    @property
    def b_range(self) -> range:
        return range(self.source.n)

    @property
    def x_range(self) -> range:
        return range(self.source.n, self.g.n)

    def sidecar(self) -> dict:
        return {
            "k": self.k,
            "n_b": self.n_b,
            "b_range": [self.b_range.start, self.b_range.stop - 1] if self.n_b else [],
            "x_range": list(self.x_range),
        }


def reduce(b: Graph, k: int) -> ReductionInstance:
    if k < 4:
        raise PaletteTooSmall(f"the reduction needs k >= 4, got {k}")
    if bipartition(b) is None:
        raise NotBipartite("source graph has an odd cycle")
    return ReductionInstance(join_clique(b, k - 3), b, k)


def canonical_x_colors(inst: ReductionInstance) -> tuple[int, ...]:
    return tuple(range(3, inst.k))


def embed_coloring(
    inst: ReductionInstance,
    c_b: Coloring,
    palette_map: Sequence[int] = (0, 1, 2),
    x_colors: Sequence[int] | None = None,
) -> Coloring:
    """Lift a 3-coloring of ``B`` to a ``k``-coloring of the joined graph.

    ``palette_map[i]`` is the color used for B-color ``i``; ``x_colors``
    assigns the clique vertices in index order.
    """
    if x_colors is None:
        x_colors = canonical_x_colors(inst)
    palette_map, x_colors = tuple(palette_map), tuple(x_colors)
    if len(c_b) != inst.n_b:
        raise ShapeError(f"B-coloring has length {len(c_b)}, B has {inst.n_b} vertices")
    if len(palette_map) != 3 or len(x_colors) != inst.k - 3:
        raise ShapeError("palette_map needs 3 entries and x_colors needs k-3 entries")
    combined = palette_map + x_colors
    if len(set(combined)) != len(combined):
        raise PaletteClash(f"palette map {palette_map} and X colors {x_colors} overlap")
    if any(not 0 <= a < inst.k for a in combined):
        raise PaletteClash(f"colors must lie in 0..{inst.k - 1}")
    require_proper(inst.source, c_b.with_palette(3) if c_b.k != 3 else c_b, "B-coloring")
    colors = tuple(palette_map[a] for a in c_b.colors) + x_colors
    return Coloring(inst.k, colors)


@dataclass(frozen=True)
class WitnessPair:
    """Two colorings of ``inst.g`` in different configuration components.

    ``verification`` records how that was established: ``"bfs"`` when an
    exhaustive search from ``first`` failed to reach ``second``,
    ``"structural"`` when only the stuck B-coloring was machine-checked
    and the pinned clique argument carries the rest.
    """

    first: Coloring
    second: Coloring
    verification: str

    def __iter__(self):
        return iter((self.first, self.second))


def non_mixing_witness(
    inst: ReductionInstance, stuck: Coloring, max_states: int | None = None
) -> WitnessPair:
    stuck = stuck.with_palette(3) if stuck.k != 3 else stuck
    if len(stuck) != inst.n_b:
        raise ShapeError(f"B-coloring has length {len(stuck)}, B has {inst.n_b} vertices")
    if not is_proper(inst.source, stuck):
        raise BadWitness(f"{stuck.colors} is not a proper 3-coloring of B")
    if reaches_two_coloring(inst.source, stuck, max_states):
        raise BadWitness(f"{stuck.colors} reaches a 2-coloring")
    parts = bipartition(inst.source)
    two = Coloring(3, parts.as_coloring_vector(inst.n_b))
    first = embed_coloring(inst, stuck)
    second = embed_coloring(inst, two)
    try:
        check_budget(inst.g.n, inst.k, max_states)
    except TooLarge:
        return WitnessPair(first, second, "structural")
    if reachable(inst.g, inst.k, first, second, max_states) is not None:
        raise BadWitness("witness colorings are connected")
    return WitnessPair(first, second, "bfs")

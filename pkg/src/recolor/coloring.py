"""Colorings, single-vertex recoloring steps and sequence verification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ImproperStep, NoOpStep, NotProper, PaletteError, ShapeError
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    """Color vector with a declared palette ``0..k-1``.

    Properness is a property checked against a graph (:func:`is_proper`),
    not an invariant of the value.
    """

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise PaletteError(None, f"palette size must be positive, got {self.k}")
        colors = tuple(int(c) for c in self.colors)
        for v, c in enumerate(colors):
            if not 0 <= c < self.k:
                raise PaletteError(None, f"vertex {v} has color {c} outside 0..{self.k - 1}")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def of(cls, k: int, colors: Iterable[int]) -> Coloring:
        return cls(k, tuple(colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def used_colors(self) -> frozenset[int]:
        return frozenset(self.colors)

    def with_color(self, v: int, color: int) -> Coloring:
        colors = list(self.colors)
        colors[v] = color
        return Coloring(self.k, tuple(colors))

    def with_palette(self, k: int) -> Coloring:
        return Coloring(k, self.colors)

    def permuted(self, pi: Sequence[int]) -> Coloring:
        return Coloring(self.k, tuple(pi[c] for c in self.colors))

    def restrict(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.colors[v] for v in vertices)

    def __repr__(self) -> str:
        return f"Coloring(k={self.k}, {self.colors})"


class Step(NamedTuple):
    vertex: int
    color: int

    def __repr__(self) -> str:
        return f"({self.vertex}->{self.color})"


RecoloringSequence = tuple[Step, ...]


def as_sequence(steps: Iterable[Sequence[int]]) -> RecoloringSequence:
    return tuple(Step(int(v), int(a)) for v, a in steps)


def _check_shape(g: Graph, c: Coloring) -> None:
    if len(c.colors) != g.n:
        raise ShapeError(f"coloring has length {len(c.colors)}, graph has {g.n} vertices")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_shape(g, c)
    colors = c.colors
    return all(colors[u] != colors[v] for u, v in g.edges)


def require_proper(g: Graph, c: Coloring, what: str = "coloring") -> None:
    if not is_proper(g, c):
        raise NotProper(f"{what} {c.colors} is not a proper coloring")


def admissible_moves(g: Graph, c: Coloring) -> list[Step]:
    """All single-vertex recolorings of ``c`` that keep it proper.

    Ordered by vertex, then by new color.
    """
    require_proper(g, c)
    colors = c.colors
    moves = []
    for v in range(g.n):
        blocked = {colors[w] for w in g.adjacency[v]}
        blocked.add(colors[v])
        moves.extend(Step(v, a) for a in range(c.k) if a not in blocked)
    return moves


def is_frozen(g: Graph, c: Coloring) -> bool:
    require_proper(g, c)
    colors = c.colors
    for v in range(g.n):
        if len({colors[w] for w in g.adjacency[v]} | {colors[v]}) < c.k:
            return False
    return True


def apply_step(g: Graph, colors: list[int], k: int, step: Step, index: int) -> None:
    """Apply ``step`` in place, raising the appropriate :class:`SequenceError`."""
    v, a = step
    if not 0 <= v < g.n:
        raise ShapeError(f"step {index}: vertex {v} not in graph")
    if not 0 <= a < k:
        raise PaletteError(index, f"color {a} outside 0..{k - 1}")
    if colors[v] == a:
        raise NoOpStep(index, f"vertex {v} already has color {a}")
    for w in g.adjacency[v]:
        if colors[w] == a:
            raise ImproperStep(index, f"vertex {v} -> {a} conflicts with neighbor {w}")
    colors[v] = a


def apply_sequence(g: Graph, c: Coloring, steps: Iterable[Sequence[int]]) -> Coloring:
    """Replay ``steps`` from ``c`` and return the final coloring.

    Every intermediate coloring must be proper and every step must change
    its vertex's color.
    """
    require_proper(g, c, "start coloring")
    colors = list(c.colors)
    for i, step in enumerate(steps):
        apply_step(g, colors, c.k, Step(*step), i)
    return Coloring(c.k, tuple(colors))


def trajectory(g: Graph, c: Coloring, steps: Iterable[Sequence[int]]) -> list[Coloring]:
    """All colorings visited by ``steps``, starting with ``c`` itself."""
    require_proper(g, c, "start coloring")
    colors = list(c.colors)
    out = [c]
    for i, step in enumerate(steps):
        apply_step(g, colors, c.k, Step(*step), i)
        out.append(Coloring(c.k, tuple(colors)))
    return out


def reverse_sequence(start: Coloring, steps: Sequence[Sequence[int]]) -> RecoloringSequence:
    """Sequence leading from the endpoint of ``steps`` back to ``start``.

    Each step is undone by restoring the color it overwrote, in reverse
    order. Validity of the result follows from validity of ``steps``.
    """
    colors = list(start.colors)
    undo = []
    for v, a in steps:
        undo.append(Step(v, colors[v]))
        colors[v] = a
    return tuple(reversed(undo))


def num_distinct_colors(c: Coloring) -> int:
    return len(set(c.colors))

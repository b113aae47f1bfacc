"""Explicit recoloring sequences built along the constructive arguments.

* :func:`compose_three_mixing` connects any two 3-colorings of a 3-mixing
  bipartite graph through a pair of 2-colorings.
* :func:`synthesize_k` connects any two colorings of a reduction instance:
  normalize B to a fixed 2-coloring on each side, identify the two classes
  so the graph collapses to a clique, schedule the clique, lift back.

The sub-searches inside B are exhaustive BFS; nothing here is polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .coloring import (
    Coloring,
    RecoloringSequence,
    Step,
    apply_sequence,
    require_proper,
    reverse_sequence,
)
from .decider import is_3_mixing, three_to_two
from .errors import (
    BadPermutation,
    NotBipartition,
    NotClassConstant,
    NotMixing,
    NotProper,
    PaletteError,
    PaletteTooSmall,
    ShapeError,
)
from .explorer import path_to_two_coloring, reachable
from .graph import Bipartition, Graph, QuotientMap, bipartition, complete_graph, quotient
from .reduction import ReductionInstance


def relabel(
    steps: Sequence[Sequence[int]], c_start: Coloring, pi: Sequence[int]
) -> tuple[RecoloringSequence, Coloring]:
    """Apply the color permutation ``pi`` to a start coloring and every step."""
    pi = tuple(pi)
    if sorted(pi) != list(range(c_start.k)):
        raise BadPermutation(f"{pi} is not a permutation of 0..{c_start.k - 1}")
    return tuple(Step(v, pi[a]) for v, a in steps), c_start.permuted(pi)


def two_coloring_bridge(g: Graph, c: Coloring, target: Bipartition) -> RecoloringSequence:
    """Move a 2-coloring on colors {1, 2} to the 2-coloring 0 on ``X0``, 1 on ``X1``.

    First every ``X0`` vertex goes to 0, then every ``X1`` vertex not
    already colored 1 goes to 1.
    """
    if c.k < 3:
        raise PaletteError(None, f"the bridge needs a third color, got k={c.k}")
    require_proper(g, c)
    if not c.used_colors() <= {1, 2}:
        raise PaletteError(None, f"bridge start must use colors within {{1, 2}}, got {sorted(c.used_colors())}")
    if not target.is_valid_for(g):
        raise NotBipartition("target classes are not a bipartition of the graph")
    steps = [Step(v, 0) for v in sorted(target.side_a)]
    steps += [Step(v, 1) for v in sorted(target.side_b) if c[v] != 1]
    return tuple(steps)


def _onto_pair(c: Coloring, pair: tuple[int, int]) -> RecoloringSequence:
    """Recolor a <=2-color 3-coloring so it only uses the colors in ``pair``.

    The one color outside ``pair`` forms an independent set whose neighbors
    all carry a single other color, so those vertices can move to the free
    member of ``pair`` one at a time.
    """
    used = c.used_colors()
    (outside,) = {0, 1, 2} - set(pair)
    if outside not in used:
        return ()
    others = used - {outside}
    free = min(set(pair) - others)
    return tuple(Step(v, free) for v, a in enumerate(c.colors) if a == outside)


def compose_three_mixing(
    b: Graph, c1: Coloring, c2: Coloring, max_states: int | None = None
) -> RecoloringSequence:
    """Sequence from ``c1`` to ``c2`` on a 3-mixing graph, via two 2-colorings."""
    c1, c2 = c1.with_palette(3), c2.with_palette(3)
    require_proper(b, c1, "c1")
    require_proper(b, c2, "c2")
    if not is_3_mixing(b, max_states).answer:
        raise NotMixing("graph is not 3-mixing")
    if c1 == c2:
        return ()

    s1 = path_to_two_coloring(b, c1, max_states)
    s2 = path_to_two_coloring(b, c2, max_states)
    if s1 is None or s2 is None:
        raise AssertionError("3-mixing graph has a coloring that never reaches a 2-coloring")
    end1 = apply_sequence(b, c1, s1)
    s1 = s1 + _onto_pair(end1, (1, 2))
    end1 = apply_sequence(b, c1, s1)
    end2 = apply_sequence(b, c2, s2)
    s2 = s2 + _onto_pair(end2, (0, 1))
    end2 = apply_sequence(b, c2, s2)

    x0 = frozenset(v for v in range(b.n) if end2[v] == 0)
    bridge = two_coloring_bridge(b, end1, Bipartition(x0, frozenset(range(b.n)) - x0))
    out = s1 + bridge + reverse_sequence(c2, s2)
    if apply_sequence(b, c1, out) != c2:
        raise AssertionError("composed sequence misses its endpoint")
    return out


@dataclass(frozen=True)
class CliqueSchedule:
    source: tuple[int, ...]
    target: tuple[int, ...]
    k: int
    steps: RecoloringSequence

    def __len__(self) -> int:
        return len(self.steps)


def _schedule(g: Graph, k: int, source: Sequence[int], target: Sequence[int]) -> RecoloringSequence:
    """Greedy schedule from ``source`` to ``target`` with fewer vertices than colors.

    Direct moves (a mismatched vertex whose target color no neighbor holds)
    go first, lowest vertex first. When none exists, the lowest mismatched
    vertex parks on the lowest color nobody uses.
    """
    current = list(source)
    target = list(target)
    steps: list[Step] = []
    limit = 2 * g.n + 1
    while current != target:
        if len(steps) > limit:
            raise AssertionError("schedule failed to converge")
        direct = next(
            (
                v
                for v in range(g.n)
                if current[v] != target[v] and all(current[w] != target[v] for w in g.adjacency[v])
            ),
            None,
        )
        if direct is not None:
            current[direct] = target[direct]
            steps.append(Step(direct, target[direct]))
            continue
        v = next(v for v in range(g.n) if current[v] != target[v])
        spare = min(set(range(k)) - set(current))
        current[v] = spare
        steps.append(Step(v, spare))
    return tuple(steps)


def clique_schedule(m: int, k: int, source: Sequence[int], target: Sequence[int]) -> CliqueSchedule:
    """Recolor a rainbow ``K_m`` from ``source`` to ``target`` in at most ``2m`` steps."""
    if m >= k:
        raise PaletteTooSmall(f"clique schedule needs a spare color: m={m}, k={k}")
    source, target = tuple(source), tuple(target)
    for name, col in (("source", source), ("target", target)):
        if len(col) != m:
            raise ShapeError(f"{name} has length {len(col)}, expected {m}")
        if len(set(col)) != m or any(not 0 <= a < k for a in col):
            raise NotProper(f"{name} {col} is not a rainbow coloring with colors < {k}")
    return CliqueSchedule(source, target, k, _schedule(complete_graph(m), k, source, target))


def lift(
    g: Graph, q: QuotientMap, c_start: Coloring, s_q: Sequence[Sequence[int]]
) -> RecoloringSequence:
    """Expand a sequence on ``quotient(g, q)`` into one on ``g``.

    A quotient step recoloring class ``C`` becomes one step per member of
    ``C``, in index order.
    """
    require_proper(g, c_start, "start coloring")
    qc = []
    for i, cls_ in enumerate(q.classes):
        seen = {c_start[v] for v in cls_}
        if len(seen) > 1:
            raise NotClassConstant(f"class {i} carries colors {sorted(seen)}")
        qc.append(seen.pop() if seen else 0)
    qg = quotient(g, q)
    apply_sequence(qg, Coloring(c_start.k, tuple(qc)), s_q)
    members = [sorted(cls_) for cls_ in q.classes]
    out = []
    for ci, a in s_q:
        out.extend(Step(v, a) for v in members[ci])
    return tuple(out)


@dataclass(frozen=True)
class SynthesisTrace:
    """The three phases of :func:`synthesize_k`, concatenated by :attr:`steps`."""

    normalize_first: RecoloringSequence
    lifted: RecoloringSequence
    normalize_second_reversed: RecoloringSequence
    quotient_map: QuotientMap
    quotient_steps: RecoloringSequence

    @property
    def steps(self) -> RecoloringSequence:
        return self.normalize_first + self.lifted + self.normalize_second_reversed


def _normalize_b(
    inst: ReductionInstance, c: Coloring, parts: Bipartition, max_states: int | None
) -> RecoloringSequence:
    """Sequence recoloring B alone, inside its 3-color palette, to the canonical classes."""
    x_colors = {c[x] for x in inst.x_range}
    palette = sorted(set(range(inst.k)) - x_colors)
    if len(palette) != 3:
        raise AssertionError(f"B palette {palette} should have exactly three colors")
    forward = {a: i for i, a in enumerate(palette)}
    start = Coloring(3, tuple(forward[c[v]] for v in inst.b_range))
    goal = Coloring(3, parts.as_coloring_vector(inst.n_b))
    found = reachable(inst.source, 3, start, goal, max_states)
    if found is None:
        raise AssertionError("3-mixing graph failed to reach its canonical 2-coloring")
    back = palette + sorted(x_colors)
    steps, _ = relabel(found, start.with_palette(inst.k), back)
    return steps


def synthesize_trace(
    inst: ReductionInstance, c1: Coloring, c2: Coloring, max_states: int | None = None
) -> SynthesisTrace:
    g, k = inst.g, inst.k
    c1, c2 = c1.with_palette(k), c2.with_palette(k)
    require_proper(g, c1, "c1")
    require_proper(g, c2, "c2")
    if not three_to_two(inst.source, max_states).answer:
        raise NotMixing("some 3-coloring of B never reaches a 2-coloring")
    parts = bipartition(inst.source)

    first = _normalize_b(inst, c1, parts, max_states)
    second = _normalize_b(inst, c2, parts, max_states)
    c1n = apply_sequence(g, c1, first)
    c2n = apply_sequence(g, c2, second)

    classes = [cls_ for cls_ in (parts.side_a, parts.side_b) if cls_]
    classes += [frozenset((x,)) for x in inst.x_range]
    q = QuotientMap.from_classes(classes)
    qg = quotient(g, q)
    q1 = [c1n[min(cls_)] for cls_ in q.classes]
    q2 = [c2n[min(cls_)] for cls_ in q.classes]
    q_steps = _schedule(qg, k, q1, q2)
    lifted = lift(g, q, c1n, q_steps)
    return SynthesisTrace(first, lifted, reverse_sequence(c2, second), q, q_steps)


def synthesize_k(
    inst: ReductionInstance, c1: Coloring, c2: Coloring, max_states: int | None = None
) -> RecoloringSequence:
    """Valid recoloring sequence between two colorings of a reduction instance."""
    steps = synthesize_trace(inst, c1, c2, max_states).steps
    if apply_sequence(inst.g, c1.with_palette(inst.k), steps) != c2.with_palette(inst.k):
        raise AssertionError("synthesized sequence misses its endpoint")
    return steps

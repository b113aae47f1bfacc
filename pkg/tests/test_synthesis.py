import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recolor.coloring import Coloring, Step, apply_sequence, reverse_sequence
from recolor.errors import (
    BadPermutation,
    NotBipartition,
    NotClassConstant,
    NotMixing,
    NotProper,
    PaletteError,
    PaletteTooSmall,
)
from recolor.explorer import iter_colorings
from recolor.graph import Bipartition, QuotientMap, build_graph, complete_graph, cycle_graph, path_graph, quotient
from recolor.reduction import embed_coloring, reduce
from recolor.synthesis import (
    clique_schedule,
    compose_three_mixing,
    lift,
    relabel,
    synthesize_k,
    synthesize_trace,
    two_coloring_bridge,
)


def col(k, *colors):
    return Coloring(k, colors)


def bip(a, b):
    return Bipartition(frozenset(a), frozenset(b))


# relabel

def test_relabel_identity(p2):
    steps = (Step(0, 2),)
    start = col(3, 0, 1)
    assert relabel(steps, start, (0, 1, 2)) == (steps, start)


def test_relabel_swap(p2):
    out, start = relabel([(0, 2)], col(3, 0, 1), (1, 0, 2))
    assert out == (Step(0, 2),) and start.colors == (1, 0)


def test_relabel_bad_permutation():
    with pytest.raises(BadPermutation):
        relabel([], col(3, 0, 1), (0, 0, 2))


def test_relabel_preserves_validity_all_permutations():
    rnd = random.Random(3)
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    cols = list(iter_colorings(g, 3))
    for _ in range(20):
        a, b = Coloring(3, rnd.choice(cols)), Coloring(3, rnd.choice(cols))
        from recolor.explorer import reachable

        seq = reachable(g, 3, a, b)
        if seq is None:
            continue
        end = apply_sequence(g, a, seq)
        for pi in itertools.permutations(range(3)):
            steps, start = relabel(seq, a, pi)
            assert len(steps) == len(seq)
            assert apply_sequence(g, start, steps) == end.permuted(pi)


# bridge

def test_bridge_p2(p2):
    assert two_coloring_bridge(p2, col(3, 1, 2), bip({0}, {1})) == (Step(0, 0), Step(1, 1))
    assert two_coloring_bridge(p2, col(3, 2, 1), bip({0}, {1})) == (Step(0, 0),)


def test_bridge_c4(c4):
    start = col(3, 1, 2, 1, 2)
    steps = two_coloring_bridge(c4, start, bip({1, 3}, {0, 2}))
    assert steps == (Step(1, 0), Step(3, 0))
    assert apply_sequence(c4, start, steps).colors == (1, 0, 1, 0)
    start = col(3, 2, 1, 2, 1)
    steps = two_coloring_bridge(c4, start, bip({1, 3}, {0, 2}))
    assert len(steps) == 4
    assert apply_sequence(c4, start, steps).colors == (1, 0, 1, 0)


def test_bridge_guards(c4, p2):
    with pytest.raises(PaletteError):
        two_coloring_bridge(p2, col(3, 0, 1), bip({0}, {1}))
    with pytest.raises(NotBipartition):
        two_coloring_bridge(c4, col(3, 1, 2, 1, 2), bip({0, 1}, {2, 3}))
    with pytest.raises(PaletteError):
        two_coloring_bridge(p2, col(2, 1, 0), bip({0}, {1}))


# compose_three_mixing

def test_compose_identity(c4):
    c = col(3, 0, 1, 0, 2)
    assert apply_sequence(c4, c, compose_three_mixing(c4, c, c)) == c


def test_compose_c4_example(c4):
    c1, c2 = col(3, 0, 1, 0, 2), col(3, 2, 0, 1, 0)
    seq = compose_three_mixing(c4, c1, c2)
    assert apply_sequence(c4, c1, seq) == c2


def test_compose_all_pairs_small():
    for g in (cycle_graph(4), path_graph(4), build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])):
        cols = [Coloring(3, c) for c in iter_colorings(g, 3)]
        for c1 in cols[::3]:
            for c2 in cols[::5]:
                assert apply_sequence(g, c1, compose_three_mixing(g, c1, c2)) == c2


def test_compose_not_mixing(c6):
    with pytest.raises(NotMixing):
        compose_three_mixing(c6, col(3, 0, 1, 2, 0, 1, 2), col(3, 0, 1, 0, 1, 0, 1))


# clique_schedule

def test_clique_schedule_examples():
    assert clique_schedule(3, 4, (0, 1, 2), (0, 1, 2)).steps == ()
    assert clique_schedule(2, 3, (0, 1), (1, 0)).steps == (Step(0, 2), Step(1, 0), Step(0, 1))
    assert clique_schedule(2, 3, (0, 1), (2, 0)).steps == (Step(0, 2), Step(1, 0))


def test_clique_schedule_guards():
    with pytest.raises(PaletteTooSmall):
        clique_schedule(3, 3, (0, 1, 2), (1, 2, 0))
    with pytest.raises(NotProper):
        clique_schedule(3, 4, (0, 0, 2), (1, 2, 0))


def _rainbows(m, k):
    return list(itertools.permutations(range(k), m))


@pytest.mark.parametrize("m,k", [(m, k) for k in range(1, 6) for m in range(0, min(k, 4))])
def test_clique_schedule_exhaustive_small(m, k):
    g = complete_graph(m)
    for s in _rainbows(m, k):
        for t in _rainbows(m, k):
            sched = clique_schedule(m, k, s, t)
            assert len(sched) <= 2 * m
            assert apply_sequence(g, Coloring(k, s), sched.steps).colors == t


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 7).flatmap(lambda m: st.tuples(st.just(m), st.integers(m + 1, 9))), st.randoms(use_true_random=False))
def test_clique_schedule_sampled(mk, rnd):
    m, k = mk
    s = tuple(rnd.sample(range(k), m))
    t = tuple(rnd.sample(range(k), m))
    sched = clique_schedule(m, k, s, t)
    assert len(sched) <= 2 * m
    assert apply_sequence(complete_graph(m), Coloring(k, s), sched.steps).colors == t


# lift

def test_lift_identity_quotient(c4):
    start = col(3, 0, 1, 0, 1)
    seq = (Step(0, 2), Step(2, 2))
    assert lift(c4, QuotientMap.identity(4), start, seq) == seq


def test_lift_wheel(w6):
    q = QuotientMap.from_classes([{0, 2, 4}, {1, 3, 5}, {6}])
    start = col(4, 0, 1, 0, 1, 0, 1, 3)
    lifted = lift(w6, q, start, [(0, 2)])
    assert lifted == (Step(0, 2), Step(2, 2), Step(4, 2))
    assert apply_sequence(w6, start, lifted).colors == (2, 1, 2, 1, 2, 1, 3)


def test_lift_requires_class_constant(w6):
    q = QuotientMap.from_classes([{0, 2, 4}, {1, 3, 5}, {6}])
    with pytest.raises(NotClassConstant):
        lift(w6, q, col(4, 0, 1, 2, 1, 0, 1, 3), [(0, 2)])


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_lift_length_bound_random(rnd):
    nb = rnd.randint(2, 6)
    k = rnd.randint(4, 6)
    b = build_graph(nb, [(i, i + 1) for i in range(nb - 1)])
    inst = reduce(b, k)
    parts = [frozenset(range(0, nb, 2)), frozenset(range(1, nb, 2))]
    q = QuotientMap.from_classes(parts + [frozenset((x,)) for x in inst.x_range])
    qg = quotient(inst.g, q)
    m = len(q)
    s = tuple(rnd.sample(range(k), m))
    t = tuple(rnd.sample(range(k), m))
    start = Coloring(k, tuple(s[0] if v % 2 == 0 else s[1] for v in range(nb)) + s[2:])
    sched = clique_schedule(m, k, s, t)
    lifted = lift(inst.g, q, start, sched.steps)
    assert len(lifted) == sum(len(q.classes[ci]) for ci, _ in sched.steps)
    assert len(lifted) <= inst.g.n * len(sched)
    end = apply_sequence(inst.g, start, lifted)
    assert apply_sequence(qg, Coloring(k, s), sched.steps).colors == t
    assert end.colors == tuple(t[0] if v % 2 == 0 else t[1] for v in range(nb)) + t[2:]


# synthesize_k

def _all_colorings(inst):
    return [Coloring(inst.k, c) for c in iter_colorings(inst.g, inst.k)]


def test_synthesize_identity(c4):
    inst = reduce(c4, 4)
    c = _all_colorings(inst)[17]
    assert apply_sequence(inst.g, c, synthesize_k(inst, c, c)) == c


def test_synthesize_random_pairs_c4(c4):
    inst = reduce(c4, 4)
    cols = _all_colorings(inst)
    rnd = random.Random(11)
    for _ in range(100):
        a, b = rnd.choice(cols), rnd.choice(cols)
        assert apply_sequence(inst.g, a, synthesize_k(inst, a, b)) == b


def test_synthesize_not_mixing(c6):
    inst = reduce(c6, 4)
    frozen = embed_coloring(inst, col(3, 0, 1, 2, 0, 1, 2))
    other = embed_coloring(inst, col(3, 0, 1, 0, 1, 0, 1))
    with pytest.raises(NotMixing):
        synthesize_k(inst, frozen, other)


def test_synthesize_keeps_x_fixed_while_normalizing():
    inst = reduce(path_graph(4), 5)
    cols = _all_colorings(inst)
    rnd = random.Random(5)
    xs = set(inst.x_range)
    for _ in range(30):
        a, b = rnd.choice(cols), rnd.choice(cols)
        trace = synthesize_trace(inst, a, b)
        assert not any(v in xs for v, _ in trace.normalize_first)
        assert not any(v in xs for v, _ in trace.normalize_second_reversed)
        mid = apply_sequence(inst.g, a, trace.normalize_first)
        assert mid.restrict(xs) == a.restrict(xs)
        assert apply_sequence(inst.g, a, trace.steps) == b


def test_synthesize_disconnected_and_edgeless_b():
    for b in (build_graph(4, [(0, 1), (2, 3)]), build_graph(3, []), build_graph(3, [(0, 1)])):
        inst = reduce(b, 4)
        cols = _all_colorings(inst)
        rnd = random.Random(2)
        for _ in range(25):
            x, y = rnd.choice(cols), rnd.choice(cols)
            assert apply_sequence(inst.g, x, synthesize_k(inst, x, y)) == y


def test_reverse_soundness(c4):
    inst = reduce(c4, 4)
    cols = _all_colorings(inst)
    a, b = cols[3], cols[-5]
    seq = synthesize_k(inst, a, b)
    assert apply_sequence(inst.g, b, reverse_sequence(a, seq)) == a

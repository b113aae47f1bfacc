"""Mixing decisions: the 3-to-2 predicate, 3-mixing and a k-mixing dispatcher."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .coloring import Coloring
from .errors import MethodMismatch
from .explorer import Census, census
from .graph import Graph, bipartition


class Reason(str, enum.Enum):
    NON_BIPARTITE = "NonBipartite"
    FROZEN_WITNESS = "FrozenWitness"
    STUCK_WITNESS = "StuckWitness"
    CONNECTED = "Connected"
    VACUOUS_NO_COLORINGS = "VacuousNoColorings"


@dataclass(frozen=True)
class MixingVerdict:
    answer: bool
    reason: Reason
    witness: Coloring | None = None
    method: str = ""

    def as_dict(self) -> dict:
        return {
            "answer": self.answer,
            "reason": self.reason.value,
            "witness": None if self.witness is None else list(self.witness.colors),
            "k": None if self.witness is None else self.witness.k,
            "method": self.method,
        }


def _witness_reason(cen: Census, i: int) -> Reason:
    return Reason.FROZEN_WITNESS if cen.degrees[i] == 0 else Reason.STUCK_WITNESS


def stuck_indices(cen: Census) -> np.ndarray:
    """Indices (ascending, i.e. lexicographic) of colorings that cannot reach a <=2-color state.

    A component either contains a coloring with at most two colors or none
    of its members can reach one, so one census answers all colorings.
    """
    rows = cen.colorings
    if len(cen) == 0:
        return np.zeros(0, dtype=np.int64)
    distinct = np.zeros(len(cen), dtype=np.int64)
    for a in range(cen.k):
        distinct += (rows == a).any(axis=1)
    good = np.zeros(cen.num_components, dtype=bool)
    good[cen.labels[distinct <= 2]] = True
    return np.nonzero(~good[cen.labels])[0]


def three_to_two(b: Graph, max_states: int | None = None) -> MixingVerdict:
    """Can every proper 3-coloring of ``b`` be recolored into one using at most two colors?

    On a negative answer the witness is the lexicographically least stuck
    coloring. Graphs without any proper 3-coloring answer vacuously true.
    """
    cen = census(b, 3, max_states)
    if len(cen) == 0:
        return MixingVerdict(True, Reason.VACUOUS_NO_COLORINGS, method="3-to-2")
    stuck = stuck_indices(cen)
    if stuck.size == 0:
        return MixingVerdict(True, Reason.CONNECTED, method="3-to-2")
    i = int(stuck[0])
    return MixingVerdict(False, _witness_reason(cen, i), cen.coloring(i), method="3-to-2")


def is_3_mixing(g: Graph, max_states: int | None = None) -> MixingVerdict:
    """Decide 3-mixing as "bipartite and every 3-coloring reaches a 2-coloring".

    A graph with no proper 3-coloring is reported vacuously mixing, the same
    convention the exhaustive census uses.
    """
    if bipartition(g) is None:
        cen = census(g, 3, max_states)
        if len(cen) == 0:
            return MixingVerdict(True, Reason.VACUOUS_NO_COLORINGS, method="lemma3")
        return MixingVerdict(False, Reason.NON_BIPARTITE, method="lemma3")
    verdict = three_to_two(g, max_states)
    return MixingVerdict(verdict.answer, verdict.reason, verdict.witness, method="lemma3")


def brute_verdict(g: Graph, k: int, max_states: int | None = None) -> MixingVerdict:
    """Verdict straight from the component census.

    When disconnected, the witness is the least frozen coloring if any
    exists, otherwise the least coloring outside the component of the
    least coloring overall.
    """
    cen = census(g, k, max_states)
    if len(cen) == 0:
        return MixingVerdict(True, Reason.VACUOUS_NO_COLORINGS, method="brute")
    if cen.num_components == 1:
        return MixingVerdict(True, Reason.CONNECTED, method="brute")
    frozen = cen.frozen_indices()
    if frozen.size:
        return MixingVerdict(False, Reason.FROZEN_WITNESS, cen.coloring(int(frozen[0])), method="brute")
    i = int(np.nonzero(cen.labels != 0)[0][0])
    return MixingVerdict(False, Reason.STUCK_WITNESS, cen.coloring(i), method="brute")


METHODS = ("auto", "brute", "lemma3")


def decide_mixing(g: Graph, k: int, method: str = "auto", max_states: int | None = None) -> MixingVerdict:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "lemma3" and k != 3:
        raise MethodMismatch(f"lemma3 decides 3-mixing only, got k={k}")
    if method == "lemma3" or (method == "auto" and k == 3):
        return is_3_mixing(g, max_states)
    return brute_verdict(g, k, max_states)

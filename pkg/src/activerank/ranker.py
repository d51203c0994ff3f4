"""Sequential query selection for noiseless comparisons.

Objects are visited in a seeded random order and inserted one at a time into
the ranking of those already seen. Each comparison the insertion needs is
either requested from the oracle (when its bisector still cuts the current
cell) or imputed from the cell. Only requested labels become constraints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

import numpy as np

from .geom import (
    DEFAULT_BOX_INFLATION,
    ConstraintSet,
    Embedding,
    bisector,
    label_from_sides,
    label_sign,
)
from .oracle import Oracle

STRATEGIES = ("linear", "binary")


@dataclass
class RankingResult:
    """Outcome of one ranking session.

    ``order`` lists object indices from most to least preferred. ``labels``
    and ``provenance`` are keyed by ``(i, j)`` with ``i < j``; pairs absent
    from ``provenance`` were never resolved. ``trace`` has one
    ``(prefix_size, tested, ambiguous)`` row per inserted object.
    """

    order: list
    requested: int
    imputed: int
    cell: ConstraintSet
    labels: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)
    shuffle: list = field(default_factory=list)

    @property
    def constraint_count(self) -> int:
        return len(self.cell)

    def pairs_with(self, tag: str) -> list:
        return [pair for pair, t in self.provenance.items() if t == tag]


class Session:
    """Mutable state shared by the sequential algorithms: the cell and every resolved label."""

    def __init__(self, emb: Embedding, box_inflation: float = DEFAULT_BOX_INFLATION):
        self.emb = emb
        self.cell = ConstraintSet.for_embedding(emb, box_inflation)
        self.labels: dict = {}
        self.provenance: dict = {}
        self.requested = 0
        self.imputed = 0

    def probe(self, i: int, j: int):
        """``(ambiguous, label)``; ``label`` is ``None`` when the query is ambiguous."""
        h = bisector(self.emb, i, j)
        neg, pos = self.cell.feasible_sides(h)
        if neg and pos:
            return True, None
        return False, label_from_sides(neg, pos)

    def record(self, i: int, j: int, label: int, tag: str) -> None:
        key, y = ((i, j), label) if i < j else ((j, i), 1 - label)
        self.labels[key] = y
        self.provenance[key] = tag
        if tag == "imputed":
            self.imputed += 1
            return
        # "requested" and "voted" labels are held as constraints.
        if tag == "requested":
            self.requested += 1
        self.cell.add(bisector(self.emb, i, j), label_sign(label))

    def label(self, i: int, j: int) -> Optional[int]:
        if i < j:
            return self.labels.get((i, j))
        y = self.labels.get((j, i))
        return None if y is None else 1 - y


def _resolver(session: Session, ask: Callable[[int, int], int], counter: list):
    def compare(i: int, j: int) -> int:
        known = session.label(i, j)
        if known is not None:
            return known
        ambiguous, label = session.probe(i, j)
        counter[0] += 1
        if ambiguous:
            counter[1] += 1
            label = ask(i, j)
            session.record(i, j, label, "requested")
        else:
            session.record(i, j, label, "imputed")
        return label

    return compare


def insert_linear(ranked: list, seen: list, j: int, compare) -> int:
    """Compare ``j`` with every object in ``seen`` (visit order); return its insertion index."""
    ahead = 0
    for i in seen:
        ahead += compare(i, j)
    return ahead


def insert_binary(ranked: list, j: int, compare) -> int:
    lo, hi = 0, len(ranked)
    while lo < hi:
        mid = (lo + hi) // 2
        if compare(ranked[mid], j):
            lo = mid + 1
        else:
            hi = mid
    return lo


def rank_errorfree(
    emb: Embedding,
    oracle: Oracle,
    strategy: str = "binary",
    seed: int = 0,
    box_inflation: float = DEFAULT_BOX_INFLATION,
    ask: Optional[Callable[[int, int], int]] = None,
    progress: Optional[Callable[[list], None]] = None,
) -> RankingResult:
    """Rank every object, requesting only comparisons the cell cannot decide.

    With a noiseless oracle the result equals sorting the objects by their
    distance to the oracle's reference. ``ask`` overrides how a requested
    label is obtained (default: one ``oracle.ask`` call). ``progress`` is
    called with the current ranking after every insertion.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    ask = oracle.ask if ask is None else ask
    rng = np.random.default_rng(seed)
    shuffle = [int(k) for k in rng.permutation(emb.n)]
    session = Session(emb, box_inflation)
    trace = []
    ranked = [shuffle[0]]
    for pos in range(1, emb.n):
        j = shuffle[pos]
        counter = [0, 0]
        compare = _resolver(session, ask, counter)
        if strategy == "linear":
            at = insert_linear(ranked, shuffle[:pos], j, compare)
        else:
            at = insert_binary(ranked, j, compare)
        ranked.insert(at, j)
        trace.append((pos, counter[0], counter[1]))
        if progress is not None:
            progress(list(ranked))
    return RankingResult(
        order=ranked,
        requested=session.requested,
        imputed=session.imputed,
        cell=session.cell,
        labels=session.labels,
        provenance=session.provenance,
        trace=trace,
        shuffle=shuffle,
    )


@dataclass
class RandomQueryResult:
    unique: bool
    cell: ConstraintSet
    queried: list


def rank_random_queries(
    emb: Embedding,
    oracle: Oracle,
    m: int,
    seed: int = 0,
    box_inflation: float = DEFAULT_BOX_INFLATION,
) -> RandomQueryResult:
    """Ask ``m`` distinct random queries and report whether they determine the ranking."""
    pairs = list(combinations(range(emb.n), 2))
    if not 0 <= m <= len(pairs):
        raise ValueError(f"m must lie in [0, {len(pairs)}], got {m}")
    rng = np.random.default_rng(seed)
    chosen = sorted(int(k) for k in rng.choice(len(pairs), size=m, replace=False))
    cell = ConstraintSet.for_embedding(emb, box_inflation)
    asked = set()
    for k in chosen:
        i, j = pairs[k]
        cell.add(bisector(emb, i, j), label_sign(oracle.ask(i, j)))
        asked.add(k)
    unique = True
    for k, (i, j) in enumerate(pairs):
        if k in asked:
            continue
        neg, pos = cell.feasible_sides(bisector(emb, i, j))
        if neg and pos:
            unique = False
            break
    return RandomQueryResult(unique, cell, [pairs[k] for k in chosen])

"""Ranking from comparisons that are only probably correct.

Two noise models are handled. With persistent errors (asking again returns
the same answer) each ambiguous query is settled by a vote over objects that
may sit between the pair, and objects whose voting set is too small are
passed over. With i.i.d. errors each ambiguous query is simply asked ``R``
times and decided by majority.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .geom import DEFAULT_BOX_INFLATION, ConstraintSet, Embedding, bisector
from .oracle import Oracle
from .ranker import STRATEGIES, RankingResult, Session, insert_binary, insert_linear, rank_errorfree


@dataclass(frozen=True)
class VoteConfig:
    R: int
    seed: int = 0

    def __post_init__(self):
        if self.R < 1:
            raise ValueError(f"vote size R must be at least 1, got {self.R}")


@dataclass
class PartialRankingResult:
    """Ranking over the objects that were not passed over.

    ``ranked`` is ordered from most to least preferred. ``first_skip`` counts
    the objects ranked before the first one was passed over (all of them if
    none was). ``log`` holds one record per ambiguous query.
    """

    ranked: list
    skipped: list
    requested: int
    total_calls: int
    votes_held: int
    cell: ConstraintSet
    labels: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    log: list = field(default_factory=list)
    first_skip: Optional[int] = None
    shuffle: list = field(default_factory=list)

    def write_log(self, path) -> None:
        with open(path, "w") as fh:
            for rec in self.log:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")


def threshold_for(n: int, p: float, scale: float = 2.0) -> int:
    """``ceil(scale * (1-2p)^-2 * ln n)``, the size threshold used in the experiments."""
    return math.ceil(scale * math.log(n) / (1.0 - 2.0 * p) ** 2)


def repeats_for(n: int, p: float, delta: float) -> int:
    """Smallest ``R`` with ``2 n log2(n) exp(-(1-2p)^2 R / 2) <= delta``."""
    return math.ceil(2.0 * math.log(2.0 * n * math.log2(n) / delta) / (1.0 - 2.0 * p) ** 2)


def voting_set(cs: ConstraintSet, emb: Embedding, i: int, j: int, decided: Optional[dict] = None) -> list:
    """Objects ``k`` for which ``(i, k)`` or ``(k, j)`` is still ambiguous.

    ``decided`` maps ``(a, b)`` with ``a < b`` to a held label; such pairs are
    implied by the cell and are skipped without an LP.
    """
    decided = decided or {}

    def ambiguous(a, b):
        if (min(a, b), max(a, b)) in decided:
            return False
        neg, pos = cs.feasible_sides(bisector(emb, a, b))
        return neg and pos

    return [k for k in range(emb.n) if k != i and k != j and (ambiguous(i, k) or ambiguous(k, j))]


def vote_sum(responses) -> int:
    """Signed vote: +1 per voter answering ``(1, 1)``, -1 per ``(0, 0)``, 0 otherwise."""
    return sum((a == 1 and b == 1) - (a == 0 and b == 0) for a, b in responses)


def vote_decide(responses, tie_break: Optional[Callable[[], int]] = None) -> int:
    """Label for ``(i, j)`` from voter responses ``(Y_ik, Y_kj)``.

    A zero sum falls back to ``tie_break()`` (a direct ``Y_ij`` request in
    :func:`rank_robust`); without one, ties raise ``ValueError``.
    """
    responses = list(responses)
    if not responses:
        raise ValueError("need at least one voter")
    s = vote_sum(responses)
    if s > 0:
        return 1
    if s < 0:
        return 0
    if tie_break is None:
        raise ValueError("vote is tied and no tie-break was supplied")
    return tie_break()


class _Skip(Exception):
    pass


def rank_robust(
    emb: Embedding,
    oracle: Oracle,
    cfg: VoteConfig,
    strategy: str = "binary",
    box_inflation: float = DEFAULT_BOX_INFLATION,
    stop_at_first_skip: bool = False,
    progress: Optional[Callable[[list], None]] = None,
) -> PartialRankingResult:
    """Voting variant of the sequential algorithm for persistent errors.

    Decided labels become constraints as-is; individual vote responses never
    do. A skipped object is not revisited. ``progress`` is called with the
    current partial ranking after every insertion.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    R = cfg.R
    rng = np.random.default_rng(cfg.seed)
    shuffle = [int(k) for k in rng.permutation(emb.n)]
    session = Session(emb, box_inflation)
    log = []
    votes = 0
    skipped = []
    first_skip = None

    def compare(i, j):
        nonlocal votes
        known = session.label(i, j)
        if known is not None:
            return known
        ambiguous, label = session.probe(i, j)
        if not ambiguous:
            session.record(i, j, label, "imputed")
            return label
        T = voting_set(session.cell, emb, i, j, session.labels)
        rec = {"pair": [i, j], "T_size": len(T), "after_first_skip": first_skip is not None}
        if len(T) < R:
            rec["skipped"] = j
            log.append(rec)
            raise _Skip
        sample = [int(k) for k in rng.choice(T, size=R, replace=False)]
        responses = [(oracle.ask(i, k), oracle.ask(k, j)) for k in sample]
        tie = []

        def direct():
            tie.append(oracle.ask(i, j))
            return tie[0]

        label = vote_decide(responses, direct)
        votes += 1
        session.record(i, j, label, "voted")
        rec.update(sample=sample, responses=[list(r) for r in responses],
                   signed_sum=vote_sum(responses), tie_break=bool(tie), decided=label)
        log.append(rec)
        return label

    ranked = [shuffle[0]]
    for pos in range(1, emb.n):
        j = shuffle[pos]
        try:
            if strategy == "linear":
                at = insert_linear(ranked, list(ranked), j, compare)
            else:
                at = insert_binary(ranked, j, compare)
        except _Skip:
            skipped.append(j)
            if first_skip is None:
                first_skip = len(ranked)
                if stop_at_first_skip:
                    break
            continue
        ranked.insert(at, j)
        if progress is not None:
            progress(list(ranked))
    return PartialRankingResult(
        ranked=ranked,
        skipped=skipped,
        requested=oracle.stats.requested,
        total_calls=oracle.stats.total_calls,
        votes_held=votes,
        cell=session.cell,
        labels=session.labels,
        provenance=session.provenance,
        log=log,
        first_skip=first_skip if first_skip is not None else len(ranked),
        shuffle=shuffle,
    )


def rank_majority_repeat(
    emb: Embedding,
    oracle: Oracle,
    R: int,
    seed: int = 0,
    strategy: str = "binary",
    box_inflation: float = DEFAULT_BOX_INFLATION,
) -> RankingResult:
    """Sequential algorithm with each requested label set by a majority of ``R`` calls.

    An even ``R`` that splits evenly is settled by one extra call.
    """
    if R < 1:
        raise ValueError(f"repeat count must be at least 1, got {R}")

    def ask(i, j):
        ones = sum(oracle.ask(i, j) for _ in range(R))
        if 2 * ones == R:
            ones += oracle.ask(i, j)
            return int(2 * ones > R + 1)
        return int(2 * ones > R)

    return rank_errorfree(emb, oracle, strategy, seed, box_inflation, ask=ask)


def complete_ranking(partial, cs: ConstraintSet, emb: Embedding) -> list:
    """Full ranking of every object by distance to the cell's Chebyshev center."""
    x = cs.interior_point()
    return [int(k) for k in np.argsort(emb.distances(x), kind="stable")]

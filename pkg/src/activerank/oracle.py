"""Sources of pairwise-comparison answers, with query accounting.

Every oracle answers ``ask(i, j)`` with label ``1`` when object ``i`` is
preferred (closer to the reference) and ``0`` otherwise, and keeps an
:class:`OracleStats` tally. The ranking algorithms only talk to this
interface, so a simulated reference, a similarity matrix and a person at a
terminal are interchangeable.
"""

from __future__ import annotations

import hashlib
import json
import struct
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import FormatError, SessionAborted, TieError
from .geom import Embedding

NOISE_MODES = ("none", "iid", "persistent")


@dataclass
class OracleStats:
    requested: int = 0
    total_calls: int = 0
    ties: int = 0
    _seen: set = field(default_factory=set, repr=False)

    def record(self, i: int, j: int) -> None:
        key = (i, j) if i < j else (j, i)
        self.total_calls += 1
        if key not in self._seen:
            self._seen.add(key)
            self.requested += 1

    @property
    def repeats(self) -> int:
        return self.total_calls - self.requested


@dataclass(frozen=True)
class NoiseSpec:
    p: float = 0.0
    mode: str = "none"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in NOISE_MODES:
            raise ValueError(f"noise mode must be one of {NOISE_MODES}, got {self.mode!r}")
        if not 0.0 <= self.p < 0.5:
            raise ValueError(f"error probability must lie in [0, 0.5), got {self.p}")


def geometric_answer(emb: Embedding, r, i: int, j: int) -> int:
    r = np.asarray(r, dtype=float)
    di = np.linalg.norm(emb.points[i] - r)
    dj = np.linalg.norm(emb.points[j] - r)
    if di == dj:
        raise TieError(f"reference is equidistant from objects {i} and {j}")
    return int(di < dj)


def iid_noisy_answer(base: int, p: float, rng: np.random.Generator) -> int:
    if p and rng.random() < p:
        return 1 - base
    return base


def _pair_uniform(seed: int, i: int, j: int) -> float:
    a, b = (i, j) if i < j else (j, i)
    digest = hashlib.blake2b(struct.pack("<qqq", seed, a, b), digest_size=8).digest()
    return int.from_bytes(digest, "little") / 2.0**64


def persistent_noisy_answer(base: int, p: float, seed: int, pair: tuple) -> int:
    """Flip ``base`` iff a fixed hash of ``(seed, {i, j})`` falls below ``p``."""
    if p and _pair_uniform(seed, *pair) < p:
        return 1 - base
    return base


def matrix_answer(S: np.ndarray, k: int, i: int, j: int, stats: Optional[OracleStats] = None) -> int:
    """Label for "row ``k`` is more similar to ``i`` than to ``j``"; ties go to the lower index."""
    if len({i, j, k}) != 3:
        raise ValueError(f"indices must be distinct, got k={k}, i={i}, j={j}")
    si, sj = S[k, i], S[k, j]
    if si == sj:
        if stats is not None:
            stats.ties += 1
        return int(i < j)
    return int(si > sj)


def check_similarity_matrix(S, tol: float = 1e-9) -> np.ndarray:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise FormatError(f"similarity matrix must be square, got shape {S.shape}")
    if not np.all(np.isfinite(S)):
        raise FormatError("similarity matrix contains non-finite entries")
    if np.max(np.abs(S - S.T), initial=0.0) > tol:
        raise FormatError("similarity matrix is not symmetric")
    return S


class Oracle:
    """Base class: subclasses implement :meth:`_answer`."""

    def __init__(self):
        self.stats = OracleStats()

    def ask(self, i: int, j: int) -> int:
        self.stats.record(i, j)
        return self._answer(i, j)

    def _answer(self, i: int, j: int) -> int:
        raise NotImplementedError


class GeometricOracle(Oracle):
    """Answers from distances to a hidden reference point, optionally corrupted."""

    def __init__(self, emb: Embedding, reference, noise: NoiseSpec = NoiseSpec()):
        super().__init__()
        self.emb = emb
        self.reference = np.asarray(reference, dtype=float)
        self.noise = noise
        self._rng = np.random.default_rng(noise.seed)

    def _answer(self, i, j):
        base = geometric_answer(self.emb, self.reference, i, j)
        if self.noise.mode == "iid":
            return iid_noisy_answer(base, self.noise.p, self._rng)
        if self.noise.mode == "persistent":
            return persistent_noisy_answer(base, self.noise.p, self.noise.seed, (i, j))
        return base

    def true_order(self) -> np.ndarray:
        return np.argsort(self.emb.distances(self.reference), kind="stable")


class MatrixOracle(Oracle):
    """Answers for reference row ``k`` of a symmetric similarity matrix.

    ``objects`` maps the caller's local indices to matrix rows, so a ranking
    over "everything except ``k``" can use indices ``0..n-2``.
    """

    def __init__(self, S, k: int, objects=None):
        super().__init__()
        self.S = check_similarity_matrix(S)
        self.k = k
        self.objects = list(range(len(self.S))) if objects is None else list(objects)

    def _answer(self, i, j):
        return matrix_answer(self.S, self.k, self.objects[i], self.objects[j], self.stats)


class RemappedOracle(Oracle):
    """View of another oracle through an index map; shares nothing but the answers."""

    def __init__(self, inner: Oracle, objects):
        super().__init__()
        self.inner = inner
        self.objects = list(objects)

    def _answer(self, i, j):
        return self.inner.ask(self.objects[i], self.objects[j])


_YES = {"y", "yes", "1"}
_NO = {"n", "no", "0"}


class InteractiveOracle(Oracle):
    """Asks a person at a terminal and keeps a JSON-lines transcript."""

    def __init__(self, names, stdin=None, stdout=None, transcript_path=None, clock=time.time):
        super().__init__()
        self.names = list(names)
        self.stdin = stdin if stdin is not None else sys.stdin
        self.stdout = stdout if stdout is not None else sys.stdout
        self.transcript_path = transcript_path
        self.transcript: list = []
        self.reprompts = 0
        self._clock = clock

    def _answer(self, i, j):
        prompt = f"Is {self.names[i]} closer/preferred over {self.names[j]}? [y/n] "
        while True:
            self.stdout.write(prompt)
            self.stdout.flush()
            line = self.stdin.readline()
            if not line:
                self.save()
                raise SessionAborted(f"input ended after {len(self.transcript)} answers")
            reply = line.strip().lower()
            if reply in _YES or reply in _NO:
                break
            self.reprompts += 1
            self.stdout.write("Please answer y or n.\n")
        label = int(reply in _YES)
        self.transcript.append({"pair": [i, j], "answer": label, "timestamp": self._clock()})
        self.save()
        return label

    def save(self) -> None:
        if self.transcript_path is None:
            return
        with open(self.transcript_path, "w") as fh:
            for rec in self.transcript:
                fh.write(json.dumps(rec) + "\n")

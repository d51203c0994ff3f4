"""Bisecting hyperplanes and the strict-feasibility test behind query selection.

A pairwise query ``(i, j)`` asks which side of the bisector between objects
``i`` and ``j`` the reference point lies on. The answers collected so far
carve out a convex cell; a query is *ambiguous* when its bisector cuts that
cell, and otherwise its label is implied by the labels already held.

Label convention used throughout the package: ``1`` means the reference is
strictly closer to the first object of the pair, ``0`` that it is strictly
closer to the second. Geometrically, label ``1`` is the negative side of
``bisector(emb, i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import highspy
import numpy as np
from scipy.spatial import cKDTree

from .errors import ContractError, DegeneratePairError, InconsistencyError, NumericalFailure

EPS_FEAS = 1e-9
DEFAULT_BOX_INFLATION = 100.0
_DUPLICATE_TOL = 1e-12
_POOL_SIZE = 64


@dataclass(frozen=True, eq=False)
class Embedding:
    """Locations of ``n`` objects in ``R^d``, optionally with display names."""

    points: np.ndarray
    names: Optional[tuple] = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2:
            raise ValueError("points must be an (n, d) array")
        n, d = pts.shape
        if n < 2 or d < 1:
            raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("embedding coordinates must be finite")
        if self.names is not None and len(self.names) != n:
            raise ValueError(f"{len(self.names)} names for {n} objects")
        span = float(np.max(np.ptp(pts, axis=0)))
        pairs = cKDTree(pts).query_pairs(_DUPLICATE_TOL * max(span, 1.0))
        if pairs:
            i, j = min(pairs)
            raise DegeneratePairError(f"objects {i} and {j} coincide")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)
        if self.names is not None:
            object.__setattr__(self, "names", tuple(str(s) for s in self.names))

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def bounding_box(self, inflation: float = DEFAULT_BOX_INFLATION):
        """Axis-aligned box of the objects, padded by ``inflation`` times its largest side."""
        lo = self.points.min(axis=0)
        hi = self.points.max(axis=0)
        pad = inflation * max(float(np.max(hi - lo)), 1e-12)
        return lo - pad, hi + pad

    def subset(self, indices: Sequence[int]) -> "Embedding":
        idx = list(indices)
        names = None if self.names is None else tuple(self.names[k] for k in idx)
        return Embedding(self.points[idx], names)

    def distances(self, r) -> np.ndarray:
        return np.linalg.norm(self.points - np.asarray(r, dtype=float), axis=1)

    def name(self, k: int) -> str:
        return str(k) if self.names is None else self.names[k]


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """The set ``normal . x + offset = 0``; ``source_pair`` is ``(i, j)`` for bisectors."""

    normal: np.ndarray
    offset: float
    source_pair: Optional[tuple] = None

    def __post_init__(self):
        a = np.array(self.normal, dtype=float).ravel()
        if not np.any(a):
            raise ValueError("hyperplane normal must be nonzero")
        a.setflags(write=False)
        object.__setattr__(self, "normal", a)
        object.__setattr__(self, "offset", float(self.offset))

    def value(self, x) -> float:
        return float(self.normal @ np.asarray(x, dtype=float) + self.offset)

    def flipped(self) -> "Hyperplane":
        pair = None if self.source_pair is None else self.source_pair[::-1]
        return Hyperplane(-self.normal, -self.offset, pair)


def bisector(emb: Embedding, i: int, j: int) -> Hyperplane:
    """Perpendicular bisector of objects ``i`` and ``j``; ``i`` lies on the negative side."""
    if i == j:
        raise DegeneratePairError(f"query pairs an object with itself ({i})")
    ti = emb.points[i]
    tj = emb.points[j]
    a = tj - ti
    if not np.any(a):
        raise DegeneratePairError(f"objects {i} and {j} coincide")
    b = 0.5 * (ti @ ti - tj @ tj)
    return Hyperplane(a, b, (i, j))


def side_of(h: Hyperplane, x) -> int:
    """Sign of ``h`` at ``x``: -1, 0 (on the plane, within tolerance) or +1."""
    x = np.asarray(x, dtype=float)
    if x.shape != h.normal.shape:
        raise ValueError(f"point has dimension {x.shape}, plane has {h.normal.shape}")
    v = h.value(x)
    tol = 1e-12 * (1.0 + np.linalg.norm(h.normal) * np.linalg.norm(x))
    if abs(v) <= tol:
        return 0
    return 1 if v > 0 else -1


def label_sign(label: int) -> int:
    """Side of ``bisector(i, j)`` that label ``y_ij`` places the reference on."""
    return -1 if label == 1 else 1


def sign_label(sign: int) -> int:
    return 1 if sign < 0 else 0


@dataclass
class ConstraintSet:
    """Signed halfspaces known to contain the reference, clipped to a box.

    Feasibility is decided by the max-margin LP

        maximize t  s.t.  s_k (a_k . x + b_k) >= t ||a_k||,
                          lower + t <= x <= upper - t

    and the region counts as having interior iff the optimum ``t*`` exceeds
    ``eps_feas``. The optimizer is the Chebyshev center of the cell.
    """

    lower: np.ndarray
    upper: np.ndarray
    eps_feas: float = EPS_FEAS
    constraints: list = field(default_factory=list)

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float).ravel()
        self.upper = np.asarray(self.upper, dtype=float).ravel()
        if self.lower.shape != self.upper.shape or np.any(self.upper <= self.lower):
            raise ValueError("box needs lower < upper in every coordinate")
        self._rows = np.empty((0, self.dim + 1))  # unit normal scaled by sign, then rhs
        pending = list(self.constraints)
        self.constraints = []
        self._highs = None
        self._center = None
        self._radius = None
        self._pool = np.empty((0, self.dim))
        for h, s in pending:
            self.add(h, s)

    @classmethod
    def for_embedding(cls, emb: Embedding, inflation: float = DEFAULT_BOX_INFLATION, eps_feas: float = EPS_FEAS):
        lo, hi = emb.bounding_box(inflation)
        return cls(lo, hi, eps_feas)

    @property
    def dim(self) -> int:
        return self.lower.shape[0]

    def __len__(self):
        return len(self.constraints)

    def copy(self) -> "ConstraintSet":
        return ConstraintSet(self.lower, self.upper, self.eps_feas, list(self.constraints))

    @staticmethod
    def _row(h: Hyperplane, sign: int) -> np.ndarray:
        # Encodes sign*(a.x + b) >= t*||a||  as  -sign*a/||a|| . x + t <= sign*b/||a||.
        norm = np.linalg.norm(h.normal)
        return np.concatenate([-sign * h.normal / norm, [sign * h.offset / norm]])

    def add(self, h: Hyperplane, sign: int) -> None:
        """Require the reference to lie strictly on side ``sign`` of ``h``."""
        if sign not in (-1, 1):
            raise ValueError(f"sign must be -1 or +1, got {sign}")
        if h.normal.shape[0] != self.dim:
            raise ValueError("hyperplane dimension does not match the box")
        self.constraints.append((h, sign))
        row = self._row(h, sign)
        self._rows = np.vstack([self._rows, row])
        if self._highs is not None:
            self._append_row(self._highs, row)
        self._center = None
        self._radius = None
        if len(self._pool):
            keep = self._pool @ -row[:-1] + row[-1] > self.eps_feas
            self._pool = self._pool[keep]

    # -- LP backend -----------------------------------------------------

    def _append_row(self, hs, row) -> None:
        d = self.dim
        hs.addRow(-highspy.kHighsInf, float(row[-1]), d + 1,
                  np.arange(d + 1, dtype=np.int32), np.append(row[:-1], 1.0))

    def _build(self):
        d = self.dim
        inf = highspy.kHighsInf
        hs = highspy.Highs()
        hs.setOptionValue("output_flag", False)
        hs.addVars(d, self.lower, self.upper)
        hs.addVar(-inf, inf)
        hs.changeColCost(d, -1.0)
        for k in range(d):
            idx = np.array([k, d], dtype=np.int32)
            hs.addRow(-inf, float(-self.lower[k]), 2, idx, np.array([-1.0, 1.0]))
            hs.addRow(-inf, float(self.upper[k]), 2, idx, np.array([1.0, 1.0]))
        for row in self._rows:
            self._append_row(hs, row)
        return hs

    def _solve(self, extra: Optional[np.ndarray] = None):
        for attempt in range(2):
            if self._highs is None:
                self._highs = self._build()
            hs = self._highs
            if extra is not None:
                self._append_row(hs, extra)
            try:
                hs.run()
                status = hs.getModelStatus()
                if status == highspy.HighsModelStatus.kOptimal:
                    sol = np.array(hs.getSolution().col_value)
                    return float(sol[-1]), sol[:-1]
            finally:
                if extra is not None:
                    hs.deleteRows(1, np.array([hs.getNumRow() - 1], dtype=np.int32))
            self._highs = None  # rebuild from scratch once before giving up
        raise NumericalFailure(f"margin LP ended with status {hs.modelStatusToString(status)}",
                               len(self.constraints) + (extra is not None))

    def margin(self, extra: Optional[tuple] = None):
        """Optimal margin ``t*`` and its maximizer, optionally with one extra ``(h, sign)``."""
        if extra is None:
            if self._center is None:
                self._radius, self._center = self._solve()
                if self._radius > self.eps_feas:
                    self._remember(self._center)
            return self._radius, self._center
        h, sign = extra
        return self._solve(self._row(h, sign))

    def has_interior(self) -> bool:
        return self.margin()[0] > self.eps_feas

    def interior_point(self) -> np.ndarray:
        t, x = self.margin()
        if t <= self.eps_feas:
            raise ContractError("constraint set has empty interior")
        return x.copy()

    # -- ambiguity ------------------------------------------------------

    def _remember(self, x: np.ndarray) -> None:
        self._pool = np.vstack([x, self._pool[: _POOL_SIZE - 1]])

    def _witnessed(self, h: Hyperplane, sign: int) -> bool:
        if not len(self._pool):
            return False
        dist = sign * (self._pool @ h.normal + h.offset) / np.linalg.norm(h.normal)
        return bool(np.any(dist > self.eps_feas))

    def side_feasible(self, h: Hyperplane, sign: int) -> bool:
        """Does the cell keep interior after also requiring side ``sign`` of ``h``?"""
        if self._witnessed(h, sign):
            return True
        t, x = self.margin((h, sign))
        if t > self.eps_feas:
            self._remember(x)
            return True
        return False

    def feasible_sides(self, h: Hyperplane) -> tuple:
        """``(negative side feasible, positive side feasible)`` for hyperplane ``h``."""
        if self.margin()[0] <= self.eps_feas:
            raise ContractError("ambiguity is undefined for a cell without interior")
        return self.side_feasible(h, -1), self.side_feasible(h, 1)


def has_interior(cs: ConstraintSet) -> bool:
    return cs.has_interior()


def interior_point(cs: ConstraintSet) -> np.ndarray:
    return cs.interior_point()


def is_ambiguous(cs: ConstraintSet, h: Hyperplane) -> bool:
    """True iff ``h`` cuts the cell, i.e. both of its sides keep nonempty interior."""
    neg, pos = cs.feasible_sides(h)
    return neg and pos


def label_from_sides(neg: bool, pos: bool) -> int:
    if neg and pos:
        raise ContractError("query is ambiguous; its label cannot be imputed")
    if not (neg or pos):
        raise InconsistencyError("neither side of the query is feasible; stored labels conflict")
    return 1 if neg else 0


def impute_label(cs: ConstraintSet, h: Hyperplane) -> int:
    """Label implied by the cell for an unambiguous query on bisector ``h``."""
    return label_from_sides(*cs.feasible_sides(h))

"""Synthetic instances and the file formats for embeddings, matrices and names."""

from __future__ import annotations

import csv
import os

import numpy as np

from .errors import FormatError
from .geom import ConstraintSet, Embedding, bisector
from .oracle import check_similarity_matrix


def gen_unit_cube(n: int, d: int, seed: int):
    """``n`` objects and one reference drawn i.i.d. uniform on ``[0, 1]^d``.

    Draws are repeated (same stream) until no two objects are exactly
    equidistant from the reference.
    """
    if n < 2:
        raise ValueError("need at least two objects")
    rng = np.random.default_rng(seed)
    while True:
        pts = rng.random((n, d))
        r = rng.random(d)
        dist = np.linalg.norm(pts - r, axis=1)
        if np.unique(dist).size == n:
            return Embedding(pts), r


def gen_parabola(n: int) -> Embedding:
    """Objects ``(t, t^2)`` with ``t = 1/n, 2/n, ..., 1``."""
    if n < 2:
        raise ValueError("need at least two objects")
    t = np.arange(1, n + 1) / n
    return Embedding(np.column_stack([t, t * t]))


def parabola_cell(emb: Embedding, box_inflation: float = 100.0) -> ConstraintSet:
    """Cell of the ranking ``0, 1, ..., n-1`` on the parabola; it lies to the lower left."""
    cs = ConstraintSet.for_embedding(emb, box_inflation)
    for k in range(emb.n - 1):
        cs.add(bisector(emb, k, k + 1), -1)
    return cs


def parabola_reference(n: int, box_inflation: float = 100.0) -> np.ndarray:
    """Chebyshev center of :func:`parabola_cell`, a reference deep inside the many-sided cell."""
    return parabola_cell(gen_parabola(n), box_inflation).interior_point()


def _is_float(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def read_embedding(path) -> Embedding:
    """Rows of ``d`` floats; an optional header row and an optional leading name column."""
    if not os.path.exists(path):
        raise FileNotFoundError(f"embedding file not found: {path}")
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row and any(c.strip() for c in row)]
    if not rows:
        raise FormatError(f"{path}: no rows")
    if not all(_is_float(c) for c in rows[0][1:]) or (
        not _is_float(rows[0][0]) and len(rows) > 1 and _is_float(rows[1][0])
    ):
        rows = rows[1:]
    named = not _is_float(rows[0][0])
    names = None
    if named:
        names = tuple(row[0].strip() for row in rows)
        rows = [row[1:] for row in rows]
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise FormatError(f"{path}: rows have differing lengths {sorted(widths)}")
    try:
        pts = np.array([[float(c) for c in row] for row in rows])
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None
    return Embedding(pts, names)


def write_embedding(path, emb: Embedding) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        for k in range(emb.n):
            coords = [repr(float(v)) for v in emb.points[k]]
            w.writerow(([emb.names[k]] if emb.names is not None else []) + coords)


def read_matrix(path) -> np.ndarray:
    if not os.path.exists(path):
        raise FileNotFoundError(f"similarity file not found: {path}")
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if row]
    try:
        S = np.array([[float(c) for c in row] for row in rows])
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from None
    return check_similarity_matrix(S)


def write_matrix(path, S) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        for row in np.asarray(S, dtype=float):
            w.writerow([repr(float(v)) for v in row])


def read_names(path) -> list:
    with open(path) as fh:
        return [line.strip() for line in fh if line.strip()]


def synthetic_similarity(n: int, d: int, noise: float, seed: int):
    """Symmetric ``S = -dist + noise`` from a uniform embedding; returns ``(S, embedding)``."""
    rng = np.random.default_rng(seed)
    emb = Embedding(rng.random((n, d)))
    D = np.linalg.norm(emb.points[:, None, :] - emb.points[None, :, :], axis=2)
    E = rng.normal(scale=noise, size=(n, n))
    E = np.triu(E, 1)
    S = -D + E + E.T
    np.fill_diagonal(S, 0.0)
    return S, emb

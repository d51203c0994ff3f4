"""Distances between rankings and between pairwise label vectors.

A permutation here is a sequence of object indices ordered from most to
least preferred (position 0 is closest to the reference). Label vectors hold
one entry per unordered pair ``i < j`` in lexicographic order
``(0,1), (0,2), ..., (0,n-1), (1,2), ...``; entry ``1`` means ``i`` precedes ``j``.
"""

from __future__ import annotations

import numpy as np

from .errors import TieError


def _positions(order) -> np.ndarray:
    order = np.asarray(order, dtype=np.int64)
    n = order.size
    if np.any(np.sort(order) != np.arange(n)):
        raise ValueError("not a permutation of 0..n-1")
    pos = np.empty(n, dtype=np.int64)
    pos[order] = np.arange(n)
    return pos


def _count_inversions(seq: np.ndarray) -> int:
    # Merge sort; O(n log n).
    seq = list(seq)
    total = 0
    width = 1
    n = len(seq)
    while width < n:
        merged = []
        for lo in range(0, n, 2 * width):
            left = seq[lo:lo + width]
            right = seq[lo + width:lo + 2 * width]
            a = b = 0
            while a < len(left) and b < len(right):
                if right[b] < left[a]:
                    merged.append(right[b])
                    total += len(left) - a
                    b += 1
                else:
                    merged.append(left[a])
                    a += 1
            merged.extend(left[a:])
            merged.extend(right[b:])
        seq = merged
        width *= 2
    return total


def kendall_tau(sigma, sigma_hat) -> int:
    """Number of object pairs the two rankings order differently."""
    if len(sigma) != len(sigma_hat):
        raise ValueError(f"rankings have lengths {len(sigma)} and {len(sigma_hat)}")
    pos_hat = _positions(sigma_hat)
    _positions(sigma)
    return _count_inversions(pos_hat[np.asarray(sigma, dtype=np.int64)])


def pair_index(i: int, j: int, n: int) -> int:
    """Offset of unordered pair ``i < j`` in a canonical label vector."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def labels_from_permutation(order) -> np.ndarray:
    pos = _positions(order)
    iu, ju = np.triu_indices(pos.size, k=1)
    return (pos[iu] < pos[ju]).astype(np.int8)


def labels_from_reference(points, r) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    dist = np.linalg.norm(points - np.asarray(r, dtype=float), axis=1)
    iu, ju = np.triu_indices(len(dist), k=1)
    if np.any(dist[iu] == dist[ju]):
        k = int(np.flatnonzero(dist[iu] == dist[ju])[0])
        raise TieError(f"reference is equidistant from objects {iu[k]} and {ju[k]}")
    return (dist[iu] < dist[ju]).astype(np.int8)


def labels_from_scores(scores) -> np.ndarray:
    """Label vector for ``scores[i] > scores[j]``; equal scores resolve to ``1``."""
    s = np.asarray(scores, dtype=float)
    iu, ju = np.triu_indices(len(s), k=1)
    return (s[iu] >= s[ju]).astype(np.int8)


def label_disagreement(y, y_hat) -> float:
    """Fraction of pairs whose labels differ."""
    y = np.asarray(y)
    y_hat = np.asarray(y_hat)
    if y.shape != y_hat.shape:
        raise ValueError(f"label vectors have shapes {y.shape} and {y_hat.shape}")
    if y.size == 0:
        return 0.0
    return float(np.mean(y != y_hat))


def normalized_kendall_tau(sigma, sigma_hat) -> float:
    n = len(sigma)
    return kendall_tau(sigma, sigma_hat) / (n * (n - 1) // 2)


def has_three_cycle(labels, n: int) -> bool:
    """Whether a label vector contains an intransitive triple."""
    y = np.asarray(labels)
    for i in range(n):
        for j in range(i + 1, n):
            yij = y[pair_index(i, j, n)]
            for k in range(j + 1, n):
                yjk = y[pair_index(j, k, n)]
                yik = y[pair_index(i, k, n)]
                if yij == yjk and yik != yij:
                    return True
    return False

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from activerank.errors import TieError
from activerank.metrics import (
    has_three_cycle,
    kendall_tau,
    label_disagreement,
    labels_from_permutation,
    labels_from_reference,
    labels_from_scores,
    normalized_kendall_tau,
    pair_index,
)

from oracles import brute_kendall


def test_examples():
    assert kendall_tau([0, 1, 2], [0, 1, 2]) == 0
    assert kendall_tau([0, 1, 2], [2, 1, 0]) == 3
    assert kendall_tau([0, 1, 2, 3], [1, 0, 3, 2]) == 2


def test_length_mismatch():
    with pytest.raises(ValueError):
        kendall_tau([0, 1], [0, 1, 2])
    with pytest.raises(ValueError):
        label_disagreement([0, 1], [1])
    with pytest.raises(ValueError):
        kendall_tau([0, 0, 1], [0, 1, 2])


perms = st.integers(2, 30).flatmap(lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n))))


@given(perms)
@settings(max_examples=200, deadline=None)
def test_against_brute_force(pair):
    a, b = pair
    k = kendall_tau(a, b)
    assert k == brute_kendall(a, b)
    assert k == kendall_tau(b, a)
    assert 0 <= k <= math.comb(len(a), 2)
    assert (k == 0) == (list(a) == list(b))


def test_label_disagreement_examples():
    y = np.array([1, 0, 1])
    assert label_disagreement(y, y) == 0
    assert label_disagreement(y, 1 - y) == 1
    assert label_disagreement(y, [1, 1, 1]) == pytest.approx(1 / 3)


def test_kendall_label_identity():
    rng = np.random.default_rng(0)
    for _ in range(100):
        a, b = rng.permutation(20), rng.permutation(20)
        lhs = kendall_tau(a, b)
        rhs = math.comb(20, 2) * label_disagreement(labels_from_permutation(a), labels_from_permutation(b))
        assert lhs == round(rhs) and abs(lhs - rhs) < 1e-9


def test_labels_identity_permutation():
    assert labels_from_permutation([0, 1, 2]).tolist() == [1, 1, 1]


def test_pair_index_order():
    n = 6
    pairs = list(itertools.combinations(range(n), 2))
    assert [pair_index(i, j, n) for i, j in pairs] == list(range(len(pairs)))


def test_reference_labels_match_sorted_permutation():
    rng = np.random.default_rng(4)
    for _ in range(20):
        pts = rng.random((9, 2))
        r = rng.random(2)
        order = np.argsort(np.linalg.norm(pts - r, axis=1))
        assert np.array_equal(labels_from_reference(pts, r), labels_from_permutation(order))


def test_reference_at_object_comes_first():
    pts = np.array([[0.0], [2.0], [5.0]])
    order = np.argsort(np.linalg.norm(pts - pts[1], axis=1))
    assert order[0] == 1
    assert labels_from_reference(pts, pts[1]).tolist() == [0, 1, 1]


def test_reference_tie():
    with pytest.raises(TieError):
        labels_from_reference(np.array([[0.0], [2.0]]), [1.0])


def test_scores_ties_resolve_to_index_order():
    assert labels_from_scores([0.5, 0.5, 0.1]).tolist() == [1, 1, 1]
    assert labels_from_scores([0.1, 0.9]).tolist() == [0]


def test_no_three_cycles_from_permutations():
    rng = np.random.default_rng(8)
    for _ in range(20):
        assert not has_three_cycle(labels_from_permutation(rng.permutation(8)), 8)
    y = labels_from_permutation([0, 1, 2]).copy()
    y[pair_index(0, 2, 3)] = 0
    assert has_three_cycle(y, 3)


def test_normalized_kendall():
    assert normalized_kendall_tau([0, 1, 2], [2, 1, 0]) == 1.0

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terncode import gf3
from terncode.errors import CapacityError, DimensionError, RankError

trits = st.integers(0, 2)


def matrices(max_rows=5, max_cols=7):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(trits, min_size=c, max_size=c), min_size=0, max_size=max_rows)
        .map(lambda rows: np.array(rows, dtype=np.uint8).reshape(len(rows), c)))


def span_set(m):
    """Row space by brute force over all coefficient vectors."""
    m = np.asarray(m, dtype=np.int64)
    out = set()
    for coef in itertools.product(range(3), repeat=m.shape[0]):
        out.add(tuple(((np.array(coef, dtype=np.int64) @ m) % 3).tolist()) if m.shape[0] else
                (0,) * m.shape[1])
    return out


@pytest.mark.parametrize("x, y, expected", [
    ((1, 1, 1), (1, 1, 1), 0),
    ((1, 2, 0), (1, 1, 1), 0),
    ((1, 1, 0), (1, 1, 0), 2),
])
def test_inner_product(x, y, expected):
    assert gf3.inner_product(x, y) == expected


def test_inner_product_length_mismatch():
    with pytest.raises(DimensionError):
        gf3.inner_product((1, 1), (1, 1, 1))


@pytest.mark.parametrize("x, w", [((0, 0, 0, 0), 0), ((1, 2, 0, 1), 3), ((2, 2, 2), 3)])
def test_weight(x, w):
    assert gf3.weight(x) == w


def test_field_axioms():
    assert (1 + 2) % 3 == 0 and (2 * 2) % 3 == 1
    assert gf3.inner_product([2], [2]) == 1


def test_rref_examples():
    assert (gf3.rref(np.eye(3)) == np.eye(3)).all()
    assert gf3.rref([[1, 1, 1], [2, 2, 2]]).tolist() == [[1, 1, 1]]
    assert gf3.rref([[0, 1, 2], [1, 0, 1]]).tolist() == [[1, 0, 1], [0, 1, 2]]


@given(matrices())
def test_rref_properties(m):
    r, piv = gf3.rref_pivots(m)
    assert (gf3.rref(r) == r).all()
    for i, p in enumerate(piv):
        assert r[i, p] == 1
        assert np.count_nonzero(r[:, p]) == 1
        assert not r[i, :p].any()
    assert piv == sorted(piv)
    if m.shape[0] <= 4:
        assert span_set(r if r.shape[0] else np.zeros((0, m.shape[1]))) == span_set(m)


def test_nullspace_examples():
    assert gf3.nullspace(np.eye(3)).shape == (0, 3)
    ns = gf3.nullspace([[1, 1, 1]])
    assert ns.shape == (2, 3)
    assert all(sum(v) % 3 == 0 for v in ns.tolist())
    assert gf3.nullspace(np.zeros((1, 4))).shape == (4, 4)


@given(matrices())
def test_nullspace_properties(m):
    ns = gf3.nullspace(m, m.shape[1])
    assert ns.shape[0] + gf3.rank(m) == m.shape[1]
    if ns.size and m.size:
        assert not ((m.astype(int) @ ns.T.astype(int)) % 3).any()
    assert gf3.rank(ns) == ns.shape[0]


@given(st.lists(trits, min_size=1, max_size=12))
def test_self_inner_product_is_weight(x):
    assert gf3.inner_product(x, x) == gf3.weight(x) % 3


def test_standard_form_tetracode():
    a, perm = gf3.to_standard_form([[1, 0, 1, 1], [0, 1, 1, 2]])
    assert a.tolist() == [[1, 1], [1, 2]]
    assert perm == [0, 1, 2, 3]


def test_standard_form_identity_block():
    a0 = np.array([[2, 1, 0], [1, 1, 1]])
    a, perm = gf3.to_standard_form(np.hstack([np.eye(2, dtype=int), a0]))
    assert (a == a0).all() and perm == list(range(5))


@given(matrices(max_rows=4, max_cols=7))
def test_standard_form_reconstructs(m):
    k = gf3.rank(m)
    g = gf3.rref(m)
    if k == 0:
        return
    a, perm = gf3.to_standard_form(g)
    assert a.shape == (k, m.shape[1] - k)
    std = gf3.rref(g[:, perm])
    assert (std[:, :k] == np.eye(k)).all() and (std[:, k:] == a).all()


def test_standard_form_zero_first_column():
    g = [[0, 1, 0, 1], [0, 0, 1, 2]]
    a, perm = gf3.to_standard_form(g)
    assert perm[:2] == [1, 2]
    std = gf3.rref(np.asarray(g)[:, perm])
    assert (std[:, :2] == np.eye(2)).all()


def test_standard_form_rank_error():
    with pytest.raises(RankError):
        gf3.to_standard_form([[1, 1, 0], [2, 2, 0]])


def test_enumerate_codewords():
    assert list(gf3.enumerate_codewords(np.zeros((0, 3)))) == [(0, 0, 0)]
    assert list(gf3.enumerate_codewords([[1, 1, 1]])) == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]
    words = list(gf3.enumerate_codewords([[1, 0, 1, 1], [0, 1, 1, 2]]))
    assert len(words) == 9
    dist = {}
    for w in words:
        dist[gf3.weight(w)] = dist.get(gf3.weight(w), 0) + 1
    assert dist == {0: 1, 3: 8}


@given(matrices(max_rows=5, max_cols=6))
@settings(max_examples=40)
def test_enumeration_distinct(m):
    g = gf3.rref(m)
    words = list(gf3.enumerate_codewords(g))
    assert len(words) == 3 ** g.shape[0] == len(set(words))


def test_enumeration_blocks_match_direct():
    rng = np.random.default_rng(0)
    g = gf3.rref(rng.integers(0, 3, (12, 16)))
    arr = gf3.codeword_array(g)
    assert arr.shape == (3 ** g.shape[0], 16)
    assert len(np.unique(arr, axis=0)) == arr.shape[0]
    direct = (gf3.messages(g.shape[0])[:100].astype(np.int64) @ g.astype(np.int64)) % 3
    assert (arr[:100] == direct).all()


def test_cap():
    with pytest.raises(CapacityError):
        list(gf3.enumerate_codewords(np.eye(5), cap=4))
    gf3.set_cap(2)
    try:
        with pytest.raises(CapacityError):
            gf3.codeword_array(np.eye(3))
    finally:
        gf3.set_cap(None)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("TERNCODE_CAP", "3")
    assert gf3.get_cap() == 3
    monkeypatch.delenv("TERNCODE_CAP")
    assert gf3.get_cap() == gf3.DEFAULT_CAP == 16

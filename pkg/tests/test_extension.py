import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from terncode.code import (dual, is_self_orthogonal, make_code, maximal_dimension, minimum_weight,
                           shorten, tetracode, weight_distribution, zero_code, zero_extend)
from terncode.equivalence import (are_equivalent_brute, canonical_certificate, codeword_key)
from terncode.extension import (admissible_b_vectors, candidates, check_candidate, lengthen,
                                lengthen_all, standard_block)
from terncode.oracle import all_self_orthogonal, orbit_classes


def brute_admissible(a, m, d_min):
    """Filter all of GF(3)^m directly by the kernel, weight and leading-one conditions."""
    a = np.asarray(a, dtype=int).reshape(-1, m)
    out = set()
    for b in itertools.product(range(3), repeat=m):
        b = np.array(b)
        w = np.count_nonzero(b)
        if w == 0 or w % 3 != 2 or w < d_min - 1:
            continue
        if b[np.flatnonzero(b)[0]] != 1 or ((a @ b) % 3).any():
            continue
        out.add(tuple(b.tolist()))
    return out


def as_set(stream):
    return {tuple(int(v) for v in b) for b in stream}


def test_admissible_examples():
    assert as_set(admissible_b_vectors(np.zeros((0, 2)), 0, 2)) == {(1, 1), (1, 2)}
    assert brute_admissible(np.zeros((0, 2)), 2, 0) == {(1, 1), (1, 2)}
    assert list(admissible_b_vectors([[1, 1], [1, 2]], 0)) == []
    expected = {(1, 2, 0), (1, 0, 2), (0, 1, 2)}
    assert as_set(admissible_b_vectors([[1, 1, 1]], 0)) == expected
    assert brute_admissible([[1, 1, 1]], 3, 0) == expected


@given(st.integers(1, 7).flatmap(lambda m: st.tuples(
    st.just(m),
    st.lists(st.lists(st.integers(0, 2), min_size=m, max_size=m), max_size=3),
    st.integers(0, 7))))
@settings(max_examples=60)
def test_admissible_matches_brute_force(args):
    m, rows, d_min = args
    a = np.array(rows, dtype=int).reshape(len(rows), m)
    got = list(admissible_b_vectors(a, d_min, m))
    assert len(got) == len(as_set(got))
    assert as_set(got) == brute_admissible(a, m, d_min)


def test_lengthen_line():
    parent = make_code([[1, 1, 1]])
    a, perm = standard_block(parent)
    assert a.tolist() == [[1, 1]] and perm == [0, 1, 2]
    c = lengthen(parent, (1, 2))
    assert c == make_code([[1, 0, 1, 2], [0, 1, 1, 1]])
    assert is_self_orthogonal(c)
    assert are_equivalent_brute(c, tetracode())


def test_lengthen_rejects_bad_b():
    parent = make_code([[1, 1, 1]])
    with pytest.raises(ValueError):
        lengthen(parent, (1, 1))      # A b^T != 0
    with pytest.raises(ValueError):
        lengthen(parent, (0, 0))      # weight 0


def test_lengthen_all_examples():
    stream = list(lengthen_all(make_code([[1, 1, 1]]), 0))
    assert stream and all(c.k == 2 and is_self_orthogonal(c) for c in stream)
    assert len({canonical_certificate(c) for c in stream}) == 1
    assert len(list(lengthen_all(zero_code(4), 0))) == 12 == len(brute_admissible(np.zeros((0, 4)), 4, 0))
    assert list(lengthen_all(tetracode(), 0)) == []


def small_parents(max_n=5):
    for n in range(1, max_n + 1):
        for k in range(0, maximal_dimension(n) + 1 if n > 1 else 1):
            yield from all_self_orthogonal(n, k)


def test_round_trip_and_invariants():
    """shorten(lengthen(P, b), 0) == P for all self-orthogonal parents up to length 5."""
    count = 0
    for parent in small_parents(5):
        block = standard_block(parent)
        seen = set()
        for cand in candidates(parent):
            c = cand.result
            assert check_candidate(cand)
            assert shorten(c, 0) == parent
            first = c.generator[0]
            assert first[0] == 1 and (1 + np.count_nonzero(cand.b)) % 3 == 0
            if c.k > 1:
                assert minimum_weight(c) <= 1 + np.count_nonzero(cand.b)
            assert c not in seen
            seen.add(c)
            count += 1
    assert count > 100


def test_b_and_2b_equivalent(rng):
    pairs = []
    for parent in small_parents(7 - 1):
        for b in admissible_b_vectors(standard_block(parent)[0], 0, parent.n - parent.k):
            pairs.append((parent, b))
    idx = rng.choice(len(pairs), size=min(100, len(pairs)), replace=False)
    for i in idx:
        parent, b = pairs[i]
        c1, c2 = lengthen(parent, b), lengthen(parent, (2 * b) % 3)
        assert canonical_certificate(c1) == canonical_certificate(c2)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(3, 8))
def test_generation_complete_against_orbits(n, classifier):
    """Both generation branches together reach every monomial orbit of [n, k] codes."""
    for k in range(1, maximal_dimension(n) + 1):
        cands = []
        for rec in classifier.so(n - 1, k - 1).representatives:
            cands.extend(lengthen_all(rec.code, 3))
        if k <= maximal_dimension(n - 1):
            cands.extend(zero_extend(rec.code) for rec in classifier.so(n - 1, k).representatives)
        orbits = orbit_classes(all_self_orthogonal(n, k))
        orbit_of = {codeword_key(c): i for i, cls in enumerate(orbits) for c in cls}
        hit = {orbit_of[codeword_key(c)] for c in cands}
        assert hit == set(range(len(orbits)))
        assert len({canonical_certificate(c) for c in cands}) == len(orbits)

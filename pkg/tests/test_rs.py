"""Row insertion, the insertion/recording pair, and the inverse search."""

from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from orbital import (
    BoundExceeded,
    Permutation,
    find_word_for_tableau,
    rs_pair,
    tau_invariant,
)
from conftest import SIX_BOX, all_syt, tab


def test_permutation_basics():
    w = Permutation((2, 4, 1, 6, 3, 5))
    assert w.n == 6
    assert w(1) == 2 and w(4) == 6
    assert str(w) == "[2 4 1 6 3 5]"
    assert w.inverse().images == (3, 1, 5, 2, 6, 4)
    assert w.inverse().inverse() == w


def test_permutation_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_rs_pair_golden():
    a, b = rs_pair(Permutation((2, 4, 1, 6, 3, 5)))
    assert a.rows == ((1, 3, 5), (2, 4, 6))
    assert b.rows == SIX_BOX


def test_rs_pair_identity_and_reversal():
    ident = Permutation((1, 2, 3, 4))
    a, b = rs_pair(ident)
    assert a.rows == b.rows == ((1, 2, 3, 4),)
    a, b = rs_pair(Permutation((4, 3, 2, 1)))
    assert a.rows == ((1,), (2,), (3,), (4,))
    assert b.rows == ((1,), (2,), (3,), (4,))


def test_bijective_on_s4():
    seen = set()
    for images in permutations(range(1, 5)):
        a, b = rs_pair(Permutation(images))
        assert a.shape == b.shape
        seen.add((a.rows, b.rows))
    assert len(seen) == 24


@given(st.permutations(list(range(1, 8))))
def test_pair_is_standard_and_shapes_agree(images):
    a, b = rs_pair(Permutation(tuple(images)))
    assert a.shape == b.shape
    # validity: positions of k and k+1 never violate standardness
    for t in (a, b):
        for r, row in enumerate(t.rows):
            assert all(row[c] < row[c + 1] for c in range(len(row) - 1))
            if r:
                assert all(t.rows[r - 1][c] < row[c] for c in range(len(row)))


def test_find_word_golden():
    assert str(find_word_for_tableau(tab(*SIX_BOX))) == "[2 4 1 6 3 5]"
    assert str(find_word_for_tableau(tab((1, 3), (2, 4)))) == "[2 1 4 3]"


def test_find_word_round_trips_recording():
    for n in range(1, 6):
        for t in all_syt(n):
            w = find_word_for_tableau(t)
            assert rs_pair(w)[1] == t


def test_find_word_is_lex_minimal():
    # brute force over S_n confirms the DFS returns the smallest word
    for n in range(2, 6):
        for t in all_syt(n):
            best = min(
                images
                for images in permutations(range(1, n + 1))
                if rs_pair(Permutation(images))[1] == t
            )
            assert find_word_for_tableau(t).images == best


def test_find_word_bound():
    t = tab((1, 2, 3), (4,))
    with pytest.raises(BoundExceeded):
        find_word_for_tableau(t, bound=3)


def test_recording_tableau_reads_off_descents():
    # alpha_i lies in tau of the recording tableau iff w(i) > w(i+1)
    for images in permutations(range(1, 6)):
        w = Permutation(images)
        _, b = rs_pair(w)
        expected = {i for i in range(1, 5) if w(i) > w(i + 1)}
        assert tau_invariant(b).indices == expected

"""Window matrices, the determinant ladder m_j, the generator f, p_V."""

import pytest
from hypothesis import given, settings, strategies as st

from orbital import (
    BadWindow,
    WeightVector,
    char_poly,
    classify_hypersurface,
    cmin_window,
    generator_report,
    generic_richardson_matrix,
    hypersurface_descendants,
    lemma2_threshold,
    richardson_tableau,
    t_poly,
    variety_dim,
    weight_of,
    x,
)
from conftest import FIVE_BOX, SIX_BOX, TWELVE_BOX, tab

F_SIX = (
    x(1, 2) * x(2, 4) * x(4, 6)
    + x(1, 2) * x(2, 5) * x(5, 6)
    + x(1, 3) * x(3, 4) * x(4, 6)
    + x(1, 3) * x(3, 5) * x(5, 6)
)


def test_generic_matrix_zero_pattern():
    m = generic_richardson_matrix({2, 4}, 6)
    # tau roots force (2,3) and (4,5); everything else above the diagonal
    # stays free
    assert m.entry(2, 3) == 0
    assert m.entry(4, 5) == 0
    assert m.entry(1, 2) == x(1, 2)
    assert m.entry(3, 6) == x(3, 6)
    assert all(m.entry(i, j) == 0 for i in range(1, 7) for j in range(1, i + 1))


def test_cmin_window_layout():
    w = cmin_window({2, 4}, 6, (1, 6), 1)
    assert (w.nrows, w.ncols) == (5, 5)
    assert w.entry(1, 1) == x(1, 2)
    assert w.entry(2, 1) == t_poly()
    assert w.entry(5, 4) == t_poly()
    assert w.entry(2, 2) == 0  # alpha_2 in tau kills x23
    assert w.entry(4, 4) == 0  # alpha_4 in tau kills x45
    assert w.entry(1, 5) == x(1, 6)


def test_cmin_window_degenerate_size():
    # window of size exactly 2I carries no t at all
    w = cmin_window({1, 3}, 4, (1, 4), 2)
    assert (w.nrows, w.ncols) == (2, 2)
    assert w.entries == (
        (x(1, 3), x(1, 4)),
        (x(2, 3), x(2, 4)),
    )


def test_cmin_window_bad_bounds():
    with pytest.raises(BadWindow):
        cmin_window({2, 4}, 6, (0, 6), 1)
    with pytest.raises(BadWindow):
        cmin_window({2, 4}, 6, (5, 3), 1)
    with pytest.raises(BadWindow):
        cmin_window({2, 4}, 6, (1, 6), 4)  # 2I exceeds the window


def test_generator_report_six_box():
    d = classify_hypersurface(tab(*SIX_BOX))
    rep = generator_report(d)
    assert rep.f == F_SIX
    assert rep.l_lambda == 3
    assert rep.window == (1, 6)
    assert rep.thickness == 1
    assert str(rep.weight) == "a1 + a2 + a3 + a4 + a5"
    assert [j for j, _ in rep.m_sequence] == [1, 2, 3, 4, 5]
    ms = dict(rep.m_sequence)
    assert ms[1] == x(1, 6)
    assert ms[2] == -(
        x(1, 2) * x(2, 6) + x(1, 3) * x(3, 6) + x(1, 4) * x(4, 6) + x(1, 5) * x(5, 6)
    )
    assert ms[4].is_zero and ms[5].is_zero


def test_generator_report_five_box():
    d = classify_hypersurface(tab(*FIVE_BOX))
    rep = generator_report(d)
    assert rep.thickness == 2
    assert rep.l_lambda == 3
    assert [j for j, _ in rep.m_sequence] == [2, 3]
    assert dict(rep.m_sequence)[2] == x(1, 4) * x(2, 5) - x(1, 5) * x(2, 4)
    assert rep.f == (
        x(1, 3) * x(2, 4) * x(3, 5)
        - x(1, 3) * x(2, 5) * x(3, 4)
        - x(1, 4) * x(2, 3) * x(3, 5)
        + x(1, 5) * x(2, 3) * x(3, 4)
    )
    assert rep.weight.coeffs == (1, 2, 2, 1)


def test_generator_report_is_cached():
    d = classify_hypersurface(tab(*SIX_BOX))
    assert generator_report(d) is generator_report(d)


def test_lemma2_threshold_golden():
    l, flags = lemma2_threshold({2, 4}, 6, (1, 6), 1)
    assert l == 3
    assert flags == [(1, False), (2, False), (3, False), (4, True), (5, True)]


def test_char_poly_six_box():
    d = classify_hypersurface(tab(*SIX_BOX))
    cp = char_poly(d)
    assert str(cp) == "a2 * a4 * (a1 + a2 + a3 + a4 + a5)"
    codim = 15 - variety_dim(d.tableau.shape, 6)
    assert len(cp.factors) == codim == 3
    assert cp.multiset() == {
        (0, 1, 0, 0, 0): 1,
        (0, 0, 0, 1, 0): 1,
        (1, 1, 1, 1, 1): 1,
    }
    assert cp.to_json() == [[0, 1, 0, 0, 0], [0, 0, 0, 1, 0], [1, 1, 1, 1, 1]]


def test_char_poly_twelve_box():
    d = classify_hypersurface(tab(*TWELVE_BOX))
    rep = generator_report(d)
    assert rep.l_lambda == 5
    assert rep.weight.coeffs == (0, 0, 0, 1, 2, 3, 3, 3, 2, 1, 0)
    assert rep.f.total_degree() == 5
    cp = char_poly(d, rep)
    assert str(cp) == (
        "a1 * a4 * a5 * a7 * a9 * a10 * (a4 + a5) * (a9 + a10)"
        " * (a4 + 2a5 + 3a6 + 3a7 + 3a8 + 2a9 + a10)"
    )
    assert len(cp.factors) == 66 - 57 == 9


@st.composite
def descriptors(draw, max_n=6):
    n = draw(st.integers(min_value=4, max_value=max_n))
    indices = draw(st.sets(st.sampled_from(range(1, n))))
    ds = hypersurface_descendants(richardson_tableau(frozenset(indices), n))
    if not ds:
        return None
    return draw(st.sampled_from(ds))


@settings(max_examples=60)
@given(descriptors())
def test_generator_weight_identity(d):
    # wt(f) is the sum of the antidiagonal window roots, one per
    # thickness layer
    if d is None:
        return
    rep = generator_report(d)
    a, b = d.window
    expected = WeightVector.zero(d.n - 1)
    for k in range(d.thickness):
        expected = expected + WeightVector.root(a + k, b - 1 - k, d.n - 1)
    assert rep.weight == expected
    assert weight_of(rep.f, rank=d.n - 1) == expected


@settings(max_examples=60)
@given(descriptors())
def test_generator_degree_and_support(d):
    if d is None:
        return
    rep = generator_report(d)
    assert rep.f.total_degree() == rep.l_lambda >= 2
    a, b = d.window
    for i, j in rep.f.variables():
        assert a <= i < j <= b
    # the ladder is zero exactly above the threshold
    for j, m in rep.m_sequence:
        assert m.is_zero == (j > rep.l_lambda)

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from confgal.linalg import QMatrix, Span, unit

entries = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = [[draw(entries) for _ in range(c)] for _ in range(r)]
    return QMatrix(r, c, rows)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    null = m.nullspace()
    assert m.rank() + len(null) == m.ncols
    for v in null:
        assert not any(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_row_basis_spans_rows(m):
    basis = m.row_basis()
    span = Span(m.ncols)
    for r in basis.rows:
        span.add(r)
    assert span.dim == m.rank()
    assert all(span.contains(r) for r in m.rows)


def test_zero_size_shapes():
    empty = QMatrix(0, 3)
    assert empty.rank() == 0
    assert len(empty.nullspace()) == 3
    assert (QMatrix(2, 0) @ QMatrix(0, 4)).is_zero()


def test_known_rank():
    m = QMatrix(3, 3, [[1, 2, 3], [2, 4, 6], [1, 0, Fraction(1, 2)]])
    assert m.rank() == 2
    assert QMatrix.identity(3, 2) @ m == m.scale(2)


def test_span_growth():
    s = Span(3)
    assert s.add(unit(3, 0))
    assert not s.add((Fraction(5), Fraction(0), Fraction(0)))
    assert s.add((Fraction(1), Fraction(1), Fraction(0)))
    assert s.contains(unit(3, 1)) and not s.contains(unit(3, 2))

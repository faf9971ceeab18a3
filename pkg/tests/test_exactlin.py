"""
Тесты точной линейной алгебры
"""
import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ

from src import exactlin
from src.errors import ConfigError, NoSolution, ParseError


@st.composite
def matrices(draw, max_dim=4, rows=None, cols=None):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    entries = draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    return exactlin.from_rows(entries, QQ, cols=c)


def test_parse_field():
    assert exactlin.parse_field("rational") == QQ
    F7 = exactlin.parse_field("prime:7")
    assert exactlin.characteristic(F7) == 7
    assert exactlin.field_spec(F7) == "prime:7"
    assert exactlin.field_spec(QQ) == "rational"


@pytest.mark.parametrize("spec", ["prime:4", "prime:x", "reals"])
def test_bad_field_rejected(spec):
    with pytest.raises(ConfigError):
        exactlin.parse_field(spec)


@pytest.mark.parametrize("text, expected", [
    ("-6/4", "-3/2"),
    ("−3/7", "-3/7"),
    ("5", "5"),
    ("0/9", "0"),
    ("1.25", "5/4"),
])
def test_scalar_canonical_form_rational(text, expected):
    assert exactlin.format_scalar(exactlin.parse_scalar(text, QQ), QQ) == expected


def test_scalar_canonical_form_prime():
    F7 = exactlin.get_field(7)
    assert exactlin.format_scalar(exactlin.parse_scalar("1/2", F7), F7) == "4"
    assert exactlin.format_scalar(exactlin.parse_scalar("-1", F7), F7) == "6"


@pytest.mark.parametrize("text", ["1/2/3", "abc", "1/0", "nan", "inf", ""])
def test_bad_scalar(text):
    with pytest.raises(ParseError):
        exactlin.parse_scalar(text, QQ)


def test_denominator_vanishing_mod_p():
    with pytest.raises(ParseError):
        exactlin.parse_scalar("1/7", exactlin.get_field(7))


@given(matrices())
def test_rank_nullity(m):
    ker = exactlin.kernel(m)
    assert exactlin.rank(m) + ker.dim == m.shape[1]
    assert exactlin.is_zero(exactlin.mul(m, ker.basis))


@given(matrices())
def test_cokernel_projection(m):
    proj, section = exactlin.cokernel(m)
    n = m.shape[0]
    assert proj.shape[0] == n - exactlin.rank(m)
    assert exactlin.is_zero(exactlin.mul(proj, m))
    assert exactlin.equal(exactlin.mul(proj, section), exactlin.identity(proj.shape[0], QQ))


@given(matrices(max_dim=2), matrices(max_dim=2), matrices(max_dim=2))
@settings(max_examples=50)
def test_kron_associative(a, b, c):
    lhs = exactlin.kron(exactlin.kron(a, b), c)
    rhs = exactlin.kron(a, exactlin.kron(b, c))
    assert exactlin.equal(lhs, rhs)


@given(matrices(max_dim=2, rows=2, cols=2), matrices(max_dim=2, rows=2, cols=2),
       matrices(max_dim=2, rows=2, cols=2), matrices(max_dim=2, rows=2, cols=2))
@settings(max_examples=50)
def test_kron_mixed_product(a, b, c, d):
    lhs = exactlin.mul(exactlin.kron(a, b), exactlin.kron(c, d))
    rhs = exactlin.kron(exactlin.mul(a, c), exactlin.mul(b, d))
    assert exactlin.equal(lhs, rhs)


def test_kron_index_convention():
    e1 = exactlin.unit_vector(2, 1, QQ)
    e0 = exactlin.unit_vector(3, 0, QQ)
    assert exactlin.column(exactlin.kron(e1, e0), 0) == [0, 0, 0, 1, 0, 0]


def test_inverse():
    m = exactlin.from_rows([[2, 1], [1, 1]], QQ)
    inv = exactlin.inverse(m)
    assert exactlin.equal(exactlin.mul(m, inv), exactlin.identity(2, QQ))
    with pytest.raises(NoSolution):
        exactlin.inverse(exactlin.from_rows([[1, 2], [2, 4]], QQ))


def test_solve_factor():
    through = exactlin.from_rows([[1, 0, 1], [0, 1, 1]], QQ)
    target = exactlin.from_rows([[2, 3, 5]], QQ)
    x = exactlin.solve_factor(through, target)
    assert exactlin.equal(exactlin.mul(x, through), target)
    with pytest.raises(NoSolution):
        exactlin.solve_factor(through, exactlin.from_rows([[1, 0, 0]], QQ))


def test_subspace_basis_is_canonical():
    a = exactlin.from_columns([[1, 0, 1], [0, 1, 1]], 3, QQ)
    b = exactlin.from_columns([[1, 1, 2], [0, 2, 2]], 3, QQ)
    assert exactlin.image(a) == exactlin.image(b)
    assert exactlin.image(a).contains(exactlin.Subspace.from_columns(exactlin.from_columns([[2, 1, 3]], 3, QQ)))
    assert not exactlin.image(a).contains(exactlin.Subspace.from_columns(exactlin.unit_vector(3, 0, QQ)))


def test_prime_field_kernel():
    F2 = exactlin.get_field(2)
    m = exactlin.from_rows([[1, 1], [1, 1]], F2)
    assert exactlin.kernel(m).dim == 1
    assert exactlin.rank(exactlin.from_rows([[2, 0], [0, 1]], F2)) == 1


def test_rref():
    assert exactlin.rref(exactlin.zeros(2, 2, QQ))[2] == 0
    _, pivots, rank = exactlin.rref(exactlin.identity(3, QQ))
    assert (pivots, rank) == ((0, 1, 2), 3)
    reduced, pivots, rank = exactlin.rref(exactlin.from_rows([[1, 2], [2, 4]], QQ))
    assert (pivots, rank) == ((0,), 1)
    assert exactlin.equal(reduced, exactlin.from_rows([[1, 2], [0, 0]], QQ))

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittrep.kernel import (L, ONE, SQRT19, Echelon, Matrix, PolyEchelon, QuadRat, Scalar,
                            as_scalar, definiteness, format_scalar, nullspace, parse_scalar,
                            poly_rank, rank)


def test_quadrat_field_ops():
    r = QuadRat(0, 1)
    assert r * r == QuadRat(19)
    x = QuadRat(Fraction(5, 2), Fraction(1, 2))
    assert x * x.inverse() == QuadRat(1)
    assert (x / x) == QuadRat(1)
    with pytest.raises(ZeroDivisionError):
        QuadRat(0).inverse()


def test_quadrat_sign_exact():
    # 22^2 = 484 > 5^2 * 19 = 475
    assert QuadRat(22, -5).sign() == 1
    assert QuadRat(-9, 2).sign() == -1      # 81 > 76
    assert QuadRat(4, -1).sign() == -1      # 16 < 19


@pytest.mark.parametrize("text,canon", [
    ("5/2+1/2r19", "5/2+1/2r19"),
    ("3*L^2-1", "3*L^2-1"),
    ("L", "L"),
    ("-7/3", "-7/3"),
    ("0", "0"),
    ("(1+r19)*L", None),
])
def test_parse_and_print(text, canon):
    s = parse_scalar(text)
    out = format_scalar(s)
    if canon is not None:
        assert out == canon
    assert parse_scalar(out) == s
    assert " " not in out


@pytest.mark.parametrize("bad", ["", "1/0", "1/", "r", "L^-1", "2**3", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


_frac = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


@given(st.lists(st.tuples(_frac, _frac), min_size=1, max_size=4))
def test_scalar_roundtrip(coeffs):
    s = Scalar([QuadRat(a, b) for a, b in coeffs])
    assert parse_scalar(format_scalar(s)) == s


@given(_frac, _frac, _frac)
def test_scalar_eval_is_ring_map(a, b, x):
    p = a * L + b
    q = L * L - a
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_echelon_exact_fractions():
    e = Echelon()
    e.add({0: 2, 1: 4})
    e.add({0: 1, 1: 3})
    assert len(e) == 2
    assert not e.add({0: 5, 1: 7})
    assert all(isinstance(v, (Fraction, QuadRat)) for r in e.rref().values() for v in r.values())


def test_nullspace_and_rank():
    rows = [{0: 1, 1: 1, 2: 1}, {0: 1, 1: 2, 2: 3}]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    for r in rows:
        assert sum(c * v.get(k, 0) for k, c in r.items()) == 0
    assert rank(rows) == 2


def test_quadratic_field_rank():
    # (1, r19) and (r19, 19) are dependent over Q(sqrt 19)
    rows = [{0: QuadRat(1), 1: QuadRat(0, 1)}, {0: QuadRat(0, 1), 1: QuadRat(19)}]
    assert rank(rows) == 1


def test_poly_rank_generic():
    # rank over Q(L): (L, 1), (L^2, L) dependent; (L, 1), (1, L) independent
    assert poly_rank([{0: L, 1: ONE}, {0: L * L, 1: L}]) == 1
    assert poly_rank([{0: L, 1: ONE}, {0: ONE, 1: L}]) == 2
    pe = PolyEchelon()
    pe.add({0: L, 1: ONE})
    assert pe.contains({0: L * L - L, 1: L - 1})


@pytest.mark.parametrize("rows,kind", [
    ([[2, -1], [-1, 2]], "positive_definite"),
    ([[2, -2], [-2, 2]], "positive_semidefinite"),
    ([[2, -3], [-3, 2]], "indefinite"),
])
def test_definiteness(rows, kind):
    assert definiteness(Matrix.from_rows(rows)).kind == kind


def test_as_scalar_accepts_literals():
    assert as_scalar("1/3") == Scalar.const(Fraction(1, 3))
    assert as_scalar(SQRT19) * as_scalar(SQRT19) == as_scalar(19)

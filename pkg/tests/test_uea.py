import random

import pytest
from hypothesis import given, settings, strategies as st

from wittrep.kernel import L, ONE, Scalar
from wittrep.standard import verma
from wittrep.uea import (UEAElement, WindowError, act, bracket, casimir, d, format_uea,
                         parse_uea, pbw_normal_form, whittaker_reduce)


def test_bracket():
    assert bracket(-1, 1) == (2, 0)
    assert bracket(2, 2) == (0, 4)


def test_reordering():
    # d_1 d_{-1} = d_{-1} d_1 - 2 d_0
    assert d(1) * d(-1) == d(-1) * d(1) - 2 * d(0)
    assert pbw_normal_form((1, -1)) == d(-1) * d(1) - 2 * d(0)


def test_casimir_commutes_with_sl2():
    z = casimir()
    for i in (-1, 0, 1):
        assert z * d(i) == d(i) * z


def test_casimir_not_central_in_witt():
    z = casimir()
    assert z * d(2) != d(2) * z


def test_casimir_on_verma_symbolic():
    m = verma(L, 10, 6)
    z = casimir()
    for b in ("e0", "e3", "e7"):
        assert act(z, m, {b: ONE}) == {b: L * (L + 1)}


def test_act_window_error():
    m = verma(0, 3, 4)
    with pytest.raises(WindowError):
        act(d(-1) * d(-1), m, {"e2": ONE})


def test_d_rejects_low_index():
    with pytest.raises(ValueError):
        d(-2)


def test_whittaker_reduce():
    # d_{-1} acts by 1 from the left on the Whittaker vector
    assert whittaker_reduce(d(0) * (d(-1) - 1)) == {(): Scalar.const(-1)}
    assert whittaker_reduce(d(-1) * d(3)) == {(3,): ONE}


@pytest.mark.parametrize("text", [
    "-1*d(1)*d(-1)+d(0)*d(0)-d(0)",
    "d(0)*d(0)+d(0)-d(1)",
    "1/3*d(2)+L*d(-1)",
    "1",
])
def test_parse_format_roundtrip(text):
    u = parse_uea(text)
    assert parse_uea(format_uea(u)) == u


def test_parse_casimir_literal():
    assert parse_uea("-1*d(1)*d(-1)+d(0)*d(0)-d(0)") == casimir()


@pytest.mark.parametrize("bad", ["d(-2)", "d(x)", "d(1)*", "d1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_uea(bad)


words = st.lists(st.integers(-1, 4), min_size=1, max_size=5).map(tuple)


@settings(max_examples=60, deadline=None)
@given(words, st.integers(0, 2 ** 32))
def test_pbw_confluence(word, seed):
    assert pbw_normal_form(word, rng=random.Random(seed)) == pbw_normal_form(word)


short = st.lists(st.integers(-1, 3), min_size=1, max_size=3).map(tuple)


@settings(max_examples=40, deadline=None)
@given(short, short, short)
def test_associativity(a, b, c):
    x, y, z = (UEAElement.from_word(w) for w in (a, b, c))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=40, deadline=None)
@given(st.integers(-1, 5), st.integers(-1, 5))
def test_commutator_matches_bracket(i, j):
    c, k = bracket(i, j)
    lhs = d(i) * d(j) - d(j) * d(i)
    assert lhs == (c * d(k) if c else UEAElement())

from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from wittrep.kernel import ONE, as_scalar
from wittrep.tensor import (BModule, DModule, build_tensor_module, parse_bmodule, phi,
                            phi_homomorphism_check, simplicity_probe)

DATA = Path(__file__).parent / "data"
THIRD = Fraction(1, 3)


def test_phi_is_homomorphism():
    assert phi_homomorphism_check(6) == []


def test_phi_minus_one():
    assert str(phi(-1)) == "(1)D^1#1"


def test_binomial_fault_is_detected():
    def bad_binom(n, k):
        return comb(n, k) + (1 if k == 2 else 0)

    bad = phi_homomorphism_check(4, lambda m: phi(m, binom=bad_binom))
    assert bad
    assert all(i >= -1 and j > i for i, j, _ in bad)


def test_dmodule_ops():
    s = DModule.s(4)
    assert s.x(-1) == {}                    # x . x^-1 = 1 = 0 in S
    assert s.d(-4) is None                  # leaves the truncation
    assert s.d(-2) == {-3: as_scalar(-2)}
    p = DModule.poly(3)
    assert p.d(0) == {} and p.x(3) is None
    assert p.apply(1, 1, 2) == {2: as_scalar(2)}


def test_bmodule_validation():
    with pytest.raises(ValueError):
        BModule.finite({0: [[1, 0], [0, 1]], 1: [[0, 0], [1, 0]]}, 1)


def test_parse_dim_file():
    v = parse_bmodule((DATA / "two_dim.bmod").read_text())
    assert v.l == 1 and v.ids == [0, 1]
    assert v.act(1, 0) == {1: ONE}
    assert v.act(0, 1) == {1: as_scalar(Fraction(4, 3))}


def test_parse_band_file_matches_preset():
    v = parse_bmodule((DATA / "whittaker_band.bmod").read_text())
    w = BModule.whittaker_band(10)
    for n in (-3, 0, 5):
        for i in (0, 1):
            assert v.act(i, n) == w.act(i, n)


@pytest.mark.parametrize("text", ["", "bmod dim 2 l", "bmod dim 1 l 0\nd0\n", "bmod band 3 l 0\nd0 up 1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_bmodule(text)


def test_t_s_const_weight_module():
    t = build_tensor_module(DModule.s(8), BModule.one_dim(THIRD))
    assert not t.residuals
    spec = t.d0_spectrum()
    # d_0 (x^-k (x) v) = (lam - k) x^-k (x) v
    assert spec == {as_scalar(THIRD - k) for k in range(1, 8)}
    assert t.act_basis(2, (-5, 0)) == {(-3, 0): as_scalar(-5 + 3 * THIRD)}


def test_t_poly_with_finite_v_is_module():
    v = parse_bmodule((DATA / "two_dim.bmod").read_text())
    t = build_tensor_module(DModule.poly(6), v)
    assert not t.residuals


def test_whittaker_band_probe_full():
    t = build_tensor_module(DModule.poly(10), BModule.whittaker_band(10))
    assert not t.residuals
    assert t.d0_spectrum() is None
    rep = simplicity_probe(t, (0, 0))
    assert rep.full and rep.interior == 153


def test_laurent_band_probe_not_full():
    t = build_tensor_module(DModule.poly(10), BModule.laurent_band(10))
    rep = simplicity_probe(t, (0, 0))
    assert not rep.full and rep.missing


def test_too_small_window():
    with pytest.raises(ValueError):
        build_tensor_module(DModule.poly(0), BModule.whittaker_band(0))

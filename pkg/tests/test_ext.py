from fractions import Fraction

import pytest

from wittrep.ext import (ExtProblem, ModuleSpec, borel_h1_dim, ext_dim, ext_ff_closed,
                         ext_simple_closed, ext_verma_closed, extension_module,
                         family_crosscheck, representative_check)
from wittrep.gmod import check_module_axioms
from wittrep.kernel import L, SQRT19, Scalar, as_scalar
from wittrep.standard import ext_family, verma

THIRD = Fraction(1, 3)


def _ext(kind, mu, lam, weight_only=True, window=12, kind2=None):
    return ext_dim(ExtProblem(ModuleSpec(kind, mu), ModuleSpec(kind2 or kind, lam),
                              weight_only, None, window))


def test_modulespec_parse():
    s = ModuleSpec.parse("verma:1/3")
    assert s.kind == "verma" and s.lam == as_scalar(THIRD)
    assert str(ModuleSpec.parse("ff:5/2+1/2r19")) == "ff:5/2+1/2r19"
    assert ModuleSpec.parse("trivial").base == Scalar()
    assert ModuleSpec("ff", 2).base == as_scalar(-2)
    for bad in ("foo:1", "verma", "verma:x"):
        with pytest.raises(ValueError):
            ModuleSpec.parse(bad)


def test_trivial_has_no_self_extension():
    t = ModuleSpec("trivial")
    for w in (True, False):
        assert ext_dim(ExtProblem(t, t, w)).ext_dim == 0


@pytest.mark.parametrize("mu,lam", [(-1, 0), (0, -1), (-2, 0), (0, -2), (THIRD - 2, THIRD),
                                    (-4, 1), (THIRD - 5, THIRD)])
def test_simple_table_small(mu, lam):
    r = _ext("simple", mu, lam)
    assert r.stabilized
    assert r.ext_dim == ext_simple_closed(mu, lam)


@pytest.mark.parametrize("mu,lam", [(-1, 0), (-5, 0), (THIRD - 3, THIRD), (2, 3)])
def test_verma_table_small(mu, lam):
    r = _ext("verma", mu, lam)
    assert r.stabilized and r.ext_dim == ext_verma_closed(mu, lam)


def test_verma_simple_contrast():
    assert _ext("verma", -5, 0).ext_dim == 1
    assert _ext("simple", -5, 0).ext_dim == 0


def test_sqrt19_pair():
    mu = (Scalar.const(-7) + SQRT19) / 2
    lam = (Scalar.const(5) + SQRT19) / 2
    assert ext_simple_closed(mu, lam) == 1
    assert _ext("simple", mu, lam, window=10).ext_dim == 1


def test_non_weight_self_extension():
    assert _ext("ff", THIRD, THIRD, weight_only=False).ext_dim == 1 == ext_ff_closed(THIRD, THIRD)
    assert _ext("ff", THIRD, THIRD, weight_only=True).ext_dim == 0


def test_different_lattices_vanish():
    assert _ext("verma", THIRD, 0).ext_dim == 0


def test_symbolic_weight_rejected():
    with pytest.raises(ValueError):
        _ext("verma", L, L - 1)


def test_representative_is_a_module():
    r = _ext("verma", -1, 0)
    top, sub = verma(-1, 12), verma(0, 13)
    assert r.representatives
    assert not representative_check(top, sub, r)
    k = extension_module(top, sub, r.representatives[0])
    assert not check_module_axioms(k)


def test_borel():
    got = {lam: borel_h1_dim(lam) for lam in (-1, -2, -3, 0, 1, THIRD)}
    assert got == {-1: 1, -2: 1, -3: 0, 0: 0, 1: 0, THIRD: 0}


@pytest.mark.parametrize("fid,lam,var", [(2, None, "prime"), (2, None, "plain"), (3, 2, None),
                                         (5, THIRD, None), (7, None, None)])
def test_family_crosscheck(fid, lam, var):
    cc = family_crosscheck(ext_family(fid, lam, 12, 8, variant=var))
    assert cc["is_cocycle"] and not cc["is_coboundary"] and cc["matches"]


def test_family8_printed_is_not_a_cocycle():
    cc = family_crosscheck(ext_family(8, None, 12, 8))
    assert cc["ext_dim"] == 1
    assert not cc["is_cocycle"] and not cc["matches"]
    fixed = family_crosscheck(ext_family(8, None, 12, 8, variant="corrected"))
    assert fixed["matches"]

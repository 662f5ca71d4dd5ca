from fractions import Fraction

import pytest

from wittrep.gmod import check_module_axioms
from wittrep.kernel import L, ONE, Scalar, as_scalar
from wittrep.standard import (delta0_resolution, ext_family, falling, family_data, feigin_fuchs,
                              simple_module, verma, verma_simplicity_scan)


def test_verma_formula():
    m = verma(L, 6, 4)
    # d_k e_{lam-i} = ((k+1) lam + k - i) e_{lam-i+k}
    assert m.table[(1, "e3")] == {"e2": 2 * L - 2}
    assert m.table[(-1, "e0")] == {"e1": Scalar.const(-1)}
    assert m.table[(4, "e3")] == {}


def test_ff_formula():
    m = feigin_fuchs(L, 6, 4)
    # d_i f_j = (j - (i+1) lam) f_{i+j}
    assert m.table[(2, "f1")] == {"f3": 1 - 3 * L}
    assert m.table[(-1, "f0")] == {}
    assert m.weight("f2") == 2 - L


def test_falling():
    assert falling(5, 3) == 60
    assert falling(2, 3) == 0
    assert falling(L, 2) == L * L - L


def _scan_oracle(max_i):
    """From the symbolic module: roots of the d_1 and d_2 coefficients on
    d_{-1}^i e_0 (the unnormalized vector)."""
    m = verma(L, max_i + 1, 2)
    out = []
    for i in range(1, max_i + 1):
        conds = []
        for k in (1, 2):
            img = m.table[(k, f"e{i}")]
            conds.append(img.get(f"e{i - k}", Scalar()))
        roots = None
        for c in conds:
            if not c:
                continue
            if c.is_constant():
                roots = set()
                break
            a, b = c.coeffs[1].a, c.coeffs[0].a
            r = {-b / a}
            roots = r if roots is None else roots & r
        # d_{-1}^i e_0 is a nonzero multiple of e_i, so the conditions coincide
        out.extend((Scalar.const(r), i) for r in sorted(roots or ()))
    return out


def test_scan_matches_oracle():
    assert verma_simplicity_scan(30) == _scan_oracle(30) == [(Scalar.const(0), 1)]


def test_scan_bad_input():
    with pytest.raises(ValueError):
        verma_simplicity_scan(0)


def test_simple_module():
    assert len(simple_module(0).basis) == 1
    assert len(simple_module(3, 5).basis) == 6
    with pytest.raises(ValueError):
        simple_module(L)


def test_delta0_resolution_maps():
    n, m, l, a, b = delta0_resolution(8, 4)
    assert not a.intertwining_residuals() and not b.intertwining_residuals()
    for x in n.basis:
        assert b(a({x: ONE})) == {}


@pytest.mark.parametrize("fid,lam,var", [(1, L, None), (2, None, "plain"), (2, None, "prime"),
                                         (3, L, None), (4, L, None), (5, L, None),
                                         (6, None, None), (7, None, None)])
def test_families_are_modules(fid, lam, var):
    assert not check_module_axioms(ext_family(fid, lam, 12, 8, variant=var))


def test_family8_printed_residual_is_reported():
    res = check_module_axioms(ext_family(8, None, 12, 8))
    assert res
    first = res[0]
    assert (first.i, first.j, first.basis) == (1, 5, "fp0")
    assert str(first) == "[d_1, d_5] on fp0: residual f0:-221760-50400r19"


@pytest.mark.parametrize("sign", ["plus", "minus"])
def test_family8_corrected(sign):
    assert not check_module_axioms(ext_family(8, None, 12, 8, variant="corrected", sign=sign))


def test_family_weight_flags():
    assert ext_family(2, None, 8, 4, variant="prime").weight_semisimple
    assert not ext_family(2, None, 8, 4, variant="plain").weight_semisimple
    assert not ext_family(1, L, 8, 4).weight_semisimple


def test_family_data_validation():
    with pytest.raises(ValueError):
        family_data(7, 3)
    with pytest.raises(ValueError):
        family_data(1)
    with pytest.raises(ValueError):
        family_data(9, 1)
    lam, mu, m, _ = family_data(8, None, sign="minus")
    assert lam - mu == 6
    assert lam == (5 - as_scalar("r19")) / 2
    assert family_data(5, Fraction(1, 3))[2] == 4

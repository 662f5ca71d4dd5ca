"""Deliberately broken inputs: each check must notice."""
from math import comb

import pytest

from wittrep.ext import ExtProblem, ModuleSpec, ext_dim
from wittrep.gmod import GradedMap, GradedModule, check_module_axioms
from wittrep.kernel import L, ONE, as_scalar
from wittrep.standard import verma
from wittrep.tensor import phi, phi_homomorphism_check
from wittrep.uea import act, casimir
from wittrep.whittaker import gamma_exactness, split_sequence


def _corrupt(m: GradedModule, k, b, factor=2):
    table = dict(m.table)
    table[(k, b)] = {t: factor * c for t, c in table[(k, b)].items()}
    return GradedModule("corrupt", m.base, m.window, m.offsets, m.gen, table)


def test_corrupted_verma_fails_axioms_with_location():
    m = _corrupt(verma(L, 10, 6), 1, "e4")
    res = check_module_axioms(m)
    assert res
    assert any(r.basis == "e4" for r in res)


def test_corrupted_verma_breaks_casimir():
    m = _corrupt(verma(L, 10, 6), 1, "e4")
    assert act(casimir(), m, {"e4": ONE}) != {"e4": L * (L + 1)}


def test_binomial_off_by_one():
    bad = phi_homomorphism_check(3, lambda k: phi(k, binom=lambda n, r: comb(n, r + 1 if r == 1 else r)))
    assert bad


def test_zero_beta_on_split_sequence():
    # Gamma(L(0)) = 0, so the Delta(0) sequence cannot detect a zero beta;
    # the split sequence Delta(1) + Delta(2) can
    n, m, l, alpha, beta = split_sequence(verma(1, 10), verma(2, 11))
    assert gamma_exactness((n, m, l, alpha, beta)).exact
    zero = GradedMap(m, l, {})
    rep = gamma_exactness((n, m, l, alpha, zero))
    assert not rep.surjective and not rep.exact


def test_non_intertwining_map_rejected():
    n, m, l, alpha, beta = split_sequence(verma(1, 10), verma(2, 11))
    bent = GradedMap(n, m, {b: {(0, b): ONE if b != "e3" else 3 * ONE} for b in n.basis})
    with pytest.raises(ValueError):
        gamma_exactness((n, m, l, bent, beta))


def test_solver_detects_lattice_mismatch_as_zero():
    r = ext_dim(ExtProblem(ModuleSpec("verma", as_scalar("1/2")), ModuleSpec("verma", 0)))
    assert r.ext_dim == 0

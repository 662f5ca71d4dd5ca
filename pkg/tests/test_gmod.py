import pytest

from wittrep.gmod import (GradedMap, GradedModule, check_module_axioms, check_weight_coherence,
                          direct_sum, dump_module, find_iso, load_module, maximal_vectors, reach,
                          restricted_dual)
from wittrep.kernel import L, ONE, Scalar, as_scalar
from wittrep.standard import feigin_fuchs, verma


def _twisted_verma(lam, depth, gen, bad_k=1, bad_i=3, delta=1):
    """Verma module with one structure constant perturbed."""
    lam = as_scalar(lam)

    def rule(k, b):
        i = int(b[1:])
        if k > i:
            return {}
        c = (k + 1) * lam + (k - i)
        if (k, i) == (bad_k, bad_i):
            c = c + delta
        return {f"e{i - k}": c}

    offsets = {f"e{i}": -i for i in range(depth + 1)}
    return GradedModule.from_rule("bad", lam, (-depth, None), offsets, gen, rule)


def test_window_semantics():
    m = verma(0, 4, 3)
    assert m.act(-1, {"e4": ONE}) is None          # leaves the window
    assert m.act(2, {"e1": ONE}) == {}              # genuinely zero
    assert m.defined(3, "e0") and m.table[(3, "e0")] == {}


def test_from_rule_rejects_unknown_target():
    with pytest.raises(ValueError):
        GradedModule.from_rule("x", 0, (0, 1), {"a": 0, "b": 1}, 1, lambda k, b: {"zz": 1})


def test_corrupted_verma_reports_triple():
    res = check_module_axioms(_twisted_verma(L, 8, 4))
    assert res
    # every residual involves d_1 on a vector that d_1 maps through e_3
    assert all(1 in (r.i, r.j) or r.i + r.j == 1 for r in res)
    s = str(res[0])
    assert s.startswith("[d_") and "residual" in s


def test_clean_modules_have_no_residuals():
    assert not check_module_axioms(verma(L, 10, 6))
    assert not check_module_axioms(feigin_fuchs(L, 10, 6))
    assert not check_weight_coherence(verma(L, 10, 6))


def test_maximal_vectors_verma_zero():
    got = maximal_vectors(verma(0, 6, 4))
    assert (Scalar.const(-1), {"e1": ONE}) in got
    assert all(w in (Scalar.const(0), Scalar.const(-1)) for w, _ in got)
    assert maximal_vectors(verma(Scalar.const(1), 6, 4)) == [(Scalar.const(1), {"e0": ONE})]


def test_reach_singular_vector():
    m = verma(0, 12, 4)
    top = reach(m, {"e1": 1}, margin=3)
    assert top[0] == 0 and all(v == 1 for n, v in top.items() if n < 0)
    assert all(v == 1 for v in reach(m, {"e0": 1}, margin=3).values())


def test_dual_of_ff_is_verma():
    iso = find_iso(restricted_dual(feigin_fuchs(L, 10, 6)), verma(L, 10, 6))
    assert iso is not None
    assert find_iso(restricted_dual(feigin_fuchs(L + 1, 10, 6)), verma(L, 10, 6)) is None


def test_dual_of_verma_is_ff_numeric():
    lam = Scalar.const(2) / 7
    assert find_iso(restricted_dual(verma(lam, 10, 6)), feigin_fuchs(lam, 10, 6)) is not None


def test_dump_roundtrip_symbolic():
    m = verma(L, 6, 3)
    text = dump_module(m)
    back = load_module(text)
    assert dump_module(back) == text
    assert not check_module_axioms(back)
    assert text.splitlines()[0] == "module Verma(L) window -6 * gen 3"


def test_dump_is_deterministic():
    assert dump_module(feigin_fuchs(Scalar.const(1) / 3, 5, 3)) == \
        dump_module(feigin_fuchs(Scalar.const(1) / 3, 5, 3))


@pytest.mark.parametrize("text", ["", "module x window a b gen 2", "module x window 0 1 gen 2\nfoo"])
def test_load_rejects(text):
    with pytest.raises((ValueError, IndexError)):
        load_module(text)


def test_direct_sum_and_maps():
    a, b = verma(1, 8, 4), verma(2, 9, 4)
    s = direct_sum([a, b])
    assert len(s.basis) == len(a.basis) + len(b.basis)
    assert not check_module_axioms(s)
    inc = GradedMap(a, s, {x: {(0, x): ONE} for x in a.basis})
    assert not inc.intertwining_residuals()
    twisted = GradedMap(a, s, {x: {(0, x): ONE if x != "e2" else 2 * ONE} for x in a.basis})
    assert twisted.intertwining_residuals()

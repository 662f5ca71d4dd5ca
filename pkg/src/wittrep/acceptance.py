"""The acceptance suite: eleven checks, each returning (passed, detail)."""

from __future__ import annotations

import time
from fractions import Fraction

from .ext import (ExtProblem, ModuleSpec, borel_h1_dim, ext_dim, ext_simple_closed,
                  ext_verma_closed, family_crosscheck)
from .gmod import check_module_axioms, find_iso, restricted_dual
from .kernel import ONE, SQRT19, L, Scalar, as_scalar, format_scalar
from .quiver import (QuiverGraph, build_block_quiver, catalog, classify_underlying_graph,
                     components, wild_witness)
from .standard import delta0_resolution, ext_family, feigin_fuchs, verma, verma_simplicity_scan
from .tensor import (BModule, DModule, build_tensor_module, phi_homomorphism_check,
                     simplicity_probe)
from .uea import act, casimir, d, parse_uea
from .whittaker import gamma, gamma_exactness, h1_member

THIRD = Fraction(1, 3)


def c1_axioms():
    t = time.perf_counter()
    rv = check_module_axioms(verma(L, 20, 10))
    rf = check_module_axioms(feigin_fuchs(L, 20, 10))
    dt = time.perf_counter() - t
    ok = not rv and not rf and dt < 10
    return ok, f"Verma residuals {len(rv)}, F residuals {len(rf)}, {dt:.1f}s"


def c2_casimir():
    m = verma(L, 20, 10)
    z = casimir()
    want = L * (L + 1)
    bad, checked = [], 0
    for b in m.basis:
        try:
            img = act(z, m, {b: ONE})
        except ArithmeticError:
            continue
        checked += 1
        if img != ({b: want} if want else {}):
            bad.append(b)
    return not bad and checked > 0, f"z = lam(lam+1) on {checked} in-window vectors, failures {bad[:3]}"


def c3_scan():
    res = verma_simplicity_scan(50)
    ok = [(s, i) for s, i in res] == [(Scalar.const(0), 1)]
    return ok, "solutions " + ", ".join(f"({format_scalar(s)},{i})" for s, i in res)


def c4_families():
    lines, ok = [], True
    for fid in (1, 2, 3, 4):
        lam = L if fid in (1, 3, 4) else None
        variants = ("plain", "prime") if fid == 2 else (None,)
        for var in variants:
            r = check_module_axioms(ext_family(fid, lam, 16, 8, variant=var))
            ok &= not r
            lines.append(f"family {fid}{'/' + var if var else ''}: residuals {len(r)}")
    for fid, var, sign in ((5, None, "plus"), (6, None, "plus"), (7, None, "plus"),
                           (8, "printed", "plus"), (8, "printed", "minus"),
                           (8, "corrected", "plus"), (8, "corrected", "minus")):
        if fid == 5:
            r = check_module_axioms(ext_family(5, L, 16, 8))
        else:
            r = check_module_axioms(ext_family(fid, None, 16, 8, variant=var, sign=sign))
        fam = ext_family(fid, THIRD if fid == 5 else None, 16, 8, variant=var, sign=sign)
        cc = family_crosscheck(fam)
        tag = f"family {fid}" + (f"/{var}/{sign}" if fid == 8 else "")
        if fid == 8 and var == "printed":
            # the printed constants are not a cocycle: report, never patch
            expected = bool(r) and not cc["is_cocycle"] and cc["ext_dim"] == 1
            ok &= expected
            first = r[0] if r else None
            lines.append(f"{tag}: FINDING residuals {len(r)}, first {first}; solver ext {cc['ext_dim']}; "
                         f"printed term is not a cocycle")
        else:
            good = not r and cc["ext_dim"] == 1 and cc["matches"]
            ok &= good
            lines.append(f"{tag}: residuals {len(r)}, solver ext {cc['ext_dim']}, "
                         f"matches up to scalar+coboundary {cc['matches']}")
    return ok, "; ".join(lines)


def sample_pairs():
    """(mu, lam) pairs for the solver/table comparison."""
    lams = [THIRD + k for k in range(-3, 4)] + list(range(-6, 8))
    pairs = [(as_scalar(lam - dd), as_scalar(lam)) for lam in lams for dd in range(1, 6)]
    pairs += [(as_scalar(m), as_scalar(l)) for m, l in ((-1, 0), (-2, 0), (0, -1), (-1, 4), (-5, 0))]
    pairs += [((Scalar.const(-7) + s * SQRT19) / 2, (Scalar.const(5) + s * SQRT19) / 2)
              for s in (1, -1)]
    seen, out = set(), []
    for p in pairs:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def c5_ext_tables(pairs=None):
    pairs = sample_pairs() if pairs is None else pairs
    bad = []
    for mu, lam in pairs:
        for kind, closed in (("simple", ext_simple_closed), ("verma", ext_verma_closed)):
            r = ext_dim(ExtProblem(ModuleSpec(kind, mu), ModuleSpec(kind, lam), True, None, 12))
            c = closed(mu, lam)
            if r.ext_dim != c or not r.stabilized:
                bad.append(f"{kind}({format_scalar(mu)},{format_scalar(lam)}): solver {r}, table {c}")
    v = ext_dim(ExtProblem(ModuleSpec("verma", as_scalar(-5)), ModuleSpec("verma", as_scalar(0))))
    s = ext_dim(ExtProblem(ModuleSpec("simple", as_scalar(-5)), ModuleSpec("simple", as_scalar(0))))
    contrast = v.ext_dim == 1 and s.ext_dim == 0
    ok = not bad and contrast
    return ok, (f"{2 * len(pairs)} comparisons, mismatches {len(bad)}; contrast (-5,0): "
                f"Verma {v.ext_dim}, simple {s.ext_dim}" + ("; " + "; ".join(bad[:3]) if bad else ""))


def c6_nonweight():
    f = ModuleSpec("ff", as_scalar(THIRD))
    a = ext_dim(ExtProblem(f, f, weight_only=False))
    b = ext_dim(ExtProblem(f, f, weight_only=True))
    return (a.ext_dim == 1 and b.ext_dim == 0 and a.stabilized and b.stabilized,
            f"all extensions {a.ext_dim}, weight extensions {b.ext_dim}")


def c7_duality():
    iso = find_iso(restricted_dual(feigin_fuchs(L, 15, 8)), verma(L, 15, 8))
    return iso is not None, "iso found" if iso else "no iso"


def c8_borel():
    got = {lam: borel_h1_dim(lam, 8) for lam in (-1, -2, -3, -4, -5, 1, Fraction(1, 2))}
    want = {lam: int(lam in (-1, -2)) for lam in got}
    return got == want, ", ".join(f"{lam}:{v}" for lam, v in got.items())


def c9_quiver():
    q = build_block_quiver(0, 12)
    connected = len(components(q)) == 1
    w = wild_witness(q, mu=10)
    want = {(as_scalar(a), as_scalar(b)) for a, b in ((7, 10), (7, 9), (6, 10), (6, 9), (6, 8))}
    pattern = w is not None and set(w.arrows) == want
    wild = w is not None and classify_underlying_graph(w).tag == "wild"
    cat_bad = []
    for name, tag, n, edges in catalog(10):
        arr: dict = {}
        for a, b in edges:
            arr[(as_scalar(a), as_scalar(b))] = arr.get((as_scalar(a), as_scalar(b)), 0) + 1
        c = classify_underlying_graph(QuiverGraph(list(range(n)), arr))
        if c.tag != tag or c.name != name:
            cat_bad.append(name)
    ok = connected and pattern and wild and not cat_bad
    verts = ",".join(format_scalar(v) for v in w.vertices) if w else "-"
    return ok, (f"connected {connected}; witness on {{{verts}}} with the expected five arrows {pattern}, "
                f"wild {wild}; catalog {len(catalog(10))} diagrams, misclassified {cat_bad}")


def c10_whittaker():
    m1, m0 = h1_member(parse_uea("1")), h1_member(d(0))
    specs = [ModuleSpec("verma", as_scalar(THIRD)), ModuleSpec("verma", as_scalar(2)),
             ModuleSpec("verma", as_scalar(-1)), ModuleSpec("verma", as_scalar(0)),
             ModuleSpec("trivial")]
    gs = [gamma(s) for s in specs]
    dims = tuple(g.dim for g in gs)
    stab = all(g.stabilized for g in gs)
    rep = gamma_exactness(delta0_resolution(12))
    ok = m1 and not m0 and dims == (1, 1, 1, 1, 0) and stab and rep.exact
    return ok, f"h1_member(1)={m1}, h1_member(d0)={m0}; gamma dims {dims} stabilized {stab}; {rep}"


def c11_tensor():
    res = phi_homomorphism_check(8)
    a = 10
    t = build_tensor_module(DModule.s(a), BModule.one_dim(THIRD))
    # d_m (x^-k (x) v) = (-k + (m+1) lam) x^{m-k} (x) v, zero once m - k >= 0
    formula_ok, n_checked = True, 0
    for (e, w) in t.basis:
        for m in range(-1, t.gen + 1):
            img = t.act_basis(m, (e, w))
            if img is None:
                continue
            n_checked += 1
            c = as_scalar(e + (m + 1) * THIRD)
            want = {(e + m, w): c} if e + m < 0 and c else {}
            formula_ok &= img == want
    spec = t.d0_spectrum()
    support = {as_scalar(THIRD - k) for k in range(1, a + 1) if t.defined(0, (-k, 0))}
    weight = spec is not None and spec == support and formula_ok and not t.residuals
    tv = build_tensor_module(DModule.poly(a), BModule.whittaker_band(a))
    probe = simplicity_probe(tv, (0, 0))
    ok = not res and weight and probe.full and not tv.residuals
    return ok, (f"phi residuals {len(res)}; T(S, C_1/3) weight module with d0-support lam-a "
                f"and formula on {n_checked} actions: {weight}; T(poly, V) probe: {probe}")


CRITERIA = [
    (1, "module axioms, symbolic", c1_axioms),
    (2, "Casimir eigenvalue", c2_casimir),
    (3, "Verma simplicity scan", c3_scan),
    (4, "extension families", c4_families),
    (5, "Ext tables, solver vs closed form", c5_ext_tables),
    (6, "non-weight self-extension", c6_nonweight),
    (7, "duality", c7_duality),
    (8, "Borel cohomology", c8_borel),
    (9, "blocks and wildness", c9_quiver),
    (10, "Whittaker / Gamma", c10_whittaker),
    (11, "tensor modules", c11_tensor),
]


def run_all(out=print) -> bool:
    all_ok = True
    for n, title, fn in CRITERIA:
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:     # a crash is a failure, reported as such
            ok, detail = False, f"error: {exc!r}"
        all_ok &= ok
        out(f"criterion {n} ({title}): {'PASS' if ok else 'FAIL'} [{time.perf_counter() - t:.1f}s] {detail}")
    return all_ok

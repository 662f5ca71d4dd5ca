"""Ext^1 between graded W-modules.

Two routes: an exact cocycle/coboundary solver over truncated modules, and
closed-form tables for Verma, simple and Feigin-Fuchs modules.  Also the
Borel cohomology H^1(b, Hom(C_lam, L(0))) used for the simple-module table.

Cocycle convention for 0 -> N -> K -> M -> 0 (M = ``top``, N = ``sub``):
K = N + M with d_k (n, m) = (d_k n + c_k(m), d_k m), so

    d_i c_j(b) + c_i(d_j b) - d_j c_i(b) - c_j(d_i b) = (j - i) c_{i+j}(b).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gmod import GradedModule, check_module_axioms
from .kernel import SQRT19, Echelon, Scalar, as_scalar, format_scalar, parse_scalar, to_field
from .standard import feigin_fuchs, simple_module, trivial_module, verma

__all__ = ["ModuleSpec", "ExtProblem", "ExtResult", "ext_dim", "solve_truncated",
           "ext_simple_closed", "ext_verma_closed", "ext_ff_closed", "borel_h1_dim",
           "cocycle_vector", "family_crosscheck", "extension_module"]


@dataclass(frozen=True)
class ModuleSpec:
    """Recipe for a module at any truncation depth: ``kind`` is one of
    verma, ff, simple, trivial."""
    kind: str
    lam: Scalar = Scalar()

    def __post_init__(self):
        if self.kind not in ("verma", "ff", "simple", "trivial"):
            raise ValueError(f"unknown module kind {self.kind!r} (verma|ff|simple|trivial)")
        object.__setattr__(self, "lam", as_scalar(self.lam))

    @classmethod
    def parse(cls, text: str) -> "ModuleSpec":
        kind, _, arg = text.partition(":")
        kind = kind.strip().lower()
        if kind == "trivial":
            return cls("trivial")
        if kind not in ("verma", "ff", "simple"):
            raise ValueError(f"unknown module kind {kind!r} (verma|ff|simple|trivial)")
        if not arg:
            raise ValueError(f"{kind} needs a weight, e.g. {kind}:1/3")
        return cls(kind, parse_scalar(arg))

    @property
    def base(self) -> Scalar:
        if self.kind == "ff":
            return -self.lam
        if self.kind == "trivial" or (self.kind == "simple" and not self.lam):
            return Scalar()
        return self.lam

    def build(self, depth: int, gen: int) -> GradedModule:
        if self.kind == "verma":
            return verma(self.lam, depth, gen)
        if self.kind == "ff":
            return feigin_fuchs(self.lam, depth, gen)
        if self.kind == "simple":
            return simple_module(self.lam, depth, gen)
        return trivial_module(gen)

    def __str__(self):
        return self.kind if self.kind == "trivial" else f"{self.kind}:{format_scalar(self.lam)}"


@dataclass
class ExtProblem:
    top: object                 # ModuleSpec or GradedModule (M)
    sub: object                 # ModuleSpec or GradedModule (N)
    weight_only: bool = True
    gen: int | None = None      # None: max(8, |shift| + 2)
    window: int = 12


@dataclass
class ExtResult:
    cocycle_dim: int
    coboundary_rank: int
    ext_dim: int
    stabilized: bool | None
    representatives: list = field(default_factory=list)
    gen: int = 0
    window: int = 0

    def __str__(self):
        st = {True: "stabilized", False: "NOT stabilized", None: "single window"}[self.stabilized]
        return (f"ext {self.ext_dim} (cocycles {self.cocycle_dim}, coboundaries "
                f"{self.coboundary_rank}, window {self.window}, gen {self.gen}, {st})")


def _shift(top_base, sub_base):
    diff = as_scalar(sub_base) - as_scalar(top_base)
    if not diff.is_constant():
        raise ValueError("weights differ by a symbolic amount; use numeric weights")
    c = diff.constant()
    return int(c.a) if c.is_integer() else None


class _Space:
    """Unknown coordinates of a truncated cochain c_k : M_p -> N_{p+k}."""

    def __init__(self, top: GradedModule, sub: GradedModule, shift: int, gen: int):
        self.top, self.sub, self.shift, self.gen = top, sub, shift, gen
        lo = [w for w in (top.window[0], None if sub.window[0] is None else sub.window[0] + shift)
              if w is not None]
        hi = [w for w in (top.window[1], None if sub.window[1] is None else sub.window[1] + shift)
              if w is not None]
        self.lo = max(lo) if lo else None
        self.hi = min(hi) if hi else None
        self.sub_pieces = {}
        for t, q in sub.offsets.items():
            self.sub_pieces.setdefault(q + shift, []).append(t)
        self.index = {}
        for b in top.basis:
            p = top.offsets[b]
            if not self.inside(p):
                continue
            for k in range(-1, gen + 1):
                if not self.inside(p + k):
                    continue
                for t in self.sub_pieces.get(p + k, []):
                    self.index[(k, b, t)] = len(self.index)

    def inside(self, n: int) -> bool:
        return (self.lo is None or n >= self.lo) and (self.hi is None or n <= self.hi)

    def constraint_rows(self) -> list[dict]:
        top, sub, idx = self.top, self.sub, self.index
        rows = []
        for b in top.basis:
            p = top.offsets[b]
            if not self.inside(p):
                continue
            for i in range(-1, self.gen + 1):
                for j in range(i + 1, min(self.gen, self.gen - i) + 1):
                    if not all(self.inside(p + s) for s in (i, j, i + j)):
                        continue

                    def put(key, coeff, sink):
                        col = idx.get(key)
                        if col is None:
                            return
                        nv = sink.get(col, 0) + coeff
                        if nv:
                            sink[col] = nv
                        else:
                            sink.pop(col, None)

                    per_target: dict = {}
                    # d_i c_j(b) - d_j c_i(b)
                    for (a, c, sign) in ((i, j, 1), (j, i, -1)):
                        for t in self.sub_pieces.get(p + c, []):
                            for t2, x in sub.table[(a, t)].items():
                                put((c, b, t), sign * to_field(x), per_target.setdefault(t2, {}))
                    # c_i(d_j b) - c_j(d_i b)
                    for (a, c, sign) in ((j, i, 1), (i, j, -1)):
                        for b2, x in top.table[(a, b)].items():
                            for t2 in self.sub_pieces.get(p + i + j, []):
                                put((c, b2, t2), sign * to_field(x), per_target.setdefault(t2, {}))
                    for t2 in self.sub_pieces.get(p + i + j, []):
                        put((i + j, b, t2), -(j - i), per_target.setdefault(t2, {}))
                    rows.extend(r for r in per_target.values() if r)
        return rows

    def coboundary(self, b0, t0) -> dict:
        """c_psi for psi = (b0 -> t0), zero on every other basis vector."""
        top, sub, idx = self.top, self.sub, self.index
        vec: dict = {}

        def put(key, coeff):
            col = idx.get(key)
            if col is None:
                return
            nv = vec.get(col, 0) + coeff
            if nv:
                vec[col] = nv
            else:
                vec.pop(col, None)

        p = top.offsets[b0]
        for k in range(-1, self.gen + 1):
            # d_k psi(b0)
            if self.inside(p + k):
                for t2, x in sub.table[(k, t0)].items():
                    put((k, b0, t2), to_field(x))
            # - psi(d_k b) for every b with d_k b touching b0
            q = p - k
            if self.inside(q):
                for b in top.pieces.get(q, []):
                    x = top.table[(k, b)].get(b0)
                    if x:
                        put((k, b, t0), -to_field(x))
        return vec


def solve_truncated(top: GradedModule, sub: GradedModule, weight_only: bool, gen: int):
    """(cocycle_dim, coboundary_rank, representatives) at one truncation."""
    shift = _shift(top.base, sub.base)
    if shift is None:
        return 0, 0, []
    sp = _Space(top, sub, shift, gen)
    ncols = len(sp.index)
    rows = sp.constraint_rows()
    zero_cols = sorted(c for (k, _, _), c in sp.index.items() if k == 0)
    if weight_only:
        rows.extend({c: 1} for c in zero_cols)
    ech = Echelon()
    for r in rows:
        ech.add(r)
    z = ech.nullspace(ncols)

    cob = []
    for b in top.basis:
        p = top.offsets[b]
        if sp.inside(p):
            for t in sp.sub_pieces.get(p, []):
                v = sp.coboundary(b, t)
                if v:
                    cob.append(v)
    bech = Echelon()
    for v in cob:
        bech.add(v)
    brank = len(bech)
    if weight_only:
        proj = Echelon()
        zs = set(zero_cols)
        for v in cob:
            proj.add({c: x for c, x in v.items() if c in zs})
        brank -= len(proj)
        # B_w: coboundaries with vanishing c_0; these lie in Z
        bech = Echelon()
        order = {c: n for n, c in enumerate(zero_cols)}
        rest = len(zero_cols)
        remap = {c: order[c] if c in order else rest + c for c in range(ncols)}
        back = {v: c for c, v in remap.items()}
        tmp = Echelon()
        for v in cob:
            tmp.add({remap[c]: x for c, x in v.items()})
        for pc, row in tmp.pivots.items():
            if pc >= rest:
                bech.add({back[c]: x for c, x in row.items()})
    reps = []
    span = Echelon()
    for r in bech.pivots.values():
        span.add(r)
    inv = {c: key for key, c in sp.index.items()}
    for v in z:
        if span.add(v):
            reps.append(_as_cocycle(v, inv))
    return len(z), brank, reps


def _as_cocycle(vec: dict, inv: dict) -> dict:
    """Column vector -> {k: {top_id: {sub_id: value}}}."""
    out: dict = {}
    for c, x in vec.items():
        k, b, t = inv[c]
        out.setdefault(k, {}).setdefault(b, {})[t] = x
    return out


def _depths(top_base, sub_base, window):
    shift = _shift(top_base, sub_base)
    n = abs(shift) if shift is not None else 0
    return window, window + n, n


def ext_dim(p: ExtProblem) -> ExtResult:
    """Solve at ``p.window`` and, for module recipes, again at window + 2."""
    if isinstance(p.top, ModuleSpec) != isinstance(p.sub, ModuleSpec):
        raise TypeError("top and sub must both be ModuleSpec or both GradedModule")
    if isinstance(p.top, ModuleSpec):
        for s in (p.top, p.sub):
            if not s.lam.is_constant():
                raise ValueError("ext_dim needs numeric weights (integrality decides the answer)")

        def at(w):
            dt, ds, n = _depths(p.top.base, p.sub.base, w)
            g = p.gen if p.gen is not None else max(8, n + 2)
            top, sub = p.top.build(dt, g), p.sub.build(ds, g)
            return solve_truncated(top, sub, p.weight_only, g), g

        (zd, br, reps), g = at(p.window)
        (zd2, br2, _), _ = at(p.window + 2)
        return ExtResult(zd, br, zd - br, zd - br == zd2 - br2, reps, g, p.window)
    shift = _shift(p.top.base, p.sub.base)
    g = p.gen if p.gen is not None else max(8, (abs(shift) if shift is not None else 0) + 2)
    g = min(g, p.top.gen, p.sub.gen)
    zd, br, reps = solve_truncated(p.top, p.sub, p.weight_only, g)
    return ExtResult(zd, br, zd - br, None, reps, g, p.window)


# closed forms --------------------------------------------------------------

def _c(x):
    return as_scalar(x)


_R19_PAIRS = (((Scalar.const(5) + SQRT19) / 2, (Scalar.const(-7) + SQRT19) / 2),
              ((Scalar.const(5) - SQRT19) / 2, (Scalar.const(-7) - SQRT19) / 2))


def _diff_in(lam, mu, values):
    d = lam - mu
    return d.is_constant() and d.constant().is_integer() and int(d) in values


def _lm(lam, mu):
    lam, mu = _c(lam), _c(mu)
    if not (lam.is_constant() and mu.is_constant()):
        raise ValueError("closed-form tables need numeric weights")
    return lam, mu


def ext_simple_closed(mu, lam) -> int:
    """dim Ext^1(L(mu), L(lam)) in category O."""
    lam, mu = _lm(lam, mu)
    special = {(0, -1), (0, -2), (-1, 0), (4, -1)}
    if (lam, mu) in _R19_PAIRS:
        return 1
    if lam.is_rational() and mu.is_rational() and lam.is_integer() and mu.is_integer() \
            and (int(lam), int(mu)) in special:
        return 1
    return int(_diff_in(lam, mu, (2, 3, 4)) and bool(lam) and bool(mu))


def ext_verma_closed(mu, lam) -> int:
    """dim Ext^1(Delta(mu), Delta(lam)) in category O."""
    lam, mu = _lm(lam, mu)
    if (lam, mu) in _R19_PAIRS:
        return 1
    if lam.is_integer() and mu.is_integer() and (int(lam), int(mu)) in {(0, -1), (0, -5), (4, -1)}:
        return 1
    return int(_diff_in(lam, mu, (2, 3, 4)))


def ext_ff_closed(lam, mu) -> int:
    """dim Ext^1(F_lam, F_mu) over U(W), not only weight extensions."""
    lam, mu = _lm(lam, mu)
    if (lam, mu) in _R19_PAIRS:
        return 1
    if lam.is_integer() and mu.is_integer():
        pair = (int(lam), int(mu))
        if pair == (0, -1):
            return 2
        if pair in {(0, -5), (4, -1)}:
            return 1
    return int(_diff_in(lam, mu, (0, 2, 3, 4)))


def borel_h1_dim(lam, bound: int = 8) -> int:
    """dim H^1(b, Hom(C_lam, L(0))) from the cocycle system
    (j - k) w_{k+j} = [d_k, w_j] - [d_j, w_k], 0 <= k < j <= bound,
    where w_j = w(d_j) has weight j and [d_k, w] = -lam delta_{k0} w."""
    if bound < 6:
        raise ValueError("bound must be at least 6")
    lam = _c(lam)
    if not lam.is_constant():
        raise ValueError("borel_h1_dim needs a numeric weight")
    # w_j can be nonzero only if lam + j = 0 (Hom(C_lam, L(0)) lives in weight -lam)
    live = [j for j in range(1, bound + 1) if lam + j == 0]
    col = {j: n for n, j in enumerate(live)}
    lamf = to_field(lam)
    rows = []
    for k in range(0, bound + 1):
        for j in range(k + 1, bound + 1):
            row: dict = {}

            def put(jj, x):
                if jj in col and x:
                    row[col[jj]] = row.get(col[jj], 0) + x

            if k + j <= bound:
                put(k + j, j - k)
            if k == 0:
                put(j, lamf)          # -[d_0, w_j] moved to the left
            if any(row.values()):
                rows.append({c: v for c, v in row.items() if v})
    e = Echelon()
    for r in rows:
        e.add(r)
    return len(live) - len(e)


# family cross-validation ---------------------------------------------------

def cocycle_vector(sp: _Space, cocycle) -> dict:
    """Column vector of a cochain given as cocycle(k, top_id) -> {sub_id: value}."""
    vec = {}
    for (k, b, t), c in sp.index.items():
        x = cocycle(k, b).get(t)
        if x:
            vec[c] = to_field(x)
    return vec


def family_crosscheck(fam: GradedModule, window: int = 12, gen: int | None = None) -> dict:
    """Compare a family's correction term with the solver on (F_lam, F_mu).

    Returns a dict with the solver dimension, whether the correction is a
    cocycle, whether it is a coboundary, and whether it matches the solver
    representative up to scalar and coboundary."""
    fid, lam, mu, m, corr = fam.family
    g = gen if gen is not None else max(8, m + 2)
    weight_only = fam.weight_semisimple
    top = feigin_fuchs(lam, window, g)
    sub = feigin_fuchs(mu, window + m, g)
    shift = _shift(top.base, sub.base)
    sp = _Space(top, sub, shift, g)

    def cochain(k, b):
        j = int(b[1:])
        if j + k - m < 0:
            return {}
        return {f"f{j + k - m}": as_scalar(corr(k, j))}

    vec = cocycle_vector(sp, cochain)
    rows = sp.constraint_rows()
    is_cocycle = all(sum(r.get(c, 0) * x for c, x in vec.items()) == 0 for r in rows)
    zd, br, reps = solve_truncated(top, sub, weight_only, g)
    cob = Echelon()
    for b in top.basis:
        p = top.offsets[b]
        if sp.inside(p):
            for t in sp.sub_pieces.get(p, []):
                cob.add(sp.coboundary(b, t))
    is_cob = cob.contains(vec)
    both = Echelon()
    for r in cob.pivots.values():
        both.add(r)
    for rep in reps:
        both.add(cocycle_vector(sp, lambda k, b, rep=rep: rep.get(k, {}).get(b, {})))
    in_span = both.contains(vec)
    return {"family": fid, "ext_dim": zd - br, "is_cocycle": is_cocycle,
            "is_coboundary": is_cob, "matches": is_cocycle and not is_cob and in_span, "weight_only": weight_only}


def extension_module(top: GradedModule, sub: GradedModule, cocycle: dict, name="K") -> GradedModule:
    """The module N + M twisted by a cocycle {k: {top_id: {sub_id: value}}}.
    Basis ids are ("N", id) and ("M", id); only entries inside both
    windows are stored."""
    shift = _shift(top.base, sub.base)
    if shift is None:
        raise ValueError("modules on different weight lattices")
    sp = _Space(top, sub, shift, min(top.gen, sub.gen))
    offsets = {("N", t): q + shift for t, q in sub.offsets.items() if sp.inside(q + shift)}
    offsets.update({("M", b): p for b, p in top.offsets.items() if sp.inside(p)})
    table = {}
    for (tag, x), n in offsets.items():
        for k in range(-1, sp.gen + 1):
            if not sp.inside(n + k):
                continue
            if tag == "N":
                img = {("N", t): c for t, c in sub.table[(k, x)].items()}
            else:
                img = {("M", b): c for b, c in top.table[(k, x)].items()}
                for t, c in cocycle.get(k, {}).get(x, {}).items():
                    img[("N", t)] = as_scalar(c) if not isinstance(c, Scalar) else c
            table[(k, (tag, x))] = {i: as_scalar(c) for i, c in img.items() if c}
    return GradedModule(name, top.base, (sp.lo, sp.hi), offsets, sp.gen, table,
                        top.weight_semisimple and sub.weight_semisimple and 0 not in cocycle)


def representative_check(top, sub, result: ExtResult) -> list:
    """Axiom residuals of every materialized representative."""
    out = []
    for rep in result.representatives:
        out.extend(check_module_axioms(extension_module(top, sub, rep)))
    return out

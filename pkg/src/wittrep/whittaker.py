"""Whittaker side: the algebra H_1 = {u in U(b) : u (d_{-1} - 1) in (d_{-1} - 1) U(W)},
the functor Gamma(M) = M / (d_{-1} - 1) M and its exactness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .ext import ModuleSpec
from .gmod import GradedMap, GradedModule, direct_sum, vec_add
from .kernel import ONE, Echelon, as_scalar, format_scalar, to_field
from .uea import UEAElement, act, d, whittaker_reduce

__all__ = ["h1_member", "h1_basis", "GammaSpace", "gamma", "gamma_space", "h1_action",
           "gamma_exactness", "ExactnessReport", "split_sequence"]

_SHIFT = d(-1) - 1


def h1_member(u: UEAElement) -> bool:
    if u.has_d_minus_one():
        raise ValueError("not an element of U(b): a monomial contains d(-1)")
    return not whittaker_reduce(u * _SHIFT)


def _monomials(deg: int, top: int):
    """Nondecreasing words in 0..top of length <= deg."""
    out = [()]
    for n in range(1, deg + 1):
        out.extend(itertools.combinations_with_replacement(range(top + 1), n))
    return out


def h1_basis(deg_bound: int) -> list[UEAElement]:
    """Basis of H_1 within the span of PBW monomials of length <= deg_bound in
    d_0, ..., d_{deg_bound + 2}."""
    if deg_bound < 0:
        raise ValueError("deg_bound must be >= 0")
    monos = _monomials(deg_bound, deg_bound + 2)
    rowkey: dict = {}
    rows: dict = {}
    for c, m in enumerate(monos):
        red = whittaker_reduce(UEAElement({m: ONE}) * _SHIFT)
        for key, x in red.items():
            r = rowkey.setdefault(key, len(rowkey))
            rows.setdefault(r, {})[c] = to_field(x)
    e = Echelon()
    for r in rows.values():
        e.add(r)
    out = []
    for v in e.nullspace(len(monos)):
        out.append(UEAElement({monos[c]: as_scalar(x) for c, x in v.items()}))
    out.sort(key=lambda u: min((len(m), m) for m in u.terms))
    return out


@dataclass
class GammaSpace:
    module: GradedModule
    dim: int
    representatives: list       # basis ids whose cosets span Gamma(M)
    stabilized: bool | None
    image: Echelon = field(repr=False, default=None)
    order: dict = field(repr=False, default=None)

    def coords(self, v: dict) -> dict:
        """Coordinates of the coset of v on ``representatives``."""
        r = self.image.reduce({self.order[b]: to_field(c) for b, c in v.items()})
        inv = {c: b for b, c in self.order.items()}
        return {inv[c]: x for c, x in r.items()}


def gamma_space(m: GradedModule) -> GammaSpace:
    """Quotient of the window by span{(d_{-1} - 1) v : d_{-1} v in window}.
    Deep pieces are eliminated first, so representatives sit at the top."""
    if not any(k == -1 for k, _ in m.table) and m.basis:
        raise ValueError(f"{m.name}: no d(-1) action stored")
    ids = sorted(m.basis, key=lambda b: (m.offsets[b], str(b)))
    order = {b: n for n, b in enumerate(ids)}
    e = Echelon()
    for b in m.basis:
        img = m.act(-1, {b: ONE})
        if img is None:
            continue
        vec = vec_add(img, {b: ONE}, -1)
        e.add({order[t]: to_field(c) for t, c in vec.items()})
    reps = [b for b in ids if order[b] not in e.pivots]
    return GammaSpace(m, len(reps), reps, None, e, order)


def gamma(target, window: int = 12, gen: int = 8) -> GammaSpace:
    """Gamma of a module recipe (checked at window and window + 2) or of a
    fixed truncated module."""
    if isinstance(target, ModuleSpec):
        g1 = gamma_space(target.build(window, gen))
        g2 = gamma_space(target.build(window + 2, gen))
        g1.stabilized = g1.dim == g2.dim
        return g1
    return gamma_space(target)


def h1_action(u: UEAElement, gs: GammaSpace) -> list[list]:
    """Matrix of u acting on Gamma(M) by [v] -> [u v], columns indexed by
    representatives."""
    if not h1_member(u):
        raise ValueError(f"{u} is not in H_1; it does not act on Gamma")
    cols = []
    for b in gs.representatives:
        img = act(u, gs.module, {b: ONE})
        co = gs.coords(img)
        cols.append([co.get(r, 0) for r in gs.representatives])
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(gs.representatives))]


@dataclass
class ExactnessReport:
    dims: tuple
    injective: bool
    surjective: bool
    middle_exact: bool

    @property
    def exact(self) -> bool:
        return self.injective and self.surjective and self.middle_exact

    def __str__(self):
        verdict = "exact" if self.exact else "NOT exact"
        return (f"Gamma dims {self.dims}: injective={self.injective} "
                f"surjective={self.surjective} middle={self.middle_exact} -> {verdict}")


def _induced(f: GradedMap, src: GammaSpace, dst: GammaSpace) -> list[dict]:
    return [dst.coords(f({b: ONE})) for b in src.representatives]


def gamma_exactness(seq) -> ExactnessReport:
    """Exactness of Gamma on 0 -> N -a-> M -b-> L -> 0 (truncated)."""
    n, m, l, alpha, beta = seq
    bad = alpha.intertwining_residuals() + beta.intertwining_residuals()
    if bad:
        raise ValueError(f"maps are not intertwiners: {bad[:3]}")
    for b in n.basis:
        if beta(alpha({b: ONE})):
            raise ValueError("beta o alpha is not zero")
    gn, gm, gl = gamma_space(n), gamma_space(m), gamma_space(l)
    ga = _induced(alpha, gn, gm)
    gb = _induced(beta, gm, gl)
    idx_m = {b: k for k, b in enumerate(gm.representatives)}
    idx_l = {b: k for k, b in enumerate(gl.representatives)}
    ra = _col_rank(ga, idx_m)
    rb = _col_rank(gb, idx_l)
    # kernel of Gamma(beta) has dim dim Gamma(M) - rank; image of Gamma(alpha) must equal it
    composite_zero = all(not _apply(gb, idx_m, col, idx_l) for col in ga)
    middle = composite_zero and ra == gm.dim - rb
    return ExactnessReport((gn.dim, gm.dim, gl.dim), ra == gn.dim, rb == gl.dim, middle)


def _col_rank(cols, idx) -> int:
    e = Echelon()
    for c in cols:
        e.add({idx[k]: v for k, v in c.items()})
    return len(e)


def _apply(gb, idx_m, col, idx_l):
    """Gamma(beta) applied to a coordinate vector on Gamma(M)."""
    out: dict = {}
    for b, x in col.items():
        for t, y in gb[idx_m[b]].items():
            out[t] = out.get(t, 0) + x * y
    return {t: v for t, v in out.items() if v}


def split_sequence(m1: GradedModule, m2: GradedModule):
    """0 -> m1 -> m1 + m2 -> m2 -> 0 with inclusion and projection.  The two
    windows must cover the same weights, e.g. verma(1, 12) and verma(2, 13)."""
    s = direct_sum([m1, m2])
    if len(s.basis) != len(m1.basis) + len(m2.basis):
        raise ValueError("split_sequence needs modules whose windows cover the same weights")
    inc = GradedMap(m1, s, {b: {(0, b): ONE} for b in m1.basis if (0, b) in s.offsets})
    proj = GradedMap(s, m2, {(1, b): {b: ONE} for b in m2.basis if (1, b) in s.offsets})
    return m1, s, m2, inc, proj


def format_matrix(rows) -> str:
    return "\n".join(" ".join(format_scalar(as_scalar(x)) for x in r) for r in rows)

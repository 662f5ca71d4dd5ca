"""Truncated weight-graded W-modules.

A :class:`GradedModule` stores a finite basis, each vector carrying an
integer offset so that its weight label is ``base + offset``.  The window
``(n_min, n_max)`` is the set of offsets whose pieces are completely known
(``None`` means unbounded: every piece on that side is known, and pieces
without basis vectors are genuinely zero).  The action of d_k on a basis
vector at offset n is stored iff ``n + k`` lies in the window; otherwise it
is *undefined*, never silently zero.  Every stored entry is an exact value
of the untruncated module, so any computation that only touches stored
entries is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kernel import ZERO, Echelon, PolyEchelon, Scalar, as_scalar, format_scalar, parse_scalar, to_field
from .uea import bracket

__all__ = ["GradedModule", "Residual", "check_module_axioms", "check_weight_coherence",
           "maximal_vectors", "restricted_dual", "find_iso", "reach", "direct_sum",
           "vec_add", "vec_scale", "dump_module", "load_module", "GradedMap"]


def vec_add(u: dict, v: dict, s=1) -> dict:
    """u + s*v (new dict, zeros dropped)."""
    out = dict(u)
    for k, x in v.items():
        nv = out.get(k, ZERO) + s * x
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def vec_scale(v: dict, s) -> dict:
    s = as_scalar(s)
    if not s:
        return {}
    return {k: s * x for k, x in v.items()}


class GradedModule:
    def __init__(self, name, base, window, offsets, gen, table, weight_semisimple=True):
        self.name = name
        self.base = as_scalar(base)
        self.window = tuple(window)
        self.basis = list(offsets)
        self.offsets = dict(offsets)
        self.gen = gen
        self.table = table
        self.weight_semisimple = weight_semisimple
        self.pieces: dict[int, list] = {}
        for b in self.basis:
            self.pieces.setdefault(self.offsets[b], []).append(b)

    @classmethod
    def from_rule(cls, name, base, window, offsets, gen, rule, weight_semisimple=True):
        """Build the action table from ``rule(k, id) -> dict`` for every
        (k, id) whose target offset lies in the window."""
        lo, hi = window
        offsets = dict(offsets)
        for b, n in offsets.items():
            if (lo is not None and n < lo) or (hi is not None and n > hi):
                raise ValueError(f"basis vector {b} at offset {n} lies outside the window")
        known = set(offsets)
        table = {}
        for b, n in offsets.items():
            for k in range(-1, gen + 1):
                t = n + k
                if (lo is not None and t < lo) or (hi is not None and t > hi):
                    continue
                vec = {i: as_scalar(c) for i, c in rule(k, b).items()}
                vec = {i: c for i, c in vec.items() if c}
                for i in vec:
                    if i not in known:
                        raise ValueError(f"{name}: d_{k}({b}) hits unknown basis id {i}")
                table[(k, b)] = vec
        return cls(name, base, window, offsets, gen, table, weight_semisimple)

    def in_window(self, n: int) -> bool:
        lo, hi = self.window
        return (lo is None or n >= lo) and (hi is None or n <= hi)

    def weight(self, b) -> Scalar:
        return self.base + self.offsets[b]

    def defined(self, k: int, b) -> bool:
        return (k, b) in self.table

    def act(self, k: int, v: dict):
        """d_k v, or None if undefined for some basis vector in the support."""
        out: dict = {}
        for b, c in v.items():
            img = self.table.get((k, b))
            if img is None:
                return None
            for t, x in img.items():
                nv = out.get(t, ZERO) + c * x
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def matrix_block(self, k: int, n: int) -> dict:
        """{(target, source): coeff} for d_k from piece n to piece n + k."""
        out = {}
        for b in self.pieces.get(n, []):
            for t, x in self.table[(k, b)].items():
                out[(t, b)] = x
        return out

    def piece_offsets(self) -> list[int]:
        return sorted(self.pieces)

    def __repr__(self):
        return (f"GradedModule({self.name!r}, dim={len(self.basis)}, window={self.window}, "
                f"gen={self.gen})")


@dataclass
class Residual:
    i: int
    j: int
    basis: object
    vector: dict

    def __str__(self):
        vs = ",".join(f"{b}:{format_scalar(c)}" for b, c in sorted(self.vector.items(), key=str))
        return f"[d_{self.i}, d_{self.j}] on {self.basis}: residual {vs}"


def check_module_axioms(m, gen: int | None = None) -> list[Residual]:
    """Every violated bracket relation d_i d_j v - d_j d_i v = (j-i) d_{i+j} v
    over fully representable triples.  Works for any object with ``basis``,
    ``gen`` and ``act(k, vec)``."""
    g = m.gen if gen is None else gen
    report = []
    for b in m.basis:
        v = {b: Scalar.const(1)}
        imgs = {k: m.act(k, v) for k in range(-1, g + 1)}
        for i in range(-1, g + 1):
            for j in range(i + 1, g + 1):
                c, s = bracket(i, j)
                if s > g:
                    continue
                dj, di, ds = imgs[j], imgs[i], imgs[s]
                if dj is None or di is None or ds is None:
                    continue
                a = m.act(i, dj)
                bb = m.act(j, di)
                if a is None or bb is None:
                    continue
                res = vec_add(vec_add(a, bb, -1), ds, -c)
                if res:
                    report.append(Residual(i, j, b, res))
    return report


def check_weight_coherence(m: GradedModule) -> list[tuple]:
    """Stored actions whose targets have the wrong weight, plus d_0 failures
    on weight-semisimple modules."""
    bad = []
    for (k, b), img in m.table.items():
        want = m.offsets[b] + k
        for t in img:
            if m.offsets[t] != want:
                bad.append((k, b, t))
    if m.weight_semisimple:
        for b in m.basis:
            img = m.table.get((0, b))
            if img is not None and img != ({b: m.weight(b)} if m.weight(b) else {}):
                bad.append((0, b, "not diagonal"))
    return bad


def _kernel_basis(rows_by_col: list[dict], cols: list) -> list[dict]:
    """Generic kernel of a map given column-wise (one dict per source id) over
    Q(sqrt 19)[L]: returns a polynomial basis of the kernel over the fraction
    field.  Small pieces only."""
    # transpose to equations: for each target coordinate, sum_src coeff * x_src = 0
    eqs: dict = {}
    for ci, col in enumerate(rows_by_col):
        for t, x in col.items():
            eqs.setdefault(t, {})[ci] = x
    e = PolyEchelon()
    for r in eqs.values():
        e.add(r)
    free = [c for c in range(len(cols)) if c not in e.pivots]
    out = []
    for f in free:
        # solve pivots bottom-up with cross-multiplication
        sol = {f: Scalar.const(1)}
        for p in sorted(e.pivots, reverse=True):
            row = e.pivots[p]
            rhs = ZERO
            for k, x in row.items():
                if k != p:
                    rhs = rhs + x * sol.get(k, ZERO)
            # row[p] * x_p + rhs = 0 -> scale everything by row[p]
            lead = row[p]
            sol = {k: v * lead for k, v in sol.items()}
            sol[p] = -rhs
        out.append({cols[k]: v for k, v in sol.items() if v})
    return out


def maximal_vectors(m: GradedModule) -> list[tuple[Scalar, dict]]:
    """Joint kernel of d_1 and d_2 on each piece where both are defined."""
    if not m.weight_semisimple:
        raise ValueError("maximal_vectors requires a weight module")
    out = []
    for n in m.piece_offsets():
        ids = m.pieces[n]
        if not all(m.defined(1, b) and m.defined(2, b) for b in ids):
            continue
        cols = []
        for b in ids:
            col = {}
            for k in (1, 2):
                for t, x in m.table[(k, b)].items():
                    col[(k, t)] = x
            cols.append(col)
        for v in _kernel_basis(cols, ids):
            out.append((m.base + n, v))
    return out


def restricted_dual(m: GradedModule, name: str | None = None) -> GradedModule:
    """Piecewise dual with (d_k phi)(v) = phi(-d_k v); offsets are negated."""
    lo, hi = m.window
    window = (None if hi is None else -hi, None if lo is None else -lo)
    offsets = {("*", b): -n for b, n in m.offsets.items()}
    table = {}
    for b, n in m.offsets.items():
        for k in range(-1, m.gen + 1):
            src = n - k      # original piece mapped onto piece n by d_k
            if not m.in_window(src):
                continue
            vec = {}
            for c in m.pieces.get(src, []):
                x = m.table[(k, c)].get(b)
                if x:
                    vec[("*", c)] = -x
            table[(k, ("*", b))] = vec
    return GradedModule(name or f"{m.name}*", -m.base, window, offsets, m.gen, table,
                        m.weight_semisimple)


def _label_map(m: GradedModule, n: GradedModule):
    """Offset shift s with m.base + t == n.base + (t - s)... i.e. the integer
    ``n.base - m.base``; None if the two lattices differ."""
    diff = n.base - m.base
    if not diff.is_constant() or not diff.constant().is_integer():
        return None
    return int(diff)


def find_iso(m: GradedModule, n: GradedModule):
    """Graded isomorphism m -> n between modules with 1-dimensional pieces:
    returns {m_id: (n_id, scale)} or None."""
    if not (m.weight_semisimple and n.weight_semisimple):
        raise ValueError("find_iso requires weight modules")
    if any(len(p) != 1 for p in m.pieces.values()) or any(len(p) != 1 for p in n.pieces.values()):
        raise ValueError("find_iso requires 1-dimensional pieces")
    shift = _label_map(m, n)
    if shift is None:
        return None
    # m offset t corresponds to n offset t - shift
    if {t - shift for t in m.pieces} != set(n.pieces):
        return None
    pair = {m.pieces[t][0]: n.pieces[t - shift][0] for t in m.pieces}
    offs = sorted(m.pieces)
    # extremal piece: the top one if pieces are bounded above by the window, else the bottom
    start = offs[-1] if m.window[1] is None else offs[0]
    scale = {m.pieces[start][0]: Scalar.const(1)}
    frontier = [start]
    while frontier:
        t = frontier.pop()
        b = m.pieces[t][0]
        for k in range(-1, m.gen + 1):
            u = t + k
            if u not in m.pieces:
                continue
            b2 = m.pieces[u][0]
            if b2 in scale:
                continue
            if not (m.defined(k, b) and n.defined(k, pair[b])):
                continue
            cm = m.table[(k, b)].get(b2, ZERO)
            cn = n.table[(k, pair[b])].get(pair[b2], ZERO)
            if not cm or not cm.is_constant():
                continue
            s = scale[b] * cn / cm
            if not s:
                return None
            scale[b2] = s
            frontier.append(u)
    if len(scale) != len(pair):
        return None
    # verify every generator defined on both sides
    for b in m.basis:
        for k in range(-1, min(m.gen, n.gen) + 1):
            if not (m.defined(k, b) and n.defined(k, pair[b])):
                continue
            lhs = {pair[t]: x * scale[t] for t, x in m.table[(k, b)].items()}
            rhs = vec_scale(n.table[(k, pair[b])], scale[b])
            if vec_add(lhs, rhs, -1):
                return None
    return {b: (pair[b], scale[b]) for b in m.basis}


def _is_constant_vec(v) -> bool:
    return all(c.is_constant() for c in v.values())


def span_closure(ids, act, gens, seeds, budget, defined, exact=None):
    """Span of ``seeds`` closed under ``act(k, vec)`` for k in ``gens``.

    Only vectors supported where d_k is defined are pushed through d_k.  For
    each k an echelon form lists the undefined coordinates first, so its
    rows pivoting in the defined block span exactly that part of the span.
    ``budget`` caps the number of generator applications.  Works over
    Q(sqrt 19) when all coefficients are constant, else over Q(sqrt 19)(L).
    Returns (echelon of the span, spanning vectors)."""
    ids = list(ids)
    gens = list(gens)
    if exact is None:
        try:
            return span_closure(ids, act, gens, seeds, budget, defined, True)
        except ArithmeticError:
            return span_closure(ids, act, gens, seeds, budget, defined, False)
    if exact:
        mk, conv, back = Echelon, to_field, as_scalar
    else:
        mk, conv, back = PolyEchelon, as_scalar, as_scalar
    order = {b: i for i, b in enumerate(ids)}
    perms, inv, nbad, echs = {}, {}, {}, {}
    for k in gens:
        bad = [b for b in ids if not defined(k, b)]
        perm = {b: i for i, b in enumerate(bad + [b for b in ids if defined(k, b)])}
        perms[k], inv[k], nbad[k], echs[k] = perm, {i: b for b, i in perm.items()}, len(bad), mk()
    span = mk()
    vecs: list[dict] = []
    queue: list = []

    def admit(w):
        if exact and not _is_constant_vec(w):
            raise ArithmeticError("symbolic coefficient in a constant closure")
        if not span.add({order[b]: conv(c) for b, c in w.items()}):
            return
        vecs.append(w)
        for k in gens:
            e = echs[k]
            r = e.reduce({perms[k][b]: conv(c) for b, c in w.items()})
            if not r:
                continue
            e.add(r)
            row = e.pivots[min(r)]
            if min(r) >= nbad[k]:
                queue.append((k, {inv[k][c]: back(x) for c, x in row.items()}))

    for s in seeds:
        if s:
            admit({b: as_scalar(c) for b, c in s.items()})
    steps = 0
    while queue and steps < budget:
        k, v = queue.pop(0)
        steps += 1
        w = act(k, v)
        if w:
            admit(w)
    return span, vecs


def reach(m: GradedModule, v: dict, budget: int = 100000, margin: int | None = None) -> dict:
    """Dimension per interior piece of the submodule generated by v.
    Interior = offsets at least ``margin`` (default gen + 1) away from every
    finite window edge."""
    margin = m.gen + 1 if margin is None else margin
    span, _ = span_closure(m.basis, m.act, range(-1, m.gen + 1), [v], budget, m.defined)
    lo, hi = m.window
    out = {}
    for n in m.piece_offsets():
        if (lo is not None and n < lo + margin) or (hi is not None and n > hi - margin):
            continue
        # dim(span ∩ piece): eliminate the other coordinates first
        piece = set(m.pieces[n])
        others = [b for b in m.basis if b not in piece]
        order = {b: i for i, b in enumerate(others + m.pieces[n])}
        e = type(span)()
        for row in span.pivots.values():
            e.add({order[m.basis[i]]: c for i, c in row.items()})
        out[n] = sum(1 for p in e.pivots if p >= len(others))
    return out


def direct_sum(ms, name=None) -> GradedModule:
    """Direct sum of modules on a common weight lattice (same base up to an
    integer); basis ids are ``(index, id)``."""
    base = ms[0].base
    shifts = []
    for m in ms:
        diff = m.base - base
        if not diff.is_constant() or not diff.constant().is_integer():
            raise ValueError("direct_sum needs modules on one weight lattice")
        shifts.append(int(diff))
    lo = [m.window[0] + s if m.window[0] is not None else None for m, s in zip(ms, shifts)]
    hi = [m.window[1] + s if m.window[1] is not None else None for m, s in zip(ms, shifts)]
    wlo = max((x for x in lo if x is not None), default=None)
    whi = min((x for x in hi if x is not None), default=None)
    offsets, table = {}, {}
    gen = min(m.gen for m in ms)
    keep = set()
    for idx, (m, s) in enumerate(zip(ms, shifts)):
        for b, n in m.offsets.items():
            if (wlo is None or n + s >= wlo) and (whi is None or n + s <= whi):
                offsets[(idx, b)] = n + s
                keep.add((idx, b))
    for idx, (m, s) in enumerate(zip(ms, shifts)):
        for b in m.basis:
            if (idx, b) not in keep:
                continue
            for k in range(-1, gen + 1):
                t = m.offsets[b] + s + k
                if (wlo is not None and t < wlo) or (whi is not None and t > whi):
                    continue
                table[(k, (idx, b))] = {(idx, c): x for c, x in m.table[(k, b)].items()}
    return GradedModule(name or "+".join(m.name for m in ms), base, (wlo, whi), offsets, gen,
                        table, all(m.weight_semisimple for m in ms))


@dataclass
class GradedMap:
    """Degree-0 linear map between modules: basis id -> image vector."""
    source: GradedModule
    target: GradedModule
    images: dict = field(default_factory=dict)

    def __call__(self, v: dict) -> dict:
        out: dict = {}
        for b, c in v.items():
            out = vec_add(out, self.images.get(b, {}), c)
        return out

    def intertwining_residuals(self) -> list[tuple]:
        """(k, basis id, residual) wherever f(d_k v) != d_k f(v) with both sides defined."""
        bad = []
        for b in self.source.basis:
            for k in range(-1, min(self.source.gen, self.target.gen) + 1):
                dv = self.source.act(k, {b: Scalar.const(1)})
                if dv is None:
                    continue
                rhs = self.target.act(k, self.images.get(b, {}))
                if rhs is None:
                    continue
                res = vec_add(self(dv), rhs, -1)
                if res:
                    bad.append((k, b, res))
        return bad


def _fmt_id(b) -> str:
    if isinstance(b, tuple):
        return ".".join(_fmt_id(x) for x in b)
    return str(b)


def dump_module(m: GradedModule) -> str:
    """Line-based dump: header, basis lines, action lines; deterministic."""
    lo, hi = m.window
    w = lambda x: "*" if x is None else str(x)  # noqa: E731
    lines = [f"module {m.name} window {w(lo)} {w(hi)} gen {m.gen}"]
    for b in m.basis:
        lines.append(f"basis {_fmt_id(b)} {format_scalar(m.weight(b))}")
    for b in m.basis:
        for k in range(-1, m.gen + 1):
            if (k, b) not in m.table:
                continue
            img = m.table[(k, b)]
            rhs = ",".join(f"{_fmt_id(t)}:{format_scalar(c)}" for t, c in
                           sorted(img.items(), key=lambda tc: m.basis.index(tc[0])))
            lines.append(f"act {k} {_fmt_id(b)} = {rhs}")
    return "\n".join(lines) + "\n"


def load_module(text: str) -> GradedModule:
    """Inverse of :func:`dump_module` (ids become strings)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "module" or head[2] != "window" or head[5] != "gen":
        raise ValueError("bad module header")
    name = head[1]
    lo = None if head[3] == "*" else int(head[3])
    hi = None if head[4] == "*" else int(head[4])
    gen = int(head[6])
    weights, order = {}, []
    table = {}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "basis":
            weights[parts[1]] = parse_scalar(parts[2])
            order.append(parts[1])
        elif parts[0] == "act":
            k, b = int(parts[1]), parts[2]
            rhs = ln.split("=", 1)[1].strip()
            vec = {}
            if rhs:
                for item in rhs.split(","):
                    t, c = item.rsplit(":", 1)
                    vec[t] = parse_scalar(c)
            table[(k, b)] = vec
        else:
            raise ValueError(f"bad dump line {ln!r}")
    if not order:
        raise ValueError("module without basis")
    base = weights[order[0]]
    offsets = {}
    for b in order:
        diff = weights[b] - base
        offsets[b] = int(diff)
    diag = all(table.get((0, b), {b: weights[b]}) == ({b: weights[b]} if weights[b] else {})
               for b in order)
    return GradedModule(name, base, (lo, hi), offsets, gen, table, diag)

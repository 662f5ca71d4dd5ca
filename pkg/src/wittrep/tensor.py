"""Tensor modules T(P, V) = P (x) V built through the embedding

    phi: U(W) -> D (x) U(b),  d_m -> x^{m+1} d (x) 1 + sum_{r=0}^{m} C(m+1, r+1) x^{m-r} (x) d_r

where D is the Weyl algebra ([d, x] = 1), P a D-module and V a b-module
on which d_i acts by zero for i > l.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .gmod import check_module_axioms, span_closure, vec_add
from .kernel import ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar
from .uea import _normal_word

__all__ = ["WeylTensorElement", "phi", "phi_homomorphism_check", "DModule", "BModule",
           "TensorModule", "build_tensor_module", "simplicity_probe", "ProbeReport",
           "parse_bmodule"]


def _ff(c: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= c - t
    return out


class WeylTensorElement:
    """Sum of coeff * x^a d^b (x) m with m a PBW monomial of U(b)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for key, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[key] = self.terms.get(key, ZERO) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return WeylTensorElement(t)

    def __neg__(self):
        return WeylTensorElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        s = as_scalar(s)
        return WeylTensorElement({k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, WeylTensorElement):
            return as_scalar(other) * self
        out: dict = {}
        for (a, b, u), c1 in self.terms.items():
            for (c, e, w), c2 in other.terms.items():
                uw = _normal_word(u + w)
                for k in range(min(b, c) + 1):
                    # d^b x^c = sum_k C(b, k) c!/(c-k)! x^{c-k} d^{b-k}
                    w1 = comb(b, k) * _ff(c, k)
                    for mono, n in uw:
                        key = (a + c - k, b - k + e, mono)
                        out[key] = out.get(key, ZERO) + c1 * c2 * (w1 * n)
        return WeylTensorElement(out)

    def __eq__(self, other):
        return isinstance(other, WeylTensorElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, m) in sorted(self.terms):
            c = self.terms[(a, b, m)]
            weyl = "*".join(p for p in (f"x^{a}" if a else "", f"D^{b}" if b else "") if p) or "1"
            ub = "*".join(f"d({i})" for i in m) or "1"
            parts.append(f"({format_scalar(c)}){weyl}#{ub}")
        return " + ".join(parts)

    __repr__ = __str__


def phi(m: int, binom=comb) -> WeylTensorElement:
    """Image of d_m.  ``binom`` exists for fault injection in tests."""
    if m < -1:
        raise ValueError("phi is defined on d_m for m >= -1")
    if m == -1:
        return WeylTensorElement({(0, 1, ()): ONE})
    t = {(m + 1, 1, ()): ONE}
    for r in range(m + 1):
        t[(m - r, 0, (r,))] = Scalar.const(binom(m + 1, r + 1))
    return WeylTensorElement(t)


def phi_homomorphism_check(i_max: int, phi_fn=phi) -> list[tuple]:
    """(i, j, residual) for every -1 <= i < j <= i_max with
    [phi(d_i), phi(d_j)] != (j - i) phi(d_{i+j})."""
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    out = []
    for i in range(-1, i_max + 1):
        for j in range(i + 1, i_max + 1):
            a, b = phi_fn(i), phi_fn(j)
            res = a * b - b * a - (j - i) * phi_fn(i + j)
            if res:
                out.append((i, j, res))
    return out


# D-modules ----------------------------------------------------------------

@dataclass
class DModule:
    """Truncated D-module with basis x^e, e in ``exps``.  ``edge`` is the
    artificial truncation edge ('top' or 'bottom')."""
    kind: str
    exps: list
    edge: str

    @classmethod
    def poly(cls, a: int) -> "DModule":
        return cls("poly", list(range(0, a + 1)), "top")

    @classmethod
    def s(cls, a: int) -> "DModule":
        """S = C[x, x^-1]/C[x] with basis x^-1 .. x^-a."""
        return cls("s", list(range(-a, 0)), "bottom")

    def x(self, e):
        """x . x^e as (coeff, exponent), {} for zero, None if undefined."""
        n = e + 1
        if self.kind == "s" and n >= 0:
            return {}
        if n > max(self.exps):
            return None
        return {n: ONE}

    def d(self, e):
        if e == 0 and self.kind == "poly":
            return {}
        n = e - 1
        if n < min(self.exps):
            return None
        return {n: Scalar.const(e)}

    def apply(self, a: int, b: int, e):
        """x^a d^b . x^e."""
        vec = {e: ONE}
        for op, times in ((self.d, b), (self.x, a)):
            for _ in range(times):
                new: dict = {}
                for k, c in vec.items():
                    img = op(k)
                    if img is None:
                        return None
                    for t, x in img.items():
                        new[t] = new.get(t, ZERO) + c * x
                vec = {t: c for t, c in new.items() if c}
        return vec

    def distance_to_edge(self, e) -> int:
        return max(self.exps) - e if self.edge == "top" else e - min(self.exps)

    def label(self, e) -> str:
        return f"x^{e}"


# b-modules ----------------------------------------------------------------

class BModule:
    """Module over b = span{d_0, d_1, ...} with d_i = 0 for i > l.

    ``rule(i, id)`` returns the image dict of d_i (0 <= i <= l) or None when
    it leaves the truncation.  ``edges(id)`` is the distance to the nearest
    truncation edge (None if the basis is untruncated)."""

    def __init__(self, name, l, ids, rule, edges=None, validate=True):
        self.name, self.l, self.ids = name, l, list(ids)
        self._rule = rule
        self._edges = edges
        if validate:
            bad = self.bracket_residuals()
            if bad:
                i, j, v, res = bad[0]
                raise ValueError(f"{name}: [d_{i}, d_{j}] relation fails on basis {v}: residual {res}")

    def act(self, i: int, vid):
        if i > self.l:
            return {}
        return self._rule(i, vid)

    def act_vec(self, i: int, vec: dict):
        out: dict = {}
        for v, c in vec.items():
            img = self.act(i, v)
            if img is None:
                return None
            for t, x in img.items():
                out[t] = out.get(t, ZERO) + c * x
        return {t: c for t, c in out.items() if c}

    def apply_word(self, word, vid):
        vec = {vid: ONE}
        for i in reversed(word):
            vec = self.act_vec(i, vec)
            if vec is None:
                return None
        return vec

    def distance_to_edge(self, vid):
        return None if self._edges is None else self._edges(vid)

    def bracket_residuals(self) -> list:
        out = []
        for v in self.ids:
            for i in range(0, self.l + 1):
                for j in range(i + 1, self.l + 1):
                    a = self.apply_word((i, j), v)
                    b = self.apply_word((j, i), v)
                    c = self.act_vec(i + j, {v: ONE}) if i + j <= self.l else {}
                    if a is None or b is None or c is None:
                        continue
                    res = vec_add(vec_add(a, b, -1), c, -(j - i))
                    if res:
                        out.append((i, j, v, res))
        return out

    # constructors
    @classmethod
    def one_dim(cls, lam) -> "BModule":
        lam = as_scalar(lam)
        return cls(f"C_{format_scalar(lam)}", 0, [0],
                   lambda i, v: ({0: lam} if lam else {}) if i == 0 else {})

    @classmethod
    def finite(cls, mats: dict, l: int, name="V") -> "BModule":
        """``mats[i]`` is an n x n matrix; column c is the image of e_c."""
        n = len(mats[0]) if 0 in mats else len(next(iter(mats.values())))
        m = {i: [[as_scalar(x) for x in row] for row in rows] for i, rows in mats.items()}
        for i in range(l + 1):
            if i not in m:
                raise ValueError(f"missing matrix for d{i}")
            if len(m[i]) != n or any(len(r) != n for r in m[i]):
                raise ValueError(f"d{i} must be {n} x {n}")

        def rule(i, c):
            return {r: m[i][r][c] for r in range(n) if m[i][r][c]}

        return cls(name, l, range(n), rule)

    @classmethod
    def band(cls, width: int, l: int, ops: dict, name="V") -> "BModule":
        """Basis e_n, |n| <= width; ``ops[i]`` is a list of (shift, coeff)
        with coeff a Scalar in L (L = n): d_i e_n = sum coeff(n) e_{n+shift}."""
        ops = {i: [(s, as_scalar(c)) for s, c in terms] for i, terms in ops.items()}

        def rule(i, n):
            out = {}
            for s, c in ops.get(i, []):
                val = c(n) if not c.is_constant() else c
                if not val:
                    continue
                if abs(n + s) > width:
                    return None
                out[n + s] = out.get(n + s, ZERO) + val
            return {t: x for t, x in out.items() if x}

        return cls(name, l, range(-width, width + 1), rule, lambda n: width - abs(n))

    @classmethod
    def whittaker_band(cls, width: int) -> "BModule":
        """C[s, s^-1] with d_0 = s d/ds + 1/2 + s^-1, d_1 = s: simple, d_1 injective."""
        half = Scalar.const(1) / 2
        return cls.band(width, 1, {0: [(0, parse_scalar("L") + half), (-1, ONE)],
                                   1: [(1, ONE)]}, name="V_whit")

    @classmethod
    def laurent_band(cls, width: int) -> "BModule":
        """C[s, s^-1] with d_0 = s d/ds + 1/2, d_1 = s (not simple: s^k C[s] is invariant)."""
        half = Scalar.const(1) / 2
        return cls.band(width, 1, {0: [(0, parse_scalar("L") + half)], 1: [(1, ONE)]},
                        name="V_laurent")


def parse_bmodule(text: str) -> BModule:
    """``bmod dim <n> l <k>`` then ``d<i>`` and n matrix rows per generator, or
    ``bmod band <B> l <k>`` then lines ``d<i> shift <s> [coeff]`` where the
    coefficient (a scalar literal in L) may also sit on the following line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty b-module file")
    head = lines[0].split()
    if len(head) != 5 or head[0] != "bmod" or head[3] != "l" or head[1] not in ("dim", "band"):
        raise ValueError("header must be 'bmod dim <n> l <k>' or 'bmod band <B> l <k>'")
    size, l = int(head[2]), int(head[4])
    body = lines[1:]
    if head[1] == "dim":
        mats, pos = {}, 0
        while pos < len(body):
            tag = body[pos]
            if not (tag.startswith("d") and tag[1:].isdigit()):
                raise ValueError(f"expected 'd<i>', got {tag!r}")
            rows = [[parse_scalar(x) for x in r.split()] for r in body[pos + 1: pos + 1 + size]]
            if len(rows) != size:
                raise ValueError(f"{tag}: expected {size} rows")
            mats[int(tag[1:])] = rows
            pos += 1 + size
        return BModule.finite(mats, l, name="V")
    ops: dict = {}
    pos = 0
    while pos < len(body):
        parts = body[pos].split(None, 3)
        if len(parts) < 3 or not parts[0].startswith("d") or parts[1] != "shift":
            raise ValueError(f"expected 'd<i> shift <s> [coeff]', got {body[pos]!r}")
        i, s = int(parts[0][1:]), int(parts[2])
        if len(parts) == 4:
            coeff = parse_scalar(parts[3])
            pos += 1
        else:
            if pos + 1 >= len(body):
                raise ValueError(f"{parts[0]}: missing coefficient line")
            coeff = parse_scalar(body[pos + 1])
            pos += 2
        ops.setdefault(i, []).append((s, coeff))
    return BModule.band(size, l, ops, name="V")


# tensor modules -------------------------------------------------------------

class TensorModule:
    """T(P, V) on basis (exponent, v-id); d_k acts through phi(d_k)."""

    def __init__(self, p: DModule, v: BModule, gen: int = 4):
        self.p, self.v, self.gen = p, v, gen
        self.name = f"T({p.kind},{v.name})"
        self.basis = [(e, w) for e in p.exps for w in v.ids]
        self._phi = {k: phi(k) for k in range(-1, gen + 1)}
        self._cache: dict = {}
        self.residuals: list = []

    def act_basis(self, k: int, b):
        key = (k, b)
        if key in self._cache:
            return self._cache[key]
        e, w = b
        out: dict = {}
        res = out
        for (a, bb, mono), c in self._phi[k].terms.items():
            pv = self.p.apply(a, bb, e)
            if pv is None:
                res = None
                break
            if not pv:
                continue
            vv = self.v.apply_word(mono, w)
            if vv is None:
                res = None
                break
            for pe, px in pv.items():
                for vw, vx in vv.items():
                    nv = out.get((pe, vw), ZERO) + c * px * vx
                    if nv:
                        out[(pe, vw)] = nv
                    else:
                        out.pop((pe, vw), None)
        self._cache[key] = res
        return res

    def defined(self, k, b) -> bool:
        return self.act_basis(k, b) is not None

    def act(self, k: int, vec: dict):
        out: dict = {}
        for b, c in vec.items():
            img = self.act_basis(k, b)
            if img is None:
                return None
            out = vec_add(out, img, c)
        return out

    def d0_spectrum(self):
        """Set of d_0 eigenvalues if d_0 is diagonal on the basis, else None."""
        spec = set()
        for b in self.basis:
            img = self.act_basis(0, b)
            if img is None:
                continue
            if set(img) - {b}:
                return None
            spec.add(img.get(b, ZERO))
        return spec

    def interior(self, margin: int) -> list:
        out = []
        for (e, w) in self.basis:
            if self.p.distance_to_edge(e) < margin:
                continue
            dv = self.v.distance_to_edge(w)
            if dv is not None and dv < margin:
                continue
            out.append((e, w))
        return out


def build_tensor_module(p: DModule, v: BModule, gen: int = 4, check: bool = True) -> TensorModule:
    t = TensorModule(p, v, gen)
    if not t.interior(1):
        raise ValueError("window too small: no interior basis vectors")
    if check:
        t.residuals = check_module_axioms(t)
    return t


@dataclass
class ProbeReport:
    interior: int
    reached: int
    missing: list = field(default_factory=list)

    @property
    def full(self) -> bool:
        return self.interior > 0 and self.reached == self.interior

    def __str__(self):
        if self.full:
            return (f"reached all {self.interior} interior cells: "
                    "no proper invariant subspace found in window")
        return f"reached {self.reached}/{self.interior} interior cells; missing e.g. {self.missing[:4]}"


def simplicity_probe(t: TensorModule, seed, budget: int = 100000, margin: int = 2) -> ProbeReport:
    """Submodule generated by ``seed`` (a basis id or vector), restricted to
    actions defined in the window; reports which interior cells it contains."""
    vec = {seed: ONE} if not isinstance(seed, dict) else seed
    span, _ = span_closure(t.basis, t.act, range(-1, min(t.gen, 2) + 1), [vec], budget, t.defined)
    order = {b: i for i, b in enumerate(t.basis)}
    cells = t.interior(margin)
    missing = [c for c in cells if not span.contains({order[c]: ONE})]
    return ProbeReport(len(cells), len(cells) - len(missing), missing)



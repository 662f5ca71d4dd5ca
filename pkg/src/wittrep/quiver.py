"""Ext-quivers of blocks of category O and their representation type.

Arrows follow the convention mu -> lam for Ext^1(L(mu), L(lam)) != 0.  The
underlying graph of a quiver counts one undirected edge per arrow; its type
is read off from the definiteness of the Tits matrix 2I - A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .ext import ExtProblem, ModuleSpec, ext_dim, ext_simple_closed
from .kernel import Matrix, Scalar, as_scalar, definiteness, format_scalar

__all__ = ["QuiverGraph", "GraphClass", "build_block_quiver", "components",
           "classify_underlying_graph", "wild_witness", "no_concatenation", "emit_dot",
           "emit_tsv", "catalog"]


@dataclass
class QuiverGraph:
    vertices: list
    arrows: dict = field(default_factory=dict)    # (source, target) -> multiplicity

    def __post_init__(self):
        self.vertices = [as_scalar(v) for v in self.vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be distinct")
        for (s, t), m in self.arrows.items():
            if m < 1 or s not in self.vertices or t not in self.vertices:
                raise ValueError(f"bad arrow {s}->{t} x{m}")

    def arrow_list(self):
        pos = {v: n for n, v in enumerate(self.vertices)}
        return sorted(self.arrows.items(), key=lambda a: (pos[a[0][0]], pos[a[0][1]]))

    def subquiver(self, verts, arrows=None) -> "QuiverGraph":
        vs = [v for v in self.vertices if v in set(verts)]
        keep = set(vs)
        if arrows is None:
            arr = {a: m for a, m in self.arrows.items() if a[0] in keep and a[1] in keep}
        else:
            arr = {a: self.arrows[a] for a in arrows}
        return QuiverGraph(vs, arr)

    def undirected(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        pos = {v: n for n, v in enumerate(self.vertices)}
        for (s, t), m in self.arrow_list():
            for _ in range(m):
                g.add_edge(pos[s], pos[t])
        return g


@dataclass(frozen=True)
class GraphClass:
    tag: str            # finite | affine | wild
    name: str | None = None

    def __str__(self):
        return self.tag if self.name is None else f"{self.tag} {self.name}"


def build_block_quiver(base, half_width: int, mode: str = "closed", window: int = 12,
                       max_gap: int = 6) -> QuiverGraph:
    """Ext-quiver of simples L(base + n), |n| <= half_width.  In solver mode
    only pairs with |lam - mu| <= max_gap are solved (no closed-form entry
    has a larger gap)."""
    base = as_scalar(base)
    if mode not in ("closed", "solver"):
        raise ValueError("mode must be 'closed' or 'solver'")
    if mode == "solver" and not base.is_constant():
        raise ValueError("solver mode needs a numeric base")
    verts = [base + n for n in range(-half_width, half_width + 1)]
    arrows = {}
    for mu in verts:
        for lam in verts:
            if mu == lam:
                continue
            if mode == "closed":
                m = ext_simple_closed(mu, lam)
            else:
                if abs(int(lam - mu)) > max_gap:
                    continue
                res = ext_dim(ExtProblem(ModuleSpec("simple", mu), ModuleSpec("simple", lam),
                                         weight_only=True, window=window))
                if not res.stabilized:
                    raise ArithmeticError(f"solver did not stabilize at ({mu}, {lam})")
                m = res.ext_dim
            if m:
                arrows[(mu, lam)] = m
    return QuiverGraph(verts, arrows)


def components(q: QuiverGraph) -> list[list]:
    g = q.undirected()
    comps = [sorted(c) for c in nx.connected_components(g)]
    comps.sort()
    return [[q.vertices[i] for i in c] for c in comps]


def tits_matrix(q: QuiverGraph) -> Matrix:
    n = len(q.vertices)
    pos = {v: k for k, v in enumerate(q.vertices)}
    a = [[0] * n for _ in range(n)]
    for (s, t), m in q.arrows.items():
        a[pos[s]][pos[t]] += m
        a[pos[t]][pos[s]] += m
    return Matrix.from_rows([[2 * (i == j) - a[i][j] for j in range(n)] for i in range(n)])


# catalog ------------------------------------------------------------------

def _path(n):
    return [(i, i + 1) for i in range(n - 1)]


def _d(n):              # D_n: path 0..n-2 plus extra leaf on vertex n-3
    return _path(n - 1) + [(n - 3, n - 1)]


def _e(n):              # E_n: path 0..n-2 plus leaf on vertex 2
    return _path(n - 1) + [(2, n - 1)]


@lru_cache(maxsize=None)
def catalog(max_vertices: int = 10) -> tuple:
    """(name, tag, vertex count, edge list) for every Dynkin and affine
    diagram with at most ``max_vertices`` vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        out.append((f"A{n}", "finite", n, tuple(_path(n))))
    for n in range(4, max_vertices + 1):
        out.append((f"D{n}", "finite", n, tuple(_d(n))))
    for n in (6, 7, 8):
        out.append((f"E{n}", "finite", n, tuple(_e(n))))
    out.append(("~A1", "affine", 2, ((0, 1), (0, 1))))
    for n in range(2, max_vertices):
        out.append((f"~A{n}", "affine", n + 1, tuple(_path(n + 1) + [(n, 0)])))
    for n in range(4, max_vertices):
        # D_n affine: D_{n+1} with an extra leaf on vertex 1
        out.append((f"~D{n}", "affine", n + 1, tuple(_d(n) + [(1, n)])))
    out.append(("~E6", "affine", 7, ((0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6))))
    out.append(("~E7", "affine", 8, tuple(_path(7) + [(3, 7)])))
    out.append(("~E8", "affine", 9, tuple(_path(8) + [(2, 8)])))
    return tuple(out)


def _catalog_graph(n, edges):
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def classify_underlying_graph(q: QuiverGraph, name: bool = True) -> GraphClass:
    if not q.vertices:
        raise ValueError("empty quiver")
    if len(components(q)) != 1:
        raise ValueError("classification needs a connected underlying graph")
    kind = definiteness(tits_matrix(q)).kind
    tag = {"positive_definite": "finite", "positive_semidefinite": "affine",
           "indefinite": "wild"}[kind]
    if tag == "wild" or not name:
        return GraphClass(tag)
    g = q.undirected()
    hits = [nm for nm, t, n, edges in catalog() if t == tag and n == len(q.vertices)
            and nx.is_isomorphic(g, _catalog_graph(n, edges))]
    return GraphClass(tag, hits[0] if len(hits) == 1 else None)


def no_concatenation(q: QuiverGraph) -> bool:
    """No target of an arrow is the source of another."""
    srcs = {s for s, _ in q.arrows}
    tgts = {t for _, t in q.arrows}
    return not (srcs & tgts)


def _pattern(q: QuiverGraph, mu):
    """The five-arrow pattern at mu, if all its arrows are present."""
    want = [(mu - 3, mu), (mu - 3, mu - 1), (mu - 4, mu), (mu - 4, mu - 1), (mu - 4, mu - 2)]
    if all(a in q.arrows for a in want):
        return q.subquiver([mu - 4, mu - 3, mu - 2, mu - 1, mu], want)
    return None


def _is_wild_witness(sub: QuiverGraph) -> bool:
    return (bool(sub.arrows) and no_concatenation(sub) and len(components(sub)) == 1
            and classify_underlying_graph(sub, name=False).tag == "wild")


def wild_witness(q: QuiverGraph, mu=None, max_size: int = 8):
    """A subquiver without composable arrows whose underlying graph is wild.

    The five-vertex pattern on mu, ..., mu-4 is tried first (at ``mu`` if
    given, otherwise at every vertex in order); then vertex subsets up to
    ``max_size`` with every split into sources and targets.  A subquiver
    keeps all arrows from its sources to its targets, so it never contains
    two composable arrows."""
    order = list(q.vertices)
    if mu is not None:
        mu = as_scalar(mu)
        order = [mu] + [v for v in order if v != mu]
    for m in order:
        sub = _pattern(q, m)
        if sub is not None and _is_wild_witness(sub):
            return sub
    for size in range(2, min(max_size, len(q.vertices)) + 1):
        for verts in itertools.combinations(q.vertices, size):
            inside = [(a, m) for a, m in q.arrows.items() if a[0] in verts and a[1] in verts]
            if len(inside) < size - 1:
                continue
            for mask in range(1, 2 ** size - 1):
                srcs = {v for k, v in enumerate(verts) if mask >> k & 1}
                arr = [a for a, _ in inside if a[0] in srcs and a[1] not in srcs]
                if len(arr) < size - 1:
                    continue
                sub = q.subquiver(verts, arr)
                if _is_wild_witness(sub):
                    return sub
    return None


def _lit(v: Scalar) -> str:
    return format_scalar(v)


def emit_dot(q: QuiverGraph, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for v in q.vertices:
        lines.append(f'  "{_lit(v)}";')
    for (s, t), m in q.arrow_list():
        lines.append(f'  "{_lit(s)}" -> "{_lit(t)}" [multiplicity={m}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_tsv(q: QuiverGraph) -> str:
    rows = ["source\ttarget\tmultiplicity"]
    rows += [f"{_lit(s)}\t{_lit(t)}\t{m}" for (s, t), m in q.arrow_list()]
    return "\n".join(rows) + "\n"

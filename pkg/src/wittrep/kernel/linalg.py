"""Exact linear algebra over Q(sqrt 19) (sparse Gaussian elimination) and a
division-free variant over Q(sqrt 19)[L] for generic-rank questions.

Rows are ``dict[col, value]`` with no stored zeros.  Field values are
``Fraction`` or ``QuadRat``; :func:`to_field` converts constant scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import QuadRat, Scalar, as_scalar

__all__ = ["to_field", "Echelon", "Matrix", "nullspace", "rank",
           "Definiteness", "definiteness", "PolyEchelon", "poly_rank"]


def to_field(x):
    """Constant scalar -> Fraction (rational) or QuadRat."""
    if isinstance(x, (Fraction, int)):
        return Fraction(x)
    if isinstance(x, Scalar):
        x = x.constant()
    if isinstance(x, QuadRat):
        return x.a if not x.b else x
    raise TypeError(f"cannot use {x!r} as a field element")


def _axpy(row, f, prow):
    """row -= f * prow, in place."""
    for k, v in prow.items():
        nv = row.get(k, 0) - f * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


class Echelon:
    """Incremental row echelon form.  Pivot rows are normalized (pivot = 1)
    and have no entries left of their pivot column."""

    def __init__(self):
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        piv = self.pivots
        while True:
            hit = [c for c in row if c in piv]
            if not hit:
                return row
            c = min(hit)
            _axpy(row, row[c], piv[c])

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it was independent."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        inv = Fraction(1) / r[c] if not isinstance(r[c], QuadRat) else r[c].inverse()
        self.pivots[c] = {k: v * inv for k, v in r.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def rref(self) -> dict:
        """Fully reduced pivot rows (each pivot column zero in other rows)."""
        out = {}
        for c in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[c])
            for k in [k for k in row if k != c and k in out]:
                if k in row:
                    _axpy(row, row[k], out[k])
            out[c] = row
        return out

    def nullspace(self, ncols: int) -> list[dict]:
        red = self.rref()
        free = [c for c in range(ncols) if c not in red]
        basis = []
        for f in free:
            v = {f: Fraction(1)}
            for p, row in red.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def nullspace(rows, ncols: int) -> list[dict]:
    """Right nullspace of a sparse matrix given as a list of row dicts."""
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.nullspace(ncols)


def rank(rows) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return len(e)


class Matrix:
    """Dense matrix of constants over Q(sqrt 19), row-major."""

    def __init__(self, rows: int, cols: int, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entries length must be rows*cols")
        self.rows, self.cols = rows, cols
        self.entries = [to_field(as_scalar(e)) if not isinstance(e, (Fraction, QuadRat)) else e
                        for e in entries]

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [x for r in rows for x in r])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_dicts(self):
        out = []
        for i in range(self.rows):
            out.append({j: self[i, j] for j in range(self.cols) if self[i, j]})
        return out

    def nullspace(self) -> list[list]:
        vs = nullspace(self.row_dicts(), self.cols)
        return [[v.get(j, Fraction(0)) for j in range(self.cols)] for v in vs]

    def rank(self) -> int:
        return rank(self.row_dicts())

    def mul_vec(self, v):
        return [sum((self[i, j] * v[j] for j in range(self.cols)), Fraction(0))
                for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))


@dataclass(frozen=True)
class Definiteness:
    kind: str          # "positive_definite" | "positive_semidefinite" | "indefinite"
    corank: int = 0

    def __str__(self):
        if self.kind == "positive_semidefinite":
            return f"positive_semidefinite(corank {self.corank})"
        return self.kind


def definiteness(m: Matrix) -> Definiteness:
    """Exact classification of a symmetric rational matrix by symmetric
    Gaussian elimination (LDL^T with diagonal pivoting)."""
    if not m.is_symmetric():
        raise ValueError("definiteness requires a symmetric matrix")
    n = m.rows
    a = [[Fraction(m[i, j]) if not isinstance(m[i, j], QuadRat) else m[i, j]
          for j in range(n)] for i in range(n)]
    live = list(range(n))
    corank = 0
    while live:
        diag = [(i, a[i][i]) for i in live]
        if any(_neg(d) for _, d in diag):
            return Definiteness("indefinite")
        pos = [i for i, d in diag if d]
        if not pos:
            # all remaining diagonal entries vanish: PSD forces the block to be zero
            if any(a[i][j] for i in live for j in live):
                return Definiteness("indefinite")
            corank += len(live)
            break
        p = pos[0]
        live.remove(p)
        piv = a[p][p]
        for i in live:
            if not a[i][p]:
                continue
            f = a[i][p] / piv
            for j in live:
                a[i][j] = a[i][j] - f * a[p][j]
    if corank == 0:
        return Definiteness("positive_definite")
    return Definiteness("positive_semidefinite", corank)


def _neg(x) -> bool:
    if isinstance(x, QuadRat):
        return x.sign() < 0
    return x < 0


class PolyEchelon:
    """Division-free echelon over Q(sqrt 19)[L]; ranks are generic ranks
    (over the fraction field).  Rows are ``dict[col, Scalar]``."""

    def __init__(self):
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: as_scalar(v) for k, v in row.items() if v}
        while True:
            hit = [c for c in row if c in self.pivots]
            if not hit:
                return row
            c = min(hit)
            prow = self.pivots[c]
            p, f = prow[c], row[c]
            if p.is_constant():
                g = f / p
                for k, v in prow.items():
                    nv = row.get(k, 0) - g * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                new = {}
                for k in set(row) | set(prow):
                    nv = p * row.get(k, 0) - f * prow.get(k, 0)
                    if nv:
                        new[k] = nv
                row = new
            row.pop(c, None)

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        lead = r[c]
        if lead.is_constant():
            r = {k: v / lead for k, v in r.items()}
        self.pivots[c] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def poly_rank(rows) -> int:
    e = PolyEchelon()
    for r in rows:
        e.add(r)
    return len(e)

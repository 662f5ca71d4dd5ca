"""The Witt algebra W = span{d_i : i >= -1}, [d_i, d_j] = (j - i) d_{i+j},
and PBW normal forms in U(W).

A PBW monomial is a nondecreasing tuple of generator indices, so
``(-1, -1, 0, 2)`` is d_{-1}^2 d_0 d_2.  d_{-1} sorts first, which makes
reduction into the Whittaker module Q'_1 = v_1 . U(W) (with
v_1 . d_{-1} = v_1) a matter of dropping the leading -1 entries.
"""

from __future__ import annotations

import random
import re
from functools import lru_cache

from .kernel import ONE, ZERO, as_scalar, format_scalar, parse_scalar

__all__ = ["bracket", "UEAElement", "d", "pbw_normal_form", "casimir",
           "whittaker_reduce", "act", "parse_uea", "WindowError"]


class WindowError(ArithmeticError):
    """An action would leave the truncation window of a module."""


def bracket(i: int, j: int) -> tuple[int, int]:
    """[d_i, d_j] = coeff * d_index, returned as (coeff, index)."""
    return j - i, i + j


@lru_cache(maxsize=None)
def _normal_word(word: tuple) -> tuple:
    """Normal form of a word of generators as ((monomial, int coeff), ...).
    Rewrites the leftmost descent d_i d_j (i > j) to d_j d_i + (j-i) d_{i+j}."""
    for pos in range(len(word) - 1):
        i, j = word[pos], word[pos + 1]
        if i > j:
            out: dict = {}
            for m, c in _normal_word(word[:pos] + (j, i) + word[pos + 2:]):
                out[m] = out.get(m, 0) + c
            if j != i:
                for m, c in _normal_word(word[:pos] + (i + j,) + word[pos + 2:]):
                    out[m] = out.get(m, 0) + (j - i) * c
            return tuple((m, c) for m, c in sorted(out.items()) if c)
    return ((word, 1),)


def _normal_word_random(word: tuple, rng: random.Random) -> dict:
    """Same rewriting, picking a random descent each time (uncached); used to
    test that the normal form does not depend on the strategy."""
    descents = [p for p in range(len(word) - 1) if word[p] > word[p + 1]]
    if not descents:
        return {word: 1}
    pos = rng.choice(descents)
    i, j = word[pos], word[pos + 1]
    out = dict(_normal_word_random(word[:pos] + (j, i) + word[pos + 2:], rng))
    for m, c in _normal_word_random(word[:pos] + (i + j,) + word[pos + 2:], rng).items():
        out[m] = out.get(m, 0) + (j - i) * c
    return {m: c for m, c in out.items() if c}


class UEAElement:
    """Element of U(W) in PBW normal form: ``terms`` maps monomials to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for m, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                t[tuple(m)] = c
        self.terms = t

    @classmethod
    def from_word(cls, word, coeff=ONE) -> "UEAElement":
        return pbw_normal_form(word, coeff)

    @classmethod
    def scalar(cls, c) -> "UEAElement":
        return cls({(): c})

    def __add__(self, other):
        other = _coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, ZERO) + c
        return UEAElement(t)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UEAElement):
            s = as_scalar(other)
            return UEAElement({m: c * s for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, k in _normal_word(m1 + m2):
                    out[m] = out.get(m, ZERO) + c * k
        return UEAElement(out)

    def __rmul__(self, other):
        s = as_scalar(other)
        return UEAElement({m: s * c for m, c in self.terms.items()})

    def __pow__(self, n: int):
        out = UEAElement.scalar(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            other = _coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def has_d_minus_one(self) -> bool:
        return any(m and m[0] == -1 for m in self.terms)

    def __str__(self):
        return format_uea(self)

    def __repr__(self):
        return f"UEAElement({format_uea(self)})"


def _coerce(x) -> UEAElement:
    if isinstance(x, UEAElement):
        return x
    return UEAElement.scalar(x)


def d(i: int) -> UEAElement:
    """The generator d_i."""
    if i < -1:
        raise ValueError(f"d_{i} is not in the Witt algebra (index must be >= -1)")
    return UEAElement({(i,): ONE})


def pbw_normal_form(word, coeff=ONE, rng: random.Random | None = None) -> UEAElement:
    """Normal form of ``coeff * d_{w0} d_{w1} ...``.  With ``rng`` the rewrite
    order is randomized (for confluence testing)."""
    word = tuple(word)
    if any(i < -1 for i in word):
        raise ValueError("generator indices must be >= -1")
    coeff = as_scalar(coeff)
    if rng is None:
        terms = {m: coeff * c for m, c in _normal_word(word)}
    else:
        terms = {m: coeff * c for m, c in _normal_word_random(word, rng).items()}
    return UEAElement(terms)


def casimir() -> UEAElement:
    """z = -d_1 d_{-1} + d_0^2 - d_0, the sl_2 Casimir, in normal form."""
    return -pbw_normal_form((1, -1)) + pbw_normal_form((0, 0)) - d(0)


def whittaker_reduce(u: UEAElement) -> dict:
    """Coordinates of v_1 . u in Q'_1 over the PBW monomials of U(b)."""
    out: dict = {}
    for m, c in u.terms.items():
        k = 0
        while k < len(m) and m[k] == -1:
            k += 1
        key = m[k:]
        out[key] = out.get(key, ZERO) + c
    return {m: c for m, c in out.items() if c}


def act(u: UEAElement, module, v: dict) -> dict:
    """Apply u to the vector v of ``module``; generators act right to left.
    Raises :class:`WindowError` when an intermediate leaves the window."""
    out: dict = {}
    for m, c in u.terms.items():
        w = dict(v)
        for k in reversed(m):
            nw = module.act(k, w)
            if nw is None:
                raise WindowError(_overflow_msg(module, k, w))
            w = nw
        for b, x in w.items():
            nv = out.get(b, ZERO) + c * x
            if nv:
                out[b] = nv
            else:
                out.pop(b, None)
    return out


def _overflow_msg(module, k, w):
    ids = [b for b in w if not module.defined(k, b)]
    where = ids[0] if ids else next(iter(w), None)
    try:
        wt = format_scalar(module.weight(where))
        return f"d_{k} applied at weight {wt} (basis {where}) leaves the window of {module.name}"
    except Exception:
        return f"d_{k} applied to basis {where} leaves the window of {module.name}"


def format_monomial(m: tuple) -> str:
    if not m:
        return "1"
    return "*".join(f"d({i})" for i in m)


def format_uea(u: UEAElement) -> str:
    if not u.terms:
        return "0"
    parts = []
    for m in sorted(u.terms, key=lambda m: (len(m), m)):
        c = u.terms[m]
        cs = format_scalar(c)
        if not m:
            s = cs if c.is_constant() else f"({cs})"
        elif c == 1:
            s = format_monomial(m)
        elif c == -1:
            s = "-" + format_monomial(m)
        elif c.is_constant() and not (c.constant().a and c.constant().b):
            s = f"{cs}*{format_monomial(m)}"
        else:
            s = f"({cs})*{format_monomial(m)}"
        parts.append(s)
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


_GEN = re.compile(r"d\((-?\d+)\)")


def _split_top(text: str, seps: str) -> list[tuple[str, str]]:
    """Split at top-level separators (outside parentheses); keeps the sign."""
    out, depth, cur, sign = [], 0, "", "+"
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in seps:
            # '-' right after '*' or at the start belongs to a factor
            prev = text[:i].rstrip()
            if not prev or prev.endswith(("*", "^", "/")):
                cur += ch
                continue
            out.append((sign, cur))
            sign, cur = ch, ""
            continue
        cur += ch
    out.append((sign, cur))
    return out


def parse_uea(text: str) -> UEAElement:
    """Parse e.g. ``-1*d(1)*d(-1)+d(0)*d(0)-d(0)``; compound scalar factors
    go in parentheses: ``(1/2+r19)*d(2)``."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty element")
    total = UEAElement()
    for sign, term in _split_top(text, "+-"):
        if not term:
            raise ValueError(f"malformed element {text!r}")
        coeff, word = ONE, []
        for fac in _split_factors(term):
            m = _GEN.fullmatch(fac)
            if m:
                word.append(int(m.group(1)))
            elif fac.startswith("-") and _GEN.fullmatch(fac[1:]):
                coeff = -coeff
                word.append(int(fac[2:-1]))
            else:
                coeff = coeff * parse_scalar(fac)
        term_el = pbw_normal_form(word, coeff)
        total = total + term_el if sign == "+" else total - term_el
    return total


def _split_factors(term: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out

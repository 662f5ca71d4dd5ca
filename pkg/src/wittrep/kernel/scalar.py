"""Exact scalars: the field Q(sqrt 19) and polynomials over it in one
indeterminate ``L`` (the formal weight parameter lambda).

Values are immutable and hashable.  ``QuadRat`` is a field; ``Scalar`` is a
ring in which division is only allowed by nonzero constants.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["QuadRat", "Scalar", "L", "ONE", "ZERO", "SQRT19", "normalize",
           "parse_scalar", "as_scalar"]

_D = 19


class QuadRat:
    """``a + b*sqrt(19)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        if isinstance(a, QuadRat):
            a, b = a.a, a.b + Fraction(b)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @staticmethod
    def _co(other):
        if isinstance(other, QuadRat):
            return other
        if isinstance(other, (int, Rational)):
            return QuadRat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadRat(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadRat(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.b and not o.b:
            return QuadRat(self.a * o.a)
        return QuadRat(self.a * o.a + _D * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadRat(-self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - _D * self.b * self.b

    def inverse(self) -> "QuadRat":
        if not self:
            raise ZeroDivisionError("QuadRat division by zero")
        n = self.norm()
        return QuadRat(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("QuadRat division by zero")
            return QuadRat(self.a / o.a, self.b / o.a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadRat(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return not self.b

    def is_integer(self) -> bool:
        return not self.b and self.a.denominator == 1

    def sign(self) -> int:
        """Sign as a real number (sqrt 19 taken positive)."""
        a, b = self.a, self.b
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # a and b of opposite sign: compare a^2 with 19 b^2
        big_a = a * a > _D * b * b
        if big_a:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __float__(self):
        return float(self.a) + float(self.b) * _D ** 0.5

    def __str__(self):
        return _fmt_quad(self)

    def __repr__(self):
        return f"QuadRat({_fmt_quad(self)})"


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _fmt_quad(q: QuadRat) -> str:
    if not q.b:
        return _fmt_frac(q.a)
    if q.b == 1:
        rp = "r19"
    elif q.b == -1:
        rp = "-r19"
    else:
        rp = _fmt_frac(q.b) + "r19"
    if not q.a:
        return rp
    return _fmt_frac(q.a) + ("" if rp.startswith("-") else "+") + rp


_QZERO = QuadRat(0)


class Scalar:
    """Polynomial in ``L`` with :class:`QuadRat` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, QuadRat) else QuadRat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def const(cls, c) -> "Scalar":
        return cls((c,))

    @staticmethod
    def _co(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational, QuadRat)):
            return Scalar((other,))
        return NotImplemented

    @property
    def degree(self) -> float | int:
        """Degree in L; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> QuadRat:
        """The value of a degree <= 0 scalar; raises for symbolic ones."""
        if len(self.coeffs) > 1:
            raise ValueError(f"scalar {self} depends on L")
        return self.coeffs[0] if self.coeffs else _QZERO

    def is_rational(self) -> bool:
        return self.is_constant() and self.constant().is_rational()

    def is_integer(self) -> bool:
        return self.is_constant() and self.constant().is_integer()

    def __int__(self):
        c = self.constant()
        if not c.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(c.a)

    def __add__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return ZERO
        out = [_QZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.is_constant():
            raise ZeroDivisionError(f"division by the non-constant scalar {o}")
        c = o.constant()
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        inv = c.inverse()
        return Scalar([x * inv for x in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._co(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0]) if self.coeffs else 0
        return hash(self.coeffs)

    def __call__(self, value) -> "Scalar":
        """Evaluate at ``L = value`` (Horner)."""
        v = as_scalar(value)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * v + Scalar((c,))
        return out

    subs = __call__

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)})"


ZERO = Scalar()
ONE = Scalar((1,))
L = Scalar((0, 1))
SQRT19 = Scalar((QuadRat(0, 1),))


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar((x,))


def normalize(s) -> Scalar:
    """Canonical form; construction already normalizes, so this is idempotent coercion."""
    if isinstance(s, Scalar):
        return Scalar(s.coeffs)
    return as_scalar(s)


def format_scalar(s: Scalar) -> str:
    if not s.coeffs:
        return "0"
    parts = []
    for d in range(len(s.coeffs) - 1, -1, -1):
        c = s.coeffs[d]
        if not c:
            continue
        if d == 0:
            parts.append(_fmt_quad(c))
            continue
        mono = "L" if d == 1 else f"L^{d}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        elif c.a and c.b:
            parts.append(f"({_fmt_quad(c)})*{mono}")
        else:
            parts.append(f"{_fmt_quad(c)}*{mono}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(r19)|(L)|([-+*/^()]))")


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar literal {text!r} at position {pos}")
        num, r19, lam, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif r19:
            toks.append(("r19", None))
        elif lam:
            toks.append(("L", None))
        else:
            toks.append((op, None))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ValueError(f"unexpected end of scalar literal {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r} in scalar literal {self.text!r}")
        self.i += 1
        return tok

    def expr(self) -> Scalar:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        out = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self) -> Scalar:
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> Scalar:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            base = base ** self.take("num")[1]
        return base

    def atom(self) -> Scalar:
        kind = self.peek()
        if kind == "num":
            n = Fraction(self.take()[1])
            if self.peek() == "/":
                self.take()
                den = self.take("num")[1]
                if den == 0:
                    raise ValueError(f"zero denominator in {self.text!r}")
                n = n / den
            out = Scalar((n,))
            # juxtaposition: 1/2r19, 3L
            if self.peek() == "r19":
                self.take()
                out = out * SQRT19
            elif self.peek() == "L":
                out = out * self.atom()
            return out
        if kind == "r19":
            self.take()
            return SQRT19
        if kind == "L":
            self.take()
            if self.peek() == "^":
                self.take()
                return L ** self.take("num")[1]
            return L
        if kind == "(":
            self.take()
            out = self.expr()
            self.take(")")
            return out
        raise ValueError(f"unexpected token {kind!r} in scalar literal {self.text!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse the literal grammar, e.g. ``5/2+1/2r19`` or ``3*L^2-1``."""
    p = _Parser(text)
    out = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in scalar literal {text!r}")
    return out

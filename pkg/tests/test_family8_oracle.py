"""Independent check of family 8 with sympy: solve the cocycle condition for
the six-term falling-factorial ansatz from scratch and compare with the
constants used by ``family_data``.  The solution space is two-dimensional,
so the last two constants (5 and 2) are taken as given."""
import pytest

sp = pytest.importorskip("sympy")

from wittrep.standard import falling, family_data  # noqa: E402


def _ansatz_nullspace(sg):
    r19 = sp.sqrt(19)
    lam = (5 + sg * r19) / 2
    mu = lam - 6
    cs = sp.symbols("c0:6")

    def c(i, j):
        f = falling
        return (cs[0] * f(i + 1, 7) + cs[1] * f(i + 1, 6) * j + cs[2] * f(i + 1, 5) * f(j, 2)
                + cs[3] * f(i + 1, 4) * f(j, 3) + cs[4] * f(i + 1, 3) * f(j, 4)
                + cs[5] * f(i + 1, 2) * f(j, 5))

    eqs = []
    for a in range(-1, 9):
        for b in range(a + 1, 9):
            for j in range(0, 14):
                if b + j < 0 or a + b + j - 6 < 0:
                    continue
                # d_a d_b f'_j - d_b d_a f'_j - (b-a) d_{a+b} f'_j, coefficient of f_{a+b+j-6}
                e = ((j - (b + 1) * lam) * c(a, b + j) + c(b, j) * (b + j - 6 - (a + 1) * mu)
                     - (j - (a + 1) * lam) * c(b, a + j) - c(a, j) * (a + j - 6 - (b + 1) * mu)
                     - (b - a) * c(a + b, j))
                eqs.append(sp.expand(e))
    m = sp.Matrix([[e.coeff(x) for x in cs] for e in eqs])
    return m.nullspace(), r19


@pytest.mark.parametrize("sign,sg", [("plus", 1), ("minus", -1)])
def test_family8_forced_constants(sign, sg):
    ns, r19 = _ansatz_nullspace(sg)
    # two-dimensional: fixing the last two constants pins down the rest
    assert len(ns) == 2
    a, b = sp.symbols("a b")
    gen = [a * x + b * y for x, y in zip(ns[0], ns[1])]
    sol = sp.solve([gen[4] - 5, gen[5] - 2], [a, b], dict=True)[0]
    v = [sp.radsimp(x.subs(sol)) for x in gen]
    corrected = [-(22 + sg * 5 * r19) / 4, -(31 + sg * 7 * r19) / 2, -(25 + sg * 7 * r19) / 2, -5, 5, 2]
    printed = [-corrected[0]] + corrected[1:]
    assert all(sp.simplify(x - y) == 0 for x, y in zip(v, corrected))
    assert sp.simplify(v[0] - printed[0]) != 0

    # the library's corrected variant evaluates to the same polynomial
    _, _, _, corr = family_data(8, None, "corrected", sign)
    for i, j in ((1, 0), (3, 2), (5, 4)):
        f = falling
        want = sum(x * t for x, t in zip(v, (f(i + 1, 7), f(i + 1, 6) * j, f(i + 1, 5) * f(j, 2),
                                             f(i + 1, 4) * f(j, 3), f(i + 1, 3) * f(j, 4),
                                             f(i + 1, 2) * f(j, 5))))
        got = corr(i, j).constant()
        assert sp.simplify(sp.Rational(got.a) + sp.Rational(got.b) * r19 - want) == 0

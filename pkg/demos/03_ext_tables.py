"""
Ext^1 between simple and Verma modules
======================================

The closed-form tables against the truncated cocycle solver, row by row.
Both sides are exact; the solver result is trusted only when it stays put
from window 12 to window 14.
"""

from fractions import Fraction

from wittrep import ExtProblem, ModuleSpec, ext_dim
from wittrep.ext import ext_simple_closed, ext_verma_closed

print("mu      lam    simple(closed,solver)  verma(closed,solver)")
for lam in (Fraction(1, 3), 0, 2):
    for gap in range(1, 6):
        mu = lam - gap
        row = []
        for kind, closed in (("simple", ext_simple_closed), ("verma", ext_verma_closed)):
            r = ext_dim(ExtProblem(ModuleSpec(kind, mu), ModuleSpec(kind, lam), True))
            row.append(f"({closed(mu, lam)},{r.ext_dim}{'' if r.stabilized else '?'})")
        print(f"{str(mu):7} {str(lam):6} {row[0]:22} {row[1]}")

# the non-weight self-extension of F_1/3
f = ModuleSpec("ff", Fraction(1, 3))
print("Ext^1(F, F) all:", ext_dim(ExtProblem(f, f, weight_only=False)).ext_dim,
      " weight only:", ext_dim(ExtProblem(f, f, weight_only=True)).ext_dim)

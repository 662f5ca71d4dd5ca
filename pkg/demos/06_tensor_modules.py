"""
Tensor modules T(P, V)
======================

A Weyl-algebra module P and a module V over the Borel part combine through
phi(d_m) = x^{m+1} D (x) 1 + sum_r C(m+1, r+1) x^{m-r} (x) d_r.
"""

from fractions import Fraction

from wittrep import BModule, format_scalar, DModule, build_tensor_module, simplicity_probe
from wittrep.tensor import phi, phi_homomorphism_check

print("phi(d_2) =", phi(2))
print("phi respects brackets up to d_8:", phi_homomorphism_check(8) == [])

# S = C[x, x^-1]/C[x] with a one-dimensional V: a weight module
t = build_tensor_module(DModule.s(8), BModule.one_dim(Fraction(1, 3)))
spec = sorted(t.d0_spectrum(), key=lambda s: -float(s.constant()))
print("T(S, C_1/3) d0 eigenvalues:", " ".join(format_scalar(s) for s in spec))

# polynomials with the Laurent band twisted by s^-1: a simple V
for v in (BModule.whittaker_band(10), BModule.laurent_band(10)):
    tv = build_tensor_module(DModule.poly(10), v)
    print(f"{tv.name}: axioms {'ok' if not tv.residuals else 'FAIL'}; probe {simplicity_probe(tv, (0, 0))}")

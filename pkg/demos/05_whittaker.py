"""
H_1 and the functor Gamma
=========================

Gamma(M) = M / (d_{-1} - 1) M.  Elements of H_1 act on it; the functor is
exact on the resolution of the trivial module.
"""

from fractions import Fraction

from wittrep import ModuleSpec, d, gamma, h1_member, parse_uea
from wittrep.standard import delta0_resolution
from wittrep.uea import format_uea
from wittrep.whittaker import format_matrix, gamma_exactness, h1_action, h1_basis

print("1 in H_1:", h1_member(parse_uea("1")), "  d0 in H_1:", h1_member(d(0)))
print("H_1 up to PBW length 2:")
for u in h1_basis(2):
    print("  ", format_uea(u))

for spec in ("verma:1/3", "verma:2", "verma:-1", "verma:0", "trivial"):
    g = gamma(ModuleSpec.parse(spec))
    print(f"Gamma({spec}) has dim {g.dim}")

g = gamma(ModuleSpec("verma", Fraction(1, 3)))
u = d(0) * d(0) + d(0) - d(1)
print("action of", format_uea(u), "on Gamma(Delta(1/3)):", format_matrix(h1_action(u, g)))
print(gamma_exactness(delta0_resolution(12)))

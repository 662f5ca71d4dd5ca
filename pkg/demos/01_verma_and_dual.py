"""
Verma modules, their duals and the Casimir
==========================================

Build Delta(lam) with lam left symbolic, check the module axioms exactly,
watch the Casimir act by a scalar, and identify the restricted dual of the
Feigin-Fuchs module with the Verma module.
"""

import wittrep as wr
from wittrep.gmod import maximal_vectors
from wittrep.kernel import ONE
from wittrep.uea import act

# a symbolic weight: every structure constant is a polynomial in L
m = wr.verma(wr.L, depth=12, gen=6)
print(m)
print("axiom residuals:", wr.check_module_axioms(m))

# the sl2 Casimir acts on each in-window vector by lam(lam+1)
z = wr.casimir()
print("z =", z)
for b in ("e0", "e5", "e11"):
    print(f"  z.{b} =", act(z, m, {b: ONE}))

# which Verma modules have a singular vector right below the top?
from wittrep.standard import verma_simplicity_scan
print("singular (lam, i):", [(str(s), i) for s, i in verma_simplicity_scan(40)])
print("maximal vectors of Delta(0):", maximal_vectors(wr.verma(0, 6, 4)))

# F_lam* and Delta(lam) agree as graded modules
iso = wr.find_iso(wr.restricted_dual(wr.feigin_fuchs(wr.L, 12, 6)), m)
print("dual iso found:", iso is not None)

"""
Non-split extensions of Feigin-Fuchs modules
============================================

Eight explicit families E(F_lam, F_mu).  Each is built from its correction
term and checked against the bracket relations; the cocycle solver then
computes Ext^1(F_lam, F_mu) independently.

Family 8 is the interesting one: with the constants as printed, the
relations fail.  The residual is reported as is, and the ``corrected``
variant (leading term with the opposite sign) is shown to be a genuine
extension that the solver recognizes.
"""

from wittrep import check_module_axioms, ext_family
from wittrep.ext import family_crosscheck
from wittrep.kernel import L

for fid, lam in ((1, L), (3, L), (4, L), (5, L)):
    print(f"family {fid}: residuals", len(check_module_axioms(ext_family(fid, lam, 14, 8))))

for var in ("plain", "prime"):
    fam = ext_family(2, None, 14, 8, variant=var)
    cc = family_crosscheck(fam)
    print(f"family 2/{var}: weight module {fam.weight_semisimple}, solver ext {cc['ext_dim']}, "
          f"matches {cc['matches']}")

for var in ("printed", "corrected"):
    fam = ext_family(8, None, 14, 8, variant=var)
    res = check_module_axioms(fam)
    cc = family_crosscheck(fam)
    print(f"family 8/{var}: {len(res)} residuals" + (f", first: {res[0]}" if res else ""))
    print(f"   correction is a cocycle: {cc['is_cocycle']}; solver ext {cc['ext_dim']}")

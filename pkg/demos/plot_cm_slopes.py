"""
Slopes from complex multiplication
==================================

The curve y^2 = phi_l(x) has CM by a cyclotomic field, and the slopes of
its Newton polygon at p can be read off from how the decomposition group
of p meets the CM type.  This compares that recipe with slopes computed
from actual point counts.
"""

from chebmax import cm_slopes, verify_cm_against_newton

print("l=5, p=19:", [str(s) for s in cm_slopes(5, 19)])
print("l=5, p=7: ", [str(s) for s in cm_slopes(5, 7)])

##############################################################################
# The full table for small primes.  Each note lists the Newton slopes and
# the formula slopes side by side.
for ell in (3, 5):
    for r in verify_cm_against_newton(ell, 50):
        print(f"l={ell} p={r.p:3d} {'agree' if r.observed else 'DIFFER'}  {r.note}")

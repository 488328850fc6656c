"""
Isogeny decompositions, seen through point counts
=================================================

If the Jacobian of A splits up to isogeny as J(B) x J(C), then the trace
defects N_r - (q^r + 1) add up over every extension.  We check the
splittings of X and Y into smaller Chebyshev curves.
"""

from chebmax import verify_decompositions

for d, q in [(2, 7), (3, 7), (4, 11), (5, 11)]:
    print(f"d={d} q={q}")
    for r in verify_decompositions(d, q, r_max=2):
        mark = "ok " if r.passed else "BAD"
        print(f"  {mark} {r.family:14s} {r.note}")

##############################################################################
# Not every relation holds everywhere.  At q = 5 the curves y^2 = x^3 - 3x
# and y^2 = x^3 + x are quartic twists that stay distinct over F_25,
# because -3 is not a fourth power there.
for r in verify_decompositions(3, 5, r_max=2):
    if r.passed is False:
        print("\nfails:", r.family, r.note)

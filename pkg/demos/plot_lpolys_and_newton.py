"""
L-polynomials and Newton polygons
=================================

The point counts N_1, ..., N_g of a genus-g curve over F_q, F_{q^2}, ...,
F_{q^g} pin down its L-polynomial.  The p-adic valuations of the
coefficients then give the Newton polygon, and all slopes equal 1/2 means
the curve is supersingular.
"""

from chebmax import FamilyId, build, l_polynomial, newton_polygon, reconstruct_counts
from chebmax.ff import make_field
from chebmax.curve import count_points

C = build(FamilyId("C", 5), 13)
L = l_polynomial(C)
print(C)
print("L(t) coefficients:", L)

# the L-polynomial predicts every count in the tower; check the first three
pred = reconstruct_counts(L, 3)
direct = [count_points(C, make_field(13, r)).N for r in range(1, 4)]
print("predicted", pred)
print("direct   ", direct)

##############################################################################
# The slopes move with p.  Here they are either all 1/2 (supersingular) or
# 0, 0, 1, 1 (ordinary), and which one you get depends on p mod 20.
for p in (7, 11, 13, 17, 19, 23):
    L = l_polynomial(build(FamilyId("C", 5), p))
    slopes = " ".join(str(s) for s in newton_polygon(L))
    print(f"p={p:3d}  L={str(L):32s} slopes {slopes}")

##############################################################################
# Multiplying L-polynomials follows the isogeny decomposition of Jacobians.
# The Newton polygon of a product is the union of the slope multisets.
def show(name, L):
    print(f"{name:12s} {str(L):18s} slopes", " ".join(map(str, newton_polygon(L))))


E = l_polynomial(build(FamilyId("E+"), 5))
E3 = l_polynomial(build(FamilyId("E-3"), 5))
print()
show("E+ / F_5", E)
show("E-3 / F_5", E3)
show("product", E * E3)

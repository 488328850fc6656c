"""Named curve families and the congruence criteria for their maximality."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .chebyshev import IntPoly, cheb_poly
from .curve import HCurve, make_curve
from .ff import prime_power

X_POLY = IntPoly([0, 1])

#: family tag -> whether the family takes a parameter d
TAGS = {"X": True, "Y": True, "C": True, "C+": True, "C-": True, "C1": True,
        "E+": False, "E-3": False, "E108": False}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    d: int | None = None

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {', '.join(TAGS)}")
        if TAGS[self.tag]:
            if self.d is None or self.d < 1:
                raise ValueError(f"family {self.tag} needs d >= 1")
        elif self.d is not None:
            object.__setattr__(self, "d", None)

    def __str__(self):
        return self.tag if self.d is None else f"{self.tag}({self.d})"


def polynomial(fam: FamilyId) -> IntPoly:
    d = fam.d
    match fam.tag:
        case "X":
            return IntPoly.monomial(2 * d + 1) + X_POLY
        case "Y":
            return IntPoly.monomial(2 * d) + 1
        case "C":
            return cheb_poly(d)
        case "C+":
            return (X_POLY + 2) * cheb_poly(d)
        case "C-":
            return (X_POLY - 2) * cheb_poly(d)
        case "C1":
            return IntPoly([-4, 0, 1]) * cheb_poly(d)
        case "E+":
            return IntPoly([0, 1, 0, 1])
        case "E-3":
            return IntPoly([0, -3, 0, 1])
        case "E108":
            return IntPoly([0, 108, 0, 1])
    raise AssertionError(fam.tag)


def expected_genus(fam: FamilyId) -> int:
    d = fam.d
    match fam.tag:
        case "X":
            return d
        case "Y":
            return d - 1
        case "C":
            return (d - 1) // 2
        case "C+" | "C-":
            return d // 2
        case "C1":
            return (d + 1) // 2
    return 1


def build(fam: FamilyId, p: int) -> HCurve:
    """The family member over F_p; raises InseparableError when p | 2d for phi_d families."""
    C = make_curve(polynomial(fam), p, str(fam))
    assert C.genus == expected_genus(fam), (fam, C.genus)
    return C


def congruence_4d(q: int, d: int) -> bool:
    """q = -1 or q = 2d + 1 (mod 4d)."""
    return q % (4 * d) in {4 * d - 1, (2 * d + 1) % (4 * d)}


def congruence_2d(q: int, d: int) -> bool:
    """q = -1 (mod 2d)."""
    return q % (2 * d) == 2 * d - 1


class Kind(enum.Enum):
    IFF = "iff"
    SUFFICIENT_AND_JOINT_NECESSARY = "sufficient+joint-necessary"


@dataclass(frozen=True)
class Criterion:
    kind: Kind
    modulus: int
    residues: frozenset[int]

    def holds(self, q: int) -> bool:
        return q % self.modulus in self.residues


def _crit(kind: Kind, modulus: int, *residues: int) -> Criterion:
    return Criterion(kind, modulus, frozenset(r % modulus for r in residues))


def predicted(fam: FamilyId, q: int) -> Criterion | None:
    """Maximality criterion over F_{q^2}; None marks a (q, d) outside the hypotheses.

    For C(d) and C1(d) with odd d the congruence is sufficient for each curve
    and necessary only for the two being maximal together.  For C(d) with
    even d it is sufficient, and necessary together with q = 3 (mod 4).
    """
    if q % 2 == 0:
        return None
    d = fam.d
    iff, joint = Kind.IFF, Kind.SUFFICIENT_AND_JOINT_NECESSARY
    match fam.tag:
        case "X":
            if math.gcd(q, 2 * d) != 1:
                return None
            return _crit(iff, 4 * d, -1, 2 * d + 1)
        case "Y":
            if math.gcd(q, 2 * d) != 1:
                return None
            return _crit(iff, 2 * d, -1)
        case "C+" | "C-":
            if math.gcd(q, 2 * d) != 1:
                return None
            if d % 2 == 0:
                return _crit(iff, 4 * d, -1, 2 * d + 1)
            return _crit(iff, 2 * d, -1)
        case "C" | "C1":
            if math.gcd(q, 2 * d) != 1:
                return None
            if d % 2 == 0:
                return _crit(iff if fam.tag == "C1" else joint, 2 * d, -1)
            return _crit(joint, 4 * d, -1, 2 * d + 1)
        case "E+":
            return _crit(iff, 4, -1)
        case "E-3" | "E108":
            if q % 3 == 0:
                return None
            return _crit(iff, 4, -1)
    raise AssertionError(fam.tag)


def prime_powers(limit: int, coprime_to: int = 1) -> list[int]:
    """Prime powers q <= limit with gcd(q, coprime_to) == 1, ascending."""
    return [q for q in range(2, limit + 1)
            if prime_power(q) is not None and math.gcd(q, coprime_to) == 1]


def parse_family(tag: str, d: int | None = None) -> FamilyId:
    return FamilyId(tag, d)

"""L-polynomials of curves over F_q and what can be read off them.

The L-polynomial L(t) = sum c_k t^k = prod (1 - alpha_i t) is recovered from
the counts N_1..N_g through the power sums s_r = q^r + 1 - N_r and Newton's
identities; the top half follows from c_{2g-k} = q^(g-k) c_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .curve import HCurve, count_points, count_series
from .ff import DEFAULT_BUDGET, BudgetExceeded, make_field, prime_power


class NewtonDivisionError(ArithmeticError):
    """A Newton-identity step was not an exact integer division."""


class LPolyBudgetExceeded(BudgetExceeded):
    def __init__(self, size: int, budget: int, r_reached: int):
        super().__init__(size, budget)
        self.r_reached = r_reached


@dataclass(frozen=True)
class LPolynomial:
    coeffs: tuple[int, ...]
    q: int

    def __post_init__(self):
        c = self.coeffs
        if not c or c[0] != 1 or len(c) % 2 == 0:
            raise ValueError(f"not an L-polynomial shape: {c}")
        g = self.genus
        for k in range(g + 1):
            if c[2 * g - k] != self.q ** (g - k) * c[k]:
                raise ValueError(f"functional equation fails at k={k}: {c}")

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    g = genus

    def __mul__(self, other: LPolynomial) -> LPolynomial:
        if self.q != other.q:
            raise ValueError("L-polynomials over different fields")
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        return LPolynomial(tuple(prod), self.q)

    def __pow__(self, e: int) -> LPolynomial:
        result = LPolynomial((1,), self.q)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self):
        return " ".join(str(c) for c in self.coeffs)


def from_counts(counts: list[int], q: int, g: int) -> LPolynomial:
    """Build L(t) of a genus-g curve over F_q from N_1..N_g."""
    if len(counts) < g:
        raise ValueError(f"need {g} counts, got {len(counts)}")
    s = [None] + [q**r + 1 - counts[r - 1] for r in range(1, g + 1)]
    e = [1]
    for k in range(1, g + 1):
        total = sum((-1) ** (i - 1) * e[k - i] * s[i] for i in range(1, k + 1))
        if total % k:
            raise NewtonDivisionError(f"Newton step {k} is not exact: {total}/{k}")
        e.append(total // k)
    c = [(-1) ** k * e[k] for k in range(g + 1)]
    c += [q ** (g - k) * c[k] for k in range(g - 1, -1, -1)]
    return LPolynomial(tuple(c), q)


def reconstruct_counts(L: LPolynomial, r_max: int) -> list[int]:
    """Inverse of :func:`from_counts`: N_r for r = 1..r_max."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    q = L.q
    e = [(-1) ** i * c for i, c in enumerate(L.coeffs)]
    e += [0] * max(0, r_max + 1 - len(e))
    s = [None]
    for k in range(1, r_max + 1):
        acc = k * e[k] - sum((-1) ** (i - 1) * e[k - i] * s[i] for i in range(1, k))
        s.append((-1) ** (k - 1) * acc)
    return [q**r + 1 - s[r] for r in range(1, r_max + 1)]


def _base(C: HCurve, q: int) -> int:
    pn = prime_power(q)
    if pn is None or pn[0] != C.p:
        raise ValueError(f"{q} is not a power of the characteristic {C.p}")
    return pn[1]


def series_cost(q: int, g: int) -> int:
    """Field elements visited to obtain N_1..N_g over F_q."""
    return sum(q**r for r in range(1, g + 1))


def l_polynomial(C: HCurve, n: int = 1, budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> LPolynomial:
    """L-polynomial of C over F_{p^n}.

    ``budget`` bounds the total number of field elements over all the counts.
    """
    q = C.p**n
    g = C.genus
    if series_cost(q, g) > budget:
        r = max(r for r in range(g + 1) if series_cost(q, r) <= budget)
        raise LPolyBudgetExceeded(series_cost(q, g), budget, r)
    counts = count_series(C, n, g, budget, workers)
    return from_counts(counts, q, g)


def maximal_bound(q: int, g: int) -> int:
    """q^2 + 1 + 2 g q, the Hasse-Weil upper bound over F_{q^2}."""
    return q * q + 1 + 2 * g * q


def count_over_square(C: HCurve, q: int, budget: int = DEFAULT_BUDGET, workers: int = 1):
    n = _base(C, q)
    return count_points(C, make_field(C.p, 2 * n), budget, workers)


def is_maximal(C: HCurve, q: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> bool:
    return count_over_square(C, q, budget, workers).N == maximal_bound(q, C.genus)


def maximal_shape(q: int, g: int) -> LPolynomial:
    """(1 + q t)^(2g) over F_{q^2}."""
    return LPolynomial(tuple(comb(2 * g, k) * q**k for k in range(2 * g + 1)), q * q)


def maximal_iff_lpoly(C: HCurve, q: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Self-test: maximality over F_{q^2} agrees with L(t) = (1 + q t)^(2g)."""
    n = _base(C, q)
    L = l_polynomial(C, 2 * n, budget)
    return is_maximal(C, q, budget) == (L == maximal_shape(q, C.genus))


def lpoly_divides(A: LPolynomial, B: LPolynomial) -> bool:
    """Whether A divides B in Z[t]; both have constant term 1."""
    if A.q != B.q:
        raise ValueError("L-polynomials over different fields")
    a, b = A.coeffs, list(B.coeffs)
    if len(a) > len(b):
        return False
    quotient_len = len(b) - len(a) + 1
    # power-series division from the constant end, exact since a[0] == 1
    for k in range(quotient_len):
        c = b[k]
        if c:
            for i, ai in enumerate(a):
                b[k + i] -= c * ai
    return not any(b)


def _valuation(c: int, p: int) -> int:
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


def newton_polygon(L: LPolynomial) -> list[Fraction]:
    """Sorted Frobenius slopes: lower hull of (k, v_p(c_k)/n) over nonzero c_k."""
    p, n = prime_power(L.q)
    pts = [(k, Fraction(_valuation(c, p), n)) for k, c in enumerate(L.coeffs) if c]
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point if it lies on or above the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes += [(y2 - y1) / (x2 - x1)] * (x2 - x1)
    return sorted(slopes)


def is_supersingular(L: LPolynomial) -> bool:
    return all(s == Fraction(1, 2) for s in newton_polygon(L))

"""Chebyshev (Dickson, parameter 1) polynomials and separability over F_q.

``cheb_poly(d)`` is the integer polynomial phi_d with
x^d + x^-d = phi_d(x + 1/x), built from the recurrence
phi_n = x phi_{n-1} - phi_{n-2}, phi_0 = 2, phi_1 = x.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Sequence

from .ff import FieldCtx, FqElem, make_field, prime_power


class IntPoly:
    """Dense integer polynomial, constant term first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _coerce(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return IntPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = IntPoly([1])
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> IntPoly:
        return IntPoly(k * a for k, a in enumerate(self.coeffs) if k)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(c) if not mono or abs(c) != 1 else ("-" if c < 0 else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def compose(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return f(g(x))."""
    acc = IntPoly()
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


@functools.lru_cache(maxsize=None)
def cheb_poly(d: int) -> IntPoly:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    x = IntPoly([0, 1])
    prev, cur = IntPoly([2]), x
    if d == 0:
        return prev
    for _ in range(d - 1):
        prev, cur = cur, x * cur - prev
    return cur


class FqPoly:
    """Dense polynomial over one :class:`FieldCtx`, canonical (no trailing zeros)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Sequence[FqElem | int] = ()):
        c = [a if isinstance(a, FqElem) else field(a) for a in coeffs]
        for a in c:
            if a.field != field:
                raise ValueError("coefficients from a different field")
        while c and not c[-1]:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self) -> FqPoly:
        return FqPoly(self.field, [a * k for k, a in enumerate(self.coeffs) if k])

    def monic(self) -> FqPoly:
        inv = self.coeffs[-1].inv()
        return FqPoly(self.field, [a * inv for a in self.coeffs])

    def __mod__(self, other: FqPoly) -> FqPoly:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        inv = other.coeffs[-1].inv()
        db = other.degree
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv
            shift = len(rem) - 1 - db
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return FqPoly(self.field, rem)

    def __call__(self, x: FqElem) -> FqElem:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def residues(self) -> list[list[int]]:
        return [list(a.coeffs) for a in self.coeffs]

    def __repr__(self):
        return f"FqPoly({self.field}, {self.residues()})"


def reduce_mod(f: IntPoly, F: FieldCtx | int) -> FqPoly:
    """Coefficientwise reduction into ``F`` (an int means the prime field)."""
    if isinstance(F, int):
        F = make_field(F, 1)
    return FqPoly(F, [F(c) for c in f.coeffs])


def poly_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic gcd, normalizing every remainder to be monic."""
    if a.field != b.field:
        raise ValueError("polynomials over different fields")
    if not b.coeffs:
        return a.monic() if a.coeffs else a
    a = a.monic() if a.coeffs else a
    b = b.monic()
    while b.coeffs:
        r = a % b
        a, b = b, (r.monic() if r.coeffs else r)
    return a


def is_separable(f: FqPoly) -> bool:
    if f.degree < 1:
        raise ValueError("separability needs a polynomial of degree at least 1")
    return poly_gcd(f, f.derivative()).degree == 0


def sep_criterion(q: int, d: int) -> bool:
    """Closed-form separability of phi_d over F_q: gcd(q, 2d) == 1 or d == 1."""
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    if d < 1:
        raise ValueError("d must be positive")
    return math.gcd(q, 2 * d) == 1 or d == 1

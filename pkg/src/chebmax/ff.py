"""Arithmetic in finite fields F_{p^m}.

A field is a :class:`FieldCtx` carrying the prime ``p``, the degree ``m`` and a
monic irreducible modulus over F_p.  Elements are :class:`FqElem` objects
holding the ``m`` residues of their representative polynomial, low degree
first.  The same coefficient vectors double as integer encodings
``sum(c[i] * p**i)``, which is the order used by :func:`enumerate_elements`.

The modulus for a given ``(p, m)`` is the first monic irreducible polynomial
in the order of these encodings applied to ``(a_0, ..., a_{m-1})``, so
fields are reproducible from run to run.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

DEFAULT_BUDGET = 10**8


class BudgetExceeded(Exception):
    """Raised when an enumeration would visit more elements than allowed."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"{size} elements exceed the enumeration budget {budget}")
        self.size = size
        self.budget = budget


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, n)`` with ``q == p**n`` and ``p`` prime, or None."""
    if q < 2:
        return None
    p = next(k for k in range(2, q + 1) if q % k == 0)
    n = 0
    while q % p == 0:
        q //= p
        n += 1
    return (p, n) if q == 1 else None


# -- dense polynomials over F_p as lists, constant term first -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _pmulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _pmod(prod, mod, p)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    x = [0, 1]
    power = x
    for _ in range(m // 2):
        # power <- power^p mod f, giving x^(p^i)
        result, base, e = [1], power, p
        while e:
            if e & 1:
                result = _pmulmod(result, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        power = result
        diff = list(power) + [0] * max(0, 2 - len(power))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        if low[0] == 0:
            continue
        f = low + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- fields and elements ------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    """The field F_{p^m} defined by ``modulus`` (constant term first, monic)."""

    p: int
    m: int
    modulus: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.m

    Q = order

    def __call__(self, value: int | Sequence[int]) -> FqElem:
        """Coerce an integer (reduced into F_p) or a coefficient vector."""
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.m - 1)
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.m:
                raise ValueError(f"expected at most {self.m} coefficients")
            coeffs += [0] * (self.m - len(coeffs))
        return FqElem(self, tuple(coeffs))

    def zero(self) -> FqElem:
        return self(0)

    def one(self) -> FqElem:
        return self(1)

    def gen(self) -> FqElem:
        """The residue class of x (equal to zero when m == 1)."""
        return self([0, 1]) if self.m > 1 else self(0)

    def from_index(self, index: int) -> FqElem:
        return FqElem(self, tuple((index // self.p**i) % self.p for i in range(self.m)))

    def __str__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"


def make_field(p: int, m: int = 1) -> FieldCtx:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be at least 1, got {m}")
    return _make_field(p, m)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int) -> FieldCtx:
    return FieldCtx(p, m, _find_modulus(p, m))


class FqElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _other(self, other) -> FqElem:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError(f"mixed fields: {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.field
        if F.m == 1:
            return FqElem(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = _pmulmod(self.coeffs, other.coeffs, F.modulus, F.p)
        return FqElem(F, tuple(prod + [0] * (F.m - len(prod))))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> FqElem:
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def index(self) -> int:
        """Integer encoding, the position of this element in enumeration order."""
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            return f"{self.coeffs[0]} in {self.field}"
        return f"{list(self.coeffs)} in {self.field}"


def field_arith(a: FqElem, b: FqElem, op: str) -> FqElem:
    """Binary field operation by name: one of add, sub, mul, div."""
    try:
        fn = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if not isinstance(b, FqElem):
        raise TypeError("operands must be field elements")
    return fn(b)


def quadratic_character(a: FqElem) -> int:
    """Return 0, +1 or -1 according as ``a`` is zero, a nonzero square, or not a square."""
    F = a.field
    if F.p == 2:
        raise ValueError("quadratic character needs odd characteristic")
    if not a:
        return 0
    return 1 if a ** ((F.order - 1) // 2) == 1 else -1


def enumerate_elements(F: FieldCtx, budget: int = DEFAULT_BUDGET,
                       start: int = 0, stop: int | None = None) -> Iterator[FqElem]:
    """Yield elements in odometer order (coeffs[0] fastest).

    ``start``/``stop`` select a slice of index positions so that disjoint
    ranges can be handed to separate consumers.
    """
    if F.order > budget:
        raise BudgetExceeded(F.order, budget)
    stop = F.order if stop is None else min(stop, F.order)
    return (F.from_index(i) for i in range(start, stop))

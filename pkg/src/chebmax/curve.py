"""Hyperelliptic curves y^2 = f(x) with integer f, and their point counts.

Counts are for the smooth complete model: the affine part is
sum_x (1 + chi(f(x))), plus one point at infinity for odd deg f, or
1 + chi(leading coefficient) points for even deg f.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .chebyshev import IntPoly, is_separable, reduce_mod
from .ff import (DEFAULT_BUDGET, BudgetExceeded, FieldCtx, _pmulmod, is_prime,
                 make_field, quadratic_character)

CHUNK = 1 << 20


class CurveError(ValueError):
    """The polynomial does not define a smooth hyperelliptic model mod p."""


class InseparableError(CurveError):
    pass


@dataclass(frozen=True)
class HCurve:
    f: IntPoly
    p: int
    label: str = ""

    @property
    def genus(self) -> int:
        return max(0, (self.f.degree - 1) // 2)

    def __str__(self):
        name = f"{self.label}: " if self.label else ""
        return f"{name}y^2 = {self.f} over F_{self.p}"


@dataclass(frozen=True)
class CountResult:
    N: int
    Q: int
    affine: int
    infinity: int


def make_curve(f: IntPoly, p: int, label: str = "") -> HCurve:
    if p == 2 or not is_prime(p):
        raise CurveError(f"characteristic must be an odd prime, got {p}")
    if f.degree < 1:
        raise CurveError("f must have degree at least 1")
    fp = reduce_mod(f, p)
    if fp.degree != f.degree:
        raise CurveError(f"leading coefficient of {f} vanishes mod {p}")
    if not is_separable(fp):
        raise InseparableError(f"{f} is inseparable mod {p}")
    return HCurve(f, p, label)


def _sparse_shape(coeffs: list[int]) -> tuple[int, int, np.ndarray]:
    """Write f(x) = x^s h(x^t); returns (s, t, h)."""
    support = [k for k, c in enumerate(coeffs) if c]
    s = support[0]
    t = 0
    for k in support:
        t = math.gcd(t, k - s)
    t = t or 1
    h = np.array(coeffs[s::t], dtype=np.int64)
    return s, t, h


@lru_cache(maxsize=None)
def _legendre_table(p: int) -> np.ndarray:
    table = -np.ones(p, dtype=np.int64)
    table[0] = 0
    table[[(k * k) % p for k in range(1, p)]] = 1
    return table


@lru_cache(maxsize=64)
def _frobenius_matrix(F: FieldCtx) -> np.ndarray:
    """Column j holds x^(j p) reduced mod the field modulus."""
    p, m = F.p, F.m
    cols = []
    xp = [1]
    base, e = [0, 1], p
    while e:
        if e & 1:
            xp = _pmulmod(xp, base, F.modulus, p)
        base = _pmulmod(base, base, F.modulus, p)
        e >>= 1
    col = [1]
    for _ in range(m):
        cols.append(col + [0] * (m - len(col)))
        col = _pmulmod(col, xp, F.modulus, p)
    return np.array(cols, dtype=np.int64).T.copy()


def character_sum(C: HCurve, F: FieldCtx, start: int = 0, stop: int | None = None) -> int:
    """Share of sum_x chi(f(x)) owned by the index range [start, stop) of F.

    Over an extension field each Frobenius orbit is charged to its smallest
    index, so disjoint ranges covering F add up to the full sum.
    """
    stop = F.order if stop is None else stop
    p = F.p
    coeffs = [c % p for c in C.f.coeffs]
    s, t, h = _sparse_shape(coeffs)
    legendre = _legendre_table(p)
    if F.m == 1:
        return int(_kernels.chi_sum_prime(p, h, s, t, start, stop, legendre))
    nm = np.array([-a % p for a in F.modulus[:-1]], dtype=np.int64)
    frob = _frobenius_matrix(F)
    return int(_kernels.chi_sum_ext(p, F.m, nm, frob, h, s, t, start, stop, legendre))


def count_points(C: HCurve, F: FieldCtx, budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> CountResult:
    if F.p != C.p:
        raise ValueError(f"field characteristic {F.p} differs from curve characteristic {C.p}")
    Q = F.order
    if Q > budget:
        raise BudgetExceeded(Q, budget)
    if workers > 1 and Q > CHUNK:
        bounds = list(range(0, Q, CHUNK)) + [Q]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda ab: character_sum(C, F, *ab), zip(bounds, bounds[1:]))
            chi_total = sum(parts)
    else:
        chi_total = character_sum(C, F)
    affine = Q + chi_total
    if C.f.degree % 2:
        infinity = 1
    else:
        infinity = 1 + quadratic_character(F(C.f.lead()))
    return CountResult(affine + infinity, Q, affine, infinity)


def count_series(C: HCurve, base_degree: int, r_max: int, budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> list[int]:
    """N_r over F_{p^(n r)} for r = 1, 2, ... up to r_max.

    Stops at the first r whose field exceeds ``budget``; the length of the
    returned list says how many r were completed.
    """
    counts = []
    for r in range(1, r_max + 1):
        if C.p ** (base_degree * r) > budget:
            break
        F = make_field(C.p, base_degree * r)
        counts.append(count_points(C, F, budget, workers).N)
    return counts

"""Compiled inner loops for character sums sum_x chi(f(x)).

The curve polynomial is passed in the sparse shape f(x) = x^s * h(x^t) with
``h`` reduced mod p.  For extension fields the sum runs over Frobenius orbit
representatives only (the smallest index in each orbit), weighting each by
its orbit length; chi(f(x)) is constant on orbits because f has F_p
coefficients.  chi itself is the Legendre symbol of the norm down to F_p.
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _powmod(x, e, p):
    r = 1
    b = x % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit(cache=True, nogil=True)
def chi_sum_prime(p, h, s, t, start, stop, legendre):
    total = 0
    top = h.shape[0] - 1
    for x in range(start, stop):
        y = _powmod(x, t, p)
        acc = h[top]
        for k in range(top - 1, -1, -1):
            acc = (acc * y + h[k]) % p
        if s:
            acc = acc * _powmod(x, s, p) % p
        total += legendre[acc]
    return total


@njit(cache=True, nogil=True, inline="always")
def _mul(a, b, out, tmp, p, m, nm):
    for k in range(2 * m - 1):
        tmp[k] = 0
    for i in range(m):
        ai = a[i]
        if ai:
            for j in range(m):
                tmp[i + j] += ai * b[j]
    for k in range(2 * m - 2, m - 1, -1):
        c = tmp[k] % p
        if c:
            base = k - m
            for i in range(m):
                tmp[base + i] += c * nm[i]
    for i in range(m):
        out[i] = tmp[i] % p


@njit(cache=True, nogil=True, inline="always")
def _frob(a, out, frob, p, m):
    for i in range(m):
        acc = 0
        for j in range(m):
            acc += frob[i, j] * a[j]
        out[i] = acc % p


@njit(cache=True, nogil=True, inline="always")
def _cmp(a, b, m):
    # compares integer encodings sum a[i] p^i
    for i in range(m - 1, -1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


@njit(cache=True, nogil=True, inline="always")
def _pow(x, e, out, base, tmp, tmp2, p, m, nm):
    for i in range(m):
        out[i] = 0
        base[i] = x[i]
    out[0] = 1
    while e:
        if e & 1:
            _mul(out, base, tmp2, tmp, p, m, nm)
            for i in range(m):
                out[i] = tmp2[i]
        e >>= 1
        if e:
            _mul(base, base, tmp2, tmp, p, m, nm)
            for i in range(m):
                base[i] = tmp2[i]


@njit(cache=True, nogil=True)
def chi_sum_ext(p, m, nm, frob, h, s, t, start, stop, legendre):
    x = np.zeros(m, np.int64)
    rest = start
    for i in range(m):
        x[i] = rest % p
        rest //= p
    cur = np.zeros(m, np.int64)
    nxt = np.zeros(m, np.int64)
    y = np.zeros(m, np.int64)
    acc = np.zeros(m, np.int64)
    xs = np.zeros(m, np.int64)
    base = np.zeros(m, np.int64)
    res = np.zeros(m, np.int64)
    tmp = np.zeros(2 * m - 1, np.int64)
    top = h.shape[0] - 1
    total = 0
    for _ in range(start, stop):
        # orbit representative test
        for i in range(m):
            cur[i] = x[i]
        size = 0
        rep = True
        for j in range(1, m + 1):
            _frob(cur, nxt, frob, p, m)
            c = _cmp(nxt, x, m)
            if c == 0:
                size = j
                break
            if c < 0:
                rep = False
                break
            for i in range(m):
                cur[i] = nxt[i]
        if rep:
            _pow(x, t, y, base, tmp, res, p, m, nm)
            for i in range(m):
                acc[i] = 0
            acc[0] = h[top]
            for k in range(top - 1, -1, -1):
                _mul(acc, y, res, tmp, p, m, nm)
                for i in range(m):
                    acc[i] = res[i]
                acc[0] = (acc[0] + h[k]) % p
            if s:
                _pow(x, s, xs, base, tmp, res, p, m, nm)
                _mul(acc, xs, res, tmp, p, m, nm)
                for i in range(m):
                    acc[i] = res[i]
            nonzero = False
            for i in range(m):
                if acc[i]:
                    nonzero = True
            if nonzero:
                # norm = product of the m conjugates of acc
                for i in range(m):
                    cur[i] = acc[i]
                    base[i] = acc[i]
                for j in range(1, m):
                    _frob(cur, nxt, frob, p, m)
                    for i in range(m):
                        cur[i] = nxt[i]
                    _mul(base, cur, res, tmp, p, m, nm)
                    for i in range(m):
                        base[i] = res[i]
                total += size * legendre[base[0]]
        # odometer step, coeffs[0] fastest
        for i in range(m):
            x[i] += 1
            if x[i] < p:
                break
            x[i] = 0
    return total

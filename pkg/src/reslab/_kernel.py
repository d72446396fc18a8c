"""Compiled exhaustive resultant histograms.

Field elements are integer encodings; arithmetic goes through q x q tables so
the same kernel serves prime and extension fields.  The outer enumeration runs
over the denominator polynomial ``a`` (monic of degree n, optionally with a
vanishing z^(n-1) coefficient) and the inner one over the numerator ``b``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _res(a0, da, b0, db, x, y, q, ADD, MUL, NEG, INV, POW):
    # lc(a)^deg b * prod b(alpha) over roots alpha of a; a nonzero.
    # Tables are flattened: MUL[u * q + v].  b is reduced in place, then the
    # two buffers swap roles, so no remainder is ever copied.
    for i in range(da + 1):
        x[i] = a0[i]
    for i in range(db + 1):
        y[i] = b0[i]
    a = x
    b = y
    acc = 1
    while True:
        if da == 0:
            if db < 0:
                return acc
            return MUL[acc * q + POW[a[0] * 65 + db]]
        if db < 0:
            return 0
        if db == 0:
            return MUL[acc * q + POW[b[0] * 65 + da]]
        ia = INV[a[da]]
        for i in range(db - da, -1, -1):
            c = b[i + da]
            if c != 0:
                c = NEG[MUL[c * q + ia]] * q
                for j in range(da):
                    aj = a[j]
                    if aj != 0:
                        b[i + j] = ADD[b[i + j] * q + MUL[c + aj]]
                b[i + da] = 0
        dr = min(db, da - 1)
        while dr >= 0 and b[dr] == 0:
            dr -= 1
        if dr < 0:
            return 0
        acc = MUL[acc * q + POW[a[da] * 65 + (db - dr)]]
        if (da * dr) & 1:
            acc = NEG[acc]
        a, b = b, a
        db = da
        da = dr


@njit(cache=True, nogil=True)
def histogram_slice(n, q, start, stop, centered, b_monic, ADD, MUL, NEG, INV, POW):
    """Tally resultant values over a slice [start, stop) of the outer stream.

    Outer: a monic of degree n; when ``centered`` the z^(n-1) coefficient is 0
    and only the n-1 lowest coefficients vary.  Inner: b monic of degree n when
    ``b_monic``, otherwise every polynomial of degree < n.
    """
    hist = np.zeros(q, dtype=np.int64)
    a0 = np.zeros(n + 1, dtype=np.int64)
    b0 = np.zeros(n + 1, dtype=np.int64)
    x = np.zeros(n + 1, dtype=np.int64)
    y = np.zeros(n + 1, dtype=np.int64)
    free_a = n - 1 if centered else n
    inner = q**n
    for t in range(start, stop):
        code = t
        for i in range(free_a):
            a0[i] = code % q
            code //= q
        for i in range(free_a, n):
            a0[i] = 0
        a0[n] = 1
        for i in range(n + 1):
            b0[i] = 0
        if b_monic:
            b0[n] = 1
        for s in range(inner):
            # b0 holds the digits of s (odometer increment after each use)
            if b_monic:
                db = n
            else:
                db = n - 1
                while db >= 0 and b0[db] == 0:
                    db -= 1
            v = _res(a0, n, b0, db, x, y, q, ADD, MUL, NEG, INV, POW)
            hist[v] += 1
            i = 0
            while i < n:
                b0[i] += 1
                if b0[i] < q:
                    break
                b0[i] = 0
                i += 1
    return hist


def field_tables(F):
    """Flattened numpy lookup tables (add, mul, neg, inv, pow) for a FieldSpec."""
    q = F.q
    ADD = np.array([F.add(x, y) for x in range(q) for y in range(q)], dtype=np.int64)
    MUL = np.array([F.mul(x, y) for x in range(q) for y in range(q)], dtype=np.int64)
    NEG = np.array([F.neg(x) for x in range(q)], dtype=np.int64)
    INV = np.array([F.inv(x) if x else 0 for x in range(q)], dtype=np.int64)
    # exponents inside the remainder sequence never exceed n
    POW = np.array([F.pow(x, e) for x in range(q) for e in range(65)], dtype=np.int64)
    return ADD, MUL, NEG, INV, POW


@njit(cache=True, nogil=True)
def _gf2_res(a, da, b, db):
    # Same remainder sequence as _res with polynomials packed into bits;
    # over GF(2) every leading coefficient and every sign is 1.
    while True:
        if da == 0:
            return 1
        if db < 0:
            return 0
        if db == 0:
            return 1
        while db >= da:
            b ^= a << (db - da)
            if b == 0:
                return 0
            while not (b >> db) & 1:
                db -= 1
        a, b = b, a
        da, db = db, da


@njit(cache=True, nogil=True)
def gf2_histogram_slice(n, start, stop, centered, b_monic):
    hist = np.zeros(2, dtype=np.int64)
    free_a = n - 1 if centered else n
    top = np.int64(1) << n
    for t in range(start, stop):
        a = (np.int64(t) & ((np.int64(1) << free_a) - 1)) | top
        db = n - 1
        for s in range(np.int64(1) << n):
            if b_monic:
                hist[_gf2_res(a, n, s | top, n)] += 1
            else:
                b = np.int64(s)
                db = n - 1
                while db >= 0 and not (b >> db) & 1:
                    db -= 1
                hist[_gf2_res(a, n, b, db)] += 1
    return hist

# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``; same functions, same signatures.

Coefficients stay Python ints (arbitrary precision); the exponents and loop
bookkeeping are C integers.
"""
from qsphere.errors import DegreeCapError
from qsphere._kernel_py import apart as _apart_py

BACKEND = "cython"

cdef dict _APART = {}


cpdef tuple apart(long k1, long k2):
    key = (k1, k2)
    res = _APART.get(key)
    if res is None:
        res = _apart_py(k1, k2)
        _APART[key] = res
    return res


def mul_flat(dict t1, dict t2, long cap):
    cdef dict out = {}
    cdef long k1, m1, n1, e1, k2, m2, n2, e2, k, p, e, base, mm, nn, w1, deg
    cdef tuple key1, key2, table, row
    cdef object c1, c2, cc, c, prev
    for key1, c1 in t1.items():
        k1 = key1[0]; m1 = key1[1]; n1 = key1[2]; e1 = key1[3]
        w1 = m1 + n1
        for key2, c2 in t2.items():
            k2 = key2[0]; m2 = key2[1]; n2 = key2[2]; e2 = key2[3]
            base = e1 + e2 - 2 * k2 * w1
            cc = c1 * c2
            mm = m1 + m2
            nn = n1 + n2
            table = apart(k1, k2)
            for row in table:
                k = row[0]; p = row[1]; e = row[2]; c = row[3]
                deg = (k if k >= 0 else -k) + mm + nn + 2 * p
                if deg > cap:
                    raise DegreeCapError(f"monomial degree exceeds cap {cap}")
                key = (k, mm + p, nn + p, base + e)
                prev = out.get(key)
                if prev is None:
                    out[key] = cc * c
                else:
                    out[key] = prev + cc * c
    return {key: c for key, c in out.items() if c}


def axpy(dict acc, dict t, lp):
    cdef long k, m, n, e, e2
    cdef tuple key1
    cdef object c, c2, v
    cdef list lpl = list(lp)
    for key1, c in t.items():
        k = key1[0]; m = key1[1]; n = key1[2]; e = key1[3]
        for e2, c2 in lpl:
            key = (k, m, n, e + e2)
            v = acc.get(key, 0) + c * c2
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)


def kshift(dict t, long j, long wk, long wm, long wn):
    cdef dict out = {}
    cdef long k, m, n, e
    cdef tuple key1
    for key1, c in t.items():
        k = key1[0]; m = key1[1]; n = key1[2]; e = key1[3]
        out[(k, m, n, e + j * (wk * k + wm * m + wn * n))] = c
    return out


def apply_images(dict t, dict images):
    cdef dict out = {}
    cdef dict img
    cdef long e, e2
    cdef tuple key1, key2
    cdef object c, c2, prev
    for key1, c in t.items():
        e = key1[3]
        img = images[key1[:3]]
        for key2, c2 in img.items():
            e2 = key2[3]
            key = (key2[0], key2[1], key2[2], e + e2)
            prev = out.get(key)
            if prev is None:
                out[key] = c * c2
            else:
                out[key] = prev + c * c2
    return {key: c for key, c in out.items() if c}


def star_flat(dict t):
    cdef dict out = {}
    cdef long k, m, n, e
    cdef tuple key1
    for key1, c in t.items():
        k = key1[0]; m = key1[1]; n = key1[2]; e = key1[3]
        out[(-k, n, m, e + 2 * k * (m + n))] = c
    return out

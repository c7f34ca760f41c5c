"""Pure-Python hot loops over flat term maps.

A flat term map is a ``dict`` keyed by ``(k, m, n, e)`` with nonzero ``int``
values, standing for ``coeff * s**e * A(k) c**m (c*)**n`` where ``A(k)`` is
``a**k`` for ``k >= 0`` and ``(a*)**(-k)`` otherwise, and ``q = s**2``.

``_kernel.pyx`` mirrors every function here with the same signature.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DegreeCapError

BACKEND = "python"


def _expand(exponents):
    # prod_j (1 - s**x_j * t), as {p: {e: c}}
    poly = {0: {0: 1}}
    for x in exponents:
        nxt = {}
        for p, lp in poly.items():
            slot = nxt.setdefault(p, {})
            for e, c in lp.items():
                slot[e] = slot.get(e, 0) + c
            slot = nxt.setdefault(p + 1, {})
            for e, c in lp.items():
                slot[e + x] = slot.get(e + x, 0) - c
        poly = nxt
    return [(p, e, c) for p, lp in poly.items() for e, c in lp.items() if c]


@lru_cache(maxsize=None)
def apart(k1: int, k2: int) -> tuple:
    """Normal form of ``A(k1) A(k2)`` as ``((k, p, e, c), ...)``.

    Each entry stands for ``c * s**e * A(k) (c c*)**p``.
    """
    if k1 == 0 or k2 == 0 or (k1 > 0) == (k2 > 0):
        return ((k1 + k2, 0, 0, 1),)
    if k1 > 0:
        l = -k2
        if k1 >= l:
            # a^l a*^l = prod_{j=1..l} (1 - q^{2j} t)
            return tuple((k1 - l, p, e, c) for p, e, c in _expand([4 * j for j in range(1, l + 1)]))
        r = l - k1
        # t^p a*^r = q^{2pr} a*^r t^p
        return tuple((-r, p, e + 4 * p * r, c)
                     for p, e, c in _expand([4 * j for j in range(1, k1 + 1)]))
    l = -k1
    if l >= k2:
        # a*^k a^k = prod_{j=0..k-1} (1 - q^{-2j} t)
        return tuple((k2 - l, p, e, c) for p, e, c in _expand([-4 * j for j in range(k2)]))
    r = k2 - l
    # t^p a^r = q^{-2pr} a^r t^p
    return tuple((r, p, e - 4 * p * r, c) for p, e, c in _expand([-4 * j for j in range(l)]))


def mul_flat(t1: dict, t2: dict, cap: int) -> dict:
    out: dict = {}
    get = out.get
    for (k1, m1, n1, e1), c1 in t1.items():
        w1 = m1 + n1
        for (k2, m2, n2, e2), c2 in t2.items():
            base = e1 + e2 - 2 * k2 * w1
            cc = c1 * c2
            mm = m1 + m2
            nn = n1 + n2
            for k, p, e, c in apart(k1, k2):
                if (k if k >= 0 else -k) + mm + nn + 2 * p > cap:
                    raise DegreeCapError(f"monomial degree exceeds cap {cap}")
                key = (k, mm + p, nn + p, base + e)
                out[key] = get(key, 0) + cc * c
    return {key: c for key, c in out.items() if c}


def axpy(acc: dict, t: dict, lp) -> None:
    """In place ``acc += t * lp`` for a Laurent polynomial ``lp = ((e, c), ...)``."""
    get = acc.get
    for (k, m, n, e), c in t.items():
        for e2, c2 in lp:
            key = (k, m, n, e + e2)
            v = get(key, 0) + c * c2
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)


def kshift(t: dict, j: int, wk: int, wm: int, wn: int) -> dict:
    """Scale each monomial by ``s**(j * (wk*k + wm*m + wn*n))``."""
    return {(k, m, n, e + j * (wk * k + wm * m + wn * n)): c for (k, m, n, e), c in t.items()}


def apply_images(t: dict, images: dict) -> dict:
    """Linear extension of a map given on monomials by flat images."""
    out: dict = {}
    get = out.get
    for (k, m, n, e), c in t.items():
        for (k2, m2, n2, e2), c2 in images[(k, m, n)].items():
            key = (k2, m2, n2, e + e2)
            out[key] = get(key, 0) + c * c2
    return {key: c for key, c in out.items() if c}


def star_flat(t: dict) -> dict:
    # (A(k) c^m c*^n)* = q^{k(m+n)} A(-k) c^n c*^m
    return {(-k, n, m, e + 2 * k * (m + n)): c for (k, m, n, e), c in t.items()}

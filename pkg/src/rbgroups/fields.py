"""Small finite fields GF(p^m) for the projective-line constructions.

Elements are integers 0..q-1 encoding polynomial coefficient vectors in
base p (value = sum c_i * p^i).  Only the handful of fields the catalog
needs are supported; each non-prime field uses a fixed irreducible
modulus so element encodings never drift between runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field as _dc_field

import numpy as np

from .errors import InputFormatError

# modulus encoded like field elements: x^2+x+1 over GF(2) -> 1 + 1*2 + 1*4
_MODULI = {
    (2, 2): (1, 1, 1),      # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),   # x^3 + x + 1
    (3, 2): (1, 0, 1),      # x^2 + 1
}

_PRIMES = {2, 3, 5, 7, 11, 13, 23}


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _poly_mod(a, mod, p):
    a = list(a)
    d = len(mod) - 1
    # leading coefficient of every supported modulus is 1
    while len(a) > d:
        lead = a.pop()
        if lead:
            for i in range(d):
                a[-d + i] = (a[-d + i] - lead * mod[i]) % p
    while len(a) < d:
        a.append(0)
    return a


@dataclass(frozen=True)
class SmallField:
    """Arithmetic tables for GF(p^m), elements 0..q-1."""

    p: int
    m: int
    q: int
    add: np.ndarray = _dc_field(repr=False)
    mul: np.ndarray = _dc_field(repr=False)
    neg: np.ndarray = _dc_field(repr=False)
    inv: np.ndarray = _dc_field(repr=False)
    primitive: int = 0

    def pow(self, a, k):
        acc = 1
        for _ in range(k):
            acc = int(self.mul[acc, a])
        return acc


def _digits(v, p, m):
    return [(v // p**i) % p for i in range(m)]


def _value(cs, p):
    return sum(int(c) * p**i for i, c in enumerate(cs))


def field(p, m) -> SmallField:
    """Build GF(p^m).  Supported: p in {2,3,5,7,11,13,23} with m = 1, plus
    GF(4), GF(8), GF(9) with their fixed moduli."""
    if p not in _PRIMES:
        raise InputFormatError(f"unsupported field characteristic {p}")
    if m < 1:
        raise InputFormatError("field degree must be >= 1")
    if m > 1 and (p, m) not in _MODULI:
        raise InputFormatError(f"unsupported field GF({p}^{m})")
    q = p**m
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    mod = _MODULI.get((p, m))
    for a in range(q):
        da = _digits(a, p, m)
        for b in range(q):
            db = _digits(b, p, m)
            add[a, b] = _value([(x + y) % p for x, y in zip(da, db)], p)
            prod = _poly_mul(da, db, p)
            if mod is not None:
                prod = _poly_mod(prod, mod, p)
            else:
                prod = [prod[0] % p]
            mul[a, b] = _value(prod, p)
    neg = np.array([_value([(-c) % p for c in _digits(a, p, m)], p) for a in range(q)])
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
    primitive = 0
    for a in range(2, q):
        # smallest element (by encoding) of multiplicative order q-1
        acc, k = a, 1
        while acc != 1:
            acc = int(mul[acc, a])
            k += 1
        if k == q - 1:
            primitive = a
            break
    if q == 2:
        primitive = 1
    return SmallField(p=p, m=m, q=q, add=add, mul=mul, neg=neg, inv=inv,
                      primitive=primitive)

"""Naive brute-force expansions used as independent cross-checks.

Everything here works on plain {exponent: Fraction} dicts with its own
loops: bilateral theta sums instead of triple products, direct term
summation instead of valuation-bounded assembly.  Nothing is shared with
the engine modules, so agreement between the two paths is meaningful.

Each function takes a comparison order n and computes internally at a
padded working order so that every returned coefficient below n is
trusted even after the shifts caused by negative-exponent parameters.
"""

from __future__ import annotations

from fractions import Fraction

from .monomial import Monomial

_ONE = Fraction(1)


def _sgn(sign: int, k: int) -> int:
    """sign**k for sign in {1, -1} and any integer k (incl. negative)."""
    return sign if k % 2 else 1


def dtrunc(f: dict, n: int) -> dict:
    return {e: c for e, c in f.items() if e < n and c}


def dadd(f: dict, g: dict) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def dmul(f: dict, g: dict, n: int) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            if e < n:
                out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def dinv(f: dict, n: int) -> dict:
    """Inverse of a dict series, trusted below n - 2*valuation."""
    v = min(e for e, c in f.items() if c)
    length = n - v
    u = [Fraction(0)] * length
    for e, c in f.items():
        if e - v < length:
            u[e - v] = Fraction(c)
    w = [Fraction(0)] * length
    w[0] = 1 / u[0]
    for k in range(1, length):
        s = Fraction(0)
        for i in range(1, k + 1):
            if u[i]:
                s += u[i] * w[k - i]
        w[k] = -s / u[0]
    return {-v + i: w[i] for i in range(length) if w[i]}


def dgeom(sign: int, exp: int, n: int) -> dict:
    """1/(1 - sign*q^exp) as a dict, expanded by cases."""
    out: dict = {}
    if exp == 0:
        if sign == 1:
            raise ZeroDivisionError("1 - q^0")
        return {0: Fraction(1, 2)}
    if exp > 0:
        k = 0
        while k * exp < n:
            out[k * exp] = Fraction(sign**k)
            k += 1
    else:
        k = 1
        while -k * exp < n:
            out[-k * exp] = Fraction(-(sign**k))
            k += 1
    return out


def djtheta(x: Monomial, B: Monomial, n: int) -> dict:
    """j(x, B) via the bilateral theta sum sum_r (-1)^r B^C(r,2) x^r."""
    out: dict = {}
    for direction in (1, -1):
        misses = 0
        r = 0 if direction == 1 else -1
        while misses < 8:
            e = r * (r - 1) // 2 * B.exp + r * x.exp
            if e < n:
                misses = 0
                s = _sgn(-1, r) * _sgn(B.sign, r * (r - 1) // 2) * _sgn(x.sign, r)
                out[e] = out.get(e, 0) + Fraction(s)
            else:
                misses += 1
            r += direction
    return {e: c for e, c in out.items() if c}


def dpoch(a: Monomial, B: Monomial, n_factors: int, n: int) -> dict:
    """(a; B)_{n_factors} as an exact polynomial dict, truncated below n."""
    out = {0: _ONE}
    for k in range(1, n_factors + 1):
        s = a.sign * B.sign ** (k - 1)
        e = a.exp + (k - 1) * B.exp
        nxt = dict(out)
        for exp, c in out.items():
            nxt[exp + e] = nxt.get(exp + e, 0) - s * c
        out = {exp: c for exp, c in nxt.items() if c}
    return dtrunc(out, n)


def dpoch_inf(a: Monomial, B: Monomial, n: int) -> dict:
    out = {0: _ONE}
    k = 1
    while True:
        e = a.exp + (k - 1) * B.exp
        if e >= n and e > 0:
            break
        s = a.sign * B.sign ** (k - 1)
        nxt = dict(out)
        for exp, c in out.items():
            if exp + e < n:
                nxt[exp + e] = nxt.get(exp + e, 0) - s * c
        out = {exp: c for exp, c in nxt.items() if c}
        k += 1
    return out


def pentagonal(n: int) -> dict:
    """(q; q)_inf below order n, by the pentagonal-number sum."""
    out: dict = {}
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                out[e] = Fraction((-1) ** (kk % 2))
                hit = True
        if not hit and k:
            break
        k += 1
    return out


def _pad(*monos: Monomial) -> int:
    return 8 + 2 * sum(abs(m.exp) for m in monos)


def om(x: Monomial, B: Monomial, z: Monomial, n: int) -> dict:
    """m(x, q, z) at q = B by direct summation, trusted below n."""
    w = n + _pad(x, B, z)
    total: dict = {}
    for direction in (1, -1):
        misses = 0
        r = 0 if direction == 1 else -1
        while misses < 8:
            binom = r * (r - 1) // 2
            me = binom * B.exp + r * z.exp
            ue = (r - 1) * B.exp + x.exp + z.exp
            low = me + (-ue if ue < 0 else 0)
            if low < w:
                misses = 0
                ms = _sgn(-1, r) * _sgn(B.sign, binom) * _sgn(z.sign, r)
                us = _sgn(B.sign, r - 1) * x.sign * z.sign
                geo = dgeom(us, ue, w - min(me, 0))
                term = {e + me: ms * c for e, c in geo.items() if e + me < w}
                total = dadd(total, term)
            else:
                misses += 1
            r += direction
    return dtrunc(dmul(total, dinv(djtheta(z, B, w), w), n), n)


def ok_(x: Monomial, B: Monomial, n: int) -> dict:
    """k(x, q) at q = B by direct summation, trusted below n."""
    w = n + _pad(x, B)
    total: dict = {}
    for direction in (1, -1):
        misses = 0
        nn = 0 if direction == 1 else -1
        while misses < 8:
            e = nn * (2 * nn + 1)
            me = e * B.exp
            ue = 2 * nn * B.exp + 2 * x.exp
            low = me + (-ue if ue < 0 else 0)
            if low < w:
                misses = 0
                ms = B.sign**e
                geo = dgeom(1, ue, w - min(me, 0))
                term = {ee + me: ms * c for ee, c in geo.items() if ee + me < w}
                total = dadd(total, term)
            else:
                misses += 1
            nn += direction
    pref = dmul({-x.exp: Fraction(x.sign)}, dinv(djtheta(-B, B**4, w), w), w)
    return dtrunc(dmul(total, pref, n), n)


def og2(x: Monomial, B: Monomial, n: int) -> dict:
    """g2(x, q) at q = B by direct summation, trusted below n."""
    w = n + _pad(x, B)
    total: dict = {}
    for direction in (1, -1):
        misses = 0
        nn = 0 if direction == 1 else -1
        while misses < 8:
            e = nn * (nn + 1)
            me = e * B.exp
            ue = x.exp + nn * B.exp
            low = me + (-ue if ue < 0 else 0)
            if low < w:
                misses = 0
                ms = _sgn(-1, nn) * _sgn(B.sign, e)
                geo = dgeom(x.sign * _sgn(B.sign, nn), ue, w - min(me, 0))
                term = {ee + me: ms * c for ee, c in geo.items() if ee + me < w}
                total = dadd(total, term)
            else:
                misses += 1
            nn += direction
    return dtrunc(dmul(total, dinv(djtheta(B, B**2, w), w), n), n)


def oX(B: Monomial, n: int) -> dict:
    """X(q) at q = B by direct summation of the Eulerian series."""
    total: dict = {}
    nn = 0
    while nn * nn * B.exp < n:
        den = dpoch(-B, B, 2 * nn, n)
        mono = B ** (nn * nn)
        term = dmul({mono.exp: Fraction((-1) ** nn * mono.sign)}, dinv(den, n), n)
        total = dadd(total, term)
        nn += 1
    return dtrunc(total, n)


def ochi(B: Monomial, n: int) -> dict:
    """chi(q) at q = B by direct summation of the Eulerian series."""
    total: dict = {}
    nn = 0
    while (nn + 1) * (nn + 1) * B.exp < n:
        den = dpoch(-B, B, 2 * nn + 1, n)
        mono = B ** ((nn + 1) * (nn + 1))
        term = dmul({mono.exp: Fraction((-1) ** nn * mono.sign)}, dinv(den, n), n)
        total = dadd(total, term)
        nn += 1
    return dtrunc(total, n)

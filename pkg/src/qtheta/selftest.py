"""Built-in property suite backing the `selftest` CLI command.

Each check group returns (name, ok, detail) triples; the suite covers
the ring axioms, the theta oracles, the Appell-Lerch transformation
laws on generic sampled parameters, brute-force oracle equivalence, and
the power-of-2 denominator audit over every registry identity.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import oracles
from .appell import (
    appell_m,
    delta_term,
    g2,
    g2_pole_index,
    is_generic_m,
    lambda_term,
    m_pole_index,
    small_k,
    small_k_pole_index,
)
from .identities import builtin_registry, eval_sides, verify_all
from .mock import mt_chi, mt_X
from .monomial import Monomial
from .series import EvalContext, LaurentSeries
from .theta import Jm, jtheta

CheckResult = tuple[str, bool, str]

_SEED = 0x5E11E5


def _rand_series(rng: random.Random, order: int) -> LaurentSeries:
    lo = rng.randint(-3, 3)
    terms = {
        lo + i: Fraction(rng.randint(-5, 5), 2 ** rng.randint(0, 3))
        for i in range(rng.randint(1, 8))
    }
    return LaurentSeries.from_terms(terms, order)


def _rand_monomial(rng: random.Random, max_exp: int = 8, allow_nonpos: bool = True) -> Monomial:
    lo = -max_exp if allow_nonpos else 1
    return Monomial(rng.choice((1, -1)), rng.randint(lo, max_exp))


def _eq(f: LaurentSeries, g: LaurentSeries, upto: int):
    return f.first_mismatch(g, min(upto, f.valid_to, g.valid_to))


def check_ring_axioms(order: int) -> list[CheckResult]:
    rng = random.Random(_SEED)
    out = []
    for trial in range(10):
        f, g, h = (_rand_series(rng, order) for _ in range(3))
        checks = [
            ("add-assoc", (f.add(g)).add(h), f.add(g.add(h))),
            ("mul-comm", f.mul(g), g.mul(f)),
            ("distrib", f.mul(g.add(h)), f.mul(g).add(f.mul(h))),
        ]
        for label, a, b in checks:
            mm = _eq(a, b, order)
            out.append((f"ring/{label}[{trial}]", mm is None, str(mm)))
        inv_target = f if any(f.coeffs) else f.add(LaurentSeries.one(order))
        prod = inv_target.mul(inv_target.invert())
        mm = _eq(prod, LaurentSeries.one(order), min(order, prod.valid_to))
        out.append((f"ring/invert-roundtrip[{trial}]", mm is None, str(mm)))
    return out


_THETA_PAIRS = [
    (Monomial(1, 1), Monomial(1, 3)),
    (Monomial(1, 8), Monomial(1, 40)),
    (Monomial(1, -32), Monomial(1, 40)),
    (Monomial(-1, 2), Monomial(-1, 10)),
    (Monomial(-1, 6), Monomial(1, 20)),
    (Monomial(1, 12), Monomial(1, 40)),
    (Monomial(1, 4), Monomial(-1, 10)),
    (Monomial(1, -3), Monomial(1, 7)),
    (Monomial(-1, 0), Monomial(1, 5)),
    (Monomial(1, 50), Monomial(1, 40)),
]


def check_triple_product(order: int) -> list[CheckResult]:
    ctx = EvalContext(order)
    out = []
    for x, B in _THETA_PAIRS:
        jt = jtheta(x, B, ctx)
        upto = min(order, jt.valid_to)
        want = oracles.djtheta(x, B, upto)
        ok = all(jt.coeff(e) == want.get(e, 0) for e in range(jt.lo, upto))
        out.append((f"theta/triple-product j({x}, {B})", ok, ""))
    return out


def check_theta_symmetries(order: int) -> list[CheckResult]:
    ctx = EvalContext(order)
    out = []
    for x, B in _THETA_PAIRS:
        if x.power_in(B) is not None:
            continue
        shifted = jtheta(B * x, B, ctx)
        ref = jtheta(x, B, ctx).times_monomial(-x.sign, -x.exp)
        mm = _eq(shifted, ref, order)
        out.append((f"theta/quasi-periodicity j({x}, {B})", mm is None, str(mm)))
        mm = _eq(jtheta(x, B, ctx), jtheta(B / x, B, ctx), order)
        out.append((f"theta/inversion-symmetry j({x}, {B})", mm is None, str(mm)))
    # vanishing is exact precisely at integral powers of the base
    for B in (Monomial(1, 5), Monomial(-1, 10)):
        for k in range(-3, 4):
            hit = jtheta(B**k, B, ctx).is_zero_to_order()
            near1 = jtheta(-(B**k), B, ctx).is_zero_to_order()
            near2 = jtheta(Monomial((B**k).sign, (B**k).exp + 1), B, ctx).is_zero_to_order()
            ok = hit and not near1 and not near2
            out.append((f"theta/vanishing-exactness base={B} k={k}", ok, ""))
    return out


def _sample_m_tuples(rng: random.Random, count: int, predicate) -> list[tuple]:
    found = []
    while len(found) < count:
        B = Monomial(rng.choice((1, -1)), rng.randint(1, 10))
        x = _rand_monomial(rng)
        z = _rand_monomial(rng)
        if predicate(x, B, z):
            found.append((x, B, z))
    return found


def check_m_laws(order: int, samples: int = 5) -> list[CheckResult]:
    """Laws (m1)-(m5) on rejection-sampled generic parameter tuples."""
    rng = random.Random(_SEED + 1)
    ctx = EvalContext(order)
    out = []

    def generic_m1(x, B, z):
        return is_generic_m(x, B, z) and is_generic_m(x.inverse(), B, z.inverse())

    for x, B, z in _sample_m_tuples(rng, samples, generic_m1):
        lhs = appell_m(x, B, z, ctx)
        rhs = appell_m(x.inverse(), B, z.inverse(), ctx).times_monomial(x.sign, -x.exp)
        mm = _eq(lhs, rhs, order)
        out.append((f"law/m1 ({x},{B},{z})", mm is None, str(mm)))

    def generic_m2(x, B, z1, z0):
        if not (is_generic_m(x, B, z1) and is_generic_m(x, B, z0)):
            return False
        return all(
            m.power_in(B) is None for m in (z0, z1, x * z0, x * z1)
        )

    found = 0
    while found < samples:
        B = Monomial(rng.choice((1, -1)), rng.randint(1, 10))
        x, z1, z0 = (_rand_monomial(rng) for _ in range(3))
        if not generic_m2(x, B, z1, z0):
            continue
        found += 1
        lhs = appell_m(x, B, z1, ctx)
        rhs = appell_m(x, B, z0, ctx).add(delta_term(x, B, z1, z0, ctx))
        mm = _eq(lhs, rhs, order)
        out.append((f"law/m2 ({x},{B},{z1},{z0})", mm is None, str(mm)))

    def generic_m3(x, B, z):
        if not is_generic_m(x, B, z):
            return False
        B4, z4 = B**4, z**4
        if not is_generic_m(-(B * x**2), B4, z4):
            return False
        if not is_generic_m(-(x**2 / B), B4, z4):
            return False
        for mono, base in (((x * z), B), (z**4, B**4), (-(B * x**2 * z**4), B**2)):
            if mono.power_in(base) is not None:
                return False
        return True

    for x, B, z in _sample_m_tuples(rng, samples, generic_m3):
        lhs = appell_m(x, B, z, ctx)
        rhs = appell_m(-(B * x**2), B**4, z**4, ctx)
        corr = appell_m(-(x**2 / B), B**4, z**4, ctx).times_monomial(
            x.sign * B.sign, x.exp - B.exp
        )
        rhs = rhs.sub(corr).sub(lambda_term(x, B, z, ctx))
        mm = _eq(lhs, rhs, order)
        out.append((f"law/m3 ({x},{B},{z})", mm is None, str(mm)))

    def generic_m4(x, B, _z=None):
        return g2_pole_index(x, B) is None and is_generic_m((x**-2) * B, B**2, x)

    found = 0
    while found < samples:
        B = Monomial(rng.choice((1, -1)), rng.randint(1, 10))
        x = _rand_monomial(rng)
        if not generic_m4(x, B):
            continue
        found += 1
        lhs = g2(x, B, ctx)
        rhs = appell_m((x**-2) * B, B**2, x, ctx).times_monomial(-x.sign, -x.exp)
        mm = _eq(lhs, rhs, order)
        out.append((f"law/m4 ({x},{B})", mm is None, str(mm)))

    def generic_m5(x, B):
        if small_k_pole_index(x, B) is not None:
            return False
        if not is_generic_m(-(x**2), B, x**-2):
            return False
        return (x**2).power_in(B) is None

    found = 0
    while found < samples:
        B = Monomial(rng.choice((1, -1)), rng.randint(1, 10))
        x = _rand_monomial(rng)
        if not generic_m5(x, B):
            continue
        found += 1
        lhs = small_k(x, B, ctx).times_monomial(x.sign, x.exp)
        quot = Jm(1, B, ctx).pow_int(4).scale(Fraction(1, 2))
        quot = quot.mul(Jm(2, B, ctx).pow_int(2).mul(jtheta(x**2, B, ctx)).invert())
        rhs = appell_m(-(x**2), B, x**-2, ctx).add(quot)
        mm = _eq(lhs, rhs, order)
        out.append((f"law/m5 ({x},{B})", mm is None, str(mm)))
    return out


_M_TUPLES = [
    (Monomial(-1, 4), Monomial(-1, 10), Monomial(1, 8)),
    (Monomial(1, 2), Monomial(-1, 10), Monomial(1, 4)),
    (Monomial(1, 18), Monomial(1, 40), Monomial(1, 32)),
    (Monomial(1, 18), Monomial(1, 40), Monomial(1, 1)),
    (Monomial(1, 2), Monomial(1, 40), Monomial(1, -32)),
    (Monomial(1, 2), Monomial(1, 40), Monomial(1, 9)),
    (Monomial(1, 14), Monomial(1, 40), Monomial(1, 16)),
    (Monomial(1, 14), Monomial(1, 40), Monomial(1, 3)),
    (Monomial(1, 6), Monomial(1, 40), Monomial(1, -16)),
    (Monomial(1, 6), Monomial(1, 40), Monomial(1, 7)),
    (Monomial(-1, 4), Monomial(-1, 10), Monomial(1, -4)),
]
_K_TUPLES = [(Monomial(-1, 2), Monomial(-1, 10)), (Monomial(1, 4), Monomial(-1, 10))]
_G2_TUPLES = [
    (Monomial(1, 1), Monomial(1, 20)),
    (Monomial(1, 9), Monomial(1, 20)),
    (Monomial(1, 3), Monomial(1, 20)),
    (Monomial(1, 7), Monomial(1, 20)),
]


def check_oracle_equivalence(order: int) -> list[CheckResult]:
    """Engine expansions vs the naive brute-force implementations."""
    order = min(order, 80)
    ctx = EvalContext(order)
    out = []

    def against(label, series, want):
        upto = min(order, series.valid_to)
        ok = all(series.coeff(e) == want.get(e, 0) for e in range(series.lo, upto))
        ok = ok and all(e >= series.lo for e in want if e < upto)
        out.append((label, ok, ""))

    for x, B, z in _M_TUPLES:
        against(f"oracle/m({x},{B},{z})", appell_m(x, B, z, ctx), oracles.om(x, B, z, order))
    for x, B in _K_TUPLES:
        against(f"oracle/k({x},{B})", small_k(x, B, ctx), oracles.ok_(x, B, order))
    for x, B in _G2_TUPLES:
        against(f"oracle/g2({x},{B})", g2(x, B, ctx), oracles.og2(x, B, order))
    for B in (Monomial(-1, 2), Monomial(1, 1)):
        against(f"oracle/X({B})", mt_X(B, ctx), oracles.oX(B, order))
        against(f"oracle/chi({B})", mt_chi(B, ctx), oracles.ochi(B, order))
    return out


def _pow2(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def check_denominators(order: int) -> list[CheckResult]:
    """Every coefficient of every registry side has a power-of-2 denominator."""
    ctx = EvalContext(order)
    out = []
    for ident in builtin_registry():
        lhs, rhs = eval_sides(ident, ctx)
        ok = all(_pow2(c.denominator) for s in (lhs, rhs) for c in s.coeffs)
        out.append((f"denominators/{ident.name}", ok, ""))
    return out


def check_registry(order: int) -> list[CheckResult]:
    return [
        (f"registry/{r.name}", r.status == "equal", r.status)
        for r in verify_all(EvalContext(order))
    ]


def run_selftest(order: int) -> list[CheckResult]:
    """The full property suite at the given working order."""
    results: list[CheckResult] = []
    results += check_ring_axioms(min(order, 60))
    results += check_triple_product(order)
    results += check_theta_symmetries(order)
    results += check_m_laws(min(order, 80))
    results += check_oracle_equivalence(order)
    results += check_registry(order)
    results += check_denominators(order)
    return results

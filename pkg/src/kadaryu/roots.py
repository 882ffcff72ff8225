"""Real-root isolation and the root-layout verifier for the determinant
Chebyshev series.

Everything here is exact: Sturm chains over Q isolate roots in rational
intervals; values at the algebraic sample points 2cos(r pi / m) are handled
either symbolically (reduction modulo the minimal polynomial of the point)
or by certified rational enclosures (Machin bounds for pi, alternating
Taylor bounds for cos, interval Horner evaluation).  A sign that cannot be
separated from zero within the refinement budget is reported as
"inconclusive", never silently passed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cheby import ChebSeries, cheb_u
from .exactmath import (Polynomial, Q, poly_gcd, poly_squarefree_part,
                        yun_squarefree_decomposition)

# ---------------------------------------------------------------------------
# Sturm machinery
# ---------------------------------------------------------------------------


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_changes(values) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _chain_at(chain, x) -> int:
    if x == math.inf:
        return _sign_changes([f.lc for f in chain if not f.is_zero()])
    if x == -math.inf:
        return _sign_changes([f.lc * (-1) ** f.degree for f in chain if not f.is_zero()])
    return _sign_changes([f(x) for f in chain])


def sturm_count(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi]; lo/hi rational or +-inf."""
    sq = poly_squarefree_part(p)
    if sq.degree < 1:
        return 0
    chain = sturm_chain(sq)
    return _chain_at(chain, lo) - _chain_at(chain, hi)


@dataclass
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    poly: Polynomial
    multiplicity: int

    def refine(self, width: Fraction) -> "IsolatingInterval":
        lo, hi, f = self.lo, self.hi, self.poly
        while hi - lo > width:
            mid = (lo + hi) / 2
            if f(mid) == 0:
                lo, hi = mid - width / 4, mid + width / 4
                break
            if sturm_count(f, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return IsolatingInterval(lo, hi, f, self.multiplicity)


def _root_bound(p: Polynomial) -> Fraction:
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Q(0))


def sturm_isolate(p: Polynomial) -> list[IsolatingInterval]:
    """All distinct real roots with pairwise-disjoint isolating intervals
    and multiplicities (read off the square-free decomposition)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    sq = poly_squarefree_part(p)
    if sq.degree < 1:
        return []
    factors = [(f, m) for f, m in yun_squarefree_decomposition(p) if f.degree >= 1]
    out: list[IsolatingInterval] = []
    b = _root_bound(sq)
    stack = [(-b - 1, b)]
    while stack:
        lo, hi = stack.pop()
        count = sturm_count(sq, lo, hi)
        if count == 0:
            continue
        if count == 1:
            mults = [m for f, m in factors if sturm_count(f, lo, hi) == 1]
            assert len(mults) == 1
            out.append(IsolatingInterval(Q(lo), Q(hi), sq, mults[0]))
            continue
        mid = Fraction(lo + hi, 2)
        if sq(mid) == 0:
            w = (hi - lo) / (4 * sq.degree + 4)
            while sturm_count(sq, mid - w, mid + w) > 1:
                w /= 2
            stack.append((mid - w, mid + w))
            stack.append((lo, mid - w))
            stack.append((mid + w, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort(key=lambda iv: iv.lo)
    return out


def squarefree_check(p: Polynomial) -> bool:
    return p.degree < 1 or poly_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# certified enclosures of 2 cos(r pi / m)
# ---------------------------------------------------------------------------


def pi_bounds(terms: int) -> tuple[Fraction, Fraction]:
    """Machin: pi/4 = 4 atan(1/5) - atan(1/239), alternating tails."""

    def atan_bounds(inv: int, terms: int):
        x = Fraction(1, inv)
        s = Q(0)
        term = x
        for k in range(terms):
            s += (-1) ** k * term / (2 * k + 1)
            term *= x * x
        # alternating with decreasing terms: error below the next term
        nxt = term / (2 * terms + 1)
        return s - nxt, s + nxt

    a5_lo, a5_hi = atan_bounds(5, terms)
    a239_lo, a239_hi = atan_bounds(239, terms)
    return 4 * (4 * a5_lo - a239_hi), 4 * (4 * a5_hi - a239_lo)


def _cos_bounds(x: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """cos(x) for 0 <= x <= 4 by the alternating Taylor series."""
    s = Q(0)
    t = Q(1)
    for k in range(terms):
        s += t
        t = -t * x * x / ((2 * k + 1) * (2 * k + 2))
    err = abs(t)
    return s - err, s + err


def cos_point_enclosure(r: int, m: int, terms: int = 12) -> tuple[Fraction, Fraction]:
    """Rational enclosure of 2 cos(r pi / m), 0 < r <= m."""
    if not 0 < r <= m:
        raise ValueError("need 0 < r <= m")
    pi_lo, pi_hi = pi_bounds(max(3, terms // 3))
    x_lo, x_hi = r * pi_lo / m, r * pi_hi / m
    # cos is decreasing on [0, pi]
    lo = _cos_bounds(x_hi, terms)[0]
    hi = _cos_bounds(x_lo, terms)[1]
    return 2 * lo, 2 * hi


def _interval_eval(p: Polynomial, lo: Fraction, hi: Fraction):
    """Interval Horner; exact over Q."""
    acc_lo = acc_hi = Q(0)
    for c in reversed(p.coeffs):
        cands = [acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi]
        acc_lo, acc_hi = min(cands) + c, max(cands) + c
    return acc_lo, acc_hi


def sign_at_2cos(p: Polynomial, r: int, m: int, budget: int = 64):
    """Certified sign of p(2cos(r pi/m)): +1, -1, 0 (exact), or None.

    Exact zeroes are detected via the minimal polynomial; otherwise the
    enclosure is tightened until it excludes zero or the budget runs out.
    """
    h = minimal_poly_2cos(r, m)
    if (p % h).is_zero():
        return 0
    terms = 8
    for _ in range(budget):
        lo, hi = cos_point_enclosure(r, m, terms)
        vlo, vhi = _interval_eval(p, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        terms += 6
    return None


# ---------------------------------------------------------------------------
# minimal polynomials of 2 cos(r pi / m)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _q_factor(d: int) -> Polynomial:
    """Monic factor of P^U_d with roots 2cos(j pi/d), gcd(j, d) = 1."""
    q = cheb_u(d)
    for e in range(2, d):
        if d % e == 0:
            q = q.exact_div(_q_factor(e))
    return q.monic()


@lru_cache(maxsize=None)
def minimal_poly_2cos(r: int, m: int) -> Polynomial:
    """Minimal polynomial over Q of 2 cos(r pi / m), 0 < r < 2m."""
    g = math.gcd(r, m)
    r2, m2 = r // g, m // g
    if m2 == 1:  # cos of a multiple of pi
        return Polynomial([Q(2 if r2 % 2 else -2), Q(1)])
    q = _q_factor(m2)
    # among the roots 2cos(j pi/m2) of q, the Galois conjugates of our point
    # share the parity of j; P^U_{m2-1} takes value -(-1)^j there
    split = cheb_u(m2 - 1) + Polynomial.const(Q((-1) ** r2))
    if split.is_zero() or (split % q).is_zero():
        return q
    h = poly_gcd(q, split)
    if h.degree < 1:
        raise RuntimeError(f"minimal-polynomial split failed for 2cos({r}pi/{m})")
    return h


def lemma_roots_check(series: ChebSeries, k: int, kp: int, r: int) -> bool:
    """P_{N+k} = (-1)^r P_{N-kp} at 2cos(r pi/(k+kp)), checked symbolically."""
    if not (0 < r < k + kp):
        raise ValueError("need 0 < r < k + k'")
    h = minimal_poly_2cos(r, k + kp)
    diff = series.term(series.anchor + k) - series.term(series.anchor - kp) * Q((-1) ** r)
    return (diff % h).is_zero()


# ---------------------------------------------------------------------------
# the closed-form determinant series used by the layout verifier
# ---------------------------------------------------------------------------


def _series_from_terms(anchor: int, term) -> ChebSeries:
    return ChebSeries(anchor, term(0), term(1))


def column_series(l: int) -> ChebSeries:
    """P for the single-column partition (l+2)^T, anchored at n = l+4."""
    return _series_from_terms(
        l + 4, lambda k: cheb_u(k + 3) - (l + 1) * (cheb_u(k + 2) + cheb_u(k + 1)))


def row_series(l: int) -> ChebSeries:
    """P for the single-row partition (l+2), anchored at n = l+4."""
    return _series_from_terms(
        l + 4,
        lambda k: (cheb_u(k + 4) + (3 * l + 1) * cheb_u(k + 3)
                   + (2 * l * l - l - 2) * cheb_u(k + 2)
                   - (l + 1) * ((2 * l - 1) * cheb_u(k + 1) + cheb_u(k))))


def hook_series(l: int) -> ChebSeries:
    """P for the hook (l+1, 1), anchored at n = l+4 (valid l >= 2)."""

    def term(k):
        return (cheb_u(k + 6) + 2 * (2 * l - 3) * cheb_u(k + 5)
                + (5 * l * l - 21 * l + 13) * cheb_u(k + 4)
                + (l - 2) * ((2 * l * l - 17 * l + 7) * cheb_u(k + 3)
                             - (6 * l * l - 19 * l + 5) * cheb_u(k + 2))
                + 4 * (l ** 3 - 6 * l * l + 8 * l - 1) * cheb_u(k + 1)
                - (l - 3) * (2 * l * l - 4 * l - 1) * cheb_u(k)
                - (3 * l * l - 3 * l - 4) * cheb_u(k - 1)
                - (l + 1) * cheb_u(k - 2))

    return _series_from_terms(l + 4, term)


def hook_t_series(l: int) -> ChebSeries:
    """P for the conjugate hook (2, 1^l), anchored at n = l+4 (valid l >= 1)."""

    def term(k):
        return (cheb_u(k + 5) - 2 * (l - 1) * cheb_u(k + 4)
                + l * (l - 5) * cheb_u(k + 3) + 3 * l * (l - 1) * cheb_u(k + 2)
                + 2 * (l * l - 2 * l - 1) * cheb_u(k + 1)
                + l * (l - 1) * cheb_u(k) - (l + 1) * cheb_u(k - 1))

    return _series_from_terms(l + 4, term)


def family_series(l: int, lam: tuple[int, ...]) -> ChebSeries:
    lam = tuple(lam)
    # column before row: at l = -1 the two patterns coincide and only the
    # column form remains valid there
    if lam == (1,) * (l + 2):
        return column_series(l)
    if lam == (l + 2,):
        return row_series(l)
    # at l = 1 the hook and its conjugate coincide; the conjugate-hook form
    # is the one valid down to l = 1
    if lam == (2,) + (1,) * l:
        return hook_t_series(l)
    if lam == (l + 1, 1):
        return hook_series(l)
    raise ValueError(f"no closed-form series for lambda = {lam} at l = {l}")


# ---------------------------------------------------------------------------
# layout verification
# ---------------------------------------------------------------------------


def _claim(claims, cid, ok, witness=None):
    status = "pass" if ok is True else ("fail" if ok is False else "inconclusive")
    claims.append({"id": cid, "status": status, "witness": witness})


def _certified_separators(p: Polynomial, m: int, signs: dict[int, int],
                          budget: int = 64):
    """For each r in signs, a rational point q_r near 2cos(r pi/m) with the
    exact (rationally evaluated) sign signs[r]; None on budget exhaustion."""
    out = {}
    for r, want in signs.items():
        terms = 10
        found = None
        for _ in range(budget):
            lo, hi = cos_point_enclosure(r, m, terms)
            mid = (lo + hi) / 2
            v = p(mid)
            if v != 0 and (1 if v > 0 else -1) == want:
                found = mid
                break
            terms += 6
        if found is None:
            return None
        out[r] = found
    return out


def _interior_layout(claims, cid, p: Polynomial, m: int, signs: dict[int, int],
                     left, right, expect_left: int = 1, expect_right: int = 1):
    """One root between consecutive certified sample points.

    signs maps r -> expected sign at 2cos(r pi/m) for the interior points;
    left/right are exact rational endpoints appended outside them
    (right > all sample points > left).  The end gaps (largest sample
    point, right) and (left, smallest sample point) expect expect_right
    resp. expect_left roots; all inner gaps expect exactly one.
    """
    seps = _certified_separators(p, m, signs)
    if seps is None:
        _claim(claims, cid, None, "enclosure budget exhausted")
        return
    pts = [right] + [seps[r] for r in sorted(signs)] + [left]
    expected = [expect_right] + [1] * (len(pts) - 3) + [expect_left]
    ok = all(e is None or sturm_count(p, b, a) == e
             for (a, b), e in zip(zip(pts, pts[1:]), expected))
    _claim(claims, cid, ok, [str(float(x)) for x in pts])


def verify_root_layout(l: int, lam: tuple[int, ...], k: int) -> dict:
    """Check the asserted root distribution of the degree-(k+..) member
    P_{l+4+k} of the closed-form family for lam; returns a claims report."""
    lam = tuple(lam)
    series = family_series(l, lam)
    p = series.term(l + 4 + k)
    claims: list[dict] = []

    if lam == (1,) * (l + 2):
        m = k + 2
        _claim(claims, "degree", p.degree == k + 2, p.degree)
        for r in range(1, k + 2):
            ok = ((p - Polynomial.const(Q((-1) ** r * (l + 2))))
                  % minimal_poly_2cos(r, m)).is_zero()
            _claim(claims, f"value-at-2cos({r}pi/{m})", ok)
        _claim(claims, "value-at--2", p(-2) == (-1) ** (k + 2) * (4 + k + l), str(p(-2)))
        _claim(claims, "value-at-l+2", p(l + 2) == -cheb_u(k)(l + 2), str(p(l + 2)))
        if k >= 1:
            _claim(claims, "negative-at-l+2", p(l + 2) < 0)
            # no root between the largest sample point and 2
            _interior_layout(claims, "interleaving", p, m,
                             {r: (-1) ** r for r in range(1, k + 2)},
                             left=Q(-2), right=Q(2), expect_right=0)
            _claim(claims, "root-beyond-l+2", sturm_count(p, Q(l + 2), math.inf) == 1)
            _claim(claims, "total-real-roots",
                   sturm_count(p, -math.inf, math.inf) == k + 2)

    elif lam == (l + 2,):
        m = k + 2
        _claim(claims, "degree", p.degree == k + 3, p.degree)
        lin = Polynomial([Q(2 * l), Q(1)])
        for r in range(1, k + 2):
            ok = ((p - lin * Q((-1) ** r * (l + 2)))
                  % minimal_poly_2cos(r, m)).is_zero()
            _claim(claims, f"value-at-2cos({r}pi/{m})", ok)
        _claim(claims, "value-at-2", p(2) == 2 * (l + 1) * (l + 2), str(p(2)))
        if l >= 1 and k >= 1:
            # x_r + 2l > 0 on (-2, 2] once l >= 1, so signs alternate;
            # the claimed interior roots sit strictly above the smallest
            # sample point, with one more in the top gap below 2
            full = l > 1 and l + 4 + k > 6
            _interior_layout(claims, "interleaving", p, m,
                             {r: (-1) ** r for r in range(1, k + 2)},
                             left=Q(-2), right=Q(2),
                             expect_left=0 if full else None)
        if l > 1 and l + 4 + k > 6:
            _claim(claims, "root-below--2(l+1)",
                   sturm_count(p, -math.inf, Q(-2 * (l + 1))) == 1)
            _claim(claims, "root-in-(-(l+1),-l)",
                   sturm_count(p, Q(-(l + 1)), Q(-l)) == 1)
            _claim(claims, "no-root-in-(-l,-2)",
                   sturm_count(p, Q(-l), Q(-2)) == 0)

    elif lam == (l + 1, 1):
        m = k + 1
        _claim(claims, "degree", p.degree == k + 5, p.degree)
        signs = {}
        for r in range(1, k + 1):
            s = sign_at_2cos(p, r, m)
            want = -((-1) ** r)
            _claim(claims, f"sign-at-2cos({r}pi/{m})",
                   None if s is None else s == want, s)
            signs[r] = want
        if l > 4:
            _claim(claims, "sign-at-2", p(2) < 0, str(p(2)))
            _claim(claims, "sign-at--2", -((-1) ** (k + 1)) * p(-2) > 0, str(p(-2)))
            _interior_layout(claims, "interleaving", p, m, signs,
                             left=Q(-2), right=Q(2))
            _claim(claims, "root-beyond-2", sturm_count(p, Q(2), math.inf) == 1)
            _claim(claims, "root-below--2l",
                   sturm_count(p, -math.inf, Q(-2 * l)) == 1)
            _claim(claims, "root-in-(-2l,-l+1)",
                   sturm_count(p, Q(-2 * l), Q(-l + 1)) == 1)
            _claim(claims, "root-in-(-l+2,-l+3)",
                   sturm_count(p, Q(-l + 2), Q(-l + 3)) == 1)

    elif lam == (2,) + (1,) * l:
        m = k + 1
        _claim(claims, "degree", p.degree == k + 4, p.degree)
        signs = {}
        for r in range(1, k + 1):
            s = sign_at_2cos(p, r, m)
            want = (-1) ** r
            _claim(claims, f"sign-at-2cos({r}pi/{m})",
                   None if s is None else s == want, s)
            signs[r] = want
        if l > 3:
            _claim(claims, "sign-at-2", p(2) > 0, str(p(2)))
            _claim(claims, "sign-at--2", ((-1) ** (k + 1)) * p(-2) > 0, str(p(-2)))
            _interior_layout(claims, "interleaving", p, m, signs,
                             left=Q(-2), right=Q(2))
            _claim(claims, "root-below--2", sturm_count(p, -math.inf, Q(-2)) == 1)
            _claim(claims, "root-in-(l-1,l)", sturm_count(p, Q(l - 1), Q(l)) == 1)
            _claim(claims, "root-beyond-l+1", sturm_count(p, Q(l + 1), math.inf) == 1)

    else:
        raise ValueError(f"no layout claims for lambda = {lam}")

    status = "pass"
    if any(c["status"] == "fail" for c in claims):
        status = "fail"
    elif any(c["status"] == "inconclusive" for c in claims):
        status = "inconclusive"
    return {"l": l, "lambda": list(lam), "k": k, "status": status, "claims": claims}

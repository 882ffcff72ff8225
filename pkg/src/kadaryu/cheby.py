"""Chebyshev-type polynomial series.

A series here is any two-sided sequence satisfying

    P_{n+1} = a * P_n - P_{n-1}

(some references print the recursion with a plus sign; the minus sign is the
one consistent with P_2 = a, P_3 = a^2 - 1 and with the determinant
recursions this package verifies).  ``cheb_u`` is the normalised branch with
P_0 = 0, P_1 = 1; it satisfies P^U_n(x) = U_{n-1}(x/2) in terms of the
classical Chebyshev U and extends to negative indices by P^U_{-n} = -P^U_n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactmath import Polynomial, Q, poly_gcd

_A = Polynomial.x()


@lru_cache(maxsize=None)
def _cheb_u_nonneg(n: int) -> Polynomial:
    if n == 0:
        return Polynomial()
    if n == 1:
        return Polynomial.one()
    return _A * _cheb_u_nonneg(n - 1) - _cheb_u_nonneg(n - 2)


def cheb_u(n: int) -> Polynomial:
    """Normalised Chebyshev branch; P^U_4 = a(a^2-2), P^U_{-n} = -P^U_n."""
    if n < 0:
        return -_cheb_u_nonneg(-n)
    return _cheb_u_nonneg(n)


def quantum_number(n: int) -> Polynomial:
    """[n] as a polynomial in the loop parameter delta = [2]."""
    return cheb_u(n)


class ChebSeries:
    """A Chebyshev series pinned by two consecutive anchor terms.

    term(N) = pN, term(N+1) = pN1; everything else follows from the
    three-term recursion, in both directions.
    """

    __slots__ = ("anchor", "pN", "pN1", "_memo")

    def __init__(self, anchor: int, pN: Polynomial, pN1: Polynomial):
        self.anchor = anchor
        self.pN = pN
        self.pN1 = pN1
        self._memo = {anchor: pN, anchor + 1: pN1}

    def term(self, n: int) -> Polynomial:
        memo = self._memo
        if n in memo:
            return memo[n]
        if n > self.anchor + 1:
            top = max(k for k in memo if k <= n)
            p0, p1 = memo[top - 1], memo[top]
            for k in range(top + 1, n + 1):
                p0, p1 = p1, _A * p1 - p0
                memo[k] = p1
            return p1
        bot = min(k for k in memo if k >= n)
        p0, p1 = memo[bot], memo[bot + 1]
        for k in range(bot - 1, n - 1, -1):
            p0, p1 = _A * p0 - p1, p0
            memo[k] = p0
        return p0

    def __eq__(self, other):
        if not isinstance(other, ChebSeries):
            return NotImplemented
        return (self.term(other.anchor) == other.pN
                and self.term(other.anchor + 1) == other.pN1)

    def to_json(self) -> dict:
        return {"anchor": self.anchor, "pN": self.pN.to_json(), "pN1": self.pN1.to_json()}

    @staticmethod
    def from_json(d: dict) -> "ChebSeries":
        return ChebSeries(d["anchor"], Polynomial.from_json(d["pN"]),
                          Polynomial.from_json(d["pN1"]))

    def __repr__(self):
        return f"ChebSeries(N={self.anchor}, P_N={self.pN}, P_N+1={self.pN1})"


CLASSICAL = ChebSeries(0, Polynomial(), Polynomial.one())


def series_term(s: ChebSeries, n: int) -> Polynomial:
    return s.term(n)


def ramping_check(s: ChebSeries) -> tuple[bool, str]:
    """True iff the anchors are coprime, monic, with degrees d and d+1."""
    pN, pN1 = s.pN, s.pN1
    if pN.is_zero() or pN1.is_zero():
        return False, "zero anchor"
    if not pN.is_monic() or not pN1.is_monic():
        return False, "anchor not monic"
    if pN1.degree != pN.degree + 1:
        return False, f"degrees {pN.degree}, {pN1.degree} do not step by one"
    if poly_gcd(pN, pN1).degree != 0:
        return False, "anchors share a factor"
    return True, "ok"


def series_reduce(s: ChebSeries) -> tuple[Polynomial, ChebSeries]:
    """Split off the maximal monic common factor of the two anchors."""
    if s.pN.is_zero() and s.pN1.is_zero():
        raise ValueError("zero series")
    if s.pN.is_zero() or s.pN1.is_zero():
        common = (s.pN1 if s.pN.is_zero() else s.pN).monic()
    else:
        common = poly_gcd(s.pN, s.pN1)
    if common.degree == 0:
        return Polynomial.one(), s
    return common, ChebSeries(s.anchor, s.pN.exact_div(common), s.pN1.exact_div(common))


# -- the U-basis expansion --------------------------------------------------
#
# A ramping series P with deg(P_N) = d expands uniquely as
#     P_{N+j} = sum_{k=-(d+1)}^{d+1} a_k P^U_{k+j}     (all j)
# with a_{d+1} = 1 and a_{-(d+1)} = 0.  Substituting x = t + 1/t turns each
# term into Laurent monomials, which is how the coefficients are read off.


def _laurent_from_poly(p: Polynomial) -> dict[int, Fraction]:
    """p(t + 1/t) * (t - 1/t) as a Laurent polynomial in t."""
    # p(t+1/t): build power-by-power
    acc: dict[int, Fraction] = {}
    base = {1: Q(1), -1: Q(1)}  # t + 1/t
    power = {0: Q(1)}
    for c in p.coeffs:
        if c:
            for e, v in power.items():
                acc[e] = acc.get(e, Q(0)) + c * v
        nxt: dict[int, Fraction] = {}
        for e, v in power.items():
            for eb, vb in base.items():
                nxt[e + eb] = nxt.get(e + eb, Q(0)) + v * vb
        power = nxt
    out: dict[int, Fraction] = {}
    for e, v in acc.items():
        out[e + 1] = out.get(e + 1, Q(0)) + v
        out[e - 1] = out.get(e - 1, Q(0)) - v
    return {e: v for e, v in out.items() if v}


def u_expansion(s: ChebSeries) -> dict[int, Fraction]:
    """Coefficients a_k with P_{N+j} = sum_k a_k P^U_{k+j}.

    Requires the ramping property at the anchor; the result round-trips
    exactly (checked by the caller's tests, and cheap to re-verify).
    """
    ok, why = ramping_check(s)
    if not ok:
        raise ValueError(f"series is not ramping at its anchor: {why}")
    d = s.pN.degree
    # L0 coefficients: b_k = a_k - a_{-k};  L1: b'_k = a_{k-1} - a_{-(k+1)}
    b = _laurent_from_poly(s.pN)
    bp = _laurent_from_poly(s.pN1)
    a: dict[int, Fraction] = {d + 1: Q(1), -(d + 1): Q(0), -(d + 2): Q(0)}
    for j in range(d, -1, -1):
        # from b'_{j+1} = a_j - a_{-(j+2)}
        a[j] = bp.get(j + 1, Q(0)) + a[-(j + 2)]
        if j:
            a[-j] = a[j] - b.get(j, Q(0))
    a.pop(-(d + 2), None)
    # consistency: both anchors must reconstruct exactly
    for j in (0, 1):
        acc = Polynomial()
        for k, ak in a.items():
            if ak:
                acc = acc + cheb_u(k + j) * ak
        if acc != (s.pN if j == 0 else s.pN1):
            raise ValueError("U-expansion failed to round-trip (non-ramping input?)")
    return {k: v for k, v in a.items() if v or abs(k) == d + 1}


def series_from_u_coeffs(coeffs: dict[int, Fraction], n: int) -> Polynomial:
    """sum_k a_k P^U_{k + n - N} evaluated with j = n measured from N = 0.

    Convenience for comparing closed-form U-basis families: returns
    sum_k coeffs[k] * cheb_u(k + n).
    """
    acc = Polynomial()
    for k, ak in coeffs.items():
        if ak:
            acc = acc + cheb_u(k + n) * ak
    return acc

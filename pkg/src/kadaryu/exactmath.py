"""Exact rational arithmetic: univariate polynomials, polynomial matrices,
determinants and Smith invariants over Q[a].

Everything here is immutable and pure.  The parameter of the coefficient
ring is the loop parameter of the diagram algebras; it is written ``a`` in
reprs (alpha in the docs).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Polynomial:
    """Univariate polynomial over Q, coefficients lowest-degree first.

    >>> p = Polynomial([0, 1]) * Polynomial([1, 1])
    >>> p
    Polynomial([0, 1, 1])
    >>> p.degree
    2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial([])

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial([1])

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial([0, 1])

    @staticmethod
    def const(c) -> "Polynomial":
        return Polynomial([c])

    @staticmethod
    def monomial(c, k: int) -> "Polynomial":
        return Polynomial([0] * k + [c])

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Q(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Q(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        if len(num) - 1 < dd:
            return Polynomial(), self
        inv = 1 / den[-1]
        quo = [Q(0)] * (len(num) - dd)
        for i in range(len(num) - 1, dd - 1, -1):
            c = num[i] * inv
            if c:
                quo[i - dd] = c
                for j, dc in enumerate(den):
                    num[i - dd + j] -= c * dc
        return Polynomial(quo), Polynomial(num[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"non-exact polynomial division: remainder {r!r}")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate; works for Fraction/int and anything with + and *."""
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * x + c
        if out is None:
            return Q(0)
        return out

    def shift_mul_x(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial([Q(0)] * k + list(self.coeffs))

    # -- presentation --------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({[str(c) if c.denominator != 1 else c.numerator for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out

    def to_json(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" if c.denominator != 1
                           else str(c.numerator) for c in self.coeffs]}

    @staticmethod
    def from_json(d: dict) -> "Polynomial":
        return Polynomial([Fraction(s) for s in d["coeffs"]])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor of two polynomials over Q."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined for two zero polynomials")
    while not b.is_zero():
        r = a % b
        a, b = b, (r.monic() if r else r)
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def poly_content_removed(vec: Sequence[Polynomial]) -> tuple[Polynomial, list[Polynomial]]:
    """Divide out the monic gcd of a vector of polynomials.

    Returns (content, primitive vector).  Zero vector -> (0, input).
    """
    g = None
    for p in vec:
        if p.is_zero():
            continue
        g = p if g is None else poly_gcd(g, p)
        if g.degree == 0:
            g = Polynomial.one()
            break
    if g is None:
        return Polynomial(), list(vec)
    g = g.monic()
    return g, [p.exact_div(g) if p else p for p in vec]


def poly_nth_root(p: Polynomial, d: int) -> Polynomial:
    """Exact monic d-th root of a polynomial that is a d-th power.

    The input is normalised monic first (the root is defined up to the root
    of the leading coefficient, which we discard); raises ValueError with the
    failing coefficient index when no exact root exists.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if d == 1:
        return p.monic()
    if p.is_zero():
        return p
    pm = p.monic()
    if pm.degree % d != 0:
        raise ValueError(f"degree {pm.degree} not divisible by {d}")
    m = pm.degree // d
    q = [Q(0)] * (m + 1)
    q[m] = Q(1)
    for i in range(m - 1, -1, -1):
        cur = Polynomial(q) ** d
        idx = i + m * (d - 1)
        target = pm.coeffs[idx] if idx <= pm.degree else Q(0)
        have = cur.coeffs[idx] if idx <= cur.degree else Q(0)
        q[i] = (target - have) / d
    root = Polynomial(q)
    if root ** d != pm:
        diff = (root ** d) - pm
        bad = min(i for i, c in enumerate(diff.coeffs) if c)
        raise ValueError(f"not an exact {d}-th power (first failing coefficient index {bad})")
    return root


def poly_squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p.monic() if p else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def yun_squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: p (monic) = prod q_i^i with the q_i squarefree, coprime.

    Returns [(q_i, i)] for the nonconstant q_i.
    """
    p = p.monic()
    if p.degree <= 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    c = p.exact_div(g)
    d = p.derivative().exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        q = poly_gcd(c, d)
        if q.degree > 0:
            out.append((q.monic(), i))
        c2 = c.exact_div(q)
        d = d.exact_div(q) - c2.derivative()
        c = c2
        i += 1
    return out


class RationalFunction:
    """Quotient of polynomials, stored reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        if den is None:
            den = Polynomial.one()
        if isinstance(num, (int, Fraction)):
            num = Polynomial.const(num)
        if isinstance(den, (int, Fraction)):
            den = Polynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other if isinstance(other, Polynomial) else Polynomial.const(other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _ratfun(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_ratfun(other))

    def __rsub__(self, other):
        return _ratfun(other) + (-self)

    def __mul__(self, other):
        other = _ratfun(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _ratfun(other) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalFunction(self.num ** n, self.den ** n)
        return RationalFunction(self.den ** (-n), self.num ** (-n))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator {self.den}")
        return self.num * (1 / self.den.coeffs[0])

    def __repr__(self):
        return f"({self.num})/({self.den})"


def _ratfun(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    return RationalFunction(Polynomial.const(x))


class PolyMatrix:
    """Dense rectangular matrix of Polynomial entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        if not self.is_square():
            return False
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i))

    def evaluate(self, x: Fraction) -> list[list[Fraction]]:
        return [[p(x) for p in row] for row in self.entries]

    def max_degree(self) -> int:
        return max((p.degree for row in self.entries for p in row), default=-1)

    def degree_bound(self) -> int:
        """A-priori bound on deg(det): sum over rows of the max entry degree."""
        total = 0
        for row in self.entries:
            d = max((p.degree for p in row), default=-1)
            if d < 0:
                return 0  # a zero row: det = 0
            total += d
        return total

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _int_det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix (destructive)."""
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pkk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pkk
    return sign * m[n - 1][n - 1]


def det_rational(m: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a matrix of Fractions via integer Bareiss."""
    n = len(m)
    if n == 0:
        return Q(1)
    den = 1
    for row in m:
        for c in row:
            c = _frac(c)
            den = den * c.denominator // math.gcd(den, c.denominator)
    scaled = [[int(_frac(c) * den) for c in row] for row in m]
    d = _int_det_bareiss(scaled)
    return Q(d, den ** n)


def _lagrange_interpolate(points: list[tuple[Fraction, Fraction]]) -> Polynomial:
    """Newton-form interpolation through distinct rational points."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    n = len(points)
    # divided differences
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = Polynomial()
    basis = Polynomial.one()
    for i in range(n):
        poly = poly + basis * dd[i]
        basis = basis * Polynomial([-xs[i], 1])
    return poly


def _eval_points(k: int) -> list[Fraction]:
    """0, 1, -1, 2, -2, ... (k of them)."""
    out = [Q(0)]
    v = 1
    while len(out) < k:
        out.append(Q(v))
        if len(out) < k:
            out.append(Q(-v))
        v += 1
    return out[:k]


def det_poly(m: PolyMatrix, degree_bound: int | None = None) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Evaluation-interpolation: evaluate at degree_bound+1 rational points
    (0, 1, -1, 2, -2, ...), take exact rational determinants, interpolate.
    """
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    if m.rows == 0:
        return Polynomial.one()
    bound = m.degree_bound() if degree_bound is None else degree_bound
    if bound == 0:
        return Polynomial.const(det_rational(m.evaluate(Q(0))))
    pts = _eval_points(bound + 1)
    vals = [(x, det_rational(m.evaluate(x))) for x in pts]
    return _lagrange_interpolate(vals)


def det_poly_bareiss(m: PolyMatrix) -> Polynomial:
    """Fraction-free elimination over Q[a]; agrees with det_poly."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Polynomial.one()
    a = [[p for p in row] for row in m.entries]
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = Polynomial()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def det_cofactor(m: PolyMatrix) -> Polynomial:
    """Cofactor-expansion oracle; intended for matrices up to ~8x8."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")

    def rec(rows: list[list[Polynomial]]) -> Polynomial:
        n = len(rows)
        if n == 0:
            return Polynomial.one()
        if n == 1:
            return rows[0][0]
        out = Polynomial()
        for j in range(n):
            c = rows[0][j]
            if c.is_zero():
                continue
            minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
            term = c * rec(minor)
            out = out + (term if j % 2 == 0 else -term)
        return out

    return rec([list(r) for r in m.entries])


# ---------------------------------------------------------------------------
# Smith normal form over Q[a]
# ---------------------------------------------------------------------------

def smith_invariants(m: PolyMatrix) -> list[Polynomial]:
    """Invariant factors of a square polynomial matrix, ascending divisibility.

    Each factor is monic (or zero); the product equals det up to a rational
    scalar.
    """
    if not m.is_square():
        raise ValueError("Smith form of a non-square matrix")
    n = m.rows
    a = [[p for p in row] for row in m.entries]
    invariants: list[Polynomial] = []

    def min_entry(k):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if not a[i][j].is_zero():
                    if best is None or a[i][j].degree < a[best[0]][best[1]].degree:
                        best = (i, j)
        return best

    for k in range(n):
        pos = min_entry(k)
        if pos is None:
            invariants.extend([Polynomial()] * (n - k))
            break
        while True:
            i0, j0 = min_entry(k)
            a[k], a[i0] = a[i0], a[k]
            for row in a:
                row[k], row[j0] = row[j0], row[k]
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k].is_zero():
                    continue
                q = a[i][k] // pivot
                for j in range(k, n):
                    a[i][j] = a[i][j] - q * a[k][j]
                if not a[i][k].is_zero():
                    dirty = True
            for j in range(k + 1, n):
                if a[k][j].is_zero():
                    continue
                q = a[k][j] // pivot
                for i in range(k, n):
                    a[i][j] = a[i][j] - q * a[i][k]
                if not a[k][j].is_zero():
                    dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if not a[i][j].is_zero() and not (a[i][j] % pivot).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, n):
                a[k][j] = a[k][j] + a[offender][j]
        invariants.append(a[k][k].monic())
        for j in range(k + 1, n):
            a[k][j] = Polynomial()
        for i in range(k + 1, n):
            a[i][k] = Polynomial()
    return invariants


# ---------------------------------------------------------------------------
# quotient rings Q[a]/(m) and generic exact linear algebra
# ---------------------------------------------------------------------------

class QuotientRing:
    """The ring Q[a]/(modulus).  A field when the modulus is irreducible."""

    def __init__(self, modulus: Polynomial):
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        self.modulus = modulus.monic()

    def elem(self, p: Polynomial | int | Fraction) -> "QuotElem":
        if isinstance(p, (int, Fraction)):
            p = Polynomial.const(p)
        return QuotElem(self, p % self.modulus)

    def zero(self):
        return self.elem(Polynomial())

    def one(self):
        return self.elem(Polynomial.one())

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("QuotientRing", self.modulus))


class QuotElem:
    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: Polynomial):
        self.ring = ring
        self.rep = rep

    def is_zero(self):
        return self.rep.is_zero()

    def __eq__(self, other):
        return isinstance(other, QuotElem) and self.ring == other.ring and self.rep == other.rep

    def __add__(self, other):
        return QuotElem(self.ring, (self.rep + other.rep) % self.ring.modulus)

    def __sub__(self, other):
        return QuotElem(self.ring, (self.rep - other.rep) % self.ring.modulus)

    def __neg__(self):
        return QuotElem(self.ring, (-self.rep) % self.ring.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuotElem(self.ring, (self.rep * other) % self.ring.modulus)
        return QuotElem(self.ring, (self.rep * other.rep) % self.ring.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "QuotElem":
        """Extended Euclid; fails when the representative shares a factor
        with the modulus (i.e. the ring is not a field at this element)."""
        r0, r1 = self.ring.modulus, self.rep
        s0, s1 = Polynomial(), Polynomial.one()
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        if r0.degree != 0:
            raise ZeroDivisionError(f"non-invertible element (gcd {r0})")
        return QuotElem(self.ring, (s0 * (1 / r0.coeffs[0])) % self.ring.modulus)

    def __repr__(self):
        return f"[{self.rep}]"


class QQField:
    """Wrapper giving plain Fractions the same protocol as QuotElem."""

    @staticmethod
    def elem(x):
        return _frac(x) if not isinstance(x, Polynomial) else x(Q(0))


def field_rank(rows: list[list], *, is_zero=None, inv=None) -> int:
    """Rank of a matrix over an exact field.

    Entries must support +, -, * and either .inverse()/.is_zero() (QuotElem)
    or be Fractions.
    """
    return len(field_row_echelon(rows, is_zero=is_zero, inv=inv)[0])


def _default_ops(sample):
    if isinstance(sample, QuotElem):
        return (lambda x: x.is_zero()), (lambda x: x.inverse())
    return (lambda x: x == 0), (lambda x: 1 / x)


def field_row_echelon(rows: list[list], *, is_zero=None, inv=None):
    """Row echelon form; returns (pivot column list, echelon rows)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return [], m
    if is_zero is None or inv is None:
        sample = m[0][0]
        is_zero, inv = _default_ops(sample)
    piv_cols = []
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if not is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        scale = inv(m[r][c])
        m[r] = [scale * x for x in m[r]]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    return piv_cols, m[:r]


def field_kernel(rows: list[list], zero, one, *, is_zero=None, inv=None) -> list[list]:
    """Basis of the right kernel of a matrix over an exact field.

    `zero`/`one` are the field constants used to assemble kernel vectors.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    if is_zero is None or inv is None:
        is_zero, inv = _default_ops(rows[0][0])
    piv_cols, ech = field_row_echelon(rows, is_zero=is_zero, inv=inv)
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(piv_cols):
            vec[pc] = zero - ech[r][fc]
        basis.append(vec)
    return basis


def field_solve(rows: list[list], rhs: list, *, is_zero=None, inv=None):
    """Solve A x = b over an exact field; returns x or None if inconsistent.

    A must have full column rank for a unique solution; otherwise one
    solution is returned.
    """
    if not rows:
        return []
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if is_zero is None or inv is None:
        is_zero, inv = _default_ops(rows[0][0])
    ncols = len(rows[0])
    piv_cols, ech = field_row_echelon(aug, is_zero=is_zero, inv=inv)
    if ncols in piv_cols:
        return None
    zero = rows[0][0] - rows[0][0]
    x = [zero] * ncols
    for r, pc in enumerate(piv_cols):
        x[pc] = ech[r][ncols]
    return x

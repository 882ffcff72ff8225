"""Exact arithmetic layer: polynomials, determinant oracles, Smith form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kadaryu.exactmath import (Polynomial, PolyMatrix, Q, QuotientRing,
                               RationalFunction, det_cofactor, det_poly,
                               det_poly_bareiss, det_rational, field_kernel,
                               field_rank, field_solve, poly_content_removed,
                               poly_gcd, poly_lcm, poly_nth_root,
                               poly_squarefree_part, smith_invariants,
                               yun_squarefree_decomposition)

rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 8))
polys = st.lists(rationals, max_size=6).map(Polynomial)
small_polys = st.lists(st.integers(-5, 5), max_size=4).map(Polynomial)


class TestPolynomial:
    def test_normalisation_strips_leading_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert Polynomial([0]).is_zero()
        assert Polynomial().degree == -1

    def test_arithmetic_basics(self):
        x = Polynomial.x()
        assert (x + 1) * (x - 1) == x * x - 1
        assert (x ** 3).coeffs == (0, 0, 0, 1)
        assert (x ** 2 - 1) % (x - 1) == Polynomial()

    @given(polys, polys)
    def test_mul_commutes(self, p, q):
        assert p * q == q * p

    @given(polys, polys, polys)
    def test_mul_distributes(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys, small_polys.filter(lambda p: not p.is_zero()))
    def test_divmod_roundtrip(self, p, q):
        quo, rem = p.divmod(q)
        assert quo * q + rem == p
        assert rem.degree < q.degree

    @given(polys)
    def test_json_roundtrip(self, p):
        assert Polynomial.from_json(p.to_json()) == p

    @given(polys, rationals)
    def test_evaluation_is_hom(self, p, x):
        q = Polynomial([1, 1])
        assert (p * q)(x) == p(x) * q(x)

    def test_nth_root(self):
        x = Polynomial.x()
        p = (x ** 2 + 3 * x - 1) ** 3
        assert poly_nth_root(p, 3) == x ** 2 + 3 * x - 1
        with pytest.raises(ValueError):
            poly_nth_root(x ** 2 + 1, 2)

    @given(small_polys.filter(lambda p: p.degree >= 1), st.integers(2, 3))
    def test_nth_root_of_power(self, p, d):
        assert poly_nth_root(p ** d, d) == p.monic()


class TestGcd:
    def test_gcd_of_common_factor(self):
        x = Polynomial.x()
        a = (x - 1) * (x + 2)
        b = (x - 1) * (x - 3)
        assert poly_gcd(a, b) == x - 1
        assert poly_lcm(a, b) == ((x - 1) * (x + 2) * (x - 3)).monic()

    @given(small_polys, small_polys)
    def test_gcd_divides(self, a, b):
        if a.is_zero() and b.is_zero():
            return
        g = poly_gcd(a, b)
        if g.is_zero():
            return
        for p in (a, b):
            if not p.is_zero():
                assert (p % g).is_zero()

    def test_content_removed(self):
        x = Polynomial.x()
        g, prim = poly_content_removed([(x - 1) * 2, (x - 1) * x])
        assert g == x - 1
        assert prim[0] == Polynomial([2])

    def test_squarefree(self):
        x = Polynomial.x()
        p = (x - 1) ** 2 * (x + 3)
        assert poly_squarefree_part(p) == ((x - 1) * (x + 3)).monic()
        decomp = yun_squarefree_decomposition(p)
        assert (x + 3, 1) in decomp and (x - 1, 2) in decomp


# ---------------------------------------------------------------------------
# determinants: the three oracles must agree
# ---------------------------------------------------------------------------

matrix_entries = st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(Polynomial)


@st.composite
def poly_matrices(draw, max_size=4):
    n = draw(st.integers(1, max_size))
    return PolyMatrix([[draw(matrix_entries) for _ in range(n)] for _ in range(n)])


class TestDeterminants:
    @given(poly_matrices())
    @settings(max_examples=40, deadline=None)
    def test_oracles_agree(self, m):
        d1 = det_poly(m)
        d2 = det_poly_bareiss(m)
        d3 = det_cofactor(m)
        assert d1 == d2 == d3

    def test_rational_det(self):
        m = [[Q(1, 2), Q(1)], [Q(1), Q(3)]]
        assert det_rational(m) == Q(1, 2)

    def test_singular(self):
        x = Polynomial.x()
        m = PolyMatrix([[x, x], [x, x]])
        assert det_poly(m).is_zero()
        assert det_poly_bareiss(m).is_zero()


class TestSmith:
    def test_tridiagonal_example(self):
        """3x3 tridiagonal with parameter diagonal: invariants ascend as
        [1, 1, d(d^2-2)]."""
        d = Polynomial.x()
        one = Polynomial.one()
        zero = Polynomial()
        m = PolyMatrix([[d, one, zero], [one, d, one], [zero, one, d]])
        inv = smith_invariants(m)
        assert inv == [Polynomial.one(), Polynomial.one(), d * (d * d - 2)]

    @given(poly_matrices(max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_product_is_det(self, m):
        inv = smith_invariants(m)
        det = det_poly(m)
        prod = Polynomial.one()
        for f in inv:
            prod = prod * f
        if det.is_zero():
            assert prod.is_zero()
        else:
            assert prod == det.monic()

    @given(poly_matrices(max_size=3))
    @settings(max_examples=25, deadline=None)
    def test_divisibility_chain(self, m):
        inv = smith_invariants(m)
        for a, b in zip(inv, inv[1:]):
            if a.is_zero():
                assert b.is_zero()
            elif not b.is_zero() and a.degree > 0:
                assert (b % a).is_zero()


# ---------------------------------------------------------------------------
# quotient rings and field linear algebra
# ---------------------------------------------------------------------------

class TestQuotientRing:
    def test_inverse(self):
        ring = QuotientRing(Polynomial([-4, 1, 1]))  # a^2 + a - 4
        a = ring.elem(Polynomial.x())
        assert (a * a.inverse()).rep == Polynomial.one()

    def test_modular_relation(self):
        ring = QuotientRing(Polynomial([-4, 1, 1]))
        a = ring.elem(Polynomial.x())
        assert (a * a + a).rep == Polynomial([4])

    def test_noninvertible(self):
        x = Polynomial.x()
        ring = QuotientRing((x - 1) * (x + 1))
        with pytest.raises(ZeroDivisionError):
            ring.elem(x - 1).inverse()


class TestFieldLinearAlgebra:
    def test_kernel_and_rank(self):
        rows = [[Q(1), Q(2), Q(3)], [Q(2), Q(4), Q(6)]]
        assert field_rank(rows) == 1
        ker = field_kernel(rows, Q(0), Q(1))
        assert len(ker) == 2
        for v in ker:
            assert sum(a * b for a, b in zip(rows[0], v)) == 0

    def test_solve(self):
        rows = [[Q(2), Q(1)], [Q(1), Q(3)]]
        x = field_solve(rows, [Q(5), Q(10)])
        assert [2 * x[0] + x[1], x[0] + 3 * x[1]] == [5, 10]

    def test_solve_inconsistent(self):
        rows = [[Q(1), Q(1)], [Q(1), Q(1)]]
        assert field_solve(rows, [Q(0), Q(1)]) is None


class TestRationalFunction:
    def test_reduction(self):
        x = Polynomial.x()
        f = RationalFunction((x - 1) * (x + 1), (x - 1) * 2)
        assert f.num == (x + 1) * Q(1, 2) * 2 * Q(1, 2) or f.den.is_monic()
        assert f == RationalFunction(x + 1, Polynomial([2]))

    def test_field_ops(self):
        x = Polynomial.x()
        f = RationalFunction(Polynomial.one(), x)
        assert (f + f) == RationalFunction(Polynomial([2]), x)
        assert (f * x).as_polynomial() == Polynomial.one()
        assert (1 / f).as_polynomial() == x

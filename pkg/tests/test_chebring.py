import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverfold.chebring import (
    AlgReal,
    ChebElem,
    alg_inverse,
    cheb_mul,
    cyclotomic,
    equal_in_evaluation,
    minimal_poly,
    reg_rep,
    rho,
    semiring_leq,
    sigma,
)


def cheb_value(k, m):
    """Numeric U_k(cos(pi/m)), the independent evaluation oracle."""
    theta = math.pi / m
    return math.sin((k + 1) * theta) / math.sin(theta)


def elem_value(a):
    return sum(c * cheb_value(k, 2 * a.n + 1) for k, c in enumerate(a.coeffs))


class TestChebMul:
    def test_golden_ratio_square(self):
        # n=2: theta_1^2 = 1 + theta_1
        t1 = ChebElem.theta(2, 1)
        assert cheb_mul(t1, t1) == ChebElem(2, (1, 1))

    def test_identity(self):
        for n in range(2, 7):
            x = ChebElem(n, tuple(range(1, n + 1)))
            assert cheb_mul(ChebElem.one(n), x) == x

    def test_theta1_theta2_rank3(self):
        # raw product theta_1 + theta_3; theta_3 rewrites to theta_2 at n=3
        out = cheb_mul(ChebElem.theta(3, 1), ChebElem.theta(3, 2))
        assert out == ChebElem(3, (0, 1, 1))

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            cheb_mul(ChebElem.one(2), ChebElem.one(3))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_product_rule_against_numeric_oracle(self, n):
        m = 2 * n + 1
        for k in range(n):
            for l in range(n):
                prod = cheb_mul(ChebElem.theta(n, k), ChebElem.theta(n, l))
                assert elem_value(prod) == pytest.approx(
                    cheb_value(k, m) * cheb_value(l, m), abs=1e-9
                )

    @pytest.mark.parametrize("n", range(2, 7))
    def test_product_rule_shape(self, n):
        # theta_k theta_l = sum_j theta_{k-l+2j} before rewriting
        for k in range(n):
            for l in range(k + 1):
                prod = cheb_mul(ChebElem.theta(n, k), ChebElem.theta(n, l))
                expect = ChebElem.zero(n)
                for j in range(l + 1):
                    expect = expect + ChebElem.theta(n, k - l + 2 * j)
                assert prod == expect

    @given(
        n=st.integers(2, 6),
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, n, data):
        coeff = st.integers(-10, 10)
        a = ChebElem(n, tuple(data.draw(coeff) for _ in range(n)))
        b = ChebElem(n, tuple(data.draw(coeff) for _ in range(n)))
        c = ChebElem(n, tuple(data.draw(coeff) for _ in range(n)))
        assert cheb_mul(a, b) == cheb_mul(b, a)
        assert cheb_mul(a, b + c) == cheb_mul(a, b) + cheb_mul(a, c)
        assert cheb_mul(cheb_mul(a, b), c) == cheb_mul(a, cheb_mul(b, c))


class TestRegRep:
    def test_identity(self):
        for n in range(2, 6):
            assert reg_rep(0, n) == tuple(
                tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
            )

    def test_rank2(self):
        assert reg_rep(1, 2) == ((0, 1), (1, 1))

    def test_rank3(self):
        assert reg_rep(1, 3) == ((0, 1, 0), (1, 0, 1), (0, 1, 1))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            reg_rep(3, 3)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_symmetric_zero_one(self, n):
        for k in range(n):
            mat = reg_rep(k, n)
            for i in range(n):
                for j in range(n):
                    assert mat[i][j] in (0, 1)
                    assert mat[i][j] == mat[j][i]

    def test_top_symbol_antitriangle(self):
        # multiplication by theta_{n-1} is 1 exactly on the lower-right antitriangle
        for n in range(2, 7):
            mat = reg_rep(n - 1, n)
            for i in range(n):
                for j in range(n):
                    assert mat[i][j] == (1 if i >= n - j - 1 else 0)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_multiplicative_on_generators(self, n):
        for k in range(n):
            for l in range(n):
                prod_mat = _mat_mul(reg_rep(k, n), reg_rep(l, n))
                assert prod_mat == rho(cheb_mul(ChebElem.theta(n, k), ChebElem.theta(n, l)))

    def test_rho_column_is_action(self):
        for n in range(2, 6):
            for k in range(n):
                r = ChebElem(n, tuple((i * 7 + 3) % 5 for i in range(n)))
                image = cheb_mul(ChebElem.theta(n, k), r)
                mat = reg_rep(k, n)
                acted = tuple(
                    sum(mat[i][j] * r.coeffs[j] for j in range(n)) for i in range(n)
                )
                assert acted == image.coeffs


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


class TestMinimalPoly:
    def test_small_cases(self):
        assert minimal_poly(3) == (-1, 1)
        assert minimal_poly(5) == (-1, -1, 1)
        assert minimal_poly(7) == (1, -2, -1, 1)

    def test_m_too_small(self):
        with pytest.raises(ValueError):
            minimal_poly(2)

    @pytest.mark.parametrize("m", range(3, 26))
    def test_against_sympy(self, m):
        import sympy

        x = sympy.symbols("x")
        expected = sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / m), x)
        got = sum(c * x**i for i, c in enumerate(minimal_poly(m)))
        assert sympy.expand(got - expected) == 0

    @pytest.mark.parametrize("m", range(3, 26))
    def test_degree(self, m):
        phi = sum(1 for k in range(1, 2 * m) if math.gcd(k, 2 * m) == 1)
        assert len(minimal_poly(m)) - 1 == phi // 2

    @pytest.mark.parametrize("k", [1, 2, 6, 12, 14, 30])
    def test_cyclotomic_against_sympy(self, k):
        import sympy

        x = sympy.symbols("x")
        got = sum(c * x**i for i, c in enumerate(cyclotomic(k)))
        assert sympy.expand(got - sympy.cyclotomic_poly(k, x)) == 0


class TestSigma:
    def test_theta0(self):
        assert sigma(ChebElem.one(3)) == AlgReal(7, (1,))

    def test_golden_generator(self):
        assert sigma(ChebElem.theta(2, 1)) == AlgReal.generator(5)

    def test_kernel_collapse_at_rank4(self):
        # U_3 = U_0 + U_1 at cos(pi/9) but not at cos(pi/7)
        lhs4 = ChebElem.theta(4, 3)
        rhs4 = ChebElem.one(4) + ChebElem.theta(4, 1)
        assert lhs4 != rhs4
        assert equal_in_evaluation(lhs4, rhs4)
        lhs3 = ChebElem.theta(3, 2)
        rhs3 = ChebElem.one(3) + ChebElem.theta(3, 1)
        assert not equal_in_evaluation(lhs3, rhs3)

    @given(n=st.integers(2, 6), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_ring_homomorphism(self, n, data):
        coeff = st.integers(-10, 10)
        a = ChebElem(n, tuple(data.draw(coeff) for _ in range(n)))
        b = ChebElem(n, tuple(data.draw(coeff) for _ in range(n)))
        assert sigma(a + b) == sigma(a) + sigma(b)
        assert sigma(cheb_mul(a, b)) == sigma(a) * sigma(b)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_identity_suite(self, n):
        m = 2 * n + 1
        # theta_{2n} = 0 and the reflection theta_k = theta_{2n-1-k}
        assert ChebElem.theta(n, 2 * n).is_zero()
        for k in range(2 * n):
            assert ChebElem.theta(n, k) == ChebElem.theta(n, 2 * n - 1 - k)
        # values above 1 strictly inside the range
        for k in range(1, n):
            assert (sigma(ChebElem.theta(n, k)) - 1).sign() == 1

    def test_numeric_agreement(self):
        for n in range(2, 6):
            for k in range(n):
                val = float(sigma(ChebElem.theta(n, k)))
                assert val == pytest.approx(cheb_value(k, 2 * n + 1), abs=1e-9)


class TestAlgRealSign:
    def test_zero(self):
        assert AlgReal(7).sign() == 0
        assert AlgReal(7, (0, 0, 0)).sign() == 0

    def test_golden_above_one(self):
        phi = AlgReal.generator(5)
        assert (phi - 1).sign() == 1

    def test_heptagon_beats_golden(self):
        # 2cos(pi/7) satisfies x^2 - x - 1 > 0
        x = AlgReal.generator(7)
        assert (x * x - x - 1).sign() == 1

    @given(m=st.sampled_from([4, 5, 6, 7, 9, 11]), data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_sign_total(self, m, data):
        deg = len(minimal_poly(m)) - 1
        a = AlgReal(m, tuple(data.draw(st.integers(-8, 8)) for _ in range(deg)))
        signs = (a.sign(), (-a).sign())
        if a.is_zero():
            assert signs == (0, 0)
        else:
            assert sorted(signs) == [-1, 1]

    @given(m=st.sampled_from([5, 7, 9]), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_sign_matches_float(self, m, data):
        deg = len(minimal_poly(m)) - 1
        a = AlgReal(m, tuple(data.draw(st.integers(-6, 6)) for _ in range(deg)))
        x = 2 * math.cos(math.pi / m)
        approx = sum(c * x**i for i, c in enumerate(a.coeffs))
        if abs(approx) > 1e-6:
            assert a.sign() == (1 if approx > 0 else -1)

    def test_interval_contains_value(self):
        a = AlgReal.generator(7) * 3 - 2
        lo, hi = a.interval(Fraction(1, 10**12))
        val = 6 * math.cos(math.pi / 7) - 2
        assert lo <= Fraction(val) + Fraction(1, 10**9)
        assert hi >= Fraction(val) - Fraction(1, 10**9)
        assert hi - lo <= Fraction(1, 10**12)

    def test_order_operators(self):
        x = AlgReal.generator(7)
        assert x > 1
        assert x < 2
        assert AlgReal.chebyshev(7, 2) > x

    def test_sqrt_cases(self):
        # 2cos(pi/4) and 2cos(pi/6) realize sqrt(2) and sqrt(3)
        s2, s3 = AlgReal.generator(4), AlgReal.generator(6)
        assert s2 * s2 == 2
        assert s3 * s3 == 3

    def test_inverse(self):
        for a in [AlgReal.generator(5), AlgReal.chebyshev(7, 2), AlgReal(6, (1, 2))]:
            num, den = alg_inverse(a)
            assert a * num == den
            assert den > 0
        with pytest.raises(ZeroDivisionError):
            alg_inverse(AlgReal(5))

    def test_json_round_trip(self):
        a = AlgReal(9, (3, -1, 2))
        assert AlgReal.from_json(a.to_json()) == a
        c = ChebElem(4, (1, 0, -2, 5))
        assert ChebElem.from_json(c.to_json()) == c


class TestSemiringOrder:
    def test_reflexive_and_strict(self):
        a = ChebElem(3, (1, 2, 0))
        b = ChebElem(3, (1, 2, 1))
        assert semiring_leq(a, a)
        assert semiring_leq(a, b)
        assert not semiring_leq(b, a)

    def test_membership(self):
        assert ChebElem(3, (0, 1, 2)).in_semiring()
        assert not ChebElem(3, (0, -1, 2)).in_semiring()

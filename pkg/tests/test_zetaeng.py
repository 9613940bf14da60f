import pytest
import sympy as sp
from hypothesis import given, strategies as st

from mlvlab.exceptions import BudgetExceeded, ValidationFailed
from mlvlab.galrep import T, EulerFactor
from mlvlab.periodfield import const, log_p, symbol
from mlvlab.zetaeng import (
    AFFINE, PROJECTIVE, LaurentLeading, RationalZeta, VarietySpec, ZetaWord, euler_leading,
    lobject_leading, point_count, point_count_naive, point_counts, zeta_at, zeta_from_counts,
    zetaword_leading)

from .common import BaseTest, period


ELLIPTIC = VarietySpec.from_strings(PROJECTIVE, 2, ['x1^2*x2 - x0^3 + x0*x2^2'])


def projective_space(n):
    return VarietySpec(PROJECTIVE, n)


class TestVarietySpec(BaseTest):

    def test_from_strings(self):
        assert ELLIPTIC.nvars == 3
        assert ELLIPTIC.equations[0] == (((0, 2, 1), 1), ((1, 0, 2), 1), ((3, 0, 0), -1))

    def test_equation_strings_reparse(self):
        again = VarietySpec.from_strings(PROJECTIVE, 2, ELLIPTIC.equation_strings())
        assert again == ELLIPTIC

    @pytest.mark.parametrize('kind,dim,equations', [
        ('weighted', 2, []),
        (PROJECTIVE, 1, ['x0^2 - x1']),
        (AFFINE, 1, ['x0 + 2000000']),
        (AFFINE, 1, ['x0 +']),
    ])
    def test_invalid(self, kind, dim, equations):
        with pytest.raises(ValueError):
            VarietySpec.from_strings(kind, dim, equations)


class TestPointCount(BaseTest):

    def test_examples(self):
        assert point_count(projective_space(2), 2) == 7
        assert point_count(VarietySpec(AFFINE, 1), 3, k=2) == 9
        assert point_count(ELLIPTIC, 5) == 8

    @pytest.mark.parametrize('p', [2, 3, 5])
    @pytest.mark.parametrize('n', [0, 1, 2, 3])
    @pytest.mark.parametrize('k', [1, 2, 3, 4])
    def test_projective_space(self, p, n, k):
        assert point_count(projective_space(n), p, k) == sum(p ** (i * k) for i in range(n + 1))

    @pytest.mark.parametrize('k', [1, 2])
    def test_matches_naive(self, k):
        assert point_count(ELLIPTIC, 5, k) == point_count_naive(ELLIPTIC, 5, k)
        conic = VarietySpec.from_strings(PROJECTIVE, 2, ['x0^2 + x1^2 - x2^2'])
        assert point_count(conic, 3, k) == point_count_naive(conic, 3, k) == 3 ** k + 1

    def test_affine_curve(self):
        hyperbola = VarietySpec.from_strings(AFFINE, 2, ['x0*x1 - 1'])
        assert point_count(hyperbola, 7) == 6
        assert point_count_naive(hyperbola, 7) == 6

    def test_budget(self):
        variety = VarietySpec.from_strings(AFFINE, 3, ['x0*x1*x2 - 1'])
        with pytest.raises(BudgetExceeded):
            point_count(variety, 5, budget=10)
        with pytest.raises(BudgetExceeded):
            point_count_naive(variety, 5, budget=10)

    def test_counts_in_order(self):
        assert point_counts(ELLIPTIC, 5, [1, 2, 3]) == [8, 32, 104]
        assert point_counts(ELLIPTIC, 5, [1, 2], workers=2) == [8, 32]


class TestZetaFromCounts(BaseTest):

    @pytest.mark.parametrize('p', [2, 3, 5])
    @pytest.mark.parametrize('n', [0, 1, 2, 3])
    def test_projective_space(self, p, n):
        counts = point_counts(projective_space(n), p, range(1, n + 3))
        zeta = zeta_from_counts(counts, 0, n + 1)
        expected = sp.Poly(sp.prod([1 - p ** i * T for i in range(n + 1)]), T).all_coeffs()
        assert zeta.numerator == (1,)
        assert zeta.denominator == tuple(reversed(expected))

    def test_elliptic(self):
        zeta = zeta_from_counts([8, 32, 104], 2, 2, known_den=[1, -6, 5])
        assert zeta == RationalZeta([1, 2, 5], [1, -6, 5])
        assert zeta.predict(4) == [8, 32, 104, 640]

    def test_predict(self):
        zeta = RationalZeta([1, 2, 5], [1, -6, 5])
        assert zeta.predict(3) == [8, 32, 104]
        assert RationalZeta([1], [1, -3, 2]).predict(3) == [3, 5, 9]

    def test_surplus_counts_must_match(self):
        with pytest.raises(ValidationFailed):
            zeta_from_counts([3, 5, 9, 18], 0, 2)
        with pytest.raises(ValidationFailed):
            zeta_from_counts([8, 32, 105], 2, 2, known_den=[1, -6, 5])

    def test_too_few_counts(self):
        with pytest.raises(ValueError):
            zeta_from_counts([3, 5], 0, 2)

    def test_common_factor_cancels(self):
        zeta = RationalZeta.from_polys((1 - T) * (1 - 2 * T), (1 - T) ** 2)
        assert zeta == RationalZeta([1, -2], [1, -1])

    def test_euler_factors(self):
        factors = RationalZeta([1, 2, 5], [1, -6, 5]).as_euler_factors(5)
        assert factors == [EulerFactor(5, 1, [1, -6, 5]), EulerFactor(5, 1, [1, 2, 5], -1)]


class TestLeading(BaseTest):

    def test_laurent(self):
        with pytest.raises(ValueError):
            LaurentLeading(0, 0)
        value = LaurentLeading(-1, log_p(2)) * LaurentLeading(2, const(3))
        assert value == LaurentLeading(1, period('3*log_2'))
        assert value.inverse() == LaurentLeading(-1, period('1/(3*log_2)'))

    def test_euler_examples(self):
        assert euler_leading([EulerFactor(2, 1, [1, -1])], 0) == \
            LaurentLeading(-1, 1 / log_p(2))
        assert euler_leading([EulerFactor(2, 1, [1, -2])], 0) == LaurentLeading(0, const(-1))
        both = [EulerFactor(2, 1, [1, -1]), EulerFactor(2, 1, [1, -2])]
        assert euler_leading(both, 0) == LaurentLeading(-1, -1 / log_p(2))
        assert euler_leading(both, 2) == LaurentLeading(0, const(sp.Rational(8, 3)))

    def test_residue_degree(self):
        # (1 - 4^-s)^-1 at s = 0 has residue 1/(2 log 2)
        assert euler_leading([EulerFactor(2, 2, [1, -1])], 0) == \
            LaurentLeading(-1, 1 / (2 * log_p(2)))

    def test_zero_of_numerator(self):
        leading = euler_leading([EulerFactor(3, 1, [1, -3], -1)], 1)
        assert leading == LaurentLeading(1, log_p(3))

    def test_zeta_values(self):
        assert zeta_at(0) == LaurentLeading(0, const(sp.Rational(-1, 2)))
        assert zeta_at(1) == LaurentLeading(-1, const(1))
        assert zeta_at(-1) == LaurentLeading(0, const(sp.Rational(-1, 12)))
        assert zeta_at(-3) == LaurentLeading(0, const(sp.Rational(1, 120)))
        assert zeta_at(2) == LaurentLeading(0, period('pi^2/6'))
        assert zeta_at(4) == LaurentLeading(0, period('pi^4/90'))
        assert zeta_at(-2) == LaurentLeading(1, symbol('zetaprime_neg_2'))
        assert zeta_at(3) == LaurentLeading(0, symbol('zeta_odd_3'))

    def test_zeta_words(self):
        assert zetaword_leading(ZetaWord([(0, 1)]), 0) == zeta_at(0)
        assert zetaword_leading(ZetaWord([(1, 1)]), 0) == LaurentLeading(-1, const(1))
        assert zetaword_leading(ZetaWord([(-1, 1)]), 0) == zeta_at(-1)
        word = ZetaWord([(0, 1)], [EulerFactor(2, 1, [1, -1], -1)])
        assert zetaword_leading(word, 0) == LaurentLeading(1, period('-log_2/2'))

    def test_word_algebra(self):
        word = ZetaWord([(0, 1), (0, 1), (1, -1)])
        assert word.shifts == ((0, 2), (1, -1))
        assert (word * word.inverse()).shifts == ()
        assert word.twist(2).shifts == ((2, 2), (3, -1))
        assert ZetaWord({0: 1}) == ZetaWord([(0, 1)])

    def test_dispatch(self):
        assert lobject_leading(ZetaWord([(0, 1)]), 1) == zeta_at(1)
        assert lobject_leading([EulerFactor(2, 1, [1, -1])], 0).order == -1

    @given(st.sampled_from([2, 3, 5]), st.integers(min_value=-3, max_value=3),
           st.integers(min_value=-2, max_value=2))
    def test_twist_shifts_the_point(self, p, n, s0):
        factors = [EulerFactor(p, 1, [1, -p ** i]) for i in range(3)]
        twisted = [factor.twist(n) for factor in factors]
        assert euler_leading(twisted, s0) == euler_leading(factors, s0 + n)

    @given(st.integers(min_value=-6, max_value=6), st.integers(min_value=-2, max_value=2))
    def test_word_twist_shifts_the_point(self, s0, n):
        word = ZetaWord([(0, 1), (1, -1)])
        assert zetaword_leading(word.twist(n), s0) == zetaword_leading(word, s0 + n)

import pytest
from hypothesis import given, settings, strategies as st

from mlvlab.exceptions import (
    MalformedHodgeNumbers, NotInvertible, ShapeMismatch)
from mlvlab.hodgeweak import (
    GAMMA_C, GAMMA_R, GammaProduct, HodgeDatum, SplitHodgeDatum, arch_factor, arch_layers,
    check_functional_equation_orders, completed_leading, direct_sum, dual_twist, gamma_leading,
    hodge_numbers, one, twist, weak_cohomology, weak_complex, weak_duality)
from mlvlab.periodfield import ONE, const
from mlvlab.zetaeng import LaurentLeading, ZetaWord

from .common import BaseTest, elliptic_h1, period, pure_hodge, rank_two_hodge, tate_twists


WEAK_TABLE = {
    -3: (0, 0),
    -2: (1, 0),
    -1: (0, 0),
    0: (1, 0),
    1: (0, 1),
    2: (0, 0),
    3: (0, 1),
}


class TestHodgeDatum(BaseTest):

    def test_tate(self):
        h = one(1)
        assert h.rank == 1
        assert h.weight == -2
        assert h.comparison[0, 0] == period('2*pi*i')
        assert hodge_numbers(h) == {(-1, -1): 1}

    def test_filtration_is_normalized(self):
        h = HodgeDatum(0, [[1]], [(-5, 1), (0, 1), (1, 0), (7, 0)], [[1]])
        assert h.filtration == ((1, 0),)
        assert h.fdim(0) == 1
        assert h.fdim(1) == 0

    def test_elliptic_hodge_numbers(self):
        assert hodge_numbers(elliptic_h1()) == {(0, 1): 1, (1, 0): 1}

    @pytest.mark.parametrize('args,error', [
        ((0, [[2]], [(1, 0)], [[1]]), ValueError),
        ((0, [[1]], [(1, 0)], [[0]]), NotInvertible),
        ((0, [[1]], [(1, 0)], [['i']]), ValueError),
        ((0, [['pi']], [(1, 0)], [[1]]), ValueError),
        ((0, [[1]], [(1, 0)], [[1, 0]]), ShapeMismatch),
        ((0, [[1]], [(0, 0), (1, 1)], [[1]]), MalformedHodgeNumbers),
        ((0, [[1]], [(0, 1)], [[1]]), MalformedHodgeNumbers),
        ((0, [[1]], [(0, 2)], [[1]]), MalformedHodgeNumbers),
    ])
    def test_invalid(self, args, error):
        with pytest.raises(error):
            HodgeDatum(*args)

    def test_split(self):
        h = direct_sum(one(0), one(1))
        assert isinstance(h, SplitHodgeDatum)
        assert h.rank == 2
        assert h.weights == (-2, 0)
        with pytest.raises(ValueError):
            SplitHodgeDatum([])

    @pytest.mark.parametrize('n', range(-3, 4))
    def test_twist_of_trivial(self, n):
        assert twist(one(0), n) == one(n)

    @settings(max_examples=20)
    @given(pure_hodge)
    def test_double_dual_twist(self, h):
        again = dual_twist(dual_twist(h))
        assert again.weight == h.weight
        assert again.filtration == h.filtration
        assert weak_cohomology(again).hw0.dim == weak_cohomology(h).hw0.dim
        assert weak_cohomology(again).hw1.dim == weak_cohomology(h).hw1.dim


class TestWeakCohomology(BaseTest):

    @pytest.mark.parametrize('n', sorted(WEAK_TABLE))
    def test_tate_table(self, n):
        hw = weak_cohomology(one(n))
        assert (hw.hw0.dim, hw.hw1.dim) == WEAK_TABLE[n]

    def test_elliptic(self):
        hw = weak_cohomology(elliptic_h1())
        assert (hw.hw0.dim, hw.hw1.dim, hw.alpha_rank) == (1, 0, 2)
        dual = weak_cohomology(dual_twist(elliptic_h1()))
        assert (dual.hw0.dim, dual.hw1.dim) == (0, 1)

    def test_split_adds_up(self):
        hw = weak_cohomology(direct_sum(one(0), one(1)))
        assert (hw.hw0.dim, hw.hw1.dim) == (1, 1)

    def test_qgens_are_real(self):
        for n in WEAK_TABLE:
            hw = weak_cohomology(one(n))
            for space in (hw.hw0, hw.hw1):
                assert space.qgen.is_real()

    def test_complex(self):
        complex_ = weak_complex({0: one(0), 1: one(1)})
        assert complex_.dims() == {0: 1, 2: 1}
        assert weak_complex({}).is_empty()

    @given(tate_twists)
    def test_weight_vanishing(self, h):
        hw = weak_cohomology(h)
        if h.weight < 0:
            assert hw.hw0.dim == 0
        if h.weight > -2:
            assert hw.hw1.dim == 0


class TestWeakDuality(BaseTest):

    @pytest.mark.parametrize('n', range(-3, 4))
    def test_tate_is_perfect(self, n):
        pairing = weak_duality(one(n))
        hw = weak_cohomology(one(n))
        assert pairing.degree0.shape == (hw.hw0.dim, hw.hw0.dim)
        assert pairing.degree1.shape == (hw.hw1.dim, hw.hw1.dim)

    def test_elliptic_is_perfect(self):
        pairing = weak_duality(elliptic_h1())
        assert pairing.degree0.shape == (1, 1)
        assert pairing.degree0[0, 0] == period('-1/pi')
        assert pairing.degree1.shape == (0, 0)

    @settings(max_examples=100)
    @given(st.lists(pure_hodge, min_size=1, max_size=3))
    def test_split_is_perfect(self, layers):
        h = direct_sum(*layers)
        pairing = weak_duality(h)
        hw = weak_cohomology(h)
        assert pairing.degree0.shape == (hw.hw0.dim, hw.hw0.dim)
        assert pairing.degree0.det()
        assert pairing.degree1.det()

    @given(pure_hodge)
    def test_dimensions_are_dual(self, h):
        hw = weak_cohomology(h)
        dual = weak_cohomology(dual_twist(h))
        assert hw.hw0.dim == dual.hw1.dim
        assert hw.hw1.dim == dual.hw0.dim


class TestRandomPeriodData(BaseTest):

    @settings(max_examples=100)
    @given(rank_two_hodge())
    def test_weight_dichotomy(self, h):
        hw = weak_cohomology(h)
        if h.weight < 0:
            assert hw.hw0.dim == 0
        if h.weight > -2:
            assert hw.hw1.dim == 0
        expected = (1, 0) if h.weight > 0 else (0, 1) if h.weight < -2 else (0, 0)
        assert (hw.hw0.dim, hw.hw1.dim) == expected

    @settings(max_examples=100)
    @given(rank_two_hodge())
    def test_duality_is_perfect(self, h):
        pairing = weak_duality(h)
        hw = weak_cohomology(h)
        dual = weak_cohomology(dual_twist(h))
        assert (hw.hw0.dim, hw.hw1.dim) == (dual.hw1.dim, dual.hw0.dim)
        assert pairing.degree0.shape == (hw.hw0.dim, hw.hw0.dim)
        assert pairing.degree1.shape == (hw.hw1.dim, hw.hw1.dim)
        assert pairing.degree0.det()
        assert pairing.degree1.det()


class TestAcyclicScale(BaseTest):

    def test_tate(self):
        assert weak_cohomology(one(0)).det_scale == ONE
        assert weak_cohomology(one(2)).det_scale == period('-1/(4*pi^2)')
        assert weak_complex({1: one(2)}).det_scale == period('-4*pi^2')
        assert weak_complex({1: one(2)}).is_empty()


class TestArchimedean(BaseTest):

    def test_factors(self):
        assert arch_factor(arch_layers(one(0))) == GammaProduct([(GAMMA_R, 0, 1)])
        assert arch_factor(arch_layers(one(1))) == GammaProduct([(GAMMA_R, 1, 1)])
        assert arch_factor(arch_layers(elliptic_h1())) == GammaProduct([(GAMMA_C, 0, 1)])
        split = arch_layers(direct_sum(one(0), one(1)))
        assert arch_factor(split) == GammaProduct([(GAMMA_R, 0, 1), (GAMMA_R, 1, 1)])

    @pytest.mark.parametrize('layers', [
        [(1, {(0, 1): 1}, {})],
        [(1, {(0, 1): 1, (1, 0): 2}, {})],
        [(0, {(0, 0): 1}, {})],
        [(0, {(0, 0): 1}, {0: (1, 1)})],
        [(2, {(0, 1): 1, (1, 0): 1}, {})],
    ])
    def test_malformed(self, layers):
        with pytest.raises(MalformedHodgeNumbers):
            arch_factor(layers)

    def test_gamma_product(self):
        with pytest.raises(ValueError):
            GammaProduct([('GammaH', 0, 1)])
        g = GammaProduct([(GAMMA_R, 0, 1), (GAMMA_R, 0, -1), (GAMMA_C, 1, 2)])
        assert g.entries == ((GAMMA_C, 1, 2),)

    def test_gamma_leading(self):
        assert gamma_leading(GammaProduct([(GAMMA_R, 0, 1)]), 0) == LaurentLeading(-1, const(2))
        assert gamma_leading(GammaProduct([(GAMMA_R, 1, 1)]), 0) == LaurentLeading(0, ONE)
        assert gamma_leading(GammaProduct([(GAMMA_R, 2, 1)]), 0) == \
            LaurentLeading(0, period('1/pi'))
        assert gamma_leading(GammaProduct([(GAMMA_C, 0, 1)]), 0) == LaurentLeading(-1, const(2))
        assert gamma_leading(GammaProduct([(GAMMA_C, 1, 1)]), 0) == \
            LaurentLeading(0, period('1/pi'))
        assert gamma_leading(GammaProduct(), 3) == LaurentLeading(0, ONE)

    @pytest.mark.parametrize('n', range(-3, 4))
    def test_order_matches_dual_weak_cohomology(self, n):
        order = gamma_leading(arch_factor(arch_layers(one(n))), 0).order
        assert order == -weak_cohomology(dual_twist(one(n))).hw1.dim

    def test_elliptic_order_matches_dual_weak_cohomology(self):
        h = elliptic_h1()
        order = gamma_leading(arch_factor(arch_layers(h)), 0).order
        assert order == -weak_cohomology(dual_twist(h)).hw1.dim == -1

    @pytest.mark.parametrize('s0', [-2, -1, 0])
    def test_riemann_functional_equation_orders(self, s0):
        assert check_functional_equation_orders(
            ZetaWord([(0, 1)]), GammaProduct([(GAMMA_R, 0, 1)]),
            ZetaWord([(1, 1)]), GammaProduct([(GAMMA_R, 1, 1)]), s0)

    def test_completed_leading(self):
        leading = completed_leading(ZetaWord([(0, 1)]), GammaProduct([(GAMMA_R, 0, 1)]), 0)
        assert leading == LaurentLeading(-1, const(-1))
        assert completed_leading(ZetaWord(), GammaProduct(), 2) == LaurentLeading(0, ONE)

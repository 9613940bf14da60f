import itertools

import pytest

from mlvlab.finitefield import FiniteField, finite_field

from .common import BaseTest


FIELDS = [(2, 1), (5, 1), (2, 2), (2, 3), (3, 2)]


class TestFiniteField(BaseTest):

    def test_invalid(self):
        with pytest.raises(ValueError):
            FiniteField(4)
        with pytest.raises(ValueError):
            FiniteField(3, 0)

    def test_cached(self):
        assert finite_field(3, 2) is finite_field(3, 2)
        assert finite_field(3, 2).q == 9

    @pytest.mark.parametrize('p,k', FIELDS)
    def test_generator_has_full_order(self, p, k):
        field = finite_field(p, k)
        powers = {field.power(field.generator, e) for e in range(field.q - 1)}
        assert powers == set(range(1, field.q))

    @pytest.mark.parametrize('p,k', FIELDS)
    def test_inverses(self, p, k):
        field = finite_field(p, k)
        for a in range(1, field.q):
            assert field.mul(a, field.power(a, field.q - 2)) == 1
            assert field.add(a, field.neg(a)) == 0

    @pytest.mark.parametrize('p,k', FIELDS)
    def test_distributive(self, p, k):
        field = finite_field(p, k)
        for a, b, c in itertools.product(range(field.q), repeat=3):
            left = field.mul(a, field.add(b, c))
            assert left == field.add(field.mul(a, b), field.mul(a, c))

    @pytest.mark.parametrize('p,k', FIELDS)
    def test_frobenius_fixes_everything(self, p, k):
        field = finite_field(p, k)
        for a in range(field.q):
            assert field.power(a, field.q) == a

    def test_prime_subfield(self):
        field = finite_field(3, 2)
        assert field.from_int(-1) == 2
        assert field.add(field.from_int(2), field.from_int(1)) == 0

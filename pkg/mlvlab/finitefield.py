"""
Table-driven arithmetic in GF(p^k).

Elements are integers ``0 <= a < q`` whose base-``p`` digits are the
coefficients of a polynomial in ``t`` modulo a fixed irreducible modulus.
Multiplication goes through exponential/logarithm tables of a primitive
element.
"""
import itertools
import logging
from functools import lru_cache

import sympy as sp
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem


__all__ = ('FiniteField', 'finite_field')


logger = logging.getLogger(__name__)

ADD_TABLE_LIMIT = 1024


def _first_irreducible(p, k):
    """Lexicographically first monic irreducible polynomial of degree ``k`` (dense, high first)."""
    if k == 1:
        return [1, 0]
    for tail in itertools.product(range(p), repeat=k):
        modulus = [1] + list(tail)
        if modulus[-1] and gf_irreducible_p(modulus, p, ZZ):
            return modulus
    raise ValueError('no irreducible polynomial of degree %d over F_%d' % (k, p))


class FiniteField:
    """GF(p^k) with precomputed exp/log tables."""

    def __init__(self, p, k=1):
        if not sp.isprime(p) or k < 1:
            raise ValueError('GF(%s^%s) is not a finite field' % (p, k))
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = _first_irreducible(p, k)
        self._digits = [self._to_digits(a) for a in range(self.q)]
        self._build_tables()
        self._add = None
        if self.q <= ADD_TABLE_LIMIT:
            self._add = [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]
        logger.debug('built GF(%d^%d) with modulus %s', p, k, self.modulus)

    def __repr__(self):
        return '<object %s.%s(q=%d)>' % (self.__module__, type(self).__name__, self.q)

    def _to_digits(self, a):
        digits = []
        for _i in range(self.k):
            a, r = divmod(a, self.p)
            digits.append(r)
        return tuple(digits)

    def _from_digits(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _to_poly(self, a):
        poly = list(reversed(self._digits[a]))
        while len(poly) > 1 and poly[0] == 0:
            poly.pop(0)
        return [ZZ(c) for c in poly]

    def _from_poly(self, poly):
        digits = [0] * self.k
        for j, c in enumerate(reversed(poly)):
            digits[j] = int(c) % self.p
        return self._from_digits(digits)

    def _poly_mul(self, a, b):
        product = gf_mul(self._to_poly(a), self._to_poly(b), self.p, ZZ)
        return self._from_poly(gf_rem(product, self.modulus, self.p, ZZ))

    def _build_tables(self):
        order = self.q - 1
        for generator in range(1, self.q):
            exp = [1]
            value = 1
            for _n in range(1, order):
                value = self._poly_mul(value, generator)
                if value == 1:
                    break
                exp.append(value)
            if len(exp) == order:
                break
        log = [None] * self.q
        for n, value in enumerate(exp):
            log[value] = n
        self.generator = generator
        self._exp = exp + exp
        self._log = log

    def _add_digits(self, a, b):
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        return self._from_digits([(-x) % self.p for x in self._digits[a]])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def power(self, a, e):
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, c):
        """Image of an integer in the prime subfield."""
        return c % self.p


@lru_cache(maxsize=32)
def finite_field(p, k=1):
    return FiniteField(p, k)

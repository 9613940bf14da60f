"""
Frobenius modules at finite places and their Euler factors.

``phi`` models the geometric Frobenius ``Fr^-1``; the local factor of an
:class:`EulerFactor` is ``P(t)^-e`` with ``t = N(p)^-s``.
"""
import logging

import sympy as sp

from .exceptions import PlaceMismatch, ValidationFailed
from .i18n import gettext as _


__all__ = (
    'T',
    'EulerFactor',
    'FrobModule',
    'euler_poly',
    'frob_algebra',
    'frob_from_poly',
    'twist',
    'pushdown',
    'epsilon_constants',
    'epsilon_identity_holds',
    'local_rational_functions',
)


logger = logging.getLogger(__name__)

T = sp.Symbol('t')


def _check_place(p, f):
    if not sp.isprime(p):
        raise ValueError(_('{} is not a prime.').format(p))
    if f < 1:
        raise ValueError(_('Residue degree must be positive, got {}.').format(f))


class EulerFactor:
    """``P(t)^-e`` at ``(p, f)`` with ``P(0) = 1``; coefficients ascending."""

    __slots__ = ('p', 'f', 'coeffs', 'exponent')

    def __init__(self, p, f, coeffs, exponent=1):
        p, f, exponent = int(p), int(f), int(exponent)
        _check_place(p, f)
        coeffs = [sp.Rational(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise ValueError(_('Euler polynomial must satisfy P(0) = 1.'))
        if exponent == 0 and len(coeffs) > 1:
            raise ValueError(_('Nontrivial Euler factor with exponent 0.'))
        self.p = p
        self.f = f
        self.coeffs = tuple(coeffs)
        self.exponent = exponent

    @classmethod
    def from_poly(cls, p, f, poly, exponent=1):
        poly = sp.Poly(poly, T, domain=sp.QQ)
        return cls(p, f, reversed(poly.all_coeffs()), exponent)

    @property
    def poly(self):
        return sp.Poly(list(reversed(self.coeffs)), T, domain=sp.QQ)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def norm(self):
        return self.p ** self.f

    def is_trivial(self):
        return self.degree == 0

    def __eq__(self, other):
        return (isinstance(other, EulerFactor) and
                (self.p, self.f, self.coeffs, self.exponent) ==
                (other.p, other.f, other.coeffs, other.exponent))

    def __hash__(self):
        return hash((self.p, self.f, self.coeffs, self.exponent))

    def __repr__(self):
        return '<object %s.%s(p=%d, f=%d, P=%s, e=%d)>' % (
            self.__module__, type(self).__name__, self.p, self.f,
            self.poly.as_expr(), self.exponent)

    def with_exponent(self, exponent):
        return EulerFactor(self.p, self.f, self.coeffs, exponent)

    def twist(self, n):
        """``P(q^-n t)``: the factor of ``M(n)``."""
        q = sp.Rational(self.norm)
        return EulerFactor(self.p, self.f,
                           [c * q ** (-n * k) for k, c in enumerate(self.coeffs)], self.exponent)

    def pushdown(self):
        """``P(t^f)`` at ``f = 1``."""
        if self.f == 1:
            return self
        coeffs = [sp.Integer(0)] * (self.degree * self.f + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * self.f] = c
        return EulerFactor(self.p, 1, coeffs, self.exponent)

    def dual(self):
        """Factor of the dual module: ``t^n P(1/t) / c_n``."""
        top = self.coeffs[-1]
        return EulerFactor(self.p, self.f, [c / top for c in reversed(self.coeffs)],
                           self.exponent)

    def epsilon(self):
        """``(a, b)`` with ``L(V, s) = a b^s L(V^dual, -s)`` for this factor."""
        down = self.pushdown()
        a = 1 / down.coeffs[-1]
        b = sp.Integer(self.p) ** down.degree
        return a ** self.exponent, b ** self.exponent


class FrobModule:
    """Invertible rational matrix ``phi`` at the place ``(p, f)``."""

    __slots__ = ('p', 'f', 'phi')

    def __init__(self, p, f, phi):
        p, f = int(p), int(f)
        _check_place(p, f)
        phi = sp.ImmutableMatrix(sp.Matrix(phi).applyfunc(sp.Rational))
        if not phi.is_square or phi.rows == 0:
            raise ValueError(_('Frobenius matrix must be square and nonempty.'))
        if phi.det() == 0:
            raise ValueError(_('Frobenius matrix must be invertible.'))
        self.p = p
        self.f = f
        self.phi = phi

    @property
    def rank(self):
        return self.phi.rows

    @property
    def norm(self):
        return self.p ** self.f

    def __eq__(self, other):
        return (isinstance(other, FrobModule) and (self.p, self.f) == (other.p, other.f) and
                self.phi == other.phi)

    def __hash__(self):
        return hash((self.p, self.f, self.phi))

    def __repr__(self):
        return '<object %s.%s(p=%d, f=%d, phi=%s)>' % (
            self.__module__, type(self).__name__, self.p, self.f, self.phi.tolist())


def euler_poly(v):
    """``det(Id - phi t)`` read off the characteristic polynomial of ``phi``."""
    x = sp.Dummy('x')
    # det(x - phi) = sum c_k x^(n-k)  gives  det(1 - phi t) = sum c_k t^k
    coeffs = v.phi.charpoly(x).all_coeffs()
    return EulerFactor(v.p, v.f, coeffs, 1)


def frob_algebra(v, w=None, op='sum'):
    if op == 'dual':
        return FrobModule(v.p, v.f, v.phi.inv().T)
    if w is None:
        raise TypeError(_('Operation {} needs two modules.').format(op))
    if (v.p, v.f) != (w.p, w.f):
        raise PlaceMismatch(_('Modules at ({}, {}) and ({}, {}).').format(v.p, v.f, w.p, w.f))
    if op == 'sum':
        return FrobModule(v.p, v.f, sp.diag(v.phi, w.phi))
    if op == 'tensor':
        return FrobModule(v.p, v.f, sp.kronecker_product(v.phi, w.phi).as_explicit())
    raise ValueError(_('Unknown operation {!r}.').format(op))


def frob_from_poly(p, f, coeffs):
    """Companion module whose Euler polynomial is ``sum coeffs[k] t^k``."""
    factor = EulerFactor(p, f, coeffs)
    n = factor.degree
    if n == 0:
        raise ValueError(_('Constant Euler polynomial has no module.'))
    companion = sp.zeros(n, n)
    for k in range(1, n):
        companion[k, k - 1] = 1
    # monic char poly x^n + c_1 x^(n-1) + ... + c_n
    for k in range(n):
        companion[k, n - 1] = -factor.coeffs[n - k]
    return FrobModule(p, f, companion)


def twist(v, n):
    return FrobModule(v.p, v.f, v.phi * sp.Rational(v.norm) ** (-n))


def pushdown(v):
    """Induced module at ``f = 1``: cyclic block matrix with ``det(I - Bt) = det(I - phi t^f)``."""
    if v.f == 1:
        return v
    r, f = v.rank, v.f
    block = sp.zeros(r * f, r * f)
    block[0:r, (f - 1) * r:f * r] = v.phi
    for k in range(1, f):
        block[k * r:(k + 1) * r, (k - 1) * r:k * r] = sp.eye(r)
    down = FrobModule(v.p, 1, block)
    if euler_poly(down) != euler_poly(v).pushdown():
        raise ValidationFailed(_('Pushdown does not reproduce P(t^f).'))
    return down


def epsilon_identity_holds(factor, a, b_exponent):
    """
    Check ``P_dual(1/x) x^n = a P(x)`` with ``x = p^-s`` and ``b^s = x^-n``, the
    cross-multiplied form of ``1/P(x) = a b^s / P_dual(1/x)``.
    """
    x = sp.Dummy('x')
    down = factor.pushdown()
    poly = down.poly.as_expr().subs(T, x)
    dual = down.dual().poly.as_expr().subs(T, 1 / x)
    return sp.expand(dual * x ** b_exponent - a * poly) == 0


def epsilon_constants(v):
    """``(a, b)`` with ``L(V, s) = a b^s L(V^dual, -s)``; modules with ``f > 1`` are pushed down."""
    v = pushdown(v)
    n = v.rank
    a = sp.Integer(-1) ** n / v.phi.det()
    b = sp.Integer(v.p) ** n
    if not epsilon_identity_holds(euler_poly(v), a, n):
        raise ValidationFailed(_('Epsilon identity fails for {!r}.').format(v))
    logger.debug('epsilon constants at p=%d: a=%s, b=%s', v.p, a, b)
    return a, b


def local_rational_functions(factors):
    """
    Collapse factors per prime into one rational function of ``t = p^-s``
    (all pushed down to ``f = 1``).
    """
    result = {}
    for factor in factors:
        down = factor.pushdown()
        term = down.poly.as_expr() ** (-down.exponent)
        result[down.p] = sp.cancel(result.get(down.p, sp.Integer(1)) * term)
    return {p: expr for p, expr in result.items() if expr != 1}

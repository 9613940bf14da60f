"""
Hasse-Weil zeta functions of varieties over finite fields and exact leading
terms of global L-objects at integer points.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import reduce

import sympy as sp

from .exceptions import BudgetExceeded, Inconsistent, ValidationFailed
from .finitefield import finite_field
from .galrep import T, EulerFactor
from .i18n import gettext as _
from .periodfield import ONE, const, log_p, symbol


__all__ = (
    'DEFAULT_BUDGET',
    'VarietySpec',
    'RationalZeta',
    'ZetaWord',
    'LaurentLeading',
    'point_count',
    'point_count_naive',
    'point_counts',
    'zeta_from_counts',
    'zeta_at',
    'euler_leading',
    'zetaword_leading',
    'lobject_leading',
)


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10 ** 7
MAX_COEFFICIENT = 10 ** 6
AFFINE = 'affine'
PROJECTIVE = 'projective'


class VarietySpec:
    """
    Zero locus of integer polynomials in ``x0..x{N-1}`` where ``N`` is
    ``ambient_dim`` (affine) or ``ambient_dim + 1`` (projective).

    Each equation is a tuple of ``(exponents, coefficient)`` terms.
    """

    __slots__ = ('kind', 'ambient_dim', 'equations')

    def __init__(self, kind, ambient_dim, equations=()):
        if kind not in (AFFINE, PROJECTIVE):
            raise ValueError(_('Unknown variety kind {!r}.').format(kind))
        if ambient_dim < 0:
            raise ValueError(_('Negative ambient dimension.'))
        self.kind = kind
        self.ambient_dim = ambient_dim
        nvars = self.nvars
        normalized = []
        for equation in equations:
            terms = tuple(sorted((tuple(int(e) for e in exps), int(c))
                                 for exps, c in equation if c))
            for exps, c in terms:
                if len(exps) != nvars:
                    raise ValueError(_('Monomial {} has the wrong arity.').format(exps))
                if abs(c) > MAX_COEFFICIENT:
                    raise ValueError(_('Coefficient {} exceeds {}.').format(c, MAX_COEFFICIENT))
            if kind == PROJECTIVE and len({sum(exps) for exps, _c in terms}) > 1:
                raise ValueError(_('Projective equations must be homogeneous.'))
            normalized.append(terms)
        self.equations = tuple(normalized)

    @classmethod
    def from_strings(cls, kind, ambient_dim, equations=()):
        nvars = ambient_dim + (1 if kind == PROJECTIVE else 0)
        gens = sp.symbols('x0:%d' % nvars) if nvars else ()
        local = {str(g): g for g in gens}
        parsed = []
        for text in equations:
            try:
                expr = sp.sympify(str(text).replace('^', '**'), locals=local)
                poly = sp.Poly(expr, *gens, domain=sp.ZZ)
            except (sp.SympifyError, sp.PolynomialError, sp.CoercionFailed, TypeError) as exc:
                raise ValueError(_('Invalid equation {!r}.').format(text)) from exc
            parsed.append(poly.terms())
        return cls(kind, ambient_dim, parsed)

    @property
    def nvars(self):
        return self.ambient_dim + (1 if self.kind == PROJECTIVE else 0)

    def equation_strings(self):
        gens = sp.symbols('x0:%d' % self.nvars) if self.nvars else ()
        texts = []
        for equation in self.equations:
            expr = sum(c * sp.Mul(*(g ** e for g, e in zip(gens, exps))) for exps, c in equation)
            texts.append(str(expr).replace('**', '^'))
        return texts

    def __eq__(self, other):
        return (isinstance(other, VarietySpec) and
                (self.kind, self.ambient_dim, self.equations) ==
                (other.kind, other.ambient_dim, other.equations))

    def __repr__(self):
        return '<object %s.%s(%s, n=%d, %d equations)>' % (
            self.__module__, type(self).__name__, self.kind, self.ambient_dim,
            len(self.equations))


def _restrict(equations, fixed, p):
    """Substitute ``fixed`` (var -> 0 or 1) and reduce coefficients mod ``p``."""
    restricted = []
    for equation in equations:
        terms = {}
        for exps, c in equation:
            if any(exps[v] > 0 and value == 0 for v, value in fixed.items()):
                continue
            key = tuple(0 if v in fixed else e for v, e in enumerate(exps))
            terms[key] = (terms.get(key, 0) + c) % p
        terms = {k: c for k, c in terms.items() if c}
        if not terms:
            continue
        if list(terms) == [tuple([0] * len(next(iter(terms))))]:
            return None
        restricted.append(terms)
    return restricted


def _count_chart(field, equations, nvars, fixed, budget):
    """Solutions with the ``fixed`` coordinates pinned; free coordinates counted as ``q``."""
    restricted = _restrict(equations, fixed, field.p)
    if restricted is None:
        return 0, 0
    constrained = sorted({v for eq in restricted for exps in eq for v, e in enumerate(exps) if e})
    free = nvars - len(fixed) - len(constrained)
    size = field.q ** len(constrained)
    if size > budget:
        raise BudgetExceeded(_('{} candidate points exceed the budget {}.').format(size, budget))
    compiled = [[(field.from_int(c), [(constrained.index(v), e) for v, e in enumerate(exps) if e])
                 for exps, c in eq.items()] for eq in restricted]
    solutions = 0
    for point in itertools.product(range(field.q), repeat=len(constrained)):
        for eq in compiled:
            total = 0
            for coeff, monomial in eq:
                term = coeff
                for index, e in monomial:
                    term = field.mul(term, field.power(point[index], e))
                    if not term:
                        break
                total = field.add(total, term)
            if total:
                break
        else:
            solutions += 1
    return solutions * field.q ** free, size


def point_count(v, p, k=1, budget=DEFAULT_BUDGET):
    """
    ``#X(F_{p^k})``. Projective space is covered by the charts
    ``x_0 = .. = x_{j-1} = 0, x_j = 1``.
    """
    field = finite_field(p, k)
    nvars = v.nvars
    if v.kind == AFFINE:
        charts = [{}]
    else:
        charts = [{**{i: 0 for i in range(j)}, j: 1} for j in range(nvars)]
    total = 0
    enumerated = 0
    for fixed in charts:
        count, size = _count_chart(field, v.equations, nvars, fixed, budget - enumerated)
        total += count
        enumerated += size
    logger.debug('point_count %r over F_%d^%d: %d points, %d candidates',
                 v, p, k, total, enumerated)
    return total


def point_count_naive(v, p, k=1, budget=DEFAULT_BUDGET):
    """Independent oracle: evaluate every coordinate tuple."""
    field = finite_field(p, k)
    nvars = v.nvars
    size = field.q ** nvars
    if size > budget:
        raise BudgetExceeded(_('{} candidate points exceed the budget {}.').format(size, budget))
    solutions = 0
    for point in itertools.product(range(field.q), repeat=nvars):
        if v.kind == PROJECTIVE and not any(point):
            continue
        ok = True
        for equation in v.equations:
            total = 0
            for exps, c in equation:
                term = field.from_int(c)
                for x, e in zip(point, exps):
                    term = field.mul(term, field.power(x, e))
                total = field.add(total, term)
            if total:
                ok = False
                break
        solutions += ok
    if v.kind == PROJECTIVE:
        return solutions // (field.q - 1)
    return solutions


def _count_job(args):
    v, p, k, budget = args
    return point_count(v, p, k, budget)


def point_counts(v, p, ks, budget=DEFAULT_BUDGET, workers=1):
    """Counts for each ``k`` in ``ks``, in order; ``workers > 1`` fans out to processes."""
    jobs = [(v, p, k, budget) for k in ks]
    if workers <= 1 or len(jobs) <= 1:
        return [_count_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_count_job, jobs))


def _power_sums(coeffs, count):
    """Newton: power sums of the inverse roots of ``1 + c_1 t + ...``."""
    sums = []
    for k in range(1, count + 1):
        c_k = coeffs[k] if k < len(coeffs) else 0
        s = -k * c_k - sum((coeffs[i] if i < len(coeffs) else 0) * sums[k - i - 1]
                           for i in range(1, k))
        sums.append(sp.Rational(s))
    return sums


class RationalZeta:
    """``Z(t) = N(t)/D(t)`` with ``N(0) = D(0) = 1``; coefficients ascending."""

    __slots__ = ('numerator', 'denominator')

    def __init__(self, numerator, denominator):
        self.numerator = tuple(sp.Rational(c) for c in numerator)
        self.denominator = tuple(sp.Rational(c) for c in denominator)

    @classmethod
    def from_polys(cls, numerator, denominator):
        num = sp.Poly(numerator, T, domain=sp.QQ)
        den = sp.Poly(denominator, T, domain=sp.QQ)
        common = sp.gcd(num, den)
        num = sp.quo(num, common)
        den = sp.quo(den, common)
        n0, d0 = num.eval(0), den.eval(0)
        return cls([c / n0 for c in reversed(num.all_coeffs())],
                   [c / d0 for c in reversed(den.all_coeffs())])

    def as_expr(self):
        num = sum(c * T ** k for k, c in enumerate(self.numerator))
        den = sum(c * T ** k for k, c in enumerate(self.denominator))
        return num / den

    def predict(self, count):
        """``N_1..N_count`` implied by the rational function."""
        den = _power_sums(self.denominator, count)
        num = _power_sums(self.numerator, count)
        return [int(d - n) for d, n in zip(den, num)]

    def as_euler_factors(self, p, f=1):
        factors = [EulerFactor(p, f, self.denominator, 1), EulerFactor(p, f, self.numerator, -1)]
        return [factor for factor in factors if not factor.is_trivial()]

    def __eq__(self, other):
        return (isinstance(other, RationalZeta) and self.numerator == other.numerator and
                self.denominator == other.denominator)

    def __repr__(self):
        return '<object %s.%s(%s)>' % (self.__module__, type(self).__name__, self.as_expr())


def _zeta_series(counts):
    """Coefficients ``z_0..z_m`` of ``exp(sum N_k t^k / k)``."""
    z = [sp.Integer(1)]
    for n in range(1, len(counts) + 1):
        z.append(sp.Rational(sum(counts[k - 1] * z[n - k] for k in range(1, n + 1)), n))
    return z


def zeta_from_counts(counts, deg_num, deg_den, known_den=None):
    """
    Reconstruct ``Z(t)`` from ``N_1..N_m``; counts beyond those needed for the
    fit must be reproduced exactly.

    With ``known_den`` (ascending coefficients) only the numerator is fitted.
    """
    counts = [int(c) for c in counts]
    m = len(counts)
    needed = deg_num + 1 if known_den is not None else deg_num + deg_den + 1
    if m < needed:
        raise ValueError(_('{} counts given, at least {} needed.').format(m, needed))
    z = _zeta_series(counts)

    def coeff(j):
        return z[j] if 0 <= j < len(z) else 0

    if known_den is not None:
        den = [sp.Rational(c) for c in known_den]
    elif deg_den == 0:
        den = [sp.Integer(1)]
    else:
        rows = [[coeff(j - i) for i in range(1, deg_den + 1)]
                for j in range(deg_num + 1, deg_num + deg_den + 1)]
        rhs = sp.Matrix([-coeff(j) for j in range(deg_num + 1, deg_num + deg_den + 1)])
        try:
            sol, params = sp.Matrix(rows).gauss_jordan_solve(rhs)
        except ValueError as exc:
            raise Inconsistent(_('No denominator of degree {} fits the counts.').format(
                deg_den)) from exc
        sol = sol.subs({param: 0 for param in params})
        den = [sp.Integer(1)] + list(sol)

    product = [sum(den[i] * coeff(j - i) for i in range(len(den))) for j in range(m + 1)]
    num = product[:deg_num + 1]
    for j in range(deg_num + 1, m + 1):
        if product[j] != 0:
            raise ValidationFailed(_('Count N_{} is not reproduced by the fitted zeta.').format(j))
    num_poly = sum(c * T ** k for k, c in enumerate(num))
    den_poly = sum(c * T ** k for k, c in enumerate(den))
    result = RationalZeta.from_polys(num_poly, den_poly)
    logger.debug('zeta_from_counts %s -> %r', counts, result)
    return result


class LaurentLeading:
    """``order`` (positive: zero, negative: pole) and the leading coefficient."""

    __slots__ = ('order', 'leading')

    def __init__(self, order, leading):
        leading = const(leading) if not hasattr(leading, 'conj') else leading
        if not leading:
            raise ValueError(_('Leading coefficient must be nonzero.'))
        self.order = int(order)
        self.leading = leading

    def __mul__(self, other):
        return LaurentLeading(self.order + other.order, self.leading * other.leading)

    def __pow__(self, exponent):
        return LaurentLeading(self.order * exponent, self.leading ** exponent)

    def inverse(self):
        return self ** -1

    def __eq__(self, other):
        return (isinstance(other, LaurentLeading) and self.order == other.order and
                self.leading == other.leading)

    def __repr__(self):
        return '<object %s.%s(order=%d, leading=%s)>' % (
            self.__module__, type(self).__name__, self.order, self.leading)


UNIT = LaurentLeading(0, ONE)


def _product(leadings):
    return reduce(lambda x, y: x * y, leadings, UNIT)


def euler_leading(factors, s0=0):
    """Leading term of ``prod P(N^-s)^-e`` at the integer ``s0``."""
    result = UNIT
    for factor in factors:
        norm = sp.Integer(factor.norm)
        t0 = norm ** (-s0)
        poly = factor.poly
        linear = sp.Poly(1 - T / t0, T, domain=sp.QQ)
        vanishing = 0
        while poly.eval(t0) == 0:
            poly, remainder = sp.div(poly, linear)
            if not remainder.is_zero:
                raise ArithmeticError('inexact division by a vanishing factor')
            vanishing += 1
        leading = (factor.f * log_p(factor.p)) ** vanishing * const(poly.eval(t0))
        result = result * LaurentLeading(vanishing, leading) ** (-factor.exponent)
    return result


def zeta_at(u):
    """Order and leading coefficient of ``zeta(s)`` at the integer ``u``."""
    if u == 1:
        return LaurentLeading(-1, ONE)
    if u == 0:
        return LaurentLeading(0, const(sp.Rational(-1, 2)))
    if u < 0:
        n = -u
        if n % 2 == 0:
            return LaurentLeading(1, symbol('zetaprime_neg_%d' % n))
        return LaurentLeading(0, const(-sp.bernoulli(n + 1) / (n + 1)))
    if u % 2 == 0:
        k = u // 2
        rational = (-1) ** (k + 1) * sp.bernoulli(u) * 2 ** u / (2 * sp.factorial(u))
        return LaurentLeading(0, const(rational) * symbol('pi') ** u)
    return LaurentLeading(0, symbol('zeta_odd_%d' % u))


class ZetaWord:
    """``prod zeta(s + a)^e`` times finitely many Euler factors."""

    __slots__ = ('shifts', 'extra_factors')

    def __init__(self, shifts=(), extra_factors=()):
        merged = {}
        for a, e in (shifts.items() if isinstance(shifts, dict) else shifts):
            merged[int(a)] = merged.get(int(a), 0) + int(e)
        self.shifts = tuple(sorted((a, e) for a, e in merged.items() if e))
        self.extra_factors = tuple(f for f in extra_factors if not f.is_trivial())

    def twist(self, n):
        return ZetaWord([(a + n, e) for a, e in self.shifts],
                        [f.twist(n) for f in self.extra_factors])

    def inverse(self):
        return ZetaWord([(a, -e) for a, e in self.shifts],
                        [f.with_exponent(-f.exponent) for f in self.extra_factors])

    def __mul__(self, other):
        return ZetaWord(self.shifts + other.shifts, self.extra_factors + other.extra_factors)

    def __eq__(self, other):
        return (isinstance(other, ZetaWord) and self.shifts == other.shifts and
                self.extra_factors == other.extra_factors)

    def __repr__(self):
        return '<object %s.%s(shifts=%s, factors=%d)>' % (
            self.__module__, type(self).__name__, list(self.shifts), len(self.extra_factors))


def zetaword_leading(w, s0=0):
    result = _product(zeta_at(s0 + a) ** e for a, e in w.shifts)
    return result * euler_leading(w.extra_factors, s0)


def lobject_leading(lobject, s0=0):
    """Dispatch on the two kinds of L-object."""
    if isinstance(lobject, ZetaWord):
        return zetaword_leading(lobject, s0)
    return euler_leading(lobject, s0)

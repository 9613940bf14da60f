"""
Exact arithmetic in the period field ``Q(symbols)(i)``.

A :class:`PeriodValue` is stored as ``re + i*im`` where ``re`` and ``im`` are
reduced rational functions with rational coefficients in the declared symbols.
Symbols are algebraically independent; ``i`` is the only algebraic element.
"""
import numbers
import re
from functools import reduce

import mpmath
import sympy as sp
from sympy.parsing.sympy_parser import (
    parse_expr, standard_transformations, convert_xor)
from sympy.polys.fields import FracField
from sympy.polys.orderings import lex

from .exceptions import DivisionByZero, PeriodSyntaxError
from .i18n import gettext as _


__all__ = (
    'FIXED',
    'NEGATED',
    'SymbolTable',
    'PeriodValue',
    'DEFAULT_TABLE',
    'I',
    'ONE',
    'ZERO',
    'const',
    'symbol',
    'log_p',
    'two_pi_i',
    'parse_period',
    'rational_ratio',
    'opaque_symbols',
)


FIXED = 'fixed'
NEGATED = 'negated'

_NAME_RE = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')
_IDENT_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
_LOG_RE = re.compile(r'^log_(\d+)$')
_ZETA_ODD_RE = re.compile(r'^zeta_odd_(\d+)$')
_ZETA_PRIME_RE = re.compile(r'^zetaprime_neg_(\d+)$')
OPAQUE_PREFIXES = ('zeta_odd_', 'zetaprime_neg_')


def _check_reserved(name, conjugation):
    """Reserved names carry fixed conjugation and well-formed indices."""
    match = _LOG_RE.match(name)
    if match and not sp.isprime(int(match.group(1))):
        raise ValueError(_('log_{} is not indexed by a prime.').format(match.group(1)))
    match = _ZETA_ODD_RE.match(name)
    if match:
        k = int(match.group(1))
        if k < 3 or k % 2 == 0:
            raise ValueError(_('zeta_odd_k needs an odd k >= 3, got {}.').format(k))
    match = _ZETA_PRIME_RE.match(name)
    if match:
        k = int(match.group(1))
        if k < 2 or k % 2:
            raise ValueError(_('zetaprime_neg_2k needs an even index >= 2, got {}.').format(k))
    reserved = (name == 'pi' or _LOG_RE.match(name) or _ZETA_ODD_RE.match(name) or
                _ZETA_PRIME_RE.match(name))
    if reserved and conjugation != FIXED:
        raise ValueError(_('Reserved symbol {} must be fixed by conjugation.').format(name))


class SymbolTable:
    """
    Ordered, immutable list of ``(name, conjugation)`` pairs.

    The imaginary unit is built in and cannot be declared.
    """

    __slots__ = ('_entries', '_conj', '_field')

    def __init__(self, entries=(('pi', FIXED),)):
        entries = tuple((str(name), conj) for name, conj in entries)
        if not entries:
            entries = (('pi', FIXED),)
        seen = set()
        for name, conj in entries:
            if not name or not _NAME_RE.match(name) or name == 'i':
                raise ValueError(_('Invalid symbol name {!r}.').format(name))
            if name in seen:
                raise ValueError(_('Symbol {} declared twice.').format(name))
            if conj not in (FIXED, NEGATED):
                raise ValueError(_('Unknown conjugation {!r}.').format(conj))
            _check_reserved(name, conj)
            seen.add(name)
        self._entries = entries
        self._conj = dict(entries)
        self._field = None

    @property
    def entries(self):
        return self._entries

    @property
    def names(self):
        return tuple(name for name, _conj in self._entries)

    @property
    def field(self):
        """The sympy rational function field, lexicographic in declaration order."""
        if self._field is None:
            self._field = FracField(tuple(sp.Symbol(n) for n in self.names), sp.QQ, lex)
        return self._field

    def conjugation(self, name):
        return self._conj[name]

    def __contains__(self, name):
        return name in self._conj

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, SymbolTable) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return '<object %s.%s(%s)>' % (
            self.__module__, type(self).__name__,
            ', '.join('%s:%s' % entry for entry in self._entries))

    def declare(self, name, conjugation=FIXED):
        """Return a table extended by ``name`` (no-op if already declared)."""
        if name in self._conj:
            if self._conj[name] != conjugation:
                raise ValueError(_('Symbol {} already declared as {}.').format(
                    name, self._conj[name]))
            return self
        return SymbolTable(self._entries + ((name, conjugation),))

    def merge(self, other):
        """Union keeping declaration order: ours first, then the newcomers."""
        if other is self or other == self:
            return self
        table = self
        for name, conj in other.entries:
            table = table.declare(name, conj)
        return table


DEFAULT_TABLE = SymbolTable()


def _lift(element, table):
    return element.set_field(table.field)


class PeriodValue:
    """
    Immutable element ``re + i*im`` of the period field.

    Values built on different symbol tables are combined on the merged table.
    """

    __slots__ = ('_table', '_re', '_im')

    def __init__(self, re_part, im_part, table):
        self._table = table
        self._re = re_part
        self._im = im_part

    # Construction

    @classmethod
    def from_rational(cls, value, table=DEFAULT_TABLE):
        field = table.field
        return cls(field.from_expr(sp.Rational(value)), field.zero, table)

    @classmethod
    def from_symbol(cls, name, table=DEFAULT_TABLE, conjugation=FIXED):
        table = table.declare(name, conjugation)
        field = table.field
        return cls(field.from_expr(sp.Symbol(name)), field.zero, table)

    @classmethod
    def from_expr(cls, expr, table=DEFAULT_TABLE):
        """Convert a sympy expression in declared symbols and ``I``."""
        expr = sp.sympify(expr)
        if expr.atoms(sp.Float):
            raise PeriodSyntaxError(_('Floating point numbers are not periods.'))
        for free in sorted(expr.free_symbols, key=lambda s: s.name):
            if free.name not in table:
                table = table.declare(free.name)
        unit = sp.Dummy('unit')
        numer, denom = sp.fraction(sp.together(expr.subs(sp.I, unit)))
        try:
            top = cls._from_unit_poly(numer, unit, table)
            bottom = cls._from_unit_poly(denom, unit, table)
        except (ValueError, sp.PolynomialError) as exc:
            raise PeriodSyntaxError(_('Not a rational period expression: {}').format(expr)) \
                from exc
        return top / bottom

    @classmethod
    def _from_unit_poly(cls, expr, unit, table):
        field = table.field
        poly = sp.Poly(sp.expand(expr), unit)
        re_part = field.zero
        im_part = field.zero
        for (power,), coeff in poly.terms():
            value = field.from_expr(coeff)
            sign = -1 if power % 4 in (2, 3) else 1
            if power % 2:
                im_part += sign * value
            else:
                re_part += sign * value
        return cls(re_part, im_part, table)

    # Accessors

    @property
    def table(self):
        return self._table

    def real_part(self):
        return PeriodValue(self._re, self._table.field.zero, self._table)

    def imag_part(self):
        return PeriodValue(self._im, self._table.field.zero, self._table)

    def as_expr(self):
        return self._re.as_expr() + sp.I * self._im.as_expr()

    def is_zero(self):
        return not self._re and not self._im

    def is_rational(self):
        return not self._im and self._re.numer.is_ground and self._re.denom.is_ground

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(_('{} is not a rational constant.').format(self))
        return sp.Rational(self._re.as_expr())

    def is_real(self):
        return self == self.conj()

    def free_names(self):
        names = set()
        for part in (self._re, self._im):
            if part:
                names.update(s.name for s in part.as_expr().free_symbols)
        return names

    def canonical(self):
        """Rebuild from the reduced parts (idempotent)."""
        field = self._table.field
        return PeriodValue(field.new(self._re.numer, self._re.denom),
                           field.new(self._im.numer, self._im.denom), self._table)

    # Arithmetic

    def _unify(self, other):
        if isinstance(other, PeriodValue):
            if other._table == self._table:
                return self, other
            table = self._table.merge(other._table)
            return self.on_table(table), other.on_table(table)
        if isinstance(other, (int, sp.Rational)) or hasattr(other, 'denominator'):
            return self, PeriodValue.from_rational(sp.Rational(other), self._table)
        return None, None

    def on_table(self, table):
        if table == self._table:
            return self
        return PeriodValue(_lift(self._re, table), _lift(self._im, table), table)

    def __add__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return PeriodValue(a._re + b._re, a._im + b._im, a._table)

    __radd__ = __add__

    def __neg__(self):
        return PeriodValue(-self._re, -self._im, self._table)

    def __sub__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return PeriodValue(a._re - b._re, a._im - b._im, a._table)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return PeriodValue(a._re * b._re - a._im * b._im,
                           a._re * b._im + a._im * b._re, a._table)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero(_('Division by zero period.'))
        norm = self._re * self._re + self._im * self._im
        return PeriodValue(self._re / norm, -self._im / norm, self._table)

    def __truediv__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, (numbers.Integral, sp.Integer)):
            return NotImplemented
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = PeriodValue.from_rational(1, self._table)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self):
        """Apply the symbol-wise conjugation and send ``i`` to ``-i``."""
        negated = [sp.Symbol(name) for name, conj in self._table.entries if conj == NEGATED]
        field = self._table.field

        def sigma(part):
            if not negated or not part:
                return part
            expr = part.as_expr().subs({s: -s for s in negated}, simultaneous=True)
            return field.from_expr(expr)

        return PeriodValue(sigma(self._re), -sigma(self._im), self._table)

    # Comparison and display

    def __eq__(self, other):
        a, b = self._unify(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((str(sp.cancel(self._re.as_expr())), str(sp.cancel(self._im.as_expr()))))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        text = sp.sstr(sp.cancel(self.as_expr()), order='lex')
        text = re.sub(r'\bI\b', 'i', text)
        return text.replace('**', '^')

    def __repr__(self):
        return '<object %s.%s(%s)>' % (self.__module__, type(self).__name__, self)

    def approx(self, digits=15):
        """
        Decimal hint substituting numeric values for known constants.

        Returns ``None`` when a user-declared symbol has no known value.
        """
        subs = {}
        for name in self.free_names():
            match = _LOG_RE.match(name)
            if match:
                subs[sp.Symbol(name)] = sp.log(int(match.group(1)))
            elif name == 'pi':
                subs[sp.Symbol(name)] = sp.pi
            elif _ZETA_ODD_RE.match(name):
                subs[sp.Symbol(name)] = sp.zeta(int(_ZETA_ODD_RE.match(name).group(1)))
            elif _ZETA_PRIME_RE.match(name):
                k = int(_ZETA_PRIME_RE.match(name).group(1))
                with mpmath.workdps(digits + 5):
                    subs[sp.Symbol(name)] = sp.Float(mpmath.zeta(-k, derivative=1), digits + 5)
            else:
                return None
        return sp.N(self.as_expr().subs(subs), digits)


def const(value, table=DEFAULT_TABLE):
    """Rational constant as a :class:`PeriodValue`."""
    return PeriodValue.from_rational(value, table)


def symbol(name, conjugation=FIXED, table=DEFAULT_TABLE):
    return PeriodValue.from_symbol(name, table, conjugation)


def log_p(p):
    return symbol('log_%d' % p)


ONE = const(1)
ZERO = const(0)
I = PeriodValue(DEFAULT_TABLE.field.zero, DEFAULT_TABLE.field.one, DEFAULT_TABLE)


def two_pi_i():
    return 2 * I * symbol('pi')


def product(values):
    return reduce(lambda x, y: x * y, values, ONE)


def parse_period(text, table=DEFAULT_TABLE):
    """
    Parse ``a/b``, symbol names, ``i``, ``+ - * / ^`` and parentheses.

    Names not yet in ``table`` are declared as fixed symbols.
    """
    if isinstance(text, PeriodValue):
        return text
    if isinstance(text, int):
        return const(text, table)
    text = str(text).strip()
    if not text:
        raise PeriodSyntaxError(_('Empty period expression.'))
    local = {}
    for name in set(_IDENT_RE.findall(text)):
        if name == 'i':
            local[name] = sp.I
        elif _NAME_RE.match(name):
            local[name] = sp.Symbol(name)
        else:
            raise PeriodSyntaxError(_('Invalid symbol name {!r}.').format(name))
    global_dict = {'Integer': sp.Integer, 'Rational': sp.Rational,
                   'Symbol': sp.Symbol, 'Float': sp.Float}
    try:
        expr = parse_expr(text, local_dict=local, global_dict=global_dict,
                          transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TypeError, ValueError, NameError, sp.SympifyError) as exc:
        raise PeriodSyntaxError(_('Cannot parse period {!r}.').format(text)) from exc
    except Exception as exc:
        # the tokenizer raises its own error types on unbalanced input
        raise PeriodSyntaxError(_('Cannot parse period {!r}.').format(text)) from exc
    try:
        return PeriodValue.from_expr(expr, table)
    except ZeroDivisionError as exc:
        raise DivisionByZero(_('Division by zero in {!r}.').format(text)) from exc
    except ValueError as exc:
        raise PeriodSyntaxError(str(exc)) from exc


def rational_ratio(x, y):
    """
    Return the rational ``q`` with ``x = q*y``, or ``None`` when ``x/y`` is not
    a rational constant.
    """
    if not isinstance(y, PeriodValue):
        y = const(y)
    if y.is_zero():
        raise DivisionByZero(_('Comparison against the zero period.'))
    ratio = (x if isinstance(x, PeriodValue) else const(x)) / y
    if not ratio.is_rational():
        return None
    return ratio.as_rational()


def opaque_symbols(*values):
    """Names of symbols whose rationality relations are unknown."""
    names = set()
    for value in values:
        names.update(n for n in value.free_names() if n.startswith(OPAQUE_PREFIXES))
    return sorted(names)

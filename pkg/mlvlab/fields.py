"""Marshmallow fields for exact values"""
import marshmallow as ma
import sympy as sp

from .abstract import BaseField
from .exceptions import DivisionByZero, MlvError, PeriodSyntaxError
from .i18n import gettext as _, N_
from .linalg import PMatrix
from .periodfield import parse_period
from .qdet import QComplex, QSpace
from .validate import Prime


__all__ = (
    'PeriodField',
    'RationalField',
    'MatrixField',
    'PrimeField',
    'QComplexField',
)


class PeriodField(BaseField):
    """
    Period text such as ``1/(2*pi)`` or ``log_2 + i``.

    Unknown names are declared on the ``table`` found in the schema context.
    """

    default_error_messages = {
        'invalid': N_('Not a valid period expression: {error}'),
    }

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, float) or not isinstance(value, (str, int)):
            raise self.make_error('invalid', error=_('expected text or an integer'))
        try:
            return parse_period(value, self.table)
        except (PeriodSyntaxError, DivisionByZero) as exc:
            raise self.make_error('invalid', error=str(exc)) from exc


class RationalField(BaseField):
    """``"a/b"`` or an integer, as a sympy ``Rational``."""

    default_error_messages = {
        'invalid': N_('Not a valid rational number.'),
    }

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        value = sp.Rational(value)
        return int(value) if value.is_integer else str(value)

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, (float, bool)) or not isinstance(value, (str, int)):
            raise self.make_error('invalid')
        try:
            result = sp.Rational(value)
        except (TypeError, ValueError, sp.SympifyError) as exc:
            raise self.make_error('invalid') from exc
        if not isinstance(result, sp.Rational):
            raise self.make_error('invalid')
        return result


class MatrixField(BaseField):
    """Rows of period text; ``rational=True`` restricts the entries to Q."""

    default_error_messages = {
        'invalid': N_('Not a valid matrix: {error}'),
        'rational': N_('Matrix entries must be rational.'),
    }

    def __init__(self, *args, rational=False, **kwargs):
        super().__init__(*args, **kwargs)
        self.rational = rational

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        if isinstance(value, PMatrix):
            return value.to_text()
        return [[str(x) for x in row] for row in value.tolist()]

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
            raise self.make_error('invalid', error=_('expected a list of rows'))
        field = self.child(PeriodField)
        rows = [[field.deserialize(x) for x in row] for row in value]
        ncols = len(rows[0]) if rows else 0
        try:
            matrix = PMatrix(rows, ncols)
        except MlvError as exc:
            raise self.make_error('invalid', error=str(exc)) from exc
        if self.rational and not all(x.is_rational() for row in matrix.rows for x in row):
            raise self.make_error('rational')
        return matrix


class PrimeField(BaseField, ma.fields.Integer):
    """Integer validated prime"""

    def __init__(self, *args, **kwargs):
        validators = kwargs.pop('validate', None)
        validators = [validators] if callable(validators) else list(validators or [])
        super().__init__(*args, validate=[Prime()] + validators, **kwargs)


class QComplexField(BaseField):
    """
    ``{degree: dim}`` or ``{degree: {"dim": d, "qgen": period}}`` as a
    :class:`~mlvlab.qdet.QComplex`.
    """

    default_error_messages = {
        'invalid': N_('Not a valid graded space: {error}'),
    }

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return {str(i): {'dim': space.dim, 'qgen': str(space.qgen)}
                for i, space in value.graded.items()}

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, dict):
            raise self.make_error('invalid', error=_('expected an object'))
        period = self.child(PeriodField)
        graded = {}
        try:
            for degree, entry in value.items():
                if isinstance(entry, dict):
                    dim, qgen = entry.get('dim'), period.deserialize(entry.get('qgen', 1))
                else:
                    dim, qgen = entry, parse_period(1, self.table)
                if isinstance(dim, bool) or not isinstance(dim, int):
                    raise ValueError(_('dimension of degree {} is not an integer').format(degree))
                graded[int(degree)] = QSpace(dim, qgen)
        except ValueError as exc:
            raise self.make_error('invalid', error=str(exc)) from exc
        return QComplex(graded)

import os

import marshmallow as ma
import sympy as sp

from .abstract import BaseValidator
from .i18n import N_


__all__ = (
    'Range',
    'Length',
    'Equal',
    'OneOf',
    'Prime',
    'PathExists',
)


class Range(BaseValidator, ma.validate.Range):
    pass


class Length(BaseValidator, ma.validate.Length):
    pass


class Equal(BaseValidator, ma.validate.Equal):
    pass


class OneOf(BaseValidator, ma.validate.OneOf):
    pass


class Prime(BaseValidator):
    """Validate that an integer is prime."""

    default_message = N_('{input} is not a prime.')

    def __init__(self, error=None):
        super().__init__()
        self.error = error or self.default_message

    def _repr_args(self):
        return ''

    def __call__(self, value):
        if not isinstance(value, int) or not sp.isprime(value):
            raise ma.ValidationError(self.error.format(input=value))
        return value


class PathExists(BaseValidator):
    """Validate that a path names an existing file; ``prefix``-ed names are exempt."""

    default_message = N_('No such file: {input}.')

    def __init__(self, exempt_prefix=None, error=None):
        super().__init__()
        self.exempt_prefix = exempt_prefix
        self.error = error or self.default_message

    def _repr_args(self):
        return 'exempt_prefix={!r}'.format(self.exempt_prefix)

    def __call__(self, value):
        if self.exempt_prefix and value.startswith(self.exempt_prefix):
            return value
        if not os.path.isfile(value):
            raise ma.ValidationError(self.error.format(input=value))
        return value

"""
Run configuration
=================

A :class:`RunConfig` is built once per command from the parsed flags and the
environment, then handed to the command. The enumeration budget resolves as
``--budget`` > ``MLV_BUDGET`` > :data:`~mlvlab.zetaeng.DEFAULT_BUDGET`.
"""
import os
import re
from collections import namedtuple

import marshmallow as ma

from .abstract import BaseSchema
from .exceptions import ConfigError
from .i18n import gettext as _
from .periodfield import DEFAULT_TABLE, FIXED, NEGATED
from .validate import OneOf, PathExists, Range
from .zetaeng import DEFAULT_BUDGET


__all__ = (
    'BUDGET_ENV',
    'CATALOG_PREFIX',
    'RunConfig',
    'RunConfigSchema',
    'resolve_budget',
    'symbol_table',
    'load_config',
)


BUDGET_ENV = 'MLV_BUDGET'
CATALOG_PREFIX = 'catalog:'

_DECLARATION_RE = re.compile(r'^([A-Za-z][A-Za-z0-9_]*)(?::(%s|%s))?$' % (FIXED, NEGATED))


class RunConfig(namedtuple('RunConfig', ('command', 'subcommand', 'paths', 'format', 'budget',
                                         'workers', 'approx', 'declared'))):
    """Immutable settings of one run; ``declared`` holds ``(name, conjugation)`` pairs."""

    __slots__ = ()

    @property
    def table(self):
        return symbol_table(self.declared)


def symbol_table(declared):
    """The default table extended by ``(name, conjugation)`` declarations."""
    table = DEFAULT_TABLE
    try:
        for name, conjugation in declared:
            table = table.declare(name, conjugation)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return table


def resolve_budget(flag=None, environ=None):
    environ = os.environ if environ is None else environ
    if flag is not None:
        raw, origin = flag, '--budget'
    elif environ.get(BUDGET_ENV):
        raw, origin = environ[BUDGET_ENV], BUDGET_ENV
    else:
        return DEFAULT_BUDGET
    try:
        return int(str(raw).strip())
    except ValueError as exc:
        raise ConfigError(_('{} must be an integer, got {!r}.').format(origin, raw)) from exc


class RunConfigSchema(BaseSchema):
    command = ma.fields.String(required=True)
    subcommand = ma.fields.String(required=True)
    paths = ma.fields.List(ma.fields.String(validate=PathExists(exempt_prefix=CATALOG_PREFIX)),
                           load_default=list)
    format = ma.fields.String(load_default='text', validate=OneOf(('text', 'json', 'csv')))
    budget = ma.fields.Integer(load_default=DEFAULT_BUDGET, strict=True, validate=Range(min=1))
    workers = ma.fields.Integer(load_default=1, strict=True, validate=Range(min=1))
    approx = ma.fields.Boolean(load_default=False)
    declared = ma.fields.List(ma.fields.String(), load_default=list)

    @ma.validates('declared')
    def _validate_declared(self, value, **kwargs):
        for text in value:
            if not _DECLARATION_RE.match(text):
                raise ma.ValidationError(
                    _('Declaration must read NAME or NAME:{}, got {!r}.').format(NEGATED, text))

    @ma.post_load
    def _make_config(self, data, **kwargs):
        declared = []
        for text in data['declared']:
            match = _DECLARATION_RE.match(text)
            declared.append((match.group(1), match.group(2) or FIXED))
        data['declared'] = tuple(declared)
        data['paths'] = tuple(data['paths'])
        return RunConfig(**data)


def load_config(raw, environ=None):
    """
    Validate ``raw`` (flag values, ``budget`` possibly ``None``) into a
    :class:`RunConfig`; any problem is a :class:`~mlvlab.exceptions.ConfigError`.
    """
    raw = dict(raw)
    raw['budget'] = resolve_budget(raw.get('budget'), environ)
    try:
        config = RunConfigSchema().load(raw)
    except ma.ValidationError as exc:
        raise ConfigError(exc.messages) from exc
    symbol_table(config.declared)
    return config

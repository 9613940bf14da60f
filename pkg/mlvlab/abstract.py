import marshmallow as ma

from .i18n import gettext as _
from .periodfield import DEFAULT_TABLE


__all__ = ('BaseSchema', 'BaseField', 'BaseValidator', 'I18nErrorDict')


class I18nErrorDict(dict):
    """Error messages translated on lookup, so a later :func:`set_gettext` still applies."""

    def __getitem__(self, key):
        return _(super().__getitem__(key))


class BaseSchema(ma.Schema):
    """
    Base of every mlvlab schema.

    Period text is parsed against ``context['table']``, the default symbol
    table when the context has none.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_messages = I18nErrorDict(self.error_messages)


class BaseField(ma.fields.Field):
    """Base of every mlvlab field; error messages go through :mod:`mlvlab.i18n`."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_messages = I18nErrorDict(self.error_messages)

    @property
    def table(self):
        """Symbol table found in the enclosing schema context."""
        context = getattr(self.parent, 'context', None) or {}
        return context.get('table') or DEFAULT_TABLE

    def child(self, field_cls, **kwargs):
        """An unbound ``field_cls`` that reads the same schema context."""
        field = field_cls(**kwargs)
        field.parent = self.parent
        return field


class BaseValidator(ma.validate.Validator):
    """Validator whose ``error`` template is translated each time it is read."""

    def __init__(self, *args, **kwargs):
        self._error = None
        super().__init__(*args, **kwargs)

    @property
    def error(self):
        return _(self._error)

    @error.setter
    def error(self, value):
        self._error = value

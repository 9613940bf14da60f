"""
Reports
=======

What a command prints: an optional primary value, named values and
verdicts, rendered as text, JSON or CSV. Renderings are deterministic.
"""
import csv
import io
import json

from .i18n import gettext as _, N_


__all__ = (
    'Report',
    'approx_hints',
    'render',
    'render_text',
    'render_json',
    'render_csv',
    'FORMATS',
)


APPROX_NOTE = N_('approximate, non-normative')


class Report:
    """
    ``values`` is a list of ``(name, text)`` pairs kept in insertion order;
    ``approx`` maps some of those names to decimal hints.
    """

    __slots__ = ('command', 'primary', 'values', 'verdicts', 'approx')

    def __init__(self, command, primary=None, values=(), verdicts=(), approx=None):
        self.command = command
        self.primary = None if primary is None else str(primary)
        self.values = [(str(name), str(value)) for name, value in values]
        self.verdicts = list(verdicts)
        self.approx = {str(k): str(v) for k, v in (approx or {}).items()}

    @property
    def failed(self):
        return any(v.status == 'fail' for v in self.verdicts)

    def __eq__(self, other):
        return (isinstance(other, Report) and
                (self.command, self.primary, self.values, self.verdicts, self.approx) ==
                (other.command, other.primary, other.values, other.verdicts, other.approx))

    def __repr__(self):
        return '<object %s.%s(%s)>' % (self.__module__, type(self).__name__, self.command)


def approx_hints(values, digits=15):
    """Decimal hints for the period-valued entries of ``values`` that are not rational."""
    hints = {}
    for name, value in values:
        if not hasattr(value, 'approx') or value.is_rational():
            continue
        hint = value.approx(digits)
        if hint is not None:
            hints[name] = str(hint)
    return hints


def render_text(report):
    lines = []
    if report.primary is not None:
        lines.append(report.primary)
    for name, value in report.values:
        line = '%s: %s' % (name, value)
        if name in report.approx:
            line += '  [~ %s, %s]' % (report.approx[name], _(APPROX_NOTE))
        lines.append(line)
    for verdict in report.verdicts:
        lines.append('%s %s %s' % (verdict.status.upper(), verdict.check, verdict.label))
        for key, value in verdict.details.items():
            lines.append('    %s = %s' % (key, value))
        for key, value in verdict.witness.items():
            lines.append('    witness %s = %s' % (key, value))
    return '\n'.join(lines) + '\n'


def render_json(report):
    from .schemas import ReportSchema
    return json.dumps(ReportSchema().dump(report), indent=2, sort_keys=True) + '\n'


def render_csv(report):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['kind', 'name', 'value', 'status'])
    if report.primary is not None:
        writer.writerow(['primary', report.command, report.primary, ''])
    for name, value in report.values:
        writer.writerow(['value', name, value, ''])
        if name in report.approx:
            writer.writerow(['approx', name, report.approx[name], ''])
    for verdict in report.verdicts:
        writer.writerow(['verdict', '%s %s' % (verdict.check, verdict.label), '',
                         verdict.status])
    return out.getvalue()


FORMATS = {
    'text': render_text,
    'json': render_json,
    'csv': render_csv,
}


def render(report, fmt='text'):
    return FORMATS[fmt](report)

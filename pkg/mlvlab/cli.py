"""
Command line
============

``mlv zeta {count,reconstruct}``, ``mlv lfun {factor,leading,epsilon}``,
``mlv hodge {weak,arch}`` and ``mlv conj {check,suite,fp,soule,triangle}``.

Exit codes: 0 when no verdict fails, 1 when one fails, 2 on usage or input errors.
Indeterminate verdicts are reported and exit 0.
Reports go to standard output, logs to standard error.
"""
import argparse
import json
import logging
import sys

import marshmallow as ma

from . import __version__
from .catalog import builtin_datum, catalog_names, catalog_triangles
from .config import CATALOG_PREFIX, load_config
from .conjlab import (
    check_fp_value, check_soule, check_triangle, load_datum, run_checks, run_suite)
from .exceptions import DatumFormatError, DualityDegenerate, MlvError
from .galrep import epsilon_constants, euler_poly, pushdown, twist
from .hodgeweak import (
    arch_factor, arch_layers, gamma_leading, weak_cohomology, weak_duality)
from .i18n import gettext as _, N_
from .reports import Report, approx_hints, render
from .schemas import (
    EulerFactorSchema, FrobModuleSchema, VarietySchema, ZetaWordSchema, load_hodge)
from .validate import Prime
from .zetaeng import lobject_leading, point_count, point_counts, zeta_from_counts


__all__ = ('build_parser', 'main')


logger = logging.getLogger(__name__)

# argparse destinations holding input paths, in report order
_PATH_ARGS = ('spec', 'module', 'word', 'hodge', 'datum', 'data')


def _prime(text):
    try:
        return Prime()(int(text))
    except (ValueError, ma.ValidationError) as exc:
        raise argparse.ArgumentTypeError(_('{!r} is not a prime.').format(text)) from exc


def _coefficients(text):
    try:
        return [int(c) for c in text.split(',')]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            _('Expected comma separated integers, got {!r}.').format(text)) from exc


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('text', 'json', 'csv'), default='text')
    common.add_argument('--budget', default=None,
                        help=_('enumeration budget (overrides MLV_BUDGET)'))
    common.add_argument('--workers', type=int, default=1)
    common.add_argument('--approx', action='store_true',
                        help=_('append decimal hints, which are not part of the result'))
    common.add_argument('--declare', action='append', default=[], metavar='NAME[:negated]',
                        help=_('declare a period symbol'))
    common.add_argument('-v', '--verbose', action='count', default=0)
    return common


EXIT_CODES = N_(
    'exit status: 0 when no verdict fails, 1 when one fails, 2 on usage or input errors. '
    'An indeterminate verdict (opaque zeta symbols) does not fail and exits 0.')


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='mlv', description=_('Exact motivic L-value lab.'),
                                     epilog=_(EXIT_CODES))
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def leaf(group, name, text):
        return group.add_parser(name, parents=[common], help=text)

    zeta = commands.add_parser('zeta', help=_('point counts and zeta functions'))
    zeta_sub = zeta.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    zeta_sub.required = True
    count = leaf(zeta_sub, 'count', _('count points over F_(p^k)'))
    count.add_argument('--spec', required=True)
    count.add_argument('--p', type=_prime, required=True)
    count.add_argument('--k', type=int, default=1)
    reconstruct = leaf(zeta_sub, 'reconstruct', _('rebuild Z(t) from point counts'))
    reconstruct.add_argument('--spec', required=True)
    reconstruct.add_argument('--p', type=_prime, required=True)
    reconstruct.add_argument('--deg-num', type=int, required=True)
    reconstruct.add_argument('--deg-den', type=int, required=True)
    reconstruct.add_argument('--counts', type=int, required=True)
    reconstruct.add_argument('--known-den', type=_coefficients, default=None,
                             help=_('ascending denominator coefficients, e.g. 1,-6,5'))

    lfun = commands.add_parser('lfun', help=_('Euler factors and leading terms'))
    lfun_sub = lfun.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    lfun_sub.required = True
    factor = leaf(lfun_sub, 'factor', _('Euler polynomial of a Frobenius module'))
    factor.add_argument('--module', required=True)
    factor.add_argument('--twist', type=int, default=0)
    factor.add_argument('--pushdown', action='store_true')
    leading = leaf(lfun_sub, 'leading', _('leading Laurent term of an L-object'))
    leading.add_argument('--word', required=True)
    leading.add_argument('--at', type=int, default=0)
    epsilon = leaf(lfun_sub, 'epsilon', _('epsilon constants of a Frobenius module'))
    epsilon.add_argument('--module', required=True)

    hodge = commands.add_parser('hodge', help=_('weak Hodge cohomology'))
    hodge_sub = hodge.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    hodge_sub.required = True
    weak = leaf(hodge_sub, 'weak', _('Hw0, Hw1 and the weak duality pairings'))
    weak.add_argument('--datum', dest='hodge', required=True)
    arch = leaf(hodge_sub, 'arch', _('archimedean Gamma factor'))
    arch.add_argument('--datum', dest='hodge', required=True)
    arch.add_argument('--at', type=int, default=0)

    conj = commands.add_parser('conj', help=_('conjecture checks'), epilog=_(EXIT_CODES))
    conj_sub = conj.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    conj_sub.required = True
    check = leaf(conj_sub, 'check', _('all applicable checks on one datum'))
    check.add_argument('datum', metavar='DATUM')
    check.add_argument('--at', type=int, default=0)
    suite = leaf(conj_sub, 'suite', _('checks over many data'))
    suite.add_argument('--catalog', action='store_true', help=_('include the shipped catalog'))
    suite.add_argument('data', nargs='*', metavar='DATUM')
    fp = leaf(conj_sub, 'fp', _('value at s = 0 of a datum at a finite prime'))
    fp.add_argument('datum', metavar='DATUM')
    soule = leaf(conj_sub, 'soule', _('pole order against K-ranks'))
    soule.add_argument('datum', metavar='DATUM')
    triangle = leaf(conj_sub, 'triangle', _('multiplicativity along d1 -> d2 -> d3'))
    triangle.add_argument('datum', nargs=3, metavar='DATUM')
    triangle.add_argument('--at', type=int, default=0)
    return parser


def _paths(args):
    paths = []
    for name in _PATH_ARGS:
        value = getattr(args, name, None)
        if value is None:
            continue
        paths.extend(value if isinstance(value, list) else [value])
    return paths


def _read_json(path):
    try:
        with open(path) as fd:
            return json.load(fd)
    except ValueError as exc:
        raise DatumFormatError({'_schema': [str(exc)]}) from exc


def _load(schema_cls, path, config):
    try:
        return schema_cls(context={'table': config.table}).load(_read_json(path))
    except ma.ValidationError as exc:
        raise DatumFormatError(exc.messages) from exc


def _datum(name, config):
    if name.startswith(CATALOG_PREFIX):
        return builtin_datum(name[len(CATALOG_PREFIX):])
    return load_datum(name, config.table)


def _report(config, primary=None, values=(), verdicts=()):
    values = list(values)
    hints = approx_hints(values) if config.approx else None
    return Report('%s %s' % (config.command, config.subcommand), primary, values, verdicts,
                  approx=hints)


def zeta_count(args, config):
    variety = _load(VarietySchema, args.spec, config)
    count = point_count(variety, args.p, args.k, budget=config.budget)
    return _report(config, primary=count)


def zeta_reconstruct(args, config):
    variety = _load(VarietySchema, args.spec, config)
    counts = point_counts(variety, args.p, range(1, args.counts + 1), budget=config.budget,
                          workers=config.workers)
    zeta = zeta_from_counts(counts, args.deg_num, args.deg_den, known_den=args.known_den)
    return _report(config, primary=zeta.as_expr(), values=[
        ('counts', counts),
        ('numerator', list(zeta.numerator)),
        ('denominator', list(zeta.denominator)),
        ('predicted', zeta.predict(args.counts + 1)[-1]),
    ])


def lfun_factor(args, config):
    module = _load(FrobModuleSchema, args.module, config)
    if args.twist:
        module = twist(module, args.twist)
    if args.pushdown:
        module = pushdown(module)
    factor = euler_poly(module)
    return _report(config, primary=factor.poly.as_expr(), values=[
        ('p', factor.p), ('f', factor.f), ('coeffs', list(factor.coeffs))])


def _lobject(document, config):
    if isinstance(document, list):
        schema, document = EulerFactorSchema(many=True), document
    elif 'eulerFactors' in document:
        schema, document = EulerFactorSchema(many=True), document['eulerFactors']
    else:
        schema = ZetaWordSchema()
    schema.context = {'table': config.table}
    try:
        return schema.load(document)
    except ma.ValidationError as exc:
        raise DatumFormatError(exc.messages) from exc


def lfun_leading(args, config):
    result = lobject_leading(_lobject(_read_json(args.word), config), args.at)
    return _report(config, values=[('order', result.order), ('leading', result.leading)])


def lfun_epsilon(args, config):
    module = _load(FrobModuleSchema, args.module, config)
    a, b = epsilon_constants(module)
    return _report(config, values=[
        ('a', a), ('b', b), ('identity', 'L(V,s) = (%s)*(%s)^s*L(V^dual,-s)' % (a, b))])


def hodge_weak(args, config):
    h = load_hodge(_read_json(args.hodge), {'table': config.table})
    hw = weak_cohomology(h)
    values = [('Hw0', hw.hw0.dim), ('Hw1', hw.hw1.dim), ('alpha_rank', hw.alpha_rank)]
    try:
        pairing = weak_duality(h)
    except DualityDegenerate as exc:
        values.append(('duality', _('degenerate: {}').format(exc)))
    else:
        values += [('duality', _('perfect')),
                   ('pairing0', pairing.degree0.to_text()),
                   ('pairing1', pairing.degree1.to_text())]
    return _report(config, values=values)


def hodge_arch(args, config):
    h = load_hodge(_read_json(args.hodge), {'table': config.table})
    gamma = arch_factor(arch_layers(h))
    result = gamma_leading(gamma, args.at)
    factors = ' '.join('%s(s%+d)^%d' % entry for entry in gamma.entries) or '1'
    return _report(config, primary=factors,
                   values=[('order', result.order), ('leading', result.leading)])


def conj_check(args, config):
    return _report(config, verdicts=run_checks(_datum(args.datum, config), args.at))


def conj_suite(args, config):
    data = [_datum(name, config) for name in args.data]
    triangles = ()
    if args.catalog:
        data += [builtin_datum(name) for name in catalog_names()]
        triangles = catalog_triangles()
    if not data:
        raise MlvError(_('Give datum files or --catalog.'))
    return _report(config, verdicts=run_suite(data, triangles, workers=config.workers))


def conj_fp(args, config):
    return _report(config, verdicts=[check_fp_value(_datum(args.datum, config))])


def conj_soule(args, config):
    return _report(config, verdicts=[check_soule(_datum(args.datum, config))])


def conj_triangle(args, config):
    d1, d2, d3 = (_datum(name, config) for name in args.datum)
    return _report(config, verdicts=[check_triangle(d1, d2, d3, args.at)])


COMMANDS = {
    ('zeta', 'count'): zeta_count,
    ('zeta', 'reconstruct'): zeta_reconstruct,
    ('lfun', 'factor'): lfun_factor,
    ('lfun', 'leading'): lfun_leading,
    ('lfun', 'epsilon'): lfun_epsilon,
    ('hodge', 'weak'): hodge_weak,
    ('hodge', 'arch'): hodge_arch,
    ('conj', 'check'): conj_check,
    ('conj', 'suite'): conj_suite,
    ('conj', 'fp'): conj_fp,
    ('conj', 'soule'): conj_soule,
    ('conj', 'triangle'): conj_triangle,
}


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    _configure_logging(args.verbose)
    try:
        config = load_config({
            'command': args.command,
            'subcommand': args.subcommand,
            'paths': _paths(args),
            'format': args.format,
            'budget': args.budget,
            'workers': args.workers,
            'approx': args.approx,
            'declared': args.declare,
        })
        report = COMMANDS[(config.command, config.subcommand)](args, config)
    except (MlvError, ValueError, OSError) as exc:
        messages = getattr(exc, 'messages', None) or str(exc)
        print('mlv: error: %s' % (messages,), file=sys.stderr)
        logger.debug('command failed', exc_info=True)
        return 2
    stdout.write(render(report, config.format))
    return 1 if report.failed else 0


if __name__ == '__main__':
    sys.exit(main())

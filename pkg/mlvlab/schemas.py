"""
Schemas
=======

JSON documents for varieties, Frobenius modules, L-objects, Hodge data,
motivic data and reports.
"""
import marshmallow as ma

from .abstract import BaseSchema
from .conjlab import MotivicDatum, Verdict, PASS, FAIL, INDETERMINATE
from .exceptions import MlvError
from .fields import MatrixField, PrimeField, QComplexField, RationalField
from .galrep import EulerFactor, FrobModule
from .hodgeweak import HodgeDatum, SplitHodgeDatum
from .i18n import gettext as _
from .qdet import QComplex
from .reports import Report
from .validate import Equal, Length, OneOf, Range
from .zetaeng import AFFINE, PROJECTIVE, VarietySpec, ZetaWord


__all__ = (
    'DATUM_SCHEMA',
    'VarietySchema',
    'EulerFactorSchema',
    'FrobModuleSchema',
    'ZetaWordSchema',
    'HodgeDatumSchema',
    'DatumSchema',
    'VerdictSchema',
    'ReportSchema',
    'load_hodge',
)


DATUM_SCHEMA = 'mlv-datum/1'


def _build(factory, *args, **kwargs):
    try:
        return factory(*args, **kwargs)
    except (MlvError, ValueError) as exc:
        raise ma.ValidationError(str(exc)) from exc


class VarietySchema(BaseSchema):

    class Meta:
        unknown = ma.EXCLUDE

    kind = ma.fields.String(required=True, validate=OneOf((AFFINE, PROJECTIVE)))
    ambient_dim = ma.fields.Integer(required=True, data_key='ambientDim', validate=Range(min=0))
    equations = ma.fields.List(ma.fields.String(), load_default=list)

    @ma.pre_dump
    def _from_spec(self, v, **kwargs):
        return {'kind': v.kind, 'ambient_dim': v.ambient_dim,
                'equations': v.equation_strings()}

    @ma.post_load
    def _make_spec(self, data, **kwargs):
        return _build(VarietySpec.from_strings, data['kind'], data['ambient_dim'],
                      data['equations'])


class EulerFactorSchema(BaseSchema):
    p = PrimeField(required=True)
    f = ma.fields.Integer(load_default=1, validate=Range(min=1))
    coeffs = ma.fields.List(RationalField(), required=True, validate=Length(min=1))
    exponent = ma.fields.Integer(load_default=1)

    @ma.post_load
    def _make_factor(self, data, **kwargs):
        return _build(EulerFactor, **data)


class FrobModuleSchema(BaseSchema):
    p = PrimeField(required=True)
    f = ma.fields.Integer(load_default=1, validate=Range(min=1))
    phi = MatrixField(rational=True, required=True)

    @ma.post_load
    def _make_module(self, data, **kwargs):
        phi = [[x.as_rational() for x in row] for row in data['phi'].rows]
        return _build(FrobModule, data['p'], data['f'], phi)


class ZetaWordSchema(BaseSchema):
    shifts = ma.fields.List(
        ma.fields.List(ma.fields.Integer(), validate=Length(equal=2)), load_default=list)
    extra_factors = ma.fields.List(
        ma.fields.Nested(EulerFactorSchema), data_key='extraFactors', load_default=list)

    @ma.post_load
    def _make_word(self, data, **kwargs):
        return _build(ZetaWord, [tuple(pair) for pair in data['shifts']], data['extra_factors'])


class HodgeDatumSchema(BaseSchema):
    rank = ma.fields.Integer(validate=Range(min=1))
    weight = ma.fields.Integer(required=True)
    finf = MatrixField(rational=True, required=True)
    filtration = ma.fields.List(
        ma.fields.List(ma.fields.Integer(), validate=Length(equal=2)),
        data_key='filtrationDims', required=True)
    comparison = MatrixField(required=True)

    @ma.post_load
    def _make_hodge(self, data, **kwargs):
        hodge = _build(HodgeDatum, data['weight'], data['finf'],
                       [tuple(pair) for pair in data['filtration']], data['comparison'])
        if 'rank' in data and data['rank'] != hodge.rank:
            raise ma.ValidationError(_('Declared rank {} but Finf has rank {}.').format(
                data['rank'], hodge.rank), 'rank')
        return hodge


def _combine_layers(layers):
    return layers[0] if len(layers) == 1 else SplitHodgeDatum(layers)


def load_hodge(document, context=None):
    """A Hodge file holds one pure layer or ``{"layers": [...]}``."""
    schema = HodgeDatumSchema(context=context or {})
    if isinstance(document, dict) and 'layers' in document:
        return _combine_layers(schema.load(document['layers'], many=True))
    return schema.load(document)


class DatumSchema(BaseSchema):
    schema = ma.fields.String(load_default=DATUM_SCHEMA, validate=Equal(DATUM_SCHEMA))
    label = ma.fields.String(required=True)
    hM = QComplexField(load_default=QComplex)
    hDM = QComplexField(load_default=QComplex)
    hodge = ma.fields.Dict(
        keys=ma.fields.Integer(),
        values=ma.fields.List(ma.fields.Nested(HodgeDatumSchema), validate=Length(min=1)),
        load_default=dict)
    regulators = ma.fields.Dict(keys=ma.fields.Integer(), values=MatrixField(), load_default=dict)
    pairings = ma.fields.Dict(keys=ma.fields.Integer(), values=MatrixField(), load_default=dict)
    zeta_word = ma.fields.Nested(ZetaWordSchema, data_key='zetaWord')
    euler_factors = ma.fields.List(ma.fields.Nested(EulerFactorSchema), data_key='eulerFactors')
    ranks = ma.fields.Dict(keys=ma.fields.Integer(), values=ma.fields.Integer(),
                           allow_none=True, load_default=None)
    twist = ma.fields.Integer(load_default=0)

    @ma.validates_schema
    def _one_lobject(self, data, **kwargs):
        if ('zeta_word' in data) == ('euler_factors' in data):
            raise ma.ValidationError(
                _('Give exactly one of zetaWord and eulerFactors.'), 'zetaWord')

    @ma.pre_dump
    def _from_datum(self, d, **kwargs):
        data = {
            'schema': DATUM_SCHEMA,
            'label': d.label,
            'hM': d.hM,
            'hDM': d.hDM,
            'hodge': {i: list(h.layers) for i, h in d.hodge.items()},
            'regulators': d.regulators,
            'pairings': d.pairings,
            'ranks': d.ranks,
            'twist': d.twist,
        }
        if isinstance(d.lobject, ZetaWord):
            data['zeta_word'] = d.lobject
        else:
            data['euler_factors'] = list(d.lobject)
        return data

    @ma.post_load
    def _make_datum(self, data, **kwargs):
        lobject = data.get('zeta_word') or data.get('euler_factors')
        if lobject is None:
            lobject = ZetaWord()
        hodge = {i: _combine_layers(layers) for i, layers in data['hodge'].items()}
        return _build(MotivicDatum, data['label'], data['hM'], data['hDM'], lobject,
                      hodge=hodge, regulators=data['regulators'], pairings=data['pairings'],
                      ranks=data['ranks'], twist=data['twist'])


class VerdictSchema(BaseSchema):
    check = ma.fields.String(required=True)
    label = ma.fields.String(required=True)
    status = ma.fields.String(required=True, validate=OneOf((PASS, FAIL, INDETERMINATE)))
    details = ma.fields.Dict(keys=ma.fields.String(), values=ma.fields.String(),
                             load_default=dict)
    witness = ma.fields.Dict(keys=ma.fields.String(), values=ma.fields.String(),
                             load_default=dict)

    @ma.post_load
    def _make_verdict(self, data, **kwargs):
        return _build(Verdict, **data)


class ReportSchema(BaseSchema):
    command = ma.fields.String(required=True)
    primary = ma.fields.String(allow_none=True, load_default=None)
    values = ma.fields.List(ma.fields.Tuple((ma.fields.String(), ma.fields.String())),
                            load_default=list)
    verdicts = ma.fields.List(ma.fields.Nested(VerdictSchema), load_default=list)
    approx = ma.fields.Dict(keys=ma.fields.String(), values=ma.fields.String(),
                            load_default=dict)

    @ma.post_load
    def _make_report(self, data, **kwargs):
        return Report(**data)

from marshmallow import ValidationError  # noqa, republishing

from .exceptions import (
    MlvError,
    PeriodSyntaxError,
    DivisionByZero,
    NotInvertible,
    ShapeMismatch,
    PairingDegenerate,
    PlaceMismatch,
    BudgetExceeded,
    Inconsistent,
    ValidationFailed,
    DualityDegenerate,
    MalformedHodgeNumbers,
    MissingRanks,
    NotATriangle,
    UnknownDatum,
    DatumFormatError,
    ConfigError,
)
from .periodfield import SymbolTable, PeriodValue, parse_period
from .qdet import QSpace, QComplex, GradedMap
from .galrep import EulerFactor, FrobModule
from .zetaeng import VarietySpec, RationalZeta, ZetaWord, LaurentLeading
from .hodgeweak import HodgeDatum, SplitHodgeDatum, GammaProduct
from .conjlab import MotivicDatum, Verdict, run_suite
from .catalog import builtin_datum, register_datum
from . import fields, validate
from .i18n import set_gettext


__author__ = 'mlvlab contributors'
__email__ = 'mlvlab@users.noreply.github.com'
__version__ = '0.1.0'
__all__ = (
    'ValidationError',

    'SymbolTable',
    'PeriodValue',
    'parse_period',
    'QSpace',
    'QComplex',
    'GradedMap',
    'EulerFactor',
    'FrobModule',
    'VarietySpec',
    'RationalZeta',
    'ZetaWord',
    'LaurentLeading',
    'HodgeDatum',
    'SplitHodgeDatum',
    'GammaProduct',
    'MotivicDatum',
    'Verdict',
    'run_suite',
    'builtin_datum',
    'register_datum',

    'MlvError',
    'PeriodSyntaxError',
    'DivisionByZero',
    'NotInvertible',
    'ShapeMismatch',
    'PairingDegenerate',
    'PlaceMismatch',
    'BudgetExceeded',
    'Inconsistent',
    'ValidationFailed',
    'DualityDegenerate',
    'MalformedHodgeNumbers',
    'MissingRanks',
    'NotATriangle',
    'UnknownDatum',
    'DatumFormatError',
    'ConfigError',

    'fields',

    'set_gettext',

    'validate'
)

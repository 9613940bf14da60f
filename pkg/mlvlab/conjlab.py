"""
Motivic data records, compact-support cohomology and the conjecture checks.

Every check returns a :class:`Verdict`; ``s0`` defaults to 0 and a datum's
``twist`` moves the evaluation point of its L-object.
"""
import json
import logging
from concurrent.futures import ThreadPoolExecutor

import marshmallow as ma

from .exceptions import (
    DatumFormatError, MissingRanks, NotATriangle, PairingDegenerate, ShapeMismatch,
    ValidationFailed)
from .galrep import epsilon_identity_holds, local_rational_functions
from .hodgeweak import weak_complex
from .i18n import gettext as _, N_
from .linalg import PMatrix
from .periodfield import log_p, opaque_symbols, rational_ratio
from .qdet import GradedMap, cone_qstructure, det_pairing
from .zetaeng import ZetaWord, lobject_leading


__all__ = (
    'PASS',
    'FAIL',
    'INDETERMINATE',
    'MotivicDatum',
    'Verdict',
    'compact_support',
    'shift_datum',
    'verdier_dual',
    'check_pole_order',
    'check_special_value',
    'check_fp_value',
    'check_soule',
    'check_triangle',
    'check_functoriality',
    'check_verdier',
    'check_epsilon',
    'applicable_checks',
    'run_checks',
    'run_suite',
    'load_datum',
    'dump_datum',
)


logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INDETERMINATE = 'indeterminate'

NOT_FP = N_('Datum is not supported at a single finite prime.')
PERFECTNESS_FAILS = N_('Perfectness fails: {}')


def _as_matrices(matrices):
    return {int(i): m if isinstance(m, PMatrix) else PMatrix(m)
            for i, m in (matrices or {}).items()}


class MotivicDatum:
    """
    Cohomology ranks, realizations, regulators, pairings and the L-object of
    a motive ``M``.

    ``hodge`` maps a cohomological degree to the Hodge datum of ``H^i(M)``;
    ``regulators[i]`` maps ``hM^i`` into ``Hw^i``; ``pairings[i]`` pairs
    ``H_c^i(M)`` with ``hDM^-i``. ``lobject`` is a :class:`ZetaWord` or a list
    of :class:`EulerFactor`; it is evaluated at ``s + twist``.
    """

    __slots__ = ('label', 'hM', 'hDM', 'hodge', 'regulators', 'pairings', 'lobject',
                 'ranks', 'twist')

    def __init__(self, label, hM, hDM, lobject, hodge=None, regulators=None, pairings=None,
                 ranks=None, twist=0):
        self.label = str(label)
        self.hM = hM
        self.hDM = hDM
        self.hodge = dict(sorted((int(i), h) for i, h in (hodge or {}).items()))
        self.regulators = _as_matrices(regulators)
        self.pairings = _as_matrices(pairings)
        self.lobject = lobject if isinstance(lobject, ZetaWord) else tuple(lobject)
        self.ranks = None if ranks is None else {int(i): int(r) for i, r in ranks.items()}
        self.twist = int(twist)
        if not self.hodge and self.regulators:
            raise ShapeMismatch(_('Regulators given without Hodge realizations.'))
        if self.hodge:
            self.regulator_map()
        for i, matrix in self.pairings.items():
            if matrix.nrows != matrix.ncols:
                raise ShapeMismatch(_('Pairing in degree {} is not square.').format(i))

    def weak(self):
        return weak_complex(self.hodge)

    def regulator_map(self):
        return GradedMap(self.hM, self.weak(), self.regulators)

    @property
    def prime(self):
        """The prime carrying the Euler factors, or ``None``."""
        if isinstance(self.lobject, ZetaWord) or not self.lobject:
            return None
        primes = {factor.p for factor in self.lobject}
        return primes.pop() if len(primes) == 1 else None

    def is_fp(self):
        return not self.hodge and self.prime is not None

    def effective_factors(self):
        """Euler factors of ``L(M, s + twist)``."""
        return [factor.twist(self.twist) for factor in self.lobject]

    def leading(self, s0=0):
        return lobject_leading(self.lobject, s0 + self.twist)

    def __repr__(self):
        return '<object %s.%s(%s)>' % (self.__module__, type(self).__name__, self.label)


class Verdict:
    """Outcome of one check; ``fail`` always carries the mismatched quantities."""

    __slots__ = ('check', 'label', 'status', 'details', 'witness')

    def __init__(self, check, label, status, details=None, witness=None):
        if status not in (PASS, FAIL, INDETERMINATE):
            raise ValueError(_('Unknown verdict status {!r}.').format(status))
        if status == FAIL and not witness:
            raise ValueError(_('A failing verdict needs a witness.'))
        self.check = check
        self.label = label
        self.status = status
        self.details = {k: str(v) for k, v in (details or {}).items()}
        self.witness = {k: str(v) for k, v in (witness or {}).items()}

    @property
    def passed(self):
        return self.status == PASS

    def __eq__(self, other):
        return (isinstance(other, Verdict) and
                (self.check, self.label, self.status, self.details, self.witness) ==
                (other.check, other.label, other.status, other.details, other.witness))

    def __repr__(self):
        return '<object %s.%s(%s %s: %s)>' % (
            self.__module__, type(self).__name__, self.check, self.label, self.status)


def _verdict(check, d, ok, details, witness=None):
    status = PASS if ok else FAIL
    verdict = Verdict(check, d.label, status, details, None if ok else (witness or details))
    logger.debug('%s %s: %s', check, d.label, status)
    return verdict


def compact_support(d):
    """``H_c = cone(rho: hM -> Hw)[-1]``; ``hM`` itself when there is no Hodge realization."""
    if not d.hodge:
        return d.hM
    return cone_qstructure(d.regulator_map()).shift(-1)


def check_pole_order(d, s0=0):
    leading = d.leading(s0)
    expected = -d.hDM.euler_characteristic()
    details = {'order': leading.order, 'expected': expected}
    return _verdict('pole_order', d, leading.order == expected, details)


def check_special_value(d, s0=0):
    leading = d.leading(s0)
    details = {'order': leading.order, 'leading': leading.leading}
    try:
        det_pi = det_pairing(compact_support(d), d.hDM, d.pairings)
    except PairingDegenerate as exc:
        return Verdict('special_value', d.label, FAIL, details,
                       {'pairing': _(PERFECTNESS_FAILS).format(exc)})
    value = leading.leading * det_pi
    details['det_pi'] = det_pi
    details['product'] = value
    opaque = opaque_symbols(value)
    if opaque:
        details['opaque'] = ', '.join(opaque)
        logger.debug('special_value %s: indeterminate on %s', d.label, opaque)
        return Verdict('special_value', d.label, INDETERMINATE, details)
    ratio = rational_ratio(value, 1)
    return _verdict('special_value', d, ratio is not None and ratio != 0, details)


def _require_fp(d):
    if not d.is_fp():
        raise ValueError(_(NOT_FP))


def check_fp_value(d):
    _require_fp(d)
    leading = d.leading(0)
    chi = d.hDM.euler_characteristic()
    expected = log_p(d.prime) ** (-chi)
    ratio = rational_ratio(leading.leading, expected)
    details = {'order': leading.order, 'leading': leading.leading, 'chi': chi,
               'expected_leading': expected}
    return _verdict('fp_value', d, leading.order == -chi and ratio is not None, details)


def check_soule(d):
    """``ord_{s=m} = sum_i (-1)^(i+1) rk K'_i(Y)_(m)`` with ``m`` the datum's twist."""
    if d.ranks is None:
        raise MissingRanks(_('Datum {} carries no K-rank table.').format(d.label))
    expected = sum((-1) ** ((i + 1) % 2) * rank for i, rank in d.ranks.items() if i >= 0)
    order = d.leading(0).order
    details = {'order': order, 'expected': expected, 'm': d.twist}
    return _verdict('soule', d, order == expected, details)


def _triangle_shape(d1, d2, d3):
    kinds = {isinstance(d.lobject, ZetaWord) for d in (d1, d2, d3)}
    if len(kinds) != 1:
        raise NotATriangle(_('Mixing zeta words and Euler products.'))
    if len({d.twist for d in (d1, d2, d3)}) != 1:
        raise NotATriangle(_('Twists {} differ.').format([d.twist for d in (d1, d2, d3)]))


def check_triangle(d1, d2, d3, s0=0):
    """``d1 -> d2 -> d3``: orders add and leading terms multiply at ``s0``."""
    _triangle_shape(d1, d2, d3)
    l1, l2, l3 = (d.leading(s0) for d in (d1, d2, d3))
    details = {'order': l2.order, 'order_sum': l1.order + l3.order,
               'leading': l2.leading, 'leading_product': l1.leading * l3.leading}
    ok = l2.order == l1.order + l3.order and l2.leading == l1.leading * l3.leading
    if ok and not isinstance(d2.lobject, ZetaWord):
        outer = local_rational_functions(list(d1.lobject) + list(d3.lobject))
        middle = local_rational_functions(d2.lobject)
        if outer != middle:
            ok = False
            details['local_factors'] = middle
            details['local_factor_product'] = outer
    label = '%s -> %s -> %s' % (d1.label, d2.label, d3.label)
    logger.debug('triangle %s: %s', label, ok)
    return Verdict('triangle', label, PASS if ok else FAIL, details, None if ok else details)


def check_functoriality(d1, d2, f_c, g_dual):
    """
    ``f_c^T pi_2 = pi_1 g`` in each degree, for ``f_c: H_c(d1) -> H_c(d2)`` and
    ``g_dual: hDM(d2) -> hDM(d1)``.
    """
    f_c, g_dual = _as_matrices(f_c), _as_matrices(g_dual)
    label = '%s => %s' % (d1.label, d2.label)
    for i in sorted(set(d1.pairings) | set(d2.pairings)):
        if i not in f_c or i not in g_dual:
            raise ShapeMismatch(_('Degree {}: missing map.').format(i))
        left = f_c[i].T @ d2.pairings[i]
        right = d1.pairings[i] @ g_dual[i]
        if left != right:
            witness = {'degree': i, 'left': left.to_text(), 'right': right.to_text()}
            return Verdict('functoriality', label, FAIL, witness, witness)
    return Verdict('functoriality', label, PASS, {'degrees': sorted(d1.pairings)})


def verdier_dual(d):
    """``D(M)`` for data without Hodge realization: the two sides swap, pairings transpose."""
    if d.hodge:
        raise ValueError(_('Verdier dual needs a datum without Hodge realization.'))
    lobject = d.lobject
    if not isinstance(lobject, ZetaWord):
        lobject = [factor.dual() for factor in lobject]
    return MotivicDatum('D(%s)' % d.label, d.hDM, d.hM, lobject,
                        pairings={-i: m.T for i, m in d.pairings.items()}, twist=d.twist)


def check_verdier(d):
    _require_fp(d)
    dual = verdier_dual(d)
    det_m = det_pairing(compact_support(d), d.hDM, d.pairings)
    det_dm = det_pairing(compact_support(dual), dual.hDM, dual.pairings)
    ratio = rational_ratio(det_m, det_dm)
    details = {'det_pi': det_m, 'det_pi_dual': det_dm}
    return _verdict('verdier', d, ratio is not None and ratio != 0, details)


def check_epsilon(d):
    """``L(V, s) = a b^s L(V^dual, -s)`` at 0, with rational ``a``."""
    _require_fp(d)
    factors = d.effective_factors()
    a = 1
    for factor in factors:
        a_f, _b = factor.epsilon()
        down = factor.pushdown()
        if not epsilon_identity_holds(down.with_exponent(1), 1 / down.coeffs[-1], down.degree):
            raise ValidationFailed(_('Epsilon identity fails for {!r}.').format(factor))
        a = a * a_f
    duals = [factor.dual() for factor in factors]
    here = lobject_leading(factors, 0)
    there = lobject_leading(duals, 0)
    sign = (-1) ** (there.order % 2)
    details = {'a': a, 'order': here.order, 'dual_order': there.order,
               'leading': here.leading, 'dual_leading': there.leading}
    ok = here.order == there.order and here.leading == there.leading * (a * sign)
    return _verdict('epsilon', d, ok, details)


def applicable_checks(d):
    checks = [check_pole_order, check_special_value]
    if d.is_fp():
        checks += [check_fp_value, check_verdier, check_epsilon]
    if d.ranks is not None:
        checks.append(check_soule)
    return checks


def run_checks(d, s0=0):
    """Applicable checks on one datum; the pole order and special value are taken at ``s0``."""
    return [check(d, s0) if check in (check_pole_order, check_special_value) else check(d)
            for check in applicable_checks(d)]


def run_suite(data, triangles=(), workers=1):
    """All applicable checks on ``data`` plus ``triangles``, sorted by label and check."""
    data = list(data)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(run_checks, data))
    else:
        batches = [run_checks(d) for d in data]
    verdicts = [v for batch in batches for v in batch]
    verdicts += [check_triangle(*triangle) for triangle in triangles]
    verdicts.sort(key=lambda v: (v.label, v.check))
    logger.info('suite: %d verdicts, %d passing', len(verdicts),
                sum(v.passed for v in verdicts))
    return verdicts


def shift_datum(d, n):
    """``M[n]``: degrees of ``M`` move down by ``n``, those of ``DM`` up; odd ``n`` inverts ``L``."""
    lobject = d.lobject
    if n % 2:
        if isinstance(lobject, ZetaWord):
            lobject = lobject.inverse()
        else:
            lobject = [f.with_exponent(-f.exponent) for f in lobject]
    return MotivicDatum(
        '%s[%d]' % (d.label, n), d.hM.shift(n), d.hDM.shift(-n), lobject,
        hodge={i - n: h for i, h in d.hodge.items()},
        regulators={i - n: m for i, m in d.regulators.items()},
        pairings={i - n: m for i, m in d.pairings.items()},
        ranks=d.ranks, twist=d.twist)


def load_datum(path, table=None):
    """Read a datum file; period text is parsed against ``table``."""
    from .schemas import DatumSchema
    with open(path) as fd:
        document = json.load(fd)
    try:
        return DatumSchema(context={'table': table} if table else {}).load(document)
    except ma.ValidationError as exc:
        raise DatumFormatError(exc.messages) from exc


def dump_datum(d):
    from .schemas import DatumSchema
    return DatumSchema().dump(d)


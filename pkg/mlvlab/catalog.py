"""
Catalog
=======

Shipped motivic data, looked up by name such as ``tate_0`` or
``fp_pn_m(2,1,0)``.
"""
import json
import logging
import pkgutil
import re
from functools import lru_cache

from .conjlab import MotivicDatum
from .exceptions import UnknownDatum
from .galrep import EulerFactor
from .hodgeweak import one, weak_duality
from .i18n import gettext as _
from .periodfield import log_p
from .qdet import QComplex
from .zetaeng import ZetaWord, point_counts, zeta_from_counts


__all__ = (
    'DatumRegisterer',
    'default_datum_registerer',
    'register_datum',
    'unregister_datum',
    'builtin_datum',
    'catalog_names',
    'catalog_triangles',
    'load_table',
    'load_variety',
)


logger = logging.getLogger(__name__)

_NAME_RE = re.compile(r'^([a-z][a-z0-9_]*)(?:\(([-0-9,\s]*)\))?$')


class DatumRegisterer:

    def __init__(self):
        self.builders = {}

    def register(self, name, builder):
        self.builders[name] = builder

    def unregister(self, name):
        # Basically only used for tests
        del self.builders[name]

    def find(self, name):
        match = _NAME_RE.match(name.replace(' ', ''))
        if not match or match.group(1) not in self.builders:
            raise UnknownDatum(_('Unknown datum {!r}.').format(name))
        args = match.group(2)
        try:
            values = tuple(int(a) for a in args.split(',')) if args else ()
            return self.builders[match.group(1)](*values)
        except TypeError as exc:
            raise UnknownDatum(_('Bad arguments for datum {!r}.').format(name)) from exc


default_datum_registerer = DatumRegisterer()
register_datum = default_datum_registerer.register
unregister_datum = default_datum_registerer.unregister


def builtin_datum(name):
    return default_datum_registerer.find(name)


@lru_cache(maxsize=None)
def load_table(name):
    return json.loads(pkgutil.get_data(__name__.rsplit('.', 1)[0], 'data/%s.json' % name))


def _variety_document(name):
    raw = pkgutil.get_data(__name__.rsplit('.', 1)[0], 'data/varieties/%s.json' % name)
    return json.loads(raw)


def load_variety(name):
    from .schemas import VarietySchema
    return VarietySchema().load(_variety_document(name))


def _borel(weight):
    weights = load_table('borel')['weights']
    if str(weight) not in weights:
        raise UnknownDatum(_('No K-rank table for weight {}.').format(weight))
    return {int(i): rank for i, rank in weights[str(weight)].items()}


def _chow(variety):
    return {int(m): rank for m, rank in load_table('chow')['varieties'][variety].items()}


def _tate_pairings(m, hDM):
    """
    ``H_c^i x hDM^-i -> R`` for ``i`` in 1, 2, where ``H_c^i`` is ``Hw0`` resp.
    ``Hw1`` of ``1(m)``: the weak duality pairing against the dual Borel
    classes, whose regulator matrix is 1.
    """
    if hDM.is_empty():
        return {}
    weak = weak_duality(one(m))
    pairings = {}
    for j in hDM.degrees:
        if -j not in (1, 2):
            raise UnknownDatum(_('No weak pairing for 1({}) in degree {}.').format(m, -j))
        pairings[-j] = weak[-j - 1]
    return pairings


def _tate(label, m, word, twist):
    """``1(m)`` over ``Z``: ``H^i = K_{2m-i}^(m)`` and ``H^j(DM) = K_{-2m-j}^(1-m)``."""
    hM = QComplex.from_dims({2 * m - i: rank for i, rank in _borel(m).items()}) \
        if m >= 0 else QComplex()
    dual_ranks = _borel(1 - m)
    hDM = QComplex.from_dims({-2 * m - i: rank for i, rank in dual_ranks.items()})
    regulators = {i: [[1]] for i in hM.degrees}
    ranks = {i: rank for i, rank in dual_ranks.items()}
    return MotivicDatum(label, hM, hDM, word, hodge={0: one(m)}, regulators=regulators,
                        pairings=_tate_pairings(m, hDM), ranks=ranks, twist=twist)


def tate_0():
    return _tate('tate_0', 0, ZetaWord([(0, 1)]), 0)


def tate_1():
    return _tate('tate_1', 1, ZetaWord([(1, 1)]), 0)


def spec_z_soule(m):
    """``1(m)`` over ``Z`` read as ``zeta(s)`` at ``s = m``, with the Borel ranks."""
    return _tate('spec_z_soule(%d)' % m, m, ZetaWord([(0, 1)]), m)


def _fp_datum(label, p, factors, chow, m):
    rank = chow.get(m, 0)
    hM = QComplex.from_dims({0: rank})
    pairings = {0: [[log_p(p) if r == c else 0 for c in range(rank)] for r in range(rank)]} \
        if rank else {}
    return MotivicDatum(label, hM, hM, factors, pairings=pairings, ranks={0: rank}, twist=m)


def _projective_factors(p, n):
    return [EulerFactor(p, 1, [1, -p ** i]) for i in range(n + 1)]


def fp_pn_m(p, n, m):
    """``i_* M(P^n)(m)`` at ``p``."""
    if not 0 <= n <= 3:
        raise UnknownDatum(_('Projective spaces up to dimension 3 are bundled.'))
    return _fp_datum('fp_pn_m(%d,%d,%d)' % (p, n, m), p, _projective_factors(p, n),
                     _chow('P%d' % n), m)


def fp_pn_soule(p, n, m):
    """``P^n`` over ``F_p`` read at ``s = m`` against its Chow K-ranks."""
    d = fp_pn_m(p, n, m)
    d.label = 'fp_pn_soule(%d,%d,%d)' % (p, n, m)
    return d


def fp_point(p, m=0):
    return _fp_datum('fp_point(%d,%d)' % (p, m), p, _projective_factors(p, 0), _chow('P0'), m)


def fp_affine_line(p, m=0):
    return _fp_datum('fp_affine_line(%d,%d)' % (p, m), p, [EulerFactor(p, 1, [1, -p])],
                     _chow('A1'), m)


@lru_cache(maxsize=None)
def elliptic_zeta():
    """Zeta function of the bundled cubic, reconstructed from its point counts."""
    raw = _variety_document('elliptic_f5')
    variety = load_variety('elliptic_f5')
    counts = point_counts(variety, raw['prime'], [1, 2, 3])
    logger.debug('elliptic counts over F_5: %s', counts)
    return zeta_from_counts(counts, raw['degNum'], raw['degDen'], known_den=raw['knownDen'])


def fp_elliptic(m=0):
    factors = elliptic_zeta().as_euler_factors(5)
    return _fp_datum('fp_elliptic(%d)' % m, 5, factors, _chow('E5'), m)


for _builder in (tate_0, tate_1, spec_z_soule, fp_pn_m, fp_pn_soule, fp_point, fp_affine_line,
                 fp_elliptic):
    register_datum(_builder.__name__, _builder)


def catalog_names():
    names = ['tate_0', 'tate_1']
    names += ['spec_z_soule(%d)' % m for m in range(-4, 2)]
    for p in (2, 3, 5):
        names += ['fp_pn_m(%d,%d,%d)' % (p, n, m) for n in range(4) for m in range(-2, n + 3)]
        names += ['fp_pn_soule(%d,1,%d)' % (p, m) for m in (0, 1)]
        names += ['fp_point(%d,%d)' % (p, m) for m in range(-1, 2)]
        names += ['fp_affine_line(%d,%d)' % (p, m) for m in range(-1, 3)]
    names += ['fp_elliptic(%d)' % m for m in range(-1, 3)]
    return names


def catalog_triangles():
    """``A^1 -> P^1 -> point`` at each bundled prime and twist."""
    return [(fp_affine_line(p, m), fp_pn_m(p, 1, m), fp_point(p, m))
            for p in (2, 3, 5) for m in range(-1, 3)]

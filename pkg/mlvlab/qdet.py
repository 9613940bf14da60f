"""
Complexes with Q-structures in cohomology form, their determinant lines,
Q-structures on cones, multiplicative triangles and determinants of pairings.

Every space is described relative to a working basis; ``qgen`` is the
coordinate of the rational generator of its top exterior power in that basis.
"""
import logging
from collections import namedtuple

from .exceptions import NotInvertible, PairingDegenerate, ShapeMismatch
from .i18n import gettext as _
from .linalg import PMatrix, as_period, complete_basis
from .periodfield import ONE


__all__ = (
    'QSpace',
    'QComplex',
    'GradedMap',
    'ConeSplitting',
    'TriangleWitness',
    'det_total',
    'det_of_map',
    'cone_qstructure',
    'cone_qstructure_with_witness',
    'direct_sum_witness',
    'is_multiplicative',
    'det_pairing',
)


logger = logging.getLogger(__name__)


def _sign(degree):
    return 1 if degree % 2 == 0 else -1


class QSpace:
    """Single graded piece: dimension plus Q-structure generator coordinate."""

    __slots__ = ('dim', 'qgen')

    def __init__(self, dim, qgen=ONE):
        qgen = as_period(qgen)
        if dim < 0:
            raise ValueError(_('Negative dimension {}.').format(dim))
        if dim == 0 and qgen != 1:
            raise ValueError(_('The zero space carries the generator 1, not {}.').format(qgen))
        if not qgen:
            raise ValueError(_('Q-structure generator must be nonzero.'))
        if not qgen.is_real():
            raise ValueError(_('Q-structure generator {} is not real.').format(qgen))
        self.dim = dim
        self.qgen = qgen

    def __eq__(self, other):
        return isinstance(other, QSpace) and self.dim == other.dim and self.qgen == other.qgen

    def __repr__(self):
        return '<object %s.%s(dim=%d, qgen=%s)>' % (
            self.__module__, type(self).__name__, self.dim, self.qgen)

    def direct_sum(self, other):
        return QSpace(self.dim + other.dim, self.qgen * other.qgen)


_ZERO_SPACE = QSpace(0)


class QComplex:
    """
    Finite graded family of Q-structured real spaces (zero differentials).

    Zero-dimensional pieces are not stored. ``det_scale`` is the coordinate
    of the rational generator of the determinant line left by acyclic parts
    (the canonical trivialization of ``det`` of an exact complex).
    """

    __slots__ = ('_graded', 'det_scale')

    def __init__(self, graded=None, det_scale=ONE):
        graded = graded or {}
        det_scale = as_period(det_scale)
        if not det_scale or not det_scale.is_real():
            raise ValueError(_('Determinant scale {} is not a nonzero real.').format(det_scale))
        self._graded = {
            int(i): space for i, space in sorted(graded.items()) if space.dim > 0}
        self.det_scale = det_scale

    @classmethod
    def from_dims(cls, dims, qgens=None):
        qgens = qgens or {}
        return cls({i: QSpace(d, qgens.get(i, ONE)) for i, d in dims.items()})

    @property
    def graded(self):
        return dict(self._graded)

    @property
    def degrees(self):
        return tuple(self._graded)

    def __getitem__(self, degree):
        return self._graded.get(degree, _ZERO_SPACE)

    def dim(self, degree):
        return self[degree].dim

    def qgen(self, degree):
        return self[degree].qgen

    def dims(self):
        return {i: space.dim for i, space in self._graded.items()}

    def is_empty(self):
        """No cohomology; ``det_scale`` may still be nontrivial."""
        return not self._graded

    def euler_characteristic(self):
        return sum(_sign(i) * space.dim for i, space in self._graded.items())

    def shift(self, n):
        """``C[n]`` with ``C[n]^j = C^{j+n}``."""
        return QComplex({i - n: space for i, space in self._graded.items()},
                        self.det_scale ** _sign(n))

    def direct_sum(self, other):
        graded = dict(self._graded)
        for i, space in other.graded.items():
            graded[i] = graded[i].direct_sum(space) if i in graded else space
        return QComplex(graded, self.det_scale * other.det_scale)

    def __eq__(self, other):
        return (isinstance(other, QComplex) and self._graded == other._graded and
                self.det_scale == other.det_scale)

    def __repr__(self):
        pieces = ['%d: %d@%s' % (i, s.dim, s.qgen) for i, s in self._graded.items()]
        if self.det_scale != 1:
            pieces.append('det_scale=%s' % self.det_scale)
        return '<object %s.%s(%s)>' % (self.__module__, type(self).__name__, ', '.join(pieces))


def det_total(c):
    """Scalar of ``det V = tensor_i det^{(-1)^i} H^i``, acyclic part included."""
    result = c.det_scale
    for i, space in c.graded.items():
        result = result * space.qgen ** _sign(i)
    return result


class GradedMap:
    """Degreewise matrices ``target.dim(i) x source.dim(i)``; absent degrees are zero."""

    __slots__ = ('source', 'target', '_matrices')

    def __init__(self, source, target, matrices=None):
        self.source = source
        self.target = target
        self._matrices = {}
        for i, matrix in (matrices or {}).items():
            if not isinstance(matrix, PMatrix):
                matrix = PMatrix(matrix, source.dim(i))
            expected = (target.dim(i), source.dim(i))
            if matrix.shape != expected:
                raise ShapeMismatch(_('Degree {} matrix has shape {}, expected {}.').format(
                    i, matrix.shape, expected))
            self._matrices[int(i)] = matrix

    def matrix(self, degree):
        if degree in self._matrices:
            return self._matrices[degree]
        return PMatrix.zeros(self.target.dim(degree), self.source.dim(degree))

    @property
    def degrees(self):
        return tuple(sorted(set(self.source.degrees) | set(self.target.degrees)))

    def __repr__(self):
        return '<object %s.%s(%r -> %r)>' % (
            self.__module__, type(self).__name__, self.source, self.target)


def det_of_map(f):
    """Image of 1 under ``Q = det A (x) det^-1 B -> R`` for a degree-0 isomorphism."""
    matrix = f.matrix(0)
    if matrix.nrows != matrix.ncols:
        raise NotInvertible(_('Map of shape {} is not square.').format(matrix.shape))
    det = matrix.det()
    if not det:
        raise NotInvertible(_('Map is singular.'))
    return det * f.source.qgen(0) / f.target.qgen(0)


ConeSplitting = namedtuple('ConeSplitting', (
    'degree', 'kernel', 'complement', 'image', 'cokernel', 'det_source', 'det_target'))
ConeSplitting.__doc__ = """
Splitting of ``f^i``: source basis ``kernel + complement`` and target basis
``image + cokernel`` with their determinants against the working bases.
"""


class TriangleWitness:
    """
    Degreewise isomorphism data realizing ``a -> b -> c``.

    ``det_ratio`` is the coordinate of ``det b = det a (x) det c`` in the
    working bases; it is 1 for split extensions.
    """

    __slots__ = ('kind', 'det_ratio', 'splittings', 'map')

    def __init__(self, kind, det_ratio=ONE, splittings=(), map=None):
        if kind not in ('extension', 'cone'):
            raise ValueError(_('Unknown triangle kind {!r}.').format(kind))
        self.kind = kind
        self.det_ratio = as_period(det_ratio)
        self.splittings = tuple(splittings)
        self.map = map

    def __repr__(self):
        return '<object %s.%s(kind=%s, det_ratio=%s)>' % (
            self.__module__, type(self).__name__, self.kind, self.det_ratio)


def direct_sum_witness(a=None, c=None):
    """Witness of the split extension ``a -> a + c -> c``."""
    return TriangleWitness('extension')


def cone_qstructure_with_witness(f):
    """
    Cohomology of ``cone(f)`` (degree ``i`` holds ``coker f^i + ker f^{i+1}``)
    with the Q-structure ``d_target (x) d_source^-1`` transported along the
    splitting of each ``f^i``. A side with no piece leaves its generator in
    the cone's ``det_scale``.
    """
    pieces = {}
    splittings = []
    ratio = ONE
    scale = f.target.det_scale / f.source.det_scale
    for i in f.degrees:
        matrix = f.matrix(i)
        dim_a, dim_b = matrix.ncols, matrix.nrows
        kernel = matrix.nullspace()
        complement = complete_basis(kernel, dim_a)
        image = [(matrix @ PMatrix([[x] for x in w], 1)).column(0) for w in complement]
        cokernel = complete_basis(image, dim_b)
        det_a = PMatrix.from_columns(kernel + complement, dim_a).det()
        det_b = PMatrix.from_columns(image + cokernel, dim_b).det()
        splittings.append(ConeSplitting(i, kernel, complement, image, cokernel, det_a, det_b))
        logger.debug('cone degree %d: kernel %d, cokernel %d', i, len(kernel), len(cokernel))
        if kernel:
            piece = QSpace(len(kernel), f.source.qgen(i) / det_a)
            pieces.setdefault(i - 1, []).append(piece)
        else:
            # kernel generator sits in degree i - 1
            scale = scale * (det_a / f.source.qgen(i)) ** _sign(i)
        if cokernel:
            piece = QSpace(len(cokernel), f.target.qgen(i) / det_b)
            pieces.setdefault(i, []).insert(0, piece)
        else:
            scale = scale * (f.target.qgen(i) / det_b) ** _sign(i)
        ratio = ratio * (det_b / det_a) ** _sign(i)
    graded = {}
    for degree, spaces in pieces.items():
        space = spaces[0]
        for other in spaces[1:]:
            space = space.direct_sum(other)
        graded[degree] = space
    witness = TriangleWitness('cone', ratio, splittings, f)
    return QComplex(graded, scale), witness


def cone_qstructure(f):
    return cone_qstructure_with_witness(f)[0]


def is_multiplicative(a, b, c, witness):
    """True iff ``det b = det a * det c`` up to the witness' change of bases, exactly."""
    if witness.kind == 'extension':
        for i in set(a.degrees) | set(b.degrees) | set(c.degrees):
            if b.dim(i) != a.dim(i) + c.dim(i):
                raise ShapeMismatch(_('Degree {}: {} is not an extension of {} by {}.').format(
                    i, b.dim(i), c.dim(i), a.dim(i)))
    elif b.euler_characteristic() != a.euler_characteristic() + c.euler_characteristic():
        raise ShapeMismatch(_('Euler characteristics do not add up along the triangle.'))
    return det_total(b) == det_total(a) * det_total(c) * witness.det_ratio


def det_pairing(a, b, pairings):
    """
    ``prod_i (det pi^i * qgen_{a,i} * qgen_{b,-i})^{(-1)^i}`` for pairings
    ``H^i(a) x H^{-i}(b) -> R``, times the acyclic scales of both sides.
    """
    pairings = pairings or {}
    result = a.det_scale * b.det_scale
    degrees = sorted(set(a.degrees) | {-j for j in b.degrees} | set(pairings))
    for i in degrees:
        size = a.dim(i)
        if b.dim(-i) != size:
            raise PairingDegenerate(_('Degree {}: dimensions {} and {} do not match.').format(
                i, size, b.dim(-i)))
        if size == 0:
            continue
        if i not in pairings:
            raise PairingDegenerate(_('Degree {}: no pairing matrix.').format(i))
        matrix = pairings[i]
        if not isinstance(matrix, PMatrix):
            matrix = PMatrix(matrix, size)
        if matrix.shape != (size, size):
            raise PairingDegenerate(_('Degree {}: pairing has shape {}, expected {}.').format(
                i, matrix.shape, (size, size)))
        det = matrix.det()
        if not det:
            raise PairingDegenerate(_('Degree {}: pairing is singular.').format(i))
        result = result * (det * a.qgen(i) * b.qgen(-i)) ** _sign(i)
    return result

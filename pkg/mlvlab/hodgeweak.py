"""
Weak Hodge cohomology of explicit Hodge data.

The period map sends the Betti invariants plus ``F^0`` of de Rham into the
conjugation-invariants ``C_c^G`` of the complexified Betti space; ``Hw0`` is
its kernel and ``Hw1`` its cokernel, with Q-structures from the cone rule of
:mod:`mlvlab.qdet`.

``C_c^G`` is described in the coordinates ``(Re c+, Im c-)`` where ``c`` is a
complex vector in the frame ``[V+ | V-]`` of ``Finf``-eigenvectors.
"""
import bisect
import logging
from collections import namedtuple

from .exceptions import DualityDegenerate, MalformedHodgeNumbers, NotInvertible, ShapeMismatch
from .i18n import gettext as _
from .linalg import PMatrix
from .periodfield import I, ONE, ZERO, const, symbol, two_pi_i
from .qdet import GradedMap, QComplex, QSpace, cone_qstructure_with_witness
from .zetaeng import LaurentLeading, lobject_leading


__all__ = (
    'HodgeDatum',
    'SplitHodgeDatum',
    'WeakCohomology',
    'WeakPairing',
    'GammaProduct',
    'GAMMA_R',
    'GAMMA_C',
    'one',
    'twist',
    'dual_twist',
    'direct_sum',
    'weak_cohomology',
    'weak_complex',
    'weak_duality',
    'hodge_numbers',
    'arch_layers',
    'arch_factor',
    'gamma_leading',
    'completed_leading',
    'check_functional_equation_orders',
)


logger = logging.getLogger(__name__)

GAMMA_R = 'GammaR'
GAMMA_C = 'GammaC'


def _as_matrix(value):
    return value if isinstance(value, PMatrix) else PMatrix(value)


def _normalize_filtration(filtration, rank):
    pairs = sorted((int(p), int(dim)) for p, dim in dict(filtration).items()) \
        if isinstance(filtration, dict) else sorted((int(p), int(dim)) for p, dim in filtration)
    if not pairs:
        raise MalformedHodgeNumbers(_('Empty Hodge filtration.'))
    previous = rank
    normalized = []
    for p, dim in pairs:
        if not 0 <= dim <= rank:
            raise MalformedHodgeNumbers(_('dim F^{} = {} is outside [0, {}].').format(p, dim, rank))
        if dim > previous:
            raise MalformedHodgeNumbers(_('Hodge filtration increases at F^{}.').format(p))
        if dim != previous:
            normalized.append((p, dim))
        previous = dim
    if previous != 0:
        raise MalformedHodgeNumbers(_('Hodge filtration does not reach 0.'))
    return tuple(normalized)


class HodgeDatum:
    """
    Pure Hodge-type datum of weight ``weight``.

    ``comparison`` has as column ``j`` the Betti coordinates of the ``j``-th de
    Rham basis vector; ``F^p`` is spanned by the first ``dim F^p`` of them.
    ``filtration`` lists ``(p, dim F^p)`` at the jumps; ``dim F^p`` is the rank
    below the first jump.
    """

    __slots__ = ('weight', 'finf', 'filtration', 'comparison')

    def __init__(self, weight, finf, filtration, comparison):
        finf = _as_matrix(finf)
        comparison = _as_matrix(comparison)
        rank = finf.nrows
        if rank == 0 or finf.shape != (rank, rank):
            raise ShapeMismatch(_('Finf must be a nonempty square matrix.'))
        if comparison.shape != (rank, rank):
            raise ShapeMismatch(_('Comparison matrix has shape {}, expected {}.').format(
                comparison.shape, (rank, rank)))
        if not all(x.is_rational() for row in finf.rows for x in row):
            raise ValueError(_('Finf must be rational.'))
        if finf @ finf != PMatrix.identity(rank):
            raise ValueError(_('Finf is not an involution.'))
        if not comparison.det():
            raise NotInvertible(_('Comparison matrix is singular.'))
        if finf @ comparison.map(lambda x: x.conj()) != comparison:
            raise ValueError(_('Comparison matrix is not compatible with Finf and conjugation.'))
        self.weight = int(weight)
        self.finf = finf
        self.filtration = _normalize_filtration(filtration, rank)
        self.comparison = comparison

    @property
    def rank(self):
        return self.finf.nrows

    @property
    def layers(self):
        return (self,)

    def fdim(self, p):
        keys = [k for k, _dim in self.filtration]
        index = bisect.bisect_right(keys, p)
        return self.rank if index == 0 else self.filtration[index - 1][1]

    def eigenbasis(self, sign):
        shifted = PMatrix([[x - (sign if r == c else 0) for c, x in enumerate(row)]
                           for r, row in enumerate(self.finf.rows)], self.rank)
        return shifted.nullspace()

    def __eq__(self, other):
        return (isinstance(other, HodgeDatum) and self.weight == other.weight and
                self.filtration == other.filtration and self.finf == other.finf and
                self.comparison == other.comparison)

    def __repr__(self):
        return '<object %s.%s(rank=%d, weight=%d, filtration=%s)>' % (
            self.__module__, type(self).__name__, self.rank, self.weight, list(self.filtration))


class SplitHodgeDatum:
    """Direct sum of pure layers (a split weight filtration)."""

    __slots__ = ('layers',)

    def __init__(self, layers):
        flat = []
        for layer in layers:
            flat.extend(layer.layers)
        if not flat:
            raise ValueError(_('A split Hodge datum needs at least one layer.'))
        self.layers = tuple(flat)

    @property
    def rank(self):
        return sum(layer.rank for layer in self.layers)

    @property
    def weights(self):
        return tuple(sorted({layer.weight for layer in self.layers}))

    def __eq__(self, other):
        return isinstance(other, SplitHodgeDatum) and self.layers == other.layers

    def __repr__(self):
        return '<object %s.%s(weights=%s)>' % (
            self.__module__, type(self).__name__, list(self.weights))


def _rebuild(h, func):
    layers = [func(layer) for layer in h.layers]
    return layers[0] if isinstance(h, HodgeDatum) else SplitHodgeDatum(layers)


def direct_sum(*hs):
    return SplitHodgeDatum(hs)


def one(n):
    """The Tate structure ``1(n)``."""
    return HodgeDatum(-2 * n, [[(-1) ** (n % 2)]], [(-n, 1), (-n + 1, 0)],
                      [[two_pi_i() ** n]])


def _twist_layer(h, n):
    return HodgeDatum(
        h.weight - 2 * n,
        h.finf.scale((-1) ** (n % 2)),
        [(p - n, dim) for p, dim in h.filtration],
        h.comparison.scale(two_pi_i() ** n))


def twist(h, n):
    return _rebuild(h, lambda layer: _twist_layer(layer, n))


def _dual_twist_layer(h):
    rank = h.rank
    reversal = PMatrix([[ONE if r + c == rank - 1 else ZERO for c in range(rank)]
                        for r in range(rank)], rank)
    keys = [p for p, _dim in h.filtration]
    filtration = [(1 - k, rank - h.fdim(k - 1)) for k in keys]
    return HodgeDatum(
        -h.weight - 2,
        h.finf.inv().T.scale(-1),
        filtration,
        (h.comparison.inv().T @ reversal).scale(two_pi_i()))


def dual_twist(h):
    """``V^dual(1)``."""
    return _rebuild(h, _dual_twist_layer)


_LayerParts = namedtuple('_LayerParts', (
    'hw0', 'hw1', 'alpha_rank', 'det_scale', 'kernel', 'cokernel', 'frame', 'plus_dim'))

WeakCohomology = namedtuple('WeakCohomology', ('hw0', 'hw1', 'alpha_rank', 'det_scale'))
WeakPairing = namedtuple('WeakPairing', ('degree0', 'degree1'))


def _layer_parts(h):
    rank = h.rank
    plus = h.eigenbasis(1)
    minus = h.eigenbasis(-1)
    frame = PMatrix.from_columns(plus + minus, rank)
    complex_coords = frame.inv() @ h.comparison
    coords = PMatrix([[x.real_part() if r < len(plus) else x.imag_part() for x in row]
                      for r, row in enumerate(complex_coords.rows)], rank)
    f0 = h.fdim(0)
    units = [tuple(ONE if k == j else ZERO for k in range(rank)) for j in range(len(plus))]
    alpha = PMatrix.from_columns(units + coords.columns[:f0], rank)
    source = QComplex({0: QSpace(len(plus) + f0)})
    target = QComplex({0: QSpace(rank, coords.det())})
    cone, witness = cone_qstructure_with_witness(GradedMap(source, target, {0: alpha}))
    hw = cone.shift(-1)
    splitting = witness.splittings[0]
    logger.debug('weak cohomology of %r: alpha %dx%d, Hw0 %d, Hw1 %d', h, rank,
                 alpha.ncols, hw.dim(0), hw.dim(1))
    return _LayerParts(hw[0], hw[1], alpha.ncols - len(splitting.kernel), hw.det_scale,
                       splitting.kernel, splitting.cokernel, frame, len(plus))


def weak_cohomology(h):
    """
    ``(Hw0, Hw1, rank of the period map, det_scale)``; split data are summed
    layerwise. ``det_scale`` is the period of the acyclic part of the period map.
    """
    hw0, hw1, alpha_rank, scale = QSpace(0), QSpace(0), 0, ONE
    for layer in h.layers:
        parts = _layer_parts(layer)
        hw0 = hw0.direct_sum(parts.hw0)
        hw1 = hw1.direct_sum(parts.hw1)
        alpha_rank += parts.alpha_rank
        scale = scale * parts.det_scale
    return WeakCohomology(hw0, hw1, alpha_rank, scale)


def weak_complex(hodge_by_degree):
    """
    ``Hw`` of a complex from its cohomology objects:
    ``Hw^i = Hw1(H^{i-1}) + Hw0(H^i)``, the ``Hw1`` block first.
    """
    blocks = {}
    scale = ONE
    for degree, h in sorted(dict(hodge_by_degree).items()):
        hw = weak_cohomology(h)
        blocks.setdefault(degree, [None, None])[1] = hw.hw0
        blocks.setdefault(degree + 1, [None, None])[0] = hw.hw1
        scale = scale * hw.det_scale ** (-1 if degree % 2 else 1)
    graded = {}
    for degree, (first, second) in blocks.items():
        space = QSpace(0)
        for piece in (first, second):
            if piece is not None:
                space = space.direct_sum(piece)
        graded[degree] = space
    return QComplex(graded, scale)


def _betti_vector(frame, plus_dim, coords):
    """Complex Betti vector of a point of ``C_c^G`` given in frame coordinates."""
    values = [x if k < plus_dim else I * x for k, x in enumerate(coords)]
    return frame @ PMatrix([[x] for x in values], 1)


def _pairing_matrix(kernel_side, cokernel_side):
    """``(b . w) / 2 pi i`` for Betti parts ``b`` of kernel vectors and cokernel classes ``w``."""
    if len(kernel_side.kernel) != len(cokernel_side.cokernel):
        raise DualityDegenerate(_('Weak cohomology dimensions {} and {} differ.').format(
            len(kernel_side.kernel), len(cokernel_side.cokernel)))
    scale = two_pi_i().inverse()
    rows = []
    for vec in kernel_side.kernel:
        plus_dim = kernel_side.plus_dim
        betti = tuple(vec[:plus_dim]) + (ZERO,) * (kernel_side.frame.ncols - plus_dim)
        b = _betti_vector(kernel_side.frame, plus_dim, betti).column(0)
        row = []
        for cls in cokernel_side.cokernel:
            w = _betti_vector(cokernel_side.frame, cokernel_side.plus_dim, cls).column(0)
            row.append(sum((x * y for x, y in zip(b, w)), ZERO) * scale)
        rows.append(row)
    matrix = PMatrix(rows, len(cokernel_side.cokernel))
    if not matrix.det():
        raise DualityDegenerate(_('Weak duality pairing is degenerate.'))
    return matrix


def weak_duality(h):
    """
    Pairings ``Hw0(V) x Hw1(V^dual(1))`` and ``Hw1(V) x Hw0(V^dual(1))``,
    checked perfect.
    """
    degree0, degree1 = [], []
    for layer in h.layers:
        parts = _layer_parts(layer)
        dual_parts = _layer_parts(_dual_twist_layer(layer))
        degree0.append(_pairing_matrix(parts, dual_parts))
        degree1.append(_pairing_matrix(dual_parts, parts).T)
    return WeakPairing(PMatrix.block_diag(*degree0), PMatrix.block_diag(*degree1))


def hodge_numbers(h):
    """``{(p, q): h^{pq}}`` of a pure datum."""
    keys = [p for p, _dim in h.filtration]
    numbers = {}
    for p in range(keys[0] - 1, keys[-1] + 1):
        count = h.fdim(p) - h.fdim(p + 1)
        if count:
            numbers[(p, h.weight - p)] = count
    return numbers


def arch_layers(h):
    """``(weight, h^{pq}, {p: (dim Finf=+1, dim Finf=-1)} on p = q)`` per pure layer."""
    layers = []
    for layer in h.layers:
        numbers = hodge_numbers(layer)
        off_diagonal = sum(n for (p, q), n in numbers.items() if p < q)
        eigen = {}
        if layer.weight % 2 == 0 and (layer.weight // 2, layer.weight // 2) in numbers:
            eigen[layer.weight // 2] = (len(layer.eigenbasis(1)) - off_diagonal,
                                        len(layer.eigenbasis(-1)) - off_diagonal)
        layers.append((layer.weight, numbers, eigen))
    return layers


class GammaProduct:
    """``prod Gamma_kind(s + shift)^exponent``."""

    __slots__ = ('entries',)

    def __init__(self, entries=()):
        merged = {}
        for kind, shift, exponent in entries:
            if kind not in (GAMMA_R, GAMMA_C):
                raise ValueError(_('Unknown Gamma factor {!r}.').format(kind))
            key = (kind, int(shift))
            merged[key] = merged.get(key, 0) + int(exponent)
        self.entries = tuple(sorted((kind, shift, e) for (kind, shift), e in merged.items() if e))

    def __mul__(self, other):
        return GammaProduct(self.entries + other.entries)

    def __eq__(self, other):
        return isinstance(other, GammaProduct) and self.entries == other.entries

    def __repr__(self):
        return '<object %s.%s(%s)>' % (
            self.__module__, type(self).__name__,
            ' '.join('%s(s%+d)^%d' % entry for entry in self.entries))


def arch_factor(layers):
    entries = []
    for weight, numbers, eigen in layers:
        for (p, q), count in numbers.items():
            if count < 0 or p + q != weight:
                raise MalformedHodgeNumbers(_('Invalid h^({},{}) = {} in weight {}.').format(
                    p, q, count, weight))
            if numbers.get((q, p), 0) != count:
                raise MalformedHodgeNumbers(_('h^({},{}) and h^({},{}) differ.').format(
                    p, q, q, p))
            if p < q:
                entries.append((GAMMA_C, -p, count))
        for p, (plus, minus) in eigen.items():
            if plus < 0 or minus < 0 or plus + minus != numbers.get((p, p), 0):
                raise MalformedHodgeNumbers(_('Finf eigen-dimensions do not split h^({},{}).').format(
                    p, p))
        for (p, q), count in numbers.items():
            if p != q:
                continue
            if p not in eigen:
                raise MalformedHodgeNumbers(_('Missing Finf eigen-dimensions at p = {}.').format(p))
            plus, minus = eigen[p]
            matching, other = (plus, minus) if p % 2 == 0 else (minus, plus)
            entries.append((GAMMA_R, -p, matching))
            entries.append((GAMMA_R, -p + 1, other))
    return GammaProduct([entry for entry in entries if entry[2]])


def _factorial(n):
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def _gamma_r_at(u):
    """``Gamma_R(s) = pi^(-s/2) Gamma(s/2)`` near ``s = u``."""
    pi = symbol('pi')
    if u > 0 and u % 2 == 0:
        m = u // 2
        return LaurentLeading(0, const(_factorial(m - 1)) * pi ** (-m))
    if u > 0:
        m = (u - 1) // 2
        # Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
        ratio = const(_factorial(2 * m)) / (4 ** m * _factorial(m))
        return LaurentLeading(0, ratio * pi ** (-m))
    if u % 2 == 0:
        n = -u // 2
        return LaurentLeading(-1, const(2 * (-1) ** n) / _factorial(n) * pi ** n)
    k = (1 - u) // 2
    # Gamma(1/2 - k) = (-4)^k k! / (2k)! sqrt(pi)
    ratio = const((-4) ** k * _factorial(k)) / _factorial(2 * k)
    return LaurentLeading(0, ratio * pi ** k)


def _gamma_c_at(u):
    """``Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s)`` near ``s = u``."""
    two_pi = 2 * symbol('pi')
    if u > 0:
        return LaurentLeading(0, 2 * _factorial(u - 1) * two_pi ** (-u))
    n = -u
    return LaurentLeading(-1, const(2 * (-1) ** n) / _factorial(n) * two_pi ** n)


def gamma_leading(g, s0=0):
    result = LaurentLeading(0, ONE)
    for kind, shift, exponent in g.entries:
        at = _gamma_r_at if kind == GAMMA_R else _gamma_c_at
        result = result * at(s0 + shift) ** exponent
    return result


def completed_leading(lobject, gamma, s0=0):
    """Leading term of ``L * L_inf``."""
    return lobject_leading(lobject, s0) * gamma_leading(gamma, s0)


def check_functional_equation_orders(lobject, gamma, dual_lobject, dual_gamma, s0=0):
    """Orders of ``Lambda(M, s)`` at ``s0`` and ``Lambda(DM, -s)`` there agree."""
    order = completed_leading(lobject, gamma, s0).order
    dual_order = completed_leading(dual_lobject, dual_gamma, -s0).order
    logger.debug('completed orders at %d: %d vs %d', s0, order, dual_order)
    return order == dual_order

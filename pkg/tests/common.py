import sympy as sp
from hypothesis import assume, strategies as st

from mlvlab.catalog import fp_pn_m
from mlvlab.conjlab import MotivicDatum
from mlvlab.galrep import EulerFactor, FrobModule
from mlvlab.hodgeweak import HodgeDatum, one, twist
from mlvlab.i18n import set_gettext
from mlvlab.linalg import PMatrix
from mlvlab.periodfield import I, const, parse_period
from mlvlab.qdet import GradedMap, QComplex, QSpace


PRIMES = (2, 3, 5, 7)


def period(text):
    return parse_period(text)


def elliptic_h1():
    """Weight 1 rank 2 structure with h^10 = h^01 = 1."""
    return HodgeDatum(1, [[1, 0], [0, -1]], [(1, 1), (2, 0)], [['1', '1'], ['i', '-i']])


ELLIPTIC_DOC = {
    'weight': 1,
    'finf': [[1, 0], [0, -1]],
    'filtrationDims': [[1, 1], [2, 0]],
    'comparison': [['1', '1'], ['i', '-i']],
}


def corrupted_projective_line(p=2):
    """P^1 at p whose second Euler factor is off by one."""
    d = fp_pn_m(p, 1, 0)
    factors = [EulerFactor(p, 1, [1, -1]), EulerFactor(p, 1, [1, -(p + 1)])]
    return MotivicDatum('corrupted', d.hM, d.hDM, factors, pairings=d.pairings, ranks=d.ranks)


small_ints = st.integers(min_value=-3, max_value=3)
rationals = st.fractions(min_value=-12, max_value=12, max_denominator=5).map(sp.Rational)
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def frob_modules(draw, max_rank=3, max_f=3):
    p = draw(st.sampled_from(PRIMES))
    f = draw(st.integers(min_value=1, max_value=max_f))
    n = draw(st.integers(min_value=1, max_value=max_rank))
    entries = draw(st.lists(small_ints, min_size=n * n, max_size=n * n))
    phi = sp.Matrix(n, n, entries)
    assume(phi.det() != 0)
    return FrobModule(p, f, phi)


@st.composite
def qcomplexes(draw, degrees=(-1, 0, 1), max_dim=2):
    graded = {}
    for i in degrees:
        dim = draw(st.integers(min_value=0, max_value=max_dim))
        if dim:
            power = draw(st.integers(min_value=-1, max_value=1))
            graded[i] = QSpace(dim, const(draw(nonzero_rationals)) * period('pi') ** power)
    return QComplex(graded)


@st.composite
def graded_maps(draw):
    source = draw(qcomplexes())
    target = draw(qcomplexes())
    matrices = {}
    for i in set(source.degrees) | set(target.degrees):
        rows, cols = target.dim(i), source.dim(i)
        entries = draw(st.lists(small_ints, min_size=rows * cols, max_size=rows * cols))
        matrices[i] = [entries[r * cols:(r + 1) * cols] for r in range(rows)]
    return GradedMap(source, target, matrices)


qgens = st.builds(lambda q, k: const(q) * period('pi') ** k,
                  nonzero_rationals, st.integers(min_value=-1, max_value=1))


@st.composite
def invertible_matrices(draw, size, periods=False):
    """Small integer matrices; with ``periods`` the first row is scaled by ``pi``."""
    entries = draw(st.lists(small_ints, min_size=size * size, max_size=size * size))
    rows = [[const(x) for x in entries[r * size:(r + 1) * size]] for r in range(size)]
    if periods:
        rows[0] = [x * period('pi') for x in rows[0]]
    matrix = PMatrix(rows, size)
    assume(matrix.det())
    return matrix


@st.composite
def composable_isos(draw, max_dim=3):
    """``(a, b, c, f, g)`` with ``f: a -> b`` and ``g: b -> c`` in degree 0."""
    n = draw(st.integers(min_value=1, max_value=max_dim))
    a, b, c = (QComplex({0: QSpace(n, draw(qgens))}) for _ in range(3))
    return a, b, c, draw(invertible_matrices(n, periods=True)), \
        draw(invertible_matrices(n, periods=True))


@st.composite
def pairing_data(draw, degree=0, max_dim=3):
    """``(a, b, pairing, change)``: ``a`` sits in ``degree``, ``b`` in ``-degree``."""
    n = draw(st.integers(min_value=1, max_value=max_dim))
    a = QComplex({degree: QSpace(n, draw(qgens))})
    b = QComplex({-degree: QSpace(n, draw(qgens))})
    return a, b, draw(invertible_matrices(n, periods=True)), draw(invertible_matrices(n))


@st.composite
def rank_two_hodge(draw):
    """
    Weight ``1 - 2n`` structures: a real and an imaginary Betti row, with
    ``F^1`` off the real line, twisted by ``n``.
    """
    r1, s1 = draw(nonzero_rationals), draw(nonzero_rationals)
    r2, s2 = draw(rationals), draw(rationals)
    assume(r1 * s2 - r2 * s1 != 0)
    comparison = [[const(r1), const(r2)], [I * const(s1), I * const(s2)]]
    h = HodgeDatum(1, [[1, 0], [0, -1]], [(1, 1), (2, 0)], comparison)
    return twist(h, draw(st.integers(min_value=-2, max_value=2)))


tate_twists = st.integers(min_value=-3, max_value=3).map(one)
pure_hodge = st.one_of(tate_twists, st.builds(elliptic_h1))


class BaseTest:

    def teardown_method(self, method):
        # Reset i18n config after each test
        set_gettext(None)

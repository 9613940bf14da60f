"""
Dense exact linear algebra over the period field.

Gaussian elimination with first-nonzero pivoting; every decision is an exact
zero test in :class:`~mlvlab.periodfield.PeriodValue`.
"""
from .exceptions import NotInvertible, ShapeMismatch
from .i18n import gettext as _
from .periodfield import PeriodValue, ONE, ZERO, parse_period


__all__ = ('PMatrix', 'as_period', 'complete_basis')


def as_period(value):
    if isinstance(value, PeriodValue):
        return value
    return parse_period(value)


class PMatrix:
    """Immutable ``nrows x ncols`` matrix of periods (shape kept when empty)."""

    __slots__ = ('nrows', 'ncols', '_rows')

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(as_period(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ShapeMismatch(_('Ragged matrix rows.'))
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = rows

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[ZERO] * ncols for _row in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if r == c else ZERO for c in range(n)] for r in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        columns = [tuple(col) for col in columns]
        return cls([[col[r] for col in columns] for r in range(nrows)], len(columns))

    @classmethod
    def block_diag(cls, *blocks):
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for block in blocks:
            for row in block.rows:
                rows.append([ZERO] * offset + list(row) +
                            [ZERO] * (ncols - offset - block.ncols))
            offset += block.ncols
        return cls(rows, ncols) if rows else cls.zeros(nrows, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def rows(self):
        return self._rows

    def column(self, c):
        return tuple(row[c] for row in self._rows)

    @property
    def columns(self):
        return [self.column(c) for c in range(self.ncols)]

    def __getitem__(self, index):
        r, c = index
        return self._rows[r][c]

    def __eq__(self, other):
        return (isinstance(other, PMatrix) and self.shape == other.shape and
                all(a == b for ra, rb in zip(self._rows, other._rows) for a, b in zip(ra, rb)))

    def __repr__(self):
        return '<object %s.%s(%dx%d %s)>' % (
            self.__module__, type(self).__name__, self.nrows, self.ncols,
            [[str(x) for x in row] for row in self._rows])

    def to_text(self):
        return [[str(x) for x in row] for row in self._rows]

    @property
    def T(self):
        return PMatrix([self.column(c) for c in range(self.ncols)], self.nrows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ShapeMismatch(_('Cannot multiply {} by {}.').format(self.shape, other.shape))
        cols = other.columns
        rows = [[sum((a * b for a, b in zip(row, col)), ZERO) for col in cols]
                for row in self._rows]
        return PMatrix(rows, other.ncols)

    def scale(self, factor):
        factor = as_period(factor)
        return PMatrix([[factor * x for x in row] for row in self._rows], self.ncols)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ShapeMismatch(_('Cannot stack {} beside {}.').format(self.shape, other.shape))
        return PMatrix([a + b for a, b in zip(self._rows, other._rows)],
                       self.ncols + other.ncols)

    def map(self, func):
        return PMatrix([[func(x) for x in row] for row in self._rows], self.ncols)

    # Elimination

    def _echelon(self):
        """Return (reduced rows, pivot columns, determinant sign/scale product)."""
        m = [list(row) for row in self._rows]
        pivots = []
        scale = ONE
        piv_r = 0
        for piv_c in range(self.ncols):
            for i_row in range(piv_r, self.nrows):
                if m[i_row][piv_c]:
                    break
            else:
                continue
            if i_row != piv_r:
                m[piv_r], m[i_row] = m[i_row], m[piv_r]
                scale = -scale
            fp = m[piv_r][piv_c]
            scale = scale * fp
            m[piv_r] = [x / fp for x in m[piv_r]]
            for r in range(self.nrows):
                if r == piv_r:
                    continue
                fr = m[r][piv_c]
                if not fr:
                    continue
                m[r] = [x - fr * y for x, y in zip(m[r], m[piv_r])]
            pivots.append(piv_c)
            piv_r += 1
            if piv_r == self.nrows:
                break
        return m, pivots, scale

    def rref(self):
        m, pivots, _scale = self._echelon()
        return PMatrix(m, self.ncols), tuple(pivots)

    def rank(self):
        return len(self._echelon()[1])

    def det(self):
        if self.nrows != self.ncols:
            raise ShapeMismatch(_('Determinant of a non-square {} matrix.').format(self.shape))
        if self.nrows == 0:
            return ONE
        _m, pivots, scale = self._echelon()
        return scale if len(pivots) == self.nrows else ZERO

    def inv(self):
        if self.nrows != self.ncols:
            raise NotInvertible(_('Non-square {} matrix.').format(self.shape))
        n = self.nrows
        m, pivots, _scale = self.hstack(PMatrix.identity(n))._echelon()
        if pivots[:n] != list(range(n)):
            raise NotInvertible(_('Singular matrix.'))
        return PMatrix([row[n:] for row in m], n)

    def nullspace(self):
        """Basis of the kernel, one vector per free column (free entry set to 1)."""
        m, pivots, _scale = self._echelon()
        basis = []
        for free in range(self.ncols):
            if free in pivots:
                continue
            vec = [ZERO] * self.ncols
            vec[free] = ONE
            for r, piv_c in enumerate(pivots):
                vec[piv_c] = -m[r][free]
            basis.append(tuple(vec))
        return basis

    def solve(self, rhs):
        """Solve ``self @ x = rhs`` for a column ``rhs``; ``None`` if inconsistent."""
        aug = self.hstack(PMatrix([[x] for x in rhs], 1))
        m, pivots, _scale = aug._echelon()
        if self.ncols in pivots:
            return None
        sol = [ZERO] * self.ncols
        for r, piv_c in enumerate(pivots):
            sol[piv_c] = m[r][self.ncols]
        return tuple(sol)


def complete_basis(vectors, dim):
    """
    Greedily extend independent ``vectors`` by standard basis vectors (first
    pivot first) to a basis of the ``dim``-dimensional space; return the added
    vectors.
    """
    chosen = [tuple(v) for v in vectors]
    added = []
    rank = PMatrix.from_columns(chosen, dim).rank() if chosen else 0
    for j in range(dim):
        if rank == dim:
            break
        unit = tuple(ONE if k == j else ZERO for k in range(dim))
        trial = PMatrix.from_columns(chosen + [unit], dim).rank()
        if trial > rank:
            chosen.append(unit)
            added.append(unit)
            rank = trial
    return added

"""The graded Koszul complex on the partial derivatives of ``f``.

Term ``k`` is a free module with one generator ``e_T`` for each ``k``-subset
``T = {i_1 < ... < i_k}`` of the variables, placed in degree
``k*d - sum_{j in T} w_j``.  The differential is

    d(e_T) = sum_j (-1)^(j+1) f_{i_j} e_{T minus i_j}.

Everything is computed one weighted-degree slice at a time over exact
rationals.
"""

from dataclasses import dataclass, field
from itertools import combinations

from . import linalg
from .errors import IndexOutOfRange, NotHomogeneous, NotPolynomial, SubsetOverflow
from .grading import enumerate_monomials, is_weighted_homogeneous
from .poly import gradient
from .series import TruncatedSeries, milnor_poincare_polynomial, ring_hilbert_series, shift_series

KOSZUL_MAX_VARIABLES = 20


@dataclass(frozen=True)
class GradedFreeResolution:
    """Shifts of the Koszul terms; ``terms[k]`` is a tuple of ``(subset, shift)``."""

    weight_system: object
    terms: tuple

    @property
    def length(self):
        return len(self.terms) - 1

    def shifts(self, k):
        return [a for _, a in self.terms[k]]

    def generators(self, k):
        return [t for t, _ in self.terms[k]]

    def to_json(self):
        return {
            "weights": list(self.weight_system.weights),
            "degree": self.weight_system.degree,
            "terms": [[{"subset": [i + 1 for i in t], "shift": a} for t, a in term] for term in self.terms],
        }


def _shift(ws, subset):
    return len(subset) * ws.degree - sum(ws.weights[i] for i in subset)


def koszul_shifts(ws):
    ws.check_degree()
    if ws.r > KOSZUL_MAX_VARIABLES:
        raise SubsetOverflow(f"Koszul complex on {ws.r} generators exceeds the limit of {KOSZUL_MAX_VARIABLES}")
    terms = tuple(
        tuple((t, _shift(ws, t)) for t in combinations(range(ws.r), k)) for k in range(ws.r + 1)
    )
    return GradedFreeResolution(ws, terms)


def euler_series(res, w, order):
    """Alternating sum of the Hilbert series of the Koszul terms, through ``t^order``."""
    hs = ring_hilbert_series(w, order)
    total = TruncatedSeries([0], order)
    for k, term in enumerate(res.terms):
        for _, a in term:
            s = shift_series(hs, a)
            total = total - s if k % 2 else total + s
    return total


@dataclass
class GradedMatrix:
    """One degree slice of a Koszul differential.

    Rows and columns are labelled by ``(subset, exponent vector)`` pairs;
    ``entries[i][j]`` is the coefficient of row label ``i`` in the image of
    column label ``j``.
    """

    rows: list
    cols: list
    entries: list

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def rank(self):
        if not self.rows or not self.cols:
            return 0
        return linalg.rank(self.entries, len(self.cols))

    def entry(self, row, col):
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def is_zero(self):
        return not any(x for row in self.entries for x in row)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("incompatible slice bases")
        nrows, ncols = len(self.rows), len(other.cols)
        if not self.cols:
            entries = [[0] * ncols for _ in range(nrows)]
        else:
            entries = linalg.matmul(self.entries, other.entries)
        return GradedMatrix(list(self.rows), list(other.cols), entries)


def _check_homogeneous(f, ws):
    if f.is_zero() or not is_weighted_homogeneous(f, ws):
        raise NotHomogeneous(f"{f} is not weighted homogeneous of type ({ws})")


def _basis(ws, k, alpha):
    out = []
    for t in combinations(range(ws.r), k):
        for m in enumerate_monomials(ws.weights, alpha - _shift(ws, t)):
            out.append((t, m))
    return out


def _slice(partials, ws, k, alpha, cols=None, rows=None):
    cols = _basis(ws, k, alpha) if cols is None else cols
    rows = _basis(ws, k - 1, alpha) if rows is None else rows
    index = {label: i for i, label in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, (t, m) in enumerate(cols):
        for pos, i in enumerate(t):
            sign = 1 if pos % 2 == 0 else -1
            face = t[:pos] + t[pos + 1:]
            for e, c in partials[i].terms.items():
                target = (face, tuple(a + b for a, b in zip(e, m)))
                entries[index[target]][j] += sign * c
    return GradedMatrix(rows, cols, entries)


def differential_matrix(f, ws, k, alpha):
    """Matrix of ``d_k`` restricted to weighted degree ``alpha``.

    ``k`` runs from 1 to ``r``.  Bases are ordered by subset, then by
    monomial, both lexicographically.
    """
    ws.check_degree()
    _check_homogeneous(f, ws)
    if not 1 <= k <= ws.r:
        raise IndexOutOfRange(f"Koszul position {k} outside 1..{ws.r}")
    return _slice(gradient(f), ws, k, alpha)


@dataclass
class SliceResult:
    k: int
    alpha: int
    rank: int
    kernel_dim: int
    image_dim: int
    boundary_zero: bool

    @property
    def exact(self):
        return self.kernel_dim == self.image_dim

    def to_json(self):
        return {
            "k": self.k,
            "alpha": self.alpha,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "image_dim": self.image_dim,
            "exact": self.exact,
            "boundary_zero": self.boundary_zero,
        }


@dataclass
class ExactnessReport:
    weight_system: object
    alpha_max: int
    slices: list = field(default_factory=list)
    coker_dims: list = field(default_factory=list)
    expected_coker: list = None

    @property
    def exact(self):
        return all(s.exact for s in self.slices)

    @property
    def complex_ok(self):
        return all(s.boundary_zero for s in self.slices)

    @property
    def coker_match(self):
        return self.expected_coker is not None and self.coker_dims == self.expected_coker

    @property
    def ok(self):
        return self.exact and self.complex_ok and self.coker_match

    def failures(self):
        return [s for s in self.slices if not s.exact or not s.boundary_zero]

    def to_json(self):
        return {
            "weights": list(self.weight_system.weights),
            "degree": self.weight_system.degree,
            "alpha_max": self.alpha_max,
            "slices": [s.to_json() for s in self.slices],
            "coker_dims": self.coker_dims,
            "expected_coker_dims": self.expected_coker,
            "exact": self.exact,
            "complex": self.complex_ok,
            "coker_match": self.coker_match,
        }


def verify_exactness(f, ws, alpha_max):
    """Check degreewise that the Koszul complex on the partials of ``f`` is exact.

    For every ``alpha <= alpha_max`` and every position ``k >= 1`` the kernel
    of ``d_k`` must have the same dimension as the image of ``d_(k+1)``, and
    ``d_k d_(k+1)`` must vanish.  In position 0 the cokernel dimension is
    compared against the Poincare polynomial of the type.
    """
    ws.check_degree()
    _check_homogeneous(f, ws)
    partials = gradient(f)
    r = ws.r
    try:
        poincare = milnor_poincare_polynomial(ws)
        expected = [poincare[a] for a in range(alpha_max + 1)]
    except NotPolynomial:
        expected = None
    report = ExactnessReport(ws, alpha_max, expected_coker=expected)
    for alpha in range(alpha_max + 1):
        bases = [_basis(ws, k, alpha) for k in range(r + 1)]
        mats = {k: _slice(partials, ws, k, alpha, bases[k], bases[k - 1]) for k in range(1, r + 1)}
        ranks = {k: mats[k].rank() for k in mats}
        ranks[r + 1] = 0
        for k in range(1, r + 1):
            boundary_zero = True
            if k < r:
                boundary_zero = (mats[k] @ mats[k + 1]).is_zero()
            ncols = len(bases[k])
            report.slices.append(
                SliceResult(k, alpha, ranks[k], ncols - ranks[k], ranks[k + 1], boundary_zero)
            )
        report.coker_dims.append(len(bases[0]) - ranks[1])
    return report


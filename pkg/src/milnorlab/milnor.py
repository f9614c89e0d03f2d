"""Milnor numbers of weighted-homogeneous polynomials by three routes.

* ``mu_formula``: the closed product ``prod (d - w_i) / w_i`` over the type.
* series route: ``evaluate_at_one(milnor_poincare_polynomial(ws))``.
* ``mu_oracle``: dimension of ``S / (f_1, ..., f_r)`` counted degree by degree
  with exact ranks.

The Milnor algebra is taken in the polynomial ring.  For weighted-homogeneous
``f`` the Jacobian ideal is graded, so its colength there equals the colength
in the ring of convergent power series.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import NotHomogeneous, NotIsolated, NotPolynomial
from .grading import enumerate_monomials, infer_weight_system, is_weighted_homogeneous
from .poly import gradient
from .series import evaluate_at_one, milnor_poincare_polynomial


def mu_formula(ws):
    ws.check_degree()
    out = Fraction(1)
    for w in ws.weights:
        out *= Fraction(ws.degree - w, w)
    return out


def _check_homogeneous(f, ws):
    if f.is_zero() or not is_weighted_homogeneous(f, ws):
        raise NotHomogeneous(f"{f} is not weighted homogeneous of type ({ws})")


def _jacobian_rank(partials, ws, alpha):
    """Rank of ``(g_1..g_r) -> sum g_i f_i`` into ``S_alpha``; also returns ``dim S_alpha``."""
    target = enumerate_monomials(ws.weights, alpha)
    if not target:
        return 0, 0
    index = {m: k for k, m in enumerate(target)}
    columns = []
    for i, fi in enumerate(partials):
        if fi.is_zero():
            continue
        for m in enumerate_monomials(ws.weights, alpha - (ws.degree - ws.weights[i])):
            col = [0] * len(target)
            for e, c in fi.terms.items():
                col[index[tuple(a + b for a, b in zip(e, m))]] += c
            columns.append(col)
    if not columns:
        return 0, len(target)
    # rank of the transpose: one row per generator image
    return linalg.rank(columns, len(target)), len(target)


def milnor_algebra_dims(f, ws, bound):
    """``dim (M_f)_alpha`` for ``alpha = 0..bound``."""
    _check_homogeneous(f, ws)
    partials = gradient(f)
    dims = []
    for alpha in range(bound + 1):
        rk, n = _jacobian_rank(partials, ws, alpha)
        dims.append(n - rk)
    return dims


def finiteness_window(ws):
    """``(B, W)``: socle bound ``max(0, r d - 2 sum w)`` and window width ``max w``."""
    return max(0, ws.socle_degree()), max(ws.weights)


def _oracle(f, ws):
    b, w = finiteness_window(ws)
    dims = milnor_algebra_dims(f, ws, b + w)
    return dims, not any(dims[b + 1:])


def mu_oracle(f, ws):
    """Colength of the Jacobian ideal, certified finite.

    Dimensions are computed through degree ``B + W``.  If they vanish on the
    whole window ``(B, B + W]`` then every monomial of higher degree is a
    multiple of one in the window, so the algebra vanishes from ``B + 1`` on.
    Otherwise the singularity is not isolated.
    """
    dims, finite = _oracle(f, ws)
    if not finite:
        raise NotIsolated(f"Milnor algebra of {f} does not vanish above degree {finiteness_window(ws)[0]}", dims)
    return sum(dims)


@dataclass
class MilnorReport:
    weight_system: object
    mu_formula: Fraction
    mu_series: int = None
    mu_oracle: int = None
    per_degree_dims: list = field(default_factory=list)
    poincare: list = None
    isolated: bool = False
    consistent: bool = False
    series_identity: bool = False

    def to_json(self):
        return {
            "weights": list(self.weight_system.weights),
            "degree": self.weight_system.degree,
            "mu_formula": str(self.mu_formula),
            "mu_series": self.mu_series,
            "mu_oracle": self.mu_oracle,
            "isolated": self.isolated,
            "consistent": self.consistent,
            "dims": self.per_degree_dims,
            "poincare": None if self.poincare is None else [str(c) for c in self.poincare],
        }


def series_route(ws):
    """``(mu, poincare coefficients)`` or ``(None, None)`` if the division fails."""
    try:
        p = milnor_poincare_polynomial(ws)
    except NotPolynomial:
        return None, None
    return evaluate_at_one(p), list(p.coeffs)


def type_report(ws):
    """Report for a bare type: formula and series routes only."""
    mu_s, poincare = series_route(ws)
    return MilnorReport(ws, mu_formula(ws), mu_series=mu_s, poincare=poincare)


def full_report(f, ws=None):
    """Run all three routes on ``f`` and cross-check them.

    ``consistent`` requires an isolated singularity, agreement of the three
    values, and termwise agreement of the per-degree dimensions with the
    Poincare polynomial.
    """
    if ws is None:
        ws = infer_weight_system(f)
    report = type_report(ws)
    dims, finite = _oracle(f, ws)
    report.per_degree_dims = dims
    report.isolated = finite
    if finite:
        report.mu_oracle = sum(dims)
    if report.poincare is not None:
        padded = report.poincare + [0] * (len(dims) - len(report.poincare))
        report.series_identity = padded[: len(dims)] == dims and len(report.poincare) <= len(dims)
    report.consistent = (
        report.isolated
        and report.mu_series is not None
        and report.mu_formula == report.mu_series == report.mu_oracle
        and report.series_identity
    )
    return report

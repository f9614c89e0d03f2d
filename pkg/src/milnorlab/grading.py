"""Weight systems and the weighted grading on the polynomial ring."""

from dataclasses import dataclass
from math import gcd, lcm

from . import linalg
from .errors import (
    AmbiguousWeights,
    DegreeUnderflow,
    IndexOutOfRange,
    InputError,
    NotWeightedHomogeneous,
    VariableMismatch,
    ZeroPolynomial,
)


@dataclass(frozen=True)
class WeightSystem:
    """Positive integer weights of the variables together with a target degree.

    Instances need not be primitive; :meth:`primitive` divides out the common
    factor.  Types returned by :func:`infer_weight_system` are always primitive.
    """

    weights: tuple
    degree: int

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "degree", int(self.degree))
        if not w:
            raise InputError("a weight system needs at least one weight")
        if any(x < 1 for x in w):
            raise InputError(f"weights must be positive integers, got {w}")
        if self.degree < 1:
            raise InputError(f"degree must be a positive integer, got {self.degree}")

    @property
    def r(self):
        return len(self.weights)

    def content(self):
        return gcd(*self.weights, self.degree)

    def is_primitive(self):
        return self.content() == 1

    def primitive(self):
        g = self.content()
        return WeightSystem(tuple(x // g for x in self.weights), self.degree // g)

    def scaled(self, c):
        return WeightSystem(tuple(c * x for x in self.weights), c * self.degree)

    def permuted(self, perm):
        """Weights reordered so that new variable ``k`` is old variable ``perm[k]``."""
        return WeightSystem(tuple(self.weights[p] for p in perm), self.degree)

    def check_degree(self):
        """Raise DegreeUnderflow unless ``d >= w_i`` for every weight."""
        bad = [i for i, x in enumerate(self.weights) if x > self.degree]
        if bad:
            raise DegreeUnderflow(
                f"degree {self.degree} is smaller than weight {self.weights[bad[0]]} of variable {bad[0]}"
            )

    def socle_degree(self):
        """``r*d - 2*sum(w)``, the top degree of the Poincare polynomial."""
        return self.r * self.degree - 2 * sum(self.weights)

    def __str__(self):
        return ",".join(map(str, self.weights)) + f";{self.degree}"

    def to_json(self):
        return {"weights": list(self.weights), "degree": self.degree}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["weights"]), obj["degree"])


def parse_weight_system(text):
    """Parse ``"w1,w2,...,wr;d"``."""
    try:
        ws, d = text.split(";")
        weights = tuple(int(x) for x in ws.split(","))
        return WeightSystem(weights, int(d))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad weight system {text!r}: expected 'w1,...,wr;d'") from None


def weighted_degree(m, w):
    weights = w.weights if isinstance(w, WeightSystem) else tuple(w)
    if len(m) != len(weights):
        raise VariableMismatch(f"exponent vector of length {len(m)} against {len(weights)} weights")
    return sum(a * b for a, b in zip(m, weights))


def is_weighted_homogeneous(p, ws):
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no weighted degree")
    if p.nvars != ws.r:
        raise VariableMismatch(f"{p.nvars} variables against {ws.r} weights")
    return all(weighted_degree(e, ws) == ws.degree for e in p.terms)


def infer_weight_system(p):
    """Recover the primitive type ``(w; d)`` from the support of ``p``.

    Solves ``sum_i a_i u_i = 1`` over every support exponent ``a`` for the
    rational unknowns ``u_i = w_i / d``, then clears denominators.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot infer weights of the zero polynomial")
    support = p.support()
    missing = [v for i, v in enumerate(p.variables) if not any(e[i] for e in support)]
    if missing:
        raise AmbiguousWeights(
            len(missing), f"variables {missing} do not occur, so their weights are unconstrained"
        )
    sol = linalg.solve_affine([list(e) for e in support], [1] * len(support))
    if sol is None:
        raise NotWeightedHomogeneous(f"no weight system makes {p} homogeneous")
    u, nullity = sol
    if nullity:
        raise AmbiguousWeights(nullity)
    if any(x <= 0 for x in u):
        raise NotWeightedHomogeneous(f"the only solution has non-positive weights {[str(x) for x in u]}")
    den = lcm(*(x.denominator for x in u))
    ws = WeightSystem(tuple(int(x * den) for x in u), den).primitive()
    assert is_weighted_homogeneous(p, ws)
    return ws


def derivative_type(ws, i):
    """Type of the ``i``-th partial (0-based): same weights, degree ``d - w_i``.

    The result is deliberately left unreduced so that it stays in the ambient
    grading.
    """
    if not 0 <= i < ws.r:
        raise IndexOutOfRange(f"variable index {i} out of range for {ws.r} weights")
    if ws.degree < ws.weights[i]:
        raise DegreeUnderflow(f"degree {ws.degree} < weight {ws.weights[i]}")
    return ws.weights, ws.degree - ws.weights[i]


def enumerate_monomials(w, alpha):
    """All exponent vectors of weighted degree exactly ``alpha``, in ascending lex order."""
    weights = w.weights if isinstance(w, WeightSystem) else tuple(w)
    if alpha < 0:
        return []
    r = len(weights)
    out = []

    def rec(i, left, prefix):
        if i == r - 1:
            if left % weights[i] == 0:
                out.append(tuple(prefix) + (left // weights[i],))
            return
        for a in range(left // weights[i] + 1):
            prefix.append(a)
            rec(i + 1, left - a * weights[i], prefix)
            prefix.pop()

    rec(0, alpha, [])
    return out


def monomial_index(w, alpha):
    """Map from exponent vector to its position in :func:`enumerate_monomials`."""
    return {m: k for k, m in enumerate(enumerate_monomials(w, alpha))}

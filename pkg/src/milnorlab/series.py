"""Integer polynomials and truncated power series in one variable ``t``.

These carry the Hilbert-series side of the computation: the denumerant
``D(alpha) = dim S_alpha``, the ring series ``prod 1/(1 - t^w_i)``, shifts,
the numerator ``prod (1 - t^(d - w_i))`` in two independent forms, and the
exact quotient giving the Poincare polynomial of the Milnor algebra.
"""

import math
from itertools import combinations

from .errors import DegreeUnderflow, NotPolynomial, SubsetOverflow

LEMMA_MAX_VARIABLES = 30


class IntegerPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t^k``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntegerPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntegerPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other):
        """Long division by a divisor whose leading coefficient is +-1."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign for integer division")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        q = [0] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c:
                c *= lead
                q[k - dg] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dg + j] -= c * b
        return IntegerPolynomial(q), IntegerPolynomial(rem)

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def truncated(self, order):
        return TruncatedSeries([self[k] for k in range(order + 1)], order)

    def to_json(self):
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(c) for c in obj["coeffs"])

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_t_polynomial(self.coeffs)


def format_t_polynomial(coeffs):
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) or "0"


class TruncatedSeries:
    """Power series known through ``t^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if isinstance(other, IntegerPolynomial):
            other = other.truncated(self.order)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)}, order={self.order})"

    def to_json(self):
        return {"coeffs": [str(c) for c in self.coeffs], "order": self.order}


def denumerant(alpha, w):
    """Number of ``a >= 0`` with ``sum w_i a_i == alpha`` (coin-counting DP)."""
    if alpha < 0:
        return 0
    ways = [1] + [0] * alpha
    for wi in w:
        for k in range(wi, alpha + 1):
            ways[k] += ways[k - wi]
    return ways[alpha]


def ring_hilbert_series(w, order):
    """Hilbert series of ``S = k[x_1..x_r]`` graded by ``w``, through ``t^order``.

    Built as a product of truncated geometric series ``1 + t^w + t^2w + ...``.
    """
    s = TruncatedSeries([1], order)
    for wi in w:
        geom = [0] * (order + 1)
        for k in range(0, order + 1, wi):
            geom[k] = 1
        s = s * TruncatedSeries(geom, order)
    return s


def shift_series(s, a):
    """Series of the shifted module ``M(-a)``: multiply by ``t^a`` and re-truncate."""
    if a < 0:
        raise ValueError("shift must be non-negative")
    return TruncatedSeries([0] * a + list(s.coeffs[: max(len(s) - a, 0)]), s.order)


def _weights(ws):
    ws.check_degree()
    return ws.weights, ws.degree


def product_numerator(ws):
    """``prod_i (1 - t^(d - w_i))`` by repeated multiplication."""
    w, d = _weights(ws)
    out = IntegerPolynomial([1])
    for wi in w:
        out = out * (IntegerPolynomial([1]) - IntegerPolynomial.monomial(d - wi))
    return out


def lemma_expansion(ws):
    """The alternating subset sum ``1 + sum_k (-1)^k sum_{|T|=k} t^(k d - w_T)``.

    Enumerates every nonempty subset literally; exponent collisions add up.
    """
    w, d = _weights(ws)
    r = len(w)
    if r > LEMMA_MAX_VARIABLES:
        raise SubsetOverflow(f"refusing to enumerate 2^{r} subsets (limit r <= {LEMMA_MAX_VARIABLES})")
    coeffs = [0] * (r * d + 1)
    coeffs[0] = 1
    for k in range(1, r + 1):
        sign = -1 if k % 2 else 1
        for subset in combinations(range(r), k):
            coeffs[k * d - sum(w[i] for i in subset)] += sign
    return IntegerPolynomial(coeffs)


def ring_denominator(w):
    """``prod_i (1 - t^w_i)``."""
    out = IntegerPolynomial([1])
    for wi in w:
        out = out * (IntegerPolynomial([1]) - IntegerPolynomial.monomial(wi))
    return out


def milnor_poincare_polynomial(ws):
    """Exact quotient ``prod (1 - t^(d-w_i)) / prod (1 - t^w_i)``.

    Raises NotPolynomial when the division leaves a remainder, which happens
    exactly when no polynomial of this type can have a finite-dimensional
    Milnor algebra.
    """
    num = product_numerator(ws)
    q, rem = num.divmod(ring_denominator(ws.weights))
    if not rem.is_zero():
        raise NotPolynomial(
            f"prod(1-t^(d-w_i))/prod(1-t^w_i) is not a polynomial for type ({ws})", remainder=rem
        )
    return q


def evaluate_at_one(p):
    return sum(p.coeffs)

"""Test corpus of classical singularities and random type generators."""

from math import lcm

from milnorlab.grading import WeightSystem
from milnorlab.series import milnor_poincare_polynomial
from milnorlab.errors import NotPolynomial

# (name, polynomial, expected mu); expected values come from the Groebner
# oracle in oracles.py, frozen here.
CLASSICAL = (
    [(f"A{k}", f"x^{k + 1} + y^2", k) for k in range(1, 11)]
    + [(f"D{k}", f"x^{k - 1} + x*y^2", k) for k in range(4, 9)]
    + [("E6", "x^3 + y^4", 6), ("E7", "x^3 + x*y^3", 7), ("E8", "x^3 + y^5", 8)]
    + [
        (f"BP{a}{b}{c}", f"x^{a} + y^{b} + z^{c}", (a - 1) * (b - 1) * (c - 1))
        for a in range(2, 5)
        for b in range(2, 5)
        for c in range(2, 5)
    ]
)


def brieskorn_type(exponents):
    d = lcm(*exponents)
    return WeightSystem(tuple(d // a for a in exponents), d)


def random_divisible_types(rng, count):
    """Weight systems whose Poincare quotient is a polynomial.

    Mixes Brieskorn-Pham types, chain types ``x1^a1 x2 + x2^a2 x3 + ... + xr^ar``,
    their multiples, and random draws that happen to divide.
    """
    out = []
    while len(out) < count:
        kind = rng.randrange(3)
        if kind == 0:
            exps = [rng.randint(2, 7) for _ in range(rng.randint(1, 4))]
            ws = brieskorn_type(exps)
        elif kind == 1:
            w = [rng.randint(1, 6) for _ in range(rng.randint(1, 4))]
            ws = WeightSystem(tuple(w), max(w) + rng.randint(0, 12))
        else:
            ws = brieskorn_type([rng.randint(2, 5) for _ in range(rng.randint(1, 3))]).scaled(rng.randint(1, 3))
        try:
            milnor_poincare_polynomial(ws)
        except NotPolynomial:
            continue
        out.append(ws)
    return out

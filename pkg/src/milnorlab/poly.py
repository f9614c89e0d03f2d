"""Sparse multivariate polynomials with exact rational coefficients."""

import re
from fractions import Fraction

from .errors import IndexOutOfRange, PolySyntaxError, UnknownVariable, VariableMismatch


class Polynomial:
    """Immutable sparse polynomial over the rationals.

    ``terms`` maps exponent tuples (one entry per variable, in the order of
    ``variables``) to nonzero ``Fraction`` coefficients.  The empty map is the
    zero polynomial.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if not variables:
            raise VariableMismatch("a polynomial needs at least one variable")
        if len(set(variables)) != len(variables):
            raise VariableMismatch(f"duplicate variable names in {variables}")
        r = len(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != r or any(e < 0 for e in exps):
                raise VariableMismatch(f"bad exponent vector {exps} for variables {variables}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.variables = variables
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.variables != self.variables:
            raise VariableMismatch(f"{self.variables} vs {other.variables}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.variables, out)

    def __neg__(self):
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.variables, {e: c * other for e, c in self.terms.items()})
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.variables, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.variables!r}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def partial_derivative(p, i):
    """Formal derivative with respect to the variable at 0-based index ``i``."""
    if not 0 <= i < p.nvars:
        raise IndexOutOfRange(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p.terms.items():
        if e[i]:
            de = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[de] = c * e[i]
    return Polynomial(p.variables, out)


def gradient(p):
    return [partial_derivative(p, i) for i in range(p.nvars)]


def _format_monomial(variables, exps):
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(p):
    """Canonical text: terms by descending total degree, then descending lex."""
    if p.is_zero():
        return "0"
    order = sorted(p.terms, key=lambda e: (sum(e), e), reverse=True)
    out = []
    for k, e in enumerate(order):
        c = p.terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(p.variables, e)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(text, start, "number, variable or operator")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def fail(self, expected):
        raise PolySyntaxError(self.text, self.peek()[2], expected)

    def expect_op(self, op):
        kind, val, _ = self.peek()
        if kind != "op" or val != op:
            self.fail(repr(op))
        self.take()

    def nat(self):
        kind, val, _ = self.peek()
        if kind != "nat":
            self.fail("natural number")
        self.take()
        return int(val)

    def parse(self):
        terms = {}
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        while True:
            exps, c = self.term()
            terms[exps] = terms.get(exps, 0) + sign * c
            kind, val, _ = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                sign = -1 if val == "-" else 1
                continue
            self.fail("'+', '-' or end of input")
        return Polynomial(self.variables, terms)

    def term(self):
        kind, val, _ = self.peek()
        exps = [0] * len(self.variables)
        if kind == "nat":
            num = self.nat()
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.nat()
                if den == 0:
                    raise PolySyntaxError(self.text, self.tokens[self.k - 1][2], "nonzero denominator")
            coeff = Fraction(num, den)
            if self.peek()[:2] == ("op", "*"):
                self.take()
                self.mono(exps)
            elif self.peek()[0] == "name":
                self.mono(exps)
            return tuple(exps), coeff
        if kind == "name":
            self.mono(exps)
            return tuple(exps), Fraction(1)
        self.fail("coefficient or variable")

    def mono(self, exps):
        self.factor(exps)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                self.factor(exps)
            elif kind == "name":
                self.factor(exps)
            else:
                return

    def factor(self, exps):
        kind, name, pos = self.peek()
        if kind != "name":
            self.fail("variable")
        self.take()
        if name not in self.index:
            raise UnknownVariable(name)
        e = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            e = self.nat()
        exps[self.index[name]] += e


def variables_in(text):
    """Sorted distinct variable names occurring in polynomial text."""
    return sorted(set(re.findall(r"[A-Za-z][A-Za-z0-9]*", text)))


def parse_polynomial(text, variables=None):
    """Parse an expanded polynomial such as ``"x^3 - 1/2*x*y^2 + 4"``.

    If ``variables`` is omitted, the variables are the names found in the
    text, sorted alphabetically.
    """
    if variables is None:
        variables = variables_in(text)
        if not variables:
            variables = ["x"]
    return _Parser(text, variables).parse()

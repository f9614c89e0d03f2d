import random
from fractions import Fraction

import pytest

from milnorlab.errors import AmbiguousWeights, DegreeUnderflow, NotHomogeneous, NotIsolated
from milnorlab.grading import WeightSystem, infer_weight_system
from milnorlab.milnor import full_report, milnor_algebra_dims, mu_formula, mu_oracle, type_report
from milnorlab.poly import Polynomial, parse_polynomial
from milnorlab.series import evaluate_at_one, milnor_poincare_polynomial

from corpus import CLASSICAL, brieskorn_type
from oracles import brieskorn_dims, groebner_dims


def W(*args):
    *w, d = args
    return WeightSystem(tuple(w), d)


def test_mu_formula_examples():
    assert mu_formula(W(5, 3, 15)) == 8
    assert mu_formula(W(1, 1, 3)) == 4
    assert mu_formula(W(2, 3, 6)) == 2
    assert mu_formula(W(3, 4, 5)) == Fraction(1, 6)
    with pytest.raises(DegreeUnderflow):
        mu_formula(W(4, 1, 3))


def test_dims_e8():
    dims = milnor_algebra_dims(parse_polynomial("x^3 + y^5"), W(5, 3, 15), 22)
    assert dims == groebner_dims("x^3 + y^5", ["x", "y"], (5, 3), 22)
    assert [a for a, n in enumerate(dims) if n] == [0, 3, 5, 6, 8, 9, 11, 14]
    assert set(dims) == {0, 1}


def test_dims_morse():
    assert milnor_algebra_dims(parse_polynomial("x^2 + y^2"), W(1, 1, 2), 2) == [1, 0, 0]


def test_dims_non_isolated_never_vanish():
    dims = milnor_algebra_dims(parse_polynomial("x^2*y^2"), W(1, 1, 4), 30)
    assert dims == groebner_dims("x^2*y^2", ["x", "y"], (1, 1), 30)
    assert dims[:4] == [1, 2, 3, 2] and all(n == 2 for n in dims[3:])


def test_mu_oracle_examples():
    assert mu_oracle(parse_polynomial("x^3 + y^5"), W(5, 3, 15)) == 8
    for k in range(1, 7):
        f = parse_polynomial(f"x^{k + 1} + y^2")
        assert mu_oracle(f, infer_weight_system(f)) == k
    with pytest.raises(NotIsolated) as info:
        mu_oracle(parse_polynomial("x^2*y^2"), W(1, 1, 4))
    assert info.value.dims[:3] == [1, 2, 3]


def test_oracle_rejects_wrong_type():
    with pytest.raises(NotHomogeneous):
        mu_oracle(parse_polynomial("x^3 + y^5"), W(1, 1, 3))


@pytest.mark.parametrize("name, text, mu", CLASSICAL)
def test_classical_dims_match_groebner(name, text, mu):
    f = parse_polynomial(text)
    ws = infer_weight_system(f)
    b = max(0, ws.socle_degree()) + max(ws.weights)
    dims = milnor_algebra_dims(f, ws, b)
    assert dims == groebner_dims(text, list(f.variables), ws.weights, b)
    assert sum(dims) == mu


def test_brieskorn_family():
    for a in range(2, 6):
        for b in range(2, 6):
            for c in [None, 2, 3, 4, 5]:
                exps = [a, b] if c is None else [a, b, c]
                names = ["x", "y", "z"][: len(exps)]
                f = Polynomial(names, {tuple(e if j == i else 0 for j in range(len(exps))): 1 for i, e in enumerate(exps)})
                ws = brieskorn_type(exps)
                expected = 1
                for e in exps:
                    expected *= e - 1
                assert mu_oracle(f, ws) == expected
                bound = max(0, ws.socle_degree()) + max(ws.weights)
                assert milnor_algebra_dims(f, ws, bound) == brieskorn_dims(exps, ws.weights, bound)


def test_full_report_e8():
    rep = full_report(parse_polynomial("x^3 + y^5"))
    assert rep.weight_system == W(5, 3, 15)
    assert rep.mu_formula == rep.mu_series == rep.mu_oracle == 8
    assert rep.isolated and rep.consistent and rep.series_identity
    assert sum(rep.per_degree_dims) == 8


def test_full_report_non_isolated():
    rep = full_report(parse_polynomial("x^2*y^2"), W(1, 1, 4))
    assert rep.mu_formula == 9 and rep.mu_series == 9
    assert rep.mu_oracle is None and not rep.isolated and not rep.consistent
    obj = rep.to_json()
    assert obj["mu_formula"] == "9" and obj["mu_oracle"] is None and obj["consistent"] is False


def test_full_report_needs_unique_weights():
    with pytest.raises(AmbiguousWeights):
        full_report(parse_polynomial("x^2*y^2"))


def test_full_report_cubic_surface():
    rep = full_report(parse_polynomial("x^3 + y^3 + z^3"))
    assert rep.weight_system == W(1, 1, 1, 3)
    assert rep.mu_formula == rep.mu_series == rep.mu_oracle == 8 and rep.consistent


def test_smooth_direction_gives_zero():
    f = parse_polynomial("x + y^2")
    ws = infer_weight_system(f)
    assert ws == W(2, 1, 2)
    rep = full_report(f)
    assert rep.mu_formula == rep.mu_series == rep.mu_oracle == 0 and rep.consistent


def test_type_report_rational():
    rep = type_report(W(3, 4, 5))
    assert rep.mu_formula == Fraction(1, 6) and rep.mu_series is None
    assert rep.to_json()["mu_formula"] == "1/6"


def _permute(f, perm):
    names = [f.variables[p] for p in perm]
    terms = {tuple(e[p] for p in perm): c for e, c in f.terms.items()}
    return Polynomial(names, terms)


def _dilate(dims, c):
    out = [0] * (c * (len(dims) - 1) + 1)
    for a, n in enumerate(dims):
        out[c * a] = n
    return out


def test_scaling_and_permutation_invariance():
    rng = random.Random(17)
    cases = [(name, parse_polynomial(text)) for name, text, _ in CLASSICAL]
    for _ in range(25):
        _, f = rng.choice(cases)
        ws = infer_weight_system(f)
        c = rng.randint(2, 4)
        assert mu_formula(ws.scaled(c)) == mu_formula(ws)
        bound = max(0, ws.socle_degree()) + max(ws.weights)
        assert milnor_algebra_dims(f, ws.scaled(c), c * bound) == _dilate(milnor_algebra_dims(f, ws, bound), c)
        perm = list(range(f.nvars))
        rng.shuffle(perm)
        g, wsg = _permute(f, perm), ws.permuted(perm)
        assert mu_formula(wsg) == mu_formula(ws)
        assert evaluate_at_one(milnor_poincare_polynomial(wsg)) == evaluate_at_one(milnor_poincare_polynomial(ws))
        assert mu_oracle(g, wsg) == mu_oracle(f, ws)

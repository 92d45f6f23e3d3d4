import math
import random
from fractions import Fraction

import numpy as np
import pytest

from twobridge.invariants import (LaurentPolynomial, alexander, alexander_fox,
                                  boyer_lines_obstructs, delta2_at_1,
                                  determinant, invariant_summary, niwu_filter,
                                  normalize_alexander, seifert_matrix,
                                  signature, tau, _tridiagonal_negative_count)
from twobridge.knots import enumerate_knots, make_knot, mirror_knot
from twobridge.slopes import make_slope
from twobridge.surfaces import even_expansion, expansion

TREFOIL = {1: 1, 0: -1, -1: 1}
FIG8 = {1: -1, 0: 3, -1: -1}
FLAGSHIP = {3: -1, 2: 5, 1: -11, 0: 15, -1: -11, -2: 5, -3: -1}


def test_laurent_arithmetic():
    t = LaurentPolynomial({1: 1})
    p = (t + LaurentPolynomial({0: -1})) * (t + LaurentPolynomial({0: 1}))
    assert p == LaurentPolynomial({2: 1, 0: -1})
    assert p(2) == 3
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert p.derivative() == LaurentPolynomial({1: 2})
    assert LaurentPolynomial({2: 1, -2: 1}).is_symmetric()
    assert not LaurentPolynomial({2: 1, -2: -1}).is_symmetric()
    assert str(LaurentPolynomial({1: 1, 0: -1, -1: 1})) == "t -1 +t^-1"


def test_normalize_alexander():
    raw = LaurentPolynomial({2: 1, 1: -1, 0: 1})       # trefoil, shifted
    assert normalize_alexander(raw) == LaurentPolynomial(TREFOIL)
    raw = LaurentPolynomial({2: -1, 1: 1, 0: -1})      # and negated
    assert normalize_alexander(raw) == LaurentPolynomial(TREFOIL)
    with pytest.raises(RuntimeError):
        normalize_alexander(LaurentPolynomial({1: 1, 0: 1}))  # value 2 at t=1


def test_seifert_matrix_examples():
    assert seifert_matrix(expansion([2, 2])) == [[1, 1], [0, 1]]
    assert seifert_matrix(expansion([2, -2])) == [[1, 1], [0, -1]]
    with pytest.raises(ValueError):
        seifert_matrix((2, 3))


def test_seifert_form_determinant_identity():
    # det(V + V^T) = +-p for every knot
    for k in enumerate_knots(60):
        V = seifert_matrix(even_expansion(k))
        n = len(V)
        M = [[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]
        det = round(np.linalg.det(np.array(M, dtype=float)))
        assert abs(det) == k.p


def test_alexander_examples():
    assert alexander(make_knot(3, 1)) == LaurentPolynomial(TREFOIL)
    assert alexander(make_knot(5, 2)) == LaurentPolynomial(FIG8)
    assert alexander(make_knot(49, 19)) == LaurentPolynomial(FLAGSHIP)
    assert alexander_fox(make_knot(3, 1)) == LaurentPolynomial(TREFOIL)
    assert alexander_fox(make_knot(5, 2)) == LaurentPolynomial(FIG8)
    assert alexander_fox(make_knot(49, 19)) == LaurentPolynomial(FLAGSHIP)


def test_two_alexander_routes_agree():
    # all representatives, not only canonical ones: the Fox route works on
    # the stored q, the Seifert route on the canonical class
    for p in range(3, 61, 2):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            k = make_knot(p, q)
            assert alexander_fox(k) == alexander(k), f"routes disagree on {k}"


def test_alexander_global_properties():
    for k in enumerate_knots(120):
        poly = alexander(k)
        assert poly(1) == 1
        assert poly.is_symmetric()
        assert determinant(k) == k.p


def test_delta2_and_determinant_examples():
    assert delta2_at_1(make_knot(49, 19)) == 0
    assert determinant(make_knot(49, 19)) == 49
    assert delta2_at_1(make_knot(3, 1)) == 2


def test_signature_examples():
    assert signature(make_knot(3, 1)) == -2
    assert signature(make_knot(3, 2)) == 2
    assert signature(make_knot(5, 1)) == -4
    assert signature(make_knot(5, 2)) == 0
    assert signature(make_knot(7, 3)) == -2
    assert signature(make_knot(49, 19)) == 0
    assert tau(make_knot(49, 19)) == 0
    assert tau(make_knot(3, 1)) == 1


def test_sturm_count_against_numpy():
    random.seed(5)
    for _ in range(300):
        n = random.randint(1, 12)
        diag = [random.randint(-6, 6) for _ in range(n)]
        M = np.diag(np.array(diag, dtype=float))
        for i in range(n - 1):
            M[i, i + 1] = M[i + 1, i] = 1.0
        eig = np.linalg.eigvalsh(M)
        if min(abs(eig)) < 1e-9 or abs(np.linalg.det(M)) < 1e-6:
            continue
        assert _tridiagonal_negative_count(diag) == int((eig < 0).sum())


def test_signature_against_numpy_on_knots():
    for k in enumerate_knots(60):
        V = np.array(seifert_matrix(even_expansion(k)), dtype=float)
        eig = np.linalg.eigvalsh(V + V.T)
        assert signature(k) == int((eig > 0).sum()) - int((eig < 0).sum())


def test_signature_bound_and_mirror_behaviour():
    for k in enumerate_knots(60):
        n = len(even_expansion(k).entries)
        assert abs(signature(k)) <= n
        m = mirror_knot(k)
        assert signature(m) == -signature(k)
        assert tau(m) == -tau(k)
        assert alexander(m) == alexander(k)
        assert determinant(m) == determinant(k)


def test_niwu_filter():
    k = make_knot(49, 19)
    rep = niwu_filter(k, make_slope(10, 3), make_slope(-10, 3))
    assert rep.opposite_slopes and rep.square_condition and rep.tau_zero
    assert rep.survives
    assert (3 * 3 + 1) % 10 == 0  # 9 = -1 (mod 10)

    rep = niwu_filter(k, make_slope(5, 1), make_slope(-5, 1))
    assert not rep.square_condition

    rep = niwu_filter(k, make_slope(10, 3), make_slope(10, 7))
    assert not rep.opposite_slopes

    with pytest.raises(ValueError):
        niwu_filter(k, make_slope(10, 3), make_slope(10, 3))
    with pytest.raises(ValueError):
        niwu_filter(k, make_slope(1, 0), make_slope(10, 3))


def test_boyer_lines():
    assert not boyer_lines_obstructs(make_knot(49, 19))
    assert boyer_lines_obstructs(make_knot(3, 1))
    # figure-eight: delta2(1) = -2 != 0 on the normalized polynomial, so the
    # criterion does obstruct; both Alexander routes agree on the value
    k = make_knot(5, 2)
    assert delta2_at_1(k) == -2
    assert sum(c * e * (e - 1) for e, c in alexander_fox(k).coeffs.items()) == -2
    assert boyer_lines_obstructs(k)


def test_invariant_summary_schema():
    s = invariant_summary(make_knot(49, 19))
    assert s == {
        "alexander": {"3": -1, "2": 5, "1": -11, "0": 15,
                      "-1": -11, "-2": 5, "-3": -1},
        "delta2": 0,
        "det": 49,
        "signature": 0,
        "tau": 0,
    }

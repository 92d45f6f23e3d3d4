import copy
import json

import pytest

from twobridge.checker import check_payload
from twobridge.cli import _obstruct_payload
from twobridge.knots import make_knot, mirror_knot
from twobridge.obstruction import (ExclusionCertificate, ExclusionFailure,
                                   admits_closed_nonorientable, distinguish,
                                   exclusion_bound, upper_bound_genus)
from twobridge.slopes import make_slope

K = make_knot(49, 19)
R = make_slope(10, 3)
MR = make_slope(-10, 3)


def test_admits_closed_nonorientable():
    assert admits_closed_nonorientable(R)
    assert admits_closed_nonorientable(MR)
    assert not admits_closed_nonorientable(make_slope(7, 2))
    assert admits_closed_nonorientable(make_slope(0, 1))
    with pytest.raises(ValueError):
        admits_closed_nonorientable(make_slope(1, 0))


def test_upper_bound_flagship():
    cert = upper_bound_genus(K, MR)
    assert cert is not None
    assert cert.base.boundary_slope == make_slope(-4, 1)
    assert cert.base.genus == 4 and not cert.base.orientable
    assert cert.distance == 2 and cert.attachments == 1
    assert cert.resulting_genus == 5


def test_upper_bound_direct_cap():
    cert = upper_bound_genus(K, make_slope(-4, 1))
    assert cert.attachments == 0 and cert.resulting_genus == 4
    assert cert.base.boundary_slope == make_slope(-4, 1)


def test_upper_bound_positive_direction_needs_genus_6():
    cert = upper_bound_genus(K, R)
    assert cert is None or cert.resulting_genus >= 6
    # with the genus-6 slope-4 surface present the construction lands at 7
    assert cert is not None and cert.resulting_genus == 7


def test_exclusion_flagship():
    cert = exclusion_bound(K, R, 5)
    assert isinstance(cert, ExclusionCertificate)
    assert cert.excluded_genus_max == 5
    assert len(cert.rulings) == 8  # 3 genus-4 + 5 genus-5 candidates
    assert any("non-integral" in n for n in cert.notes)
    for r in cert.rulings:
        assert not r.slope_equals_target
        if r.surface.genus <= 4:
            assert r.distance_to_target != 2


def test_exclusion_fails_on_other_side():
    res = exclusion_bound(K, MR, 5)
    assert isinstance(res, ExclusionFailure)
    assert res.blocking is not None
    assert res.blocking.boundary_slope == make_slope(-4, 1)
    assert res.blocking.genus == 4


def test_exclusion_trivial_below_candidates():
    cert = exclusion_bound(K, R, 3)
    assert isinstance(cert, ExclusionCertificate)
    assert cert.rulings == ()


def test_exclusion_input_validation():
    with pytest.raises(ValueError):
        exclusion_bound(K, make_slope(7, 2), 5)
    with pytest.raises(ValueError):
        exclusion_bound(K, R, 0)


def test_distinguish_flagship():
    v = distinguish(K, R, MR)
    assert v.distinguished
    assert v.contains == MR and v.excludes == R
    assert v.upper.resulting_genus == 5
    assert v.exclusion.excluded_genus_max == 5


def test_distinguish_inapplicable_for_odd_numerators():
    v = distinguish(K, make_slope(7, 2), make_slope(-7, 2))
    assert not v.distinguished
    assert "method inapplicable" in v.reason


def test_distinguish_parity_split():
    v = distinguish(K, make_slope(10, 3), make_slope(7, 2))
    assert v.distinguished
    assert v.parity is not None
    assert v.contains == make_slope(10, 3)
    assert v.upper is None and v.exclusion is None


def test_distinguish_rejects_bad_pairs():
    with pytest.raises(ValueError):
        distinguish(K, R, R)
    with pytest.raises(ValueError):
        distinguish(K, make_slope(1, 0), R)


def test_distinguish_trefoil_regression():
    # no ground truth here; pinned as a regression snapshot
    v = distinguish(make_knot(3, 1), R, MR)
    assert not v.distinguished


def test_distinguish_antisymmetry():
    a = distinguish(K, R, MR)
    b = distinguish(K, MR, R)
    assert a.distinguished == b.distinguished
    assert a.contains == b.contains and a.excludes == b.excludes
    assert a.upper == b.upper and a.exclusion == b.exclusion


def test_distinguish_mirror_covariance():
    cases = [(K, R, MR), (make_knot(5, 2), make_slope(4, 1), make_slope(-4, 1)),
             (make_knot(7, 3), make_slope(2, 1), make_slope(-2, 1))]
    for k, r1, r2 in cases:
        v = distinguish(k, r1, r2)
        w = distinguish(mirror_knot(k), -r1, -r2)
        assert v.distinguished == w.distinguished


def test_exclusion_implies_no_cheaper_construction():
    # if genus <= G is excluded for s, any construction lands above G
    slopes = [make_slope(n, d) for n in (-10, -4, -2, 0, 2, 4, 10) for d in (1, 3)]
    for k in (K, make_knot(5, 2), make_knot(7, 3), make_knot(9, 5)):
        for s in slopes:
            if s.num % 2:
                continue
            for G in (1, 2, 3, 4, 5, 6):
                res = exclusion_bound(k, s, G)
                if isinstance(res, ExclusionCertificate):
                    ub = upper_bound_genus(k, s)
                    assert ub is None or ub.resulting_genus > G


def test_checker_accepts_valid_payloads():
    for k, r1, r2 in ((K, R, MR), (K, make_slope(10, 3), make_slope(7, 2)),
                      (make_knot(5, 2), make_slope(4, 1), make_slope(-4, 1)),
                      (make_knot(15, 4), make_slope(2, 1), make_slope(-2, 1))):
        payload = _obstruct_payload(k, r1, r2)
        payload = json.loads(json.dumps(payload))   # through-the-wire copy
        assert check_payload(payload) == []


def _valid_payload():
    return json.loads(json.dumps(_obstruct_payload(K, R, MR)))


def test_checker_rejects_tampering():
    base = _valid_payload()

    p = copy.deepcopy(base)
    p["verdict"]["upper_bound"]["resulting_genus"] = 4
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["verdict"]["upper_bound"]["base_surface"]["expansion"] = [2, -2, -3, 2, 2]
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["verdict"]["exclusion"]["rulings"] = p["verdict"]["exclusion"]["rulings"][1:]
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["verdict"]["exclusion"]["rulings"][0]["surface"]["slope"] = "10/3"
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["verdict"]["exclusion"]["excluded_genus_max"] = 4
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["surfaces"]["spanning"][0]["genus"] = 7
    assert check_payload(p)

    p = copy.deepcopy(base)
    p["surfaces"]["spanning"][3]["slope"] = "10/3"   # a non-orientable candidate
    assert check_payload(p)


def test_checker_parity_payload():
    payload = json.loads(json.dumps(_obstruct_payload(K, make_slope(10, 3),
                                                      make_slope(7, 2))))
    assert check_payload(payload) == []
    payload["verdict"]["parity"]["even_slope"] = "7/2"
    assert check_payload(payload)

import random

import pytest

from cicheck.ci_core import check_locally_ci, check_sci_macaulay
from cicheck.errors import CharacteristicObstruction
from cicheck.fields import GF, QQ
from cicheck.groebner import buchberger
from cicheck.kahler import kahler_different, kahler_local_ci_check
from cicheck.poly import PolyRing
from conftest import make_ring, random_zero_dim_ideal


def test_jacobian_shape_and_entries():
    R = make_ring(QQ, 2)
    rep = kahler_different([R.parse("x^2"), R.parse("y^2")])
    assert len(rep.jacobian) == 2 and len(rep.jacobian[0]) == 2
    assert [[str(e) for e in row] for row in rep.jacobian] == [
        ["2*x", "0"],
        ["0", "2*y"],
    ]
    assert rep.char_ok
    assert rep.verdict_if_applicable
    assert [str(g) for g in rep.theta_generators] == ["4*x*y"]


def test_pure_power_char_zero():
    R1 = PolyRing(QQ, ("x",), "degrevlex")
    rep = kahler_different([R1.parse("x^4")])
    assert rep.mu == 4 and rep.char_ok
    assert rep.verdict_if_applicable
    assert [str(g) for g in rep.theta_generators] == ["4*x^3"]


def test_pure_power_char_divides_mu():
    # d/dx of x^p vanishes in characteristic p, and char | mu, so the
    # different is zero but no verdict may be drawn from it
    for p in (2, 5):
        Rp = PolyRing(GF(p), ("x",), "degrevlex")
        rep = kahler_different([Rp.monomial((p,))])
        assert rep.mu == p and not rep.char_ok
        assert rep.theta_generators == []
        assert rep.as_dict()["verdict"] is None
        rep_df = kahler_different([Rp.monomial((p,))], target="degree_form")
        assert rep_df.theta_generators == []
        assert rep_df.as_dict()["verdict"] is None


def test_char_p_safe_case():
    # x^5 over F_2: mu = 5 is odd, so the criterion applies and 5*x^4 = x^4
    R2 = PolyRing(GF(2), ("x",), "degrevlex")
    rep = kahler_different([R2.parse("x^5")])
    assert rep.char_ok and rep.verdict_if_applicable
    assert [str(g) for g in rep.theta_generators] == ["x^4"]


def test_degree_form_target():
    R = make_ring(QQ, 2)
    f1 = R.parse("x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1")
    f2 = R.parse("x*y - y^5 + 2*y^4 - y^3 + 2*y^2")
    f3 = R.parse("y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y")
    rep = kahler_different([f1, f2, f3], target="degree_form")
    assert rep.char_ok
    sci = check_sci_macaulay([f1, f2, f3])
    assert rep.verdict_if_applicable == sci.verdict


def test_local_ci_check_matches_wiebe():
    rng = random.Random(53)
    checked = 0
    while checked < 30:
        gens, gb = random_zero_dim_ideal(rng, max_mu=8)
        mu = gb.dimension_as_vector_space()
        char = gb.ring.field.characteristic
        if char and mu % char == 0:
            continue
        try:
            ok, verdicts = kahler_local_ci_check(gb)
        except CharacteristicObstruction:
            # char divides a local multiplicity: criterion inapplicable
            continue
        wiebe, _ = check_locally_ci(gb)
        assert ok == wiebe
        checked += 1


def test_local_ci_check_obstruction():
    R = PolyRing(GF(2), ("x",), "degrevlex")
    with pytest.raises(CharacteristicObstruction):
        kahler_local_ci_check([R.parse("x^2")])


def test_local_ci_check_component_obstruction():
    # mu = 3 is odd, but the component at y = 1 has multiplicity 2 and its
    # different vanishes in char 2 although it is a hypersurface; the check
    # must refuse rather than report a wrong negative
    R = make_ring(GF(2), 2)
    gens = [R.parse("x + 1"), R.parse("y^3 + y")]
    ok, _ = check_locally_ci(gens)
    assert ok
    with pytest.raises(CharacteristicObstruction):
        kahler_local_ci_check(gens)


def test_local_ci_per_component_verdicts():
    R = make_ring(QQ, 2)
    gens = [R.parse("x^2 - x"), R.parse("y")]
    ok, verdicts = kahler_local_ci_check(gens)
    assert ok and len(verdicts) == 2
    assert all(v for _, v in verdicts)
    gens = [R.parse("x^2"), R.parse("x*y"), R.parse("y^2")]
    ok, verdicts = kahler_local_ci_check(gens)
    assert not ok

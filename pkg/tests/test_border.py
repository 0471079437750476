import random

import pytest

from cicheck.border import (
    OrderIdeal,
    border_basis,
    check_degree_filtered,
    check_sci_border,
    family_sci_locus,
)
from cicheck.ci_core import check_sci_macaulay
from cicheck.errors import CicheckError, UnsupportedField
from cicheck.fields import GF, QQ, FunctionField
from cicheck.groebner import buchberger, hilbert_data, ideal_equal
from cicheck.poly import PolyRing
from conftest import make_ring, random_zero_dim_ideal

FAMILY_PARAMS = ("c21", "c23", "c32", "c34", "c41", "c42", "c43", "c44")

FAMILY_GENERATORS = (
    "y^2 - (-c23*c41*c42 + c21*c42*c43 - c21*c44 + c23) - c21*x"
    " - (-c21*c42 - c41*c44 + c43)*y - c41*x*y",
    "x^2 - (-c34*c41*c42 + c32*c41*c44 - c32*c43 + c34)"
    " - (-c32*c41 - c42*c43 + c44)*x - c32*y - c42*x*y",
    "x*y^2 - (c23*c32*c41 - c21*c32*c43 + c21*c34) - c23*x"
    " - (c21*c32 + c34*c41)*y - c43*x*y",
    "x^2*y - (c21*c34*c42 - c21*c32*c44 + c23*c32)"
    " - (c21*c32 + c23*c42)*x - c34*y - c44*x*y",
)


def family_ideal():
    F = FunctionField(FAMILY_PARAMS)
    R = PolyRing(F, ("x", "y"), "degrevlex")
    return [R.parse(s) for s in FAMILY_GENERATORS]


def specialize_family(values):
    """The family generators with parameters replaced by rationals."""
    R = make_ring(QQ, 2)
    subst = dict(zip(FAMILY_PARAMS, values))
    texts = []
    for s in FAMILY_GENERATORS:
        t = s
        for name in sorted(subst, key=len, reverse=True):
            t = t.replace(name, f"({subst[name]})")
        texts.append(t)
    return [R.parse(t) for t in texts]


def test_order_ideal_structure():
    R = make_ring(QQ, 2)
    O = OrderIdeal(R, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert O.terms == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert O.border == [(0, 2), (2, 0), (1, 2), (2, 1)]
    with pytest.raises(CicheckError):
        OrderIdeal(R, [(0, 1)])
    with pytest.raises(CicheckError):
        OrderIdeal(R, [(0, 0), (1, 1)])


def test_border_basis_monomial_ideal():
    R = make_ring(QQ, 2)
    bb = border_basis([R.parse("x^2"), R.parse("y^2")])
    assert bb.order_ideal.terms == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert {str(g) for g in bb.polynomials} == {"x^2", "x^2*y", "x*y^2", "y^2"}
    assert bb.degree_filtered


def test_border_basis_reconstruction_and_support():
    rng = random.Random(41)
    for _ in range(10):
        gens, gb = random_zero_dim_ideal(rng, max_mu=8)
        bb = border_basis(gb)
        assert ideal_equal(bb.polynomials, gb)
        O = set(bb.order_ideal.terms)
        for b, g in zip(bb.order_ideal.border, bb.polynomials):
            assert gb.normal_form(g).is_zero()
            support = set(g.terms)
            assert b in support
            assert support - {b} <= O
        assert bb.degree_filtered
        ok, diag = check_degree_filtered(bb, hilbert_data(gb))
        assert ok and diag["condition_c"] and diag["condition_d"]


def test_degree_filtered_failure_diagnosed():
    # a prebasis over an O violating the Hilbert counts
    R = make_ring(QQ, 2)
    gens = [R.parse("x - y^2"), R.parse("y^3")]
    gb = buchberger(gens)
    # mu = 3 and O = {1, y, y^2} has independent residues, but its degree
    # counts (1, 1, 1) disagree with the Castelnuovo function (1, 2)
    bb = border_basis(gb, order_ideal=[(0, 0), (0, 1), (0, 2)])
    assert not bb.degree_filtered
    assert not bb.diagnostics["condition_c"]
    assert bb.diagnostics["hf_counts"] == [1, 1, 1]
    assert bb.diagnostics["castelnuovo"] == [1, 2]


def test_method_agreement_random():
    rng = random.Random(43)
    for _ in range(30):
        gens, gb = random_zero_dim_ideal(rng, max_mu=8)
        a = check_sci_macaulay(gb)
        b = check_sci_border(gb)
        assert a.verdict == b.verdict


def test_family_locus():
    fs = family_ideal()
    locus = family_sci_locus(fs)
    assert len(locus.conditions) == 1
    subset, polys = locus.conditions[0]
    assert polys == ["c41*c42 - 1"]
    assert locus.generic_fiber_only
    rep = locus.report
    assert sum(1 for m in rep.minors if m.nonzero) == 1


def test_family_explicit_order_ideal_reproduces_generators():
    fs = family_ideal()
    bb = border_basis(fs, order_ideal=[(0, 0), (0, 1), (1, 0), (1, 1)])
    assert bb.order_ideal.border == [(0, 2), (2, 0), (1, 2), (2, 1)]
    for g in bb.polynomials:
        assert any((g - f).is_zero() for f in fs)


def test_family_specialization_consistency():
    rng = random.Random(47)
    off_locus = 0
    while off_locus < 20:
        values = [rng.randint(-2, 2) for _ in range(8)]
        c41, c42 = values[4], values[5]
        if 1 - c41 * c42 == 0:
            continue
        special = specialize_family(values)
        rep = check_sci_border(special)
        assert rep.verdict, f"specialization {values} should be a strict CI"
        off_locus += 1
    # on the hypersurface: pick parameter points with c41*c42 = 1
    for c41, c42 in ((1, 1), (-1, -1)):
        values = [0, 0, 0, 0, c41, c42, 0, 0]
        special = specialize_family(values)
        rep = check_sci_border(special)
        assert not rep.verdict


def test_family_constant_with_unused_parameter():
    F = FunctionField(("c",))
    R = PolyRing(F, ("x", "y"), "degrevlex")
    locus = family_sci_locus([R.parse("x^2"), R.parse("y^2")])
    assert len(locus.conditions) == 1
    assert locus.conditions[0][1] == ["1"]


def test_family_rejects_plain_field():
    R = make_ring(QQ, 2)
    with pytest.raises(UnsupportedField):
        family_sci_locus([R.parse("x^2"), R.parse("y^2")])


def test_char_p_pure_power():
    for p in (2, 5):
        R = PolyRing(GF(p), ("x",), "degrevlex")
        rep = check_sci_border([R.monomial((p,))])
        assert rep.verdict
        assert rep.w_matrix.as_strings() == [[f"x^{p - 1}" if p > 2 else "x"]]
        assert str(rep.minors[0].residue) == (f"x^{p - 1}" if p > 2 else "x")


def test_border_gate_asymmetric():
    from cicheck.quotient import vanishing_ideal_of_points

    R = make_ring(QQ, 2)
    gens = vanishing_ideal_of_points(R, [(0, 0), (1, 0), (0, 1)])
    rep = check_sci_border(gens)
    assert not rep.verdict
    assert rep.failure_reason == "CastelnuovoAsymmetric"

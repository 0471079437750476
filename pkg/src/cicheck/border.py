"""Order ideals, border bases, degree-filtered certification, and the
border-basis route to strict complete intersections, including the
parametric family mode over Q(c_1,...,c_m).
"""

import sympy

from .errors import CicheckError, NotZeroDimensional, UnsupportedField
from .fields import FunctionField
from .groebner import (
    GroebnerBasis,
    buchberger,
    degree_form_ideal,
    hilbert_data,
)
from .ci_core import CIReport, SyzygyMatrix, fitting_minor_residues, _witnesses
from .linalg import RowReducer
from .poly import Polynomial, degree_form, split_by_variables
from .quotient import QuotientRing


class OrderIdeal:
    """A division-closed set of monomials with its border, both sorted by
    (degree, ring order)."""

    def __init__(self, ring, terms):
        key = lambda e: (sum(e), ring.ordering.key(e))
        self.ring = ring
        self.terms = sorted(terms, key=key)
        term_set = set(self.terms)
        if (0,) * ring.nvars not in term_set:
            raise CicheckError("an order ideal must contain 1")
        for e in self.terms:
            for i in range(ring.nvars):
                if e[i] > 0:
                    down = list(e)
                    down[i] -= 1
                    if tuple(down) not in term_set:
                        raise CicheckError("set is not closed under division")
        border = set()
        for e in self.terms:
            for i in range(ring.nvars):
                up = list(e)
                up[i] += 1
                up = tuple(up)
                if up not in term_set:
                    border.add(up)
        self.border = sorted(border, key=key)

    def degree_counts(self):
        counts = {}
        for e in self.terms:
            counts[sum(e)] = counts.get(sum(e), 0) + 1
        top = max(counts)
        return [counts.get(i, 0) for i in range(top + 1)]

    def __len__(self):
        return len(self.terms)


class BorderBasis:
    """Polynomials g_j = b_j - tail_j indexed by the border of O, with tails
    supported in O."""

    def __init__(self, order_ideal, polynomials, degree_filtered, diagnostics):
        self.order_ideal = order_ideal
        self.polynomials = polynomials
        self.degree_filtered = degree_filtered
        self.diagnostics = diagnostics


def _check_degree_filtered_data(order_ideal, polynomials, hd):
    """Conditions: (c) the Hilbert function counts O degree by degree and
    (d) each border term survives in the degree form of its polynomial."""
    diagnostics = {}
    counts = order_ideal.degree_counts()
    cast = list(hd.castelnuovo)
    cond_c = counts == cast
    diagnostics["hf_counts"] = counts
    diagnostics["castelnuovo"] = cast
    diagnostics["condition_c"] = cond_c
    bad = []
    for b, g in zip(order_ideal.border, polynomials):
        if b not in degree_form(g).terms:
            bad.append(b)
    cond_d = not bad
    diagnostics["condition_d"] = cond_d
    if bad:
        diagnostics["condition_d_failures"] = bad
    return cond_c and cond_d, diagnostics


def check_degree_filtered(border_basis_obj, hd):
    return _check_degree_filtered_data(
        border_basis_obj.order_ideal, border_basis_obj.polynomials, hd
    )


def border_basis(I, order_ideal=None):
    """Border basis of a 0-dimensional ideal.

    With no explicit order ideal, O is the complement of the leading-term
    ideal and g_j = b_j - NF(b_j).  An explicit O (iterable of exponent
    tuples) is admitted when its residues form a basis of the quotient; the
    tails are then solved for by linear algebra.
    """
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, "degrevlex")
    if not gb.is_zero_dimensional():
        raise NotZeroDimensional("border basis needs a 0-dimensional ideal")
    ring = gb.ring
    field = ring.field
    R = QuotientRing(gb)
    hd = hilbert_data(gb)
    if order_ideal is None:
        O = OrderIdeal(ring, R.basis)
        polynomials = []
        for b in O.border:
            mono = ring.monomial(b)
            polynomials.append(mono - gb.normal_form(mono))
    else:
        O = OrderIdeal(ring, [tuple(e) for e in order_ideal])
        if len(O) != R.mu:
            raise CicheckError(
                f"order ideal has {len(O)} terms but the quotient has dimension {R.mu}"
            )
        reducer = RowReducer(field, R.mu)
        for t in O.terms:
            if reducer.add(R.residue_vector(ring.monomial(t))) is not None:
                raise CicheckError("order ideal residues are linearly dependent")
        polynomials = []
        for b in O.border:
            coords = reducer.express(R.residue_vector(ring.monomial(b)))
            tail = ring.zero()
            for t, c in zip(O.terms, coords):
                if not field.is_zero(c):
                    tail = tail + ring.monomial(t, c)
            polynomials.append(ring.monomial(b) - tail)
    filtered, diagnostics = _check_degree_filtered_data(O, polynomials, hd)
    return BorderBasis(O, polynomials, filtered, diagnostics)


def check_sci_border(I, order_ideal=None, short_circuit=False, workers=1):
    """Strict-CI check via a degree filtered border basis.

    Builds W from the degree forms of the border polynomials and reduces the
    order-n minors modulo DF(I); the symmetry of the degree counts of O
    gates the computation as in the Macaulay route.
    """
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, "degrevlex")
    bb = border_basis(gb, order_ideal=order_ideal)
    hd = hilbert_data(gb)
    counts = bb.order_ideal.degree_counts()
    symmetric = all(counts[i] == counts[len(counts) - 1 - i] for i in range(len(counts)))
    if not symmetric:
        return CIReport(
            verdict=False,
            minors=[],
            witnesses=[],
            hilbert=hd,
            failure_reason="CastelnuovoAsymmetric",
        )
    ring = gb.ring
    df_polys = [degree_form(g) for g in bb.polynomials]
    entries = [[None] * len(df_polys) for _ in range(ring.nvars)]
    for j, h in enumerate(df_polys):
        parts = split_by_variables(h)
        for i in range(ring.nvars):
            entries[i][j] = parts[i]
    W = SyzygyMatrix(
        entries, [ring.variable(i) for i in range(ring.nvars)], list(df_polys)
    )
    _, df = degree_form_ideal(gb)
    df_gb = buchberger(df)
    minors = fitting_minor_residues(W, df_gb, short_circuit=short_circuit, workers=workers)
    witnesses = _witnesses(minors)
    return CIReport(
        verdict=bool(witnesses),
        minors=minors,
        witnesses=witnesses,
        hilbert=hd,
        failure_reason="none" if witnesses else "AllMinorsZero",
        w_matrix=W,
    )


class FamilyLocus:
    """Per-minor non-vanishing conditions in the parameters; the strict-CI
    locus (of the generic fiber analysis) is where at least one listed minor
    has some condition polynomial nonzero."""

    def __init__(self, report, conditions, parameters):
        self.report = report
        self.conditions = conditions
        self.parameters = parameters
        self.generic_fiber_only = True

    def as_dict(self):
        return {
            "parameters": list(self.parameters),
            "conditions": [
                {"columns": [j + 1 for j in subset], "nonvanishing": sorted(polys)}
                for subset, polys in self.conditions
            ],
            "generic_fiber_only": True,
        }


def _normalized_numerators(field, poly):
    """Canonical parameter-polynomial conditions from the coefficients of a
    residue: integer-primitive numerators with positive leading coefficient
    (constants collapse to "1")."""
    out = []
    for coeff in poly.terms.values():
        c = field.normalize(coeff)
        num = c.num
        if num.is_zero:
            continue
        if num.is_ground:
            out.append("1")
            continue
        _, prim = num.primitive()
        terms = sorted(prim.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        if sympy.Rational(terms[0][1]) < 0:
            prim = -prim
        out.append(field.format_param_poly(prim))
    return sorted(set(out))


def family_sci_locus(I, order_ideal=None, short_circuit=False, workers=1):
    """Strict-CI locus of a parametric family over Q(c_1,...,c_m)."""
    ring = I[0].ring if not isinstance(I, GroebnerBasis) else I.ring
    field = ring.field
    if not isinstance(field, FunctionField):
        raise UnsupportedField("family mode needs a rational-function coefficient field")
    report = check_sci_border(I, order_ideal=order_ideal, short_circuit=short_circuit, workers=workers)
    conditions = []
    for m in report.minors:
        if m.nonzero:
            conditions.append((m.column_subset, _normalized_numerators(field, m.residue)))
    return FamilyLocus(report, conditions, field.parameters)

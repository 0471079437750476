"""Primary decomposition of 0-dimensional ideals over Q and F_p.

The splitting loop factors variable minimal polynomials and, when those stop
splitting, random linear forms (seeded, so certificates are reproducible).
Components are certified primary by checking that their radical is maximal
via a primitive-element argument.
"""

import random

import sympy

from .errors import (
    DegreeCapExceeded,
    NotMaximal,
    PrimitiveElementNotFound,
    UnsupportedField,
)
from .fields import FunctionField, PrimeField, RationalField
from .groebner import GroebnerBasis, buchberger, divide_with_quotients
from .poly import LEX, Polynomial, PolyRing
from .quotient import (
    QuotientRing,
    squarefree_part,
    substitute_univariate,
    univariate_coeffs,
    univariate_from_coeffs,
)

DEFAULT_SEED = 0xC0FFEE
MAX_RETRIES = 20
QQ_FACTOR_DEGREE_CAP = 24


def _to_sympy_univariate(q, symbol):
    field = q.ring.field
    coeffs = univariate_coeffs(q)
    if isinstance(field, RationalField):
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * symbol**i
            for i, c in enumerate(coeffs)
        )
        return sympy.Poly(expr, symbol, domain="QQ")
    expr = sum(int(c) * symbol**i for i, c in enumerate(coeffs))
    return sympy.Poly(expr, symbol, modulus=field.p, symmetric=False)


def _from_sympy_univariate(ring, spoly):
    field = ring.field
    terms = {}
    for (e,), c in spoly.terms():
        if isinstance(field, RationalField):
            from fractions import Fraction

            val = field.from_fraction(Fraction(int(sympy.numer(c)), int(sympy.denom(c))))
        else:
            val = field.from_int(int(c))
        if not field.is_zero(val):
            terms[(e,)] = val
    return Polynomial(ring, terms)


def factor_univariate(q):
    """Complete factorization of a nonconstant univariate polynomial into
    monic irreducibles with multiplicities."""
    field = q.ring.field
    if isinstance(field, FunctionField):
        raise UnsupportedField("factorization over a rational-function field")
    if isinstance(field, RationalField) and q.total_degree() > QQ_FACTOR_DEGREE_CAP:
        raise DegreeCapExceeded(
            f"degree {q.total_degree()} exceeds factorization cap {QQ_FACTOR_DEGREE_CAP}"
        )
    symbol = sympy.Symbol(q.ring.variables[0])
    spoly = _to_sympy_univariate(q.monic(), symbol)
    _, factors = spoly.factor_list()
    out = [
        (_from_sympy_univariate(q.ring, f).monic(), int(mult)) for f, mult in factors
    ]
    out.sort(key=lambda fm: (fm[0].total_degree(), str(fm[0])))
    return out


def is_irreducible(q):
    factors = factor_univariate(q)
    return len(factors) == 1 and factors[0][1] == 1


def _random_linear_form(ring, rng, attempt):
    bound = 2 + attempt
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(ring.nvars)]
        if any(coeffs):
            break
    f = ring.zero()
    for i, c in enumerate(coeffs):
        if c:
            f = f + ring.variable(i).scale(ring.field.from_int(c))
    return f


def check_maximal(generators, seed=DEFAULT_SEED):
    """Decide whether P/M is a field.

    Returns (verdict, certificate).  On success the certificate holds the
    primitive linear form and its irreducible minimal polynomial of degree
    mu; on failure it names a reducible (or power) minimal polynomial.
    """
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators)
    if gb.is_unit_ideal():
        return False, {"reason": "unit ideal"}
    R = QuotientRing(gb)
    ring = gb.ring
    rng = random.Random(seed)
    candidates = [ring.variable(i) for i in range(ring.nvars)]
    for attempt in range(MAX_RETRIES):
        for ell in candidates:
            mp = R.minimal_polynomial(ell, var_name="t")
            factors = factor_univariate(mp)
            if len(factors) > 1 or factors[0][1] > 1:
                return False, {
                    "reason": "reducible minimal polynomial",
                    "element": str(ell),
                    "minimal_polynomial": str(mp),
                }
            if mp.total_degree() == R.mu:
                return True, {
                    "primitive_element": str(ell),
                    "minimal_polynomial": str(mp),
                    "mu": R.mu,
                }
        candidates = [_random_linear_form(ring, rng, attempt)]
    raise PrimitiveElementNotFound(
        f"no primitive element found in {MAX_RETRIES} attempts"
    )


class PrimaryComponent:
    """One primary component with its certified maximal radical and the
    triangular regular sequence generating that radical."""

    def __init__(self, ideal_gb, radical_gb, triangular, multiplicity, certificate):
        self.ideal_gb = ideal_gb
        self.radical_gb = radical_gb
        self.triangular = triangular
        self.multiplicity = multiplicity
        self.certificate = certificate

    def sort_key(self):
        return tuple(str(g) for g in self.ideal_gb.elements)

    def as_dict(self):
        return {
            "ideal": [str(g) for g in self.ideal_gb.elements],
            "radical": [str(g) for g in self.radical_gb.elements],
            "triangular_generators": [str(g) for g in self.triangular],
            "multiplicity": self.multiplicity,
        }


def triangular_generators(generators, seed=DEFAULT_SEED, certified=False):
    """Reduced Lex GB of a maximal ideal, reindexed so that element i has a
    pure power of variable i as leading term."""
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators)
    if not certified:
        ok, _ = check_maximal(gb, seed=seed)
        if not ok:
            raise NotMaximal("triangular generators need a maximal ideal")
    lex_gb = buchberger(gb.elements, LEX)
    n = gb.ring.nvars
    if len(lex_gb.elements) != n:
        raise NotMaximal(
            f"Lex basis has {len(lex_gb.elements)} elements, expected {n}"
        )
    slots = [None] * n
    for g in lex_gb.elements:
        e = g.leading_monomial()
        support = [i for i, k in enumerate(e) if k > 0]
        if len(support) != 1 or slots[support[0]] is not None:
            raise NotMaximal("Lex basis is not triangular")
        slots[support[0]] = g
    # keep the Lex ring so each g_i stays monic in its own leading variable
    return list(slots)


def _variable_split(gb, R):
    """Split along a reducible variable minimal polynomial; None if all are
    prime powers."""
    ring = gb.ring
    for i in range(ring.nvars):
        mp = R.minimal_polynomial(ring.variable(i), var_name="t")
        factors = factor_univariate(mp)
        if len(factors) > 1:
            return _split_ideal(gb, ring.variable(i), factors)
    return None


def _split_ideal(gb, element, factors):
    pieces = []
    for q, mult in factors:
        extra = substitute_univariate(q, element) ** mult
        pieces.append(buchberger(list(gb.elements) + [extra]))
    return pieces


def primary_decomposition(I, seed=DEFAULT_SEED):
    """Primary decomposition of a 0-dimensional ideal over Q or F_p.

    Returns PrimaryComponent objects in a deterministic order (sorted by the
    textual form of the reduced component basis).
    """
    gb = I if isinstance(I, GroebnerBasis) else buchberger(I)
    if isinstance(gb.ring.field, FunctionField):
        raise UnsupportedField("primary decomposition over a rational-function field")
    rng = random.Random(seed)
    work = [gb]
    components = []
    while work:
        current = work.pop()
        R = QuotientRing(current)
        pieces = _variable_split(current, R)
        if pieces is not None:
            work.extend(pieces)
            continue
        # all variable minimal polynomials are prime powers; compute the
        # radical candidate and certify, splitting on random forms if needed
        ring = current.ring
        extra = []
        for i in range(ring.nvars):
            mp = R.minimal_polynomial(ring.variable(i), var_name="t")
            sf = squarefree_part(mp)
            extra.append(substitute_univariate(sf, ring.variable(i)))
        radical_gb = buchberger(list(current.elements) + extra)
        split_found = False
        for attempt in range(MAX_RETRIES):
            try:
                ok, cert = check_maximal(radical_gb, seed=rng.randrange(2**30))
            except PrimitiveElementNotFound:
                ok, cert = False, None
            if ok:
                tri = triangular_generators(radical_gb, certified=True)
                components.append(
                    PrimaryComponent(
                        current,
                        radical_gb,
                        tri,
                        QuotientRing(current).mu,
                        cert,
                    )
                )
                split_found = True
                break
            # not maximal: find a splitting linear form on the component
            ell = _random_linear_form(ring, rng, attempt)
            mp = R.minimal_polynomial(ell, var_name="t")
            factors = factor_univariate(mp)
            if len(factors) > 1:
                work.extend(_split_ideal(current, ell, factors))
                split_found = True
                break
        if not split_found:
            raise PrimitiveElementNotFound(
                "could not certify component primary after retries"
            )
    components.sort(key=lambda c: c.sort_key())
    return components

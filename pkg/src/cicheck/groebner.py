"""Buchberger's algorithm with quotient tracking, normal forms, degree form
ideals, Hilbert data and ideal utilities for 0-dimensional work.

The pair selection (normal strategy: minimal lcm total degree, ties by pair
creation index) and the first-divisor reduction rule are fixed so that lift
data and printed matrices are reproducible run to run.
"""

from .errors import NotZeroDimensional, ZeroPolynomial
from .poly import LEX, Polynomial, PolyRing, TermOrdering, degree_form


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _exp_sub(e2, e1):
    return tuple(a - b for a, b in zip(e2, e1))


def _exp_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


def divide_with_quotients(f, divisors):
    """Multivariate division: f = sum(q_i * d_i) + r.

    Reducer choice is the first divisor in the given order whose leading term
    divides the current leading term; no term of r is divisible by any
    divisor's leading term.
    """
    ring = f.ring
    field = ring.field
    lts = []
    for d in divisors:
        lts.append(None if d.is_zero() else d.leading_term())
    quotients = [ring.zero() for _ in divisors]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        e, c = work.leading_term()
        for i, lt in enumerate(lts):
            if lt is not None and _divides(lt[0], e):
                qe = _exp_sub(e, lt[0])
                qc = field.div(c, lt[1])
                quotients[i] = quotients[i] + ring.monomial(qe, qc)
                work = work - divisors[i].mul_term(qe, qc)
                break
        else:
            t = ring.monomial(e, c)
            remainder = remainder + t
            work = work - t
    return quotients, remainder


def reduce_polynomial(f, divisors):
    """Just the remainder of divide_with_quotients (no quotient bookkeeping)."""
    ring = f.ring
    field = ring.field
    lts = [None if d.is_zero() else d.leading_term() for d in divisors]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        e, c = work.leading_term()
        for i, lt in enumerate(lts):
            if lt is not None and _divides(lt[0], e):
                qe = _exp_sub(e, lt[0])
                work = work - divisors[i].mul_term(qe, field.div(c, lt[1]))
                break
        else:
            t = ring.monomial(e, c)
            remainder = remainder + t
            work = work - t
    return remainder


class _Tracked:
    """A polynomial together with its expression over the original generators."""

    __slots__ = ("poly", "lift")

    def __init__(self, poly, lift):
        self.poly = poly
        self.lift = lift

    def sub_mul(self, other, exps, coeff):
        """self - coeff * x^exps * other, lift included."""
        p = self.poly - other.poly.mul_term(exps, coeff)
        lift = [a - b.mul_term(exps, coeff) for a, b in zip(self.lift, other.lift)]
        return _Tracked(p, lift)

    def scaled(self, c):
        return _Tracked(self.poly.scale(c), [a.scale(c) for a in self.lift])


def _tracked_reduce(t, basis):
    """Fully reduce a tracked polynomial against the tracked basis."""
    ring = t.poly.ring
    field = ring.field
    remainder = ring.zero()
    while not t.poly.is_zero():
        e, c = t.poly.leading_term()
        for b in basis:
            lt_e, lt_c = b.poly.leading_term()
            if _divides(lt_e, e):
                t = t.sub_mul(b, _exp_sub(e, lt_e), field.div(c, lt_c))
                break
        else:
            mono = ring.monomial(e, c)
            remainder = remainder + mono
            t = _Tracked(t.poly - mono, t.lift)
    return _Tracked(remainder, t.lift)


class GroebnerBasis:
    """Reduced Groebner basis with lift data back to the input generators.

    ``lift[k]`` is a list of polynomials (a_1,...,a_r) with
    elements[k] = sum(a_j * generators[j]).  Elements are kept in discovery
    order rather than re-sorted.
    """

    def __init__(self, ring, generators, elements, lift):
        self.ring = ring
        self.ordering = ring.ordering
        self.generators = list(generators)
        self.elements = list(elements)
        self.lift = lift

    def normal_form(self, f):
        return reduce_polynomial(self.ring.convert(f), self.elements)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0].is_constant() and not self.elements[0].is_zero()

    def leading_exponents(self):
        return [g.leading_monomial() for g in self.elements]

    def is_zero_dimensional(self):
        """Finiteness test: every variable has a pure power among the leading
        terms."""
        if self.is_unit_ideal():
            return True
        lts = self.leading_exponents()
        n = self.ring.nvars
        for i in range(n):
            if not any(e[i] > 0 and all(e[j] == 0 for j in range(n) if j != i) for e in lts):
                return False
        return True

    def staircase_monomials(self):
        """The monomials outside the leading-term ideal, grouped by degree.

        Returns a list of lists of exponent tuples; requires 0-dimensionality.
        """
        if not self.is_zero_dimensional():
            raise NotZeroDimensional("leading-term complement is infinite")
        lts = self.leading_exponents()
        n = self.ring.nvars
        by_degree = []
        current = [(0,) * n]
        while current:
            standard = sorted(
                (e for e in current if not any(_divides(lt, e) for lt in lts)),
                key=self.ring.ordering.key,
            )
            if not standard:
                break
            by_degree.append(standard)
            nxt = set()
            for e in standard:
                for i in range(n):
                    grown = list(e)
                    grown[i] += 1
                    nxt.add(tuple(grown))
            current = nxt
        return by_degree

    def dimension_as_vector_space(self):
        return sum(len(level) for level in self.staircase_monomials())


def _interreduce(tracked):
    """Minimalize and tail-reduce a tracked basis, preserving discovery order."""
    # drop elements whose LT is divisible by another surviving element's LT
    kept = []
    for i, t in enumerate(tracked):
        e = t.poly.leading_monomial()
        redundant = False
        for j, u in enumerate(tracked):
            if i == j:
                continue
            eu = u.poly.leading_monomial()
            if _divides(eu, e) and (eu != e or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(t)
    # tail reduction against the other members
    reduced = list(kept)
    for i in range(len(reduced)):
        others = [reduced[j] for j in range(len(reduced)) if j != i]
        reduced[i] = _tracked_reduce(reduced[i], others) if others else reduced[i]
    return reduced


def buchberger(generators, ordering=None):
    """Reduced Groebner basis with lift data.

    ``ordering`` overrides the generators' ring ordering when given.
    """
    ring = generators[0].ring
    if ordering is not None:
        ring = ring.with_ordering(ordering)
        generators = [ring.convert(f) for f in generators]
    field = ring.field
    r = len(generators)

    def unit_lift(j):
        return [ring.one() if k == j else ring.zero() for k in range(r)]

    basis = []
    for j, f in enumerate(generators):
        if f.is_zero():
            continue
        basis.append(_Tracked(f, unit_lift(j)))
    if not basis:
        return GroebnerBasis(ring, generators, [], [])

    pairs = []
    counter = 0

    def push_pairs(new_index):
        nonlocal counter
        for i in range(new_index):
            e1 = basis[i].poly.leading_monomial()
            e2 = basis[new_index].poly.leading_monomial()
            lcm = _exp_lcm(e1, e2)
            # product criterion: coprime leading terms give a trivial S-pair
            if all(a + b == c for a, b, c in zip(e1, e2, lcm)):
                continue
            pairs.append((sum(lcm), counter, i, new_index, lcm))
            counter += 1

    for k in range(1, len(basis)):
        push_pairs(k)

    while pairs:
        pairs.sort(key=lambda p: (p[0], p[1]))
        _, _, i, j, lcm = pairs.pop(0)
        fi, fj = basis[i], basis[j]
        ei, ci = fi.poly.leading_term()
        ej, cj = fj.poly.leading_term()
        one = field.one()
        s = _Tracked(
            fi.poly.mul_term(_exp_sub(lcm, ei), field.div(one, ci))
            - fj.poly.mul_term(_exp_sub(lcm, ej), field.div(one, cj)),
            [
                a.mul_term(_exp_sub(lcm, ei), field.div(one, ci))
                - b.mul_term(_exp_sub(lcm, ej), field.div(one, cj))
                for a, b in zip(fi.lift, fj.lift)
            ],
        )
        s = _tracked_reduce(s, basis)
        if s.poly.is_zero():
            continue
        basis.append(s)
        push_pairs(len(basis) - 1)

    # monic + interreduced, keeping discovery order
    monic = []
    for t in basis:
        lc = t.poly.leading_coeff()
        if field.is_one(lc):
            monic.append(t)
        else:
            monic.append(t.scaled(field.div(field.one(), lc)))
    reduced = _interreduce(monic)
    # tail reduction can change leading coefficients only by exact arithmetic;
    # re-normalize in case
    final = []
    for t in reduced:
        lc = t.poly.leading_coeff()
        final.append(t if field.is_one(lc) else t.scaled(field.div(field.one(), lc)))
    elements = [t.poly for t in final]
    lift = [t.lift for t in final]
    if any(g.is_constant() and not g.is_zero() for g in elements):
        idx = next(i for i, g in enumerate(elements) if g.is_constant() and not g.is_zero())
        return GroebnerBasis(ring, generators, [ring.one()], [lift[idx]])
    return GroebnerBasis(ring, generators, elements, lift)


def normal_form(f, gb):
    return gb.normal_form(f)


def degree_form_ideal(generators, ordering=None):
    """Degree forms of the reduced degree-compatible GB.

    Returns (macaulay_basis, df_generators); the former is the reduced GB
    itself and the latter generates DF(I), forming a reduced GB of it.
    """
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators, ordering)
    if not gb.ring.ordering.degree_compatible:
        raise ValueError("degree form ideal needs a degree-compatible ordering")
    macaulay = list(gb.elements)
    return macaulay, [degree_form(g) for g in macaulay]


class HilbertData:
    """Affine Hilbert function data of a 0-dimensional quotient."""

    def __init__(self, mu, hf, castelnuovo, ri, last_difference):
        self.mu = mu
        self.hf = hf
        self.castelnuovo = castelnuovo
        self.ri = ri
        self.last_difference = last_difference

    @property
    def symmetric(self):
        c = self.castelnuovo
        return all(c[i] == c[len(c) - 1 - i] for i in range(len(c)))

    def as_dict(self):
        return {
            "mu": self.mu,
            "hf": list(self.hf),
            "castelnuovo": list(self.castelnuovo),
            "regularity_index": self.ri,
            "last_difference": self.last_difference,
            "symmetric": self.symmetric,
        }

    def __repr__(self):
        return f"HilbertData(mu={self.mu}, castelnuovo={tuple(self.castelnuovo)})"


def hilbert_data(generators, ordering=None):
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators, ordering)
    if not gb.ring.ordering.degree_compatible:
        gb = buchberger(gb.elements, TermOrdering("degrevlex"))
    levels = gb.staircase_monomials()
    castelnuovo = [len(level) for level in levels]
    hf = []
    acc = 0
    for c in castelnuovo:
        acc += c
        hf.append(acc)
    mu = acc
    ri = len(castelnuovo) - 1
    return HilbertData(mu, hf, castelnuovo, ri, castelnuovo[-1] if castelnuovo else 0)


def ideal_equal(gens_i, gens_j):
    """Equality of ideals via mutual reduced-GB membership."""
    gb_i = gens_i if isinstance(gens_i, GroebnerBasis) else buchberger(gens_i)
    gb_j = gens_j if isinstance(gens_j, GroebnerBasis) else buchberger(gens_j)
    if gb_j.ring.ordering != gb_i.ring.ordering:
        gb_j = buchberger(gb_j.elements, gb_i.ring.ordering)
    if len(gb_i.elements) != len(gb_j.elements):
        return False
    return all(gb_i.contains(g) for g in gb_j.elements) and all(
        gb_j.contains(g) for g in gb_i.elements
    )


def ideal_intersect(gens_i, gens_j):
    """Generators of the intersection via tag-variable elimination."""
    ring = gens_i[0].ring
    tag_ring = ring.prepend_variables(("t_elim",), TermOrdering(ring.ordering.kind, elim=1))

    def embed(f):
        return Polynomial(tag_ring, {(0,) + e: c for e, c in f.terms.items()})

    t = tag_ring.variable(0)
    one = tag_ring.one()
    gens = [t * embed(f) for f in gens_i] + [(one - t) * embed(g) for g in gens_j]
    gb = buchberger(gens)
    out = []
    for g in gb.elements:
        if all(e[0] == 0 for e in g.terms):
            out.append(Polynomial(ring, {e[1:]: c for e, c in g.terms.items()}))
    if not out:
        return [ring.zero()]
    return out

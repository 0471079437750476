"""Linear algebra in 0-dimensional quotient rings.

Provides the degree filtered monomial basis, multiplication matrices, minimal
polynomials via Krylov iteration, Seidenberg-style radicals, and a
Buchberger-Moeller constructor for vanishing ideals of point sets.
"""

import threading

from .errors import (
    DuplicatePoint,
    NotZeroDimensional,
    UnsupportedField,
)
from .fields import FunctionField
from .groebner import GroebnerBasis, buchberger, divide_with_quotients
from .linalg import RowReducer, mat_vec
from .poly import PolyRing, Polynomial


class QuotientRing:
    """P/I for a 0-dimensional ideal, coordinatized by the monomials outside
    the leading-term ideal, sorted degree first then by the ring ordering
    (so the basis is degree filtered, with 1 first)."""

    def __init__(self, gb, dimension_cap=512):
        if not isinstance(gb, GroebnerBasis):
            gb = buchberger(gb)
        if not gb.is_zero_dimensional():
            raise NotZeroDimensional("quotient ring needs a 0-dimensional ideal")
        self.gb = gb
        self.ring = gb.ring
        self.field = gb.ring.field
        self.levels = gb.staircase_monomials()
        self.basis = [e for level in self.levels for e in level]
        if len(self.basis) > dimension_cap:
            raise NotZeroDimensional(
                f"vector space dimension {len(self.basis)} exceeds cap {dimension_cap}"
            )
        self.index = {e: i for i, e in enumerate(self.basis)}
        self.mu = len(self.basis)
        self._mult = {}
        self._lock = threading.Lock()

    def residue(self, f):
        return self.gb.normal_form(f)

    def residue_vector(self, f):
        nf = self.residue(f)
        vec = [self.field.zero()] * self.mu
        for e, c in nf.terms.items():
            vec[self.index[e]] = c
        return vec

    def from_vector(self, vec):
        terms = {}
        for e, c in zip(self.basis, vec):
            if not self.field.is_zero(c):
                terms[e] = c
        return Polynomial(self.ring, terms)

    def multiplication_matrix(self, i):
        """mu x mu matrix of multiplication by x_i; entry [r][c] is the t_r
        coordinate of x_i * t_c."""
        with self._lock:
            if i in self._mult:
                return self._mult[i]
        xi = self.ring.variable(i)
        cols = [self.residue_vector(xi * Polynomial(self.ring, {e: self.field.one()})) for e in self.basis]
        matrix = [[cols[c][r] for c in range(self.mu)] for r in range(self.mu)]
        with self._lock:
            self._mult[i] = matrix
        return matrix

    def apply_multiplication(self, f, vec):
        """Coordinates of f * v for v given in coordinates."""
        g = self.from_vector(vec)
        return self.residue_vector(f * g)

    def minimal_polynomial(self, f, var_name=None):
        """Monic least-degree univariate q with q(f) in the ideal."""
        if var_name is None:
            var_name = "t"
        out_ring = PolyRing(self.field, (var_name,), "lex")
        reducer = RowReducer(self.field, self.mu)
        power = self.ring.one()
        vec = self.residue_vector(power)
        k = 0
        while True:
            combo = reducer.add(vec)
            if combo is not None:
                # f^k = sum(combo_i * f^i) for i < k
                terms = {(k,): self.field.one()}
                for i, c in enumerate(combo[:-1]):
                    if not self.field.is_zero(c):
                        terms[(i,)] = self.field.neg(c)
                return Polynomial(out_ring, terms)
            k += 1
            power = power * f
            vec = self.residue_vector(power)


# ---------------------------------------------------------------------------
# univariate helpers


def univariate_coeffs(q):
    """Dense coefficient list (low to high) of a 1-variable polynomial."""
    if q.ring.nvars != 1:
        raise ValueError("not univariate")
    d = 0 if q.is_zero() else q.total_degree()
    out = [q.ring.field.zero()] * (d + 1)
    for e, c in q.terms.items():
        out[e[0]] = c
    return out


def univariate_from_coeffs(ring, coeffs):
    field = ring.field
    return Polynomial(
        ring, {(i,): c for i, c in enumerate(coeffs) if not field.is_zero(c)}
    )


def univariate_derivative(q):
    from .poly import partial_derivative

    return partial_derivative(q, 0)


def univariate_gcd(a, b):
    """Monic gcd of two 1-variable polynomials."""
    while not b.is_zero():
        _, r = divide_with_quotients(a, [b])
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def squarefree_part(q):
    """Monic squarefree part; handles the char-p derivative collapse by
    rewriting q = u(x^p) and recursing (coefficients of F_p are their own
    p-th roots)."""
    q = q.monic()
    if q.is_constant():
        return q
    dq = univariate_derivative(q)
    p = q.ring.field.characteristic
    if dq.is_zero():
        # every exponent is a multiple of p
        u = Polynomial(q.ring, {(e[0] // p,): c for e, c in q.terms.items()})
        return squarefree_part(u)
    g = univariate_gcd(q, dq)
    quotients, rem = divide_with_quotients(q, [g])
    assert rem.is_zero()
    result = quotients[0].monic()
    if p and univariate_derivative(result).is_zero():
        # mixed separable/inseparable parts can survive one pass
        return squarefree_part(result)
    return result


def substitute_univariate(q, value):
    """q(value) where value is a polynomial of the target ring (Horner)."""
    ring = value.ring
    coeffs = univariate_coeffs(q)
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = acc * value + ring.constant(c)
    return acc


# ---------------------------------------------------------------------------


def radical_zero_dim(generators, quotient=None):
    """Radical of a 0-dimensional ideal over a perfect base field, by adding
    the squarefree parts of the variable minimal polynomials."""
    gb = generators if isinstance(generators, GroebnerBasis) else buchberger(generators)
    if isinstance(gb.ring.field, FunctionField):
        raise UnsupportedField("radical over a rational-function field is not supported")
    R = quotient if quotient is not None else QuotientRing(gb)
    ring = gb.ring
    extra = []
    for i, name in enumerate(ring.variables):
        mp = R.minimal_polynomial(ring.variable(i), var_name=name)
        sf = squarefree_part(mp)
        extra.append(substitute_univariate(sf, ring.variable(i)))
    return buchberger(list(gb.elements) + extra).elements


def vanishing_ideal_of_points(ring, points):
    """Reduced GB of the ideal of all polynomials vanishing at the points
    (Buchberger-Moeller style linear algebra)."""
    from fractions import Fraction

    if not ring.ordering.degree_compatible:
        raise ValueError("vanishing_ideal_of_points needs a degree-compatible ordering")
    field = ring.field
    pts = []
    for pt in points:
        vec = tuple(
            field.from_fraction(Fraction(c)) if isinstance(c, (int, Fraction)) else c
            for c in pt
        )
        pts.append(vec)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if all(field.eq(a, b) for a, b in zip(pts[i], pts[j])):
                raise DuplicatePoint(f"points {i} and {j} coincide")
    n = ring.nvars
    npts = len(pts)

    def evaluate(e):
        out = []
        for pt in pts:
            v = field.one()
            for c, k in zip(pt, e):
                for _ in range(k):
                    v = field.mul(v, c)
            out.append(v)
        return out

    reducer = RowReducer(field, npts)
    processed = []
    generators = []
    lt_list = []
    key = ring.ordering.key
    degree = 0
    candidates = [(0,) * n]
    while candidates:
        candidates.sort(key=key)
        next_standard = []
        for e in candidates:
            if any(all(a <= b for a, b in zip(lt, e)) for lt in lt_list):
                continue
            combo = reducer.add(evaluate(e))
            if combo is None:
                processed.append(e)
                next_standard.append(e)
            else:
                terms = {e: field.one()}
                for t, c in zip(processed, combo[:-1]):
                    if not field.is_zero(c):
                        terms[t] = field.neg(c)
                generators.append(Polynomial(ring, terms))
                lt_list.append(e)
                processed.append(e)
        degree += 1
        grown = set()
        for e in next_standard:
            for i in range(n):
                g = list(e)
                g[i] += 1
                grown.add(tuple(g))
        candidates = [e for e in grown if sum(e) == degree]
    return generators

import random
from fractions import Fraction

import pytest

from cicheck.fields import GF, QQ
from cicheck.groebner import buchberger
from cicheck.poly import PolyRing

VARIABLE_NAMES = ("x", "y", "z")


def make_ring(field, nvars, ordering="degrevlex"):
    return PolyRing(field, VARIABLE_NAMES[:nvars], ordering)


def random_polynomial(ring, rng, max_degree=3, max_terms=4, nonzero=True):
    field = ring.field
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * ring.nvars
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            exps[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-4, 4)
        if c == 0:
            continue
        terms[tuple(exps)] = c
    f = ring.zero()
    for e, c in terms.items():
        f = f + ring.monomial(e, field.from_int(c))
    if nonzero and f.is_zero():
        return random_polynomial(ring, rng, max_degree, max_terms, nonzero)
    return f


def random_univariate(ring, var_index, rng, degree):
    """Monic univariate polynomial in one ring variable, random lower terms."""
    field = ring.field
    exps = [0] * ring.nvars
    exps[var_index] = degree
    f = ring.monomial(tuple(exps))
    for d in range(degree):
        c = rng.randint(-3, 3)
        if c:
            e = [0] * ring.nvars
            e[var_index] = d
            f = f + ring.monomial(tuple(e), field.from_int(c))
    return f


def random_zero_dim_ideal(rng, max_mu=12, allow_fp=True):
    """A random 0-dimensional ideal with controlled vector space dimension.

    Univariate generators per variable guarantee 0-dimensionality; extra
    random elements only shrink the quotient.
    """
    field = rng.choice([QQ, GF(5), GF(7), GF(2)]) if allow_fp else QQ
    nvars = rng.choice((1, 1, 2, 2, 2, 3))
    ring = make_ring(field, nvars)
    degrees = []
    budget = max_mu
    for i in range(nvars):
        cap = max(1, budget if nvars == 1 else int(budget ** (1 / (nvars - i))))
        d = rng.randint(1, min(4, max(1, cap)))
        degrees.append(d)
        budget = max(1, budget // d)
    gens = [random_univariate(ring, i, rng, degrees[i]) for i in range(nvars)]
    for _ in range(rng.randint(0, 2)):
        gens.append(random_polynomial(ring, rng, max_degree=2))
    gb = buchberger(gens)
    if gb.is_unit_ideal():
        return random_zero_dim_ideal(rng, max_mu, allow_fp)
    return gens, gb


@pytest.fixture(scope="session")
def corpus():
    """Deterministic corpus of random 0-dimensional ideals (n <= 3, mu <= 12)."""
    rng = random.Random(20240817)
    out = []
    while len(out) < 210:
        gens, gb = random_zero_dim_ideal(rng)
        if gb.dimension_as_vector_space() <= 12:
            out.append((gens, gb))
    return out


# ---------------------------------------------------------------------------
# independent oracles


def brute_force_dimension(gens, max_degree=10):
    """dim_K(P/I) by linear algebra on monomials of bounded degree, with no
    Groebner machinery: quotient dimension at degree d is
    #monomials(<= d) - rank{m * f : deg(m f) <= d}; it stabilizes."""
    from cicheck.linalg import RowReducer

    ring = gens[0].ring
    field = ring.field

    def monomials_up_to(d):
        out = [()]
        levels = [[(0,) * ring.nvars]]
        for _ in range(d):
            nxt = set()
            for e in levels[-1]:
                for i in range(ring.nvars):
                    g = list(e)
                    g[i] += 1
                    nxt.add(tuple(g))
            levels.append(sorted(nxt))
        flat = [e for level in levels for e in level]
        return flat

    prev = None
    for d in range(2, max_degree + 1):
        monos = monomials_up_to(d)
        index = {e: i for i, e in enumerate(monos)}
        reducer = RowReducer(field, len(monos))
        rank = 0
        for f in gens:
            if f.is_zero():
                continue
            fdeg = f.total_degree()
            for m in monos:
                if sum(m) + fdeg > d:
                    continue
                shifted = f.mul_term(m, field.one())
                vec = [field.zero()] * len(monos)
                for e, c in shifted.terms.items():
                    vec[index[e]] = c
                if reducer.add(vec) is None:
                    rank += 1
        dim = len(monos) - rank
        if prev is not None and dim == prev:
            return dim
        prev = dim
    return prev


def bareiss_determinant(matrix):
    """Fraction-free determinant oracle for polynomial matrices.

    Exact single-divisor division is used for the Bareiss quotients (the
    divisions are exact by construction).
    """
    from cicheck.groebner import divide_with_quotients

    n = len(matrix)
    if n == 0:
        return None
    ring = matrix[0][0].ring
    a = [row[:] for row in matrix]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ring.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                quotients, rem = divide_with_quotients(num, [prev]) if not num.is_zero() else ([ring.zero()], ring.zero())
                assert rem.is_zero()
                a[i][j] = quotients[0]
            a[i][k] = ring.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det

"""Multivariate polynomials over an exact field, with term orderings.

A ring fixes the coefficient field, the variable names (precedence
x1 > x2 > ... > xn follows the declaration order) and a term ordering.
Polynomials are immutable once built; the term dict is never mutated after
construction.
"""

from fractions import Fraction

from .errors import (
    ConstantPolynomial,
    ExponentOverflow,
    FieldMismatch,
    NotHomogeneous,
    ParseError,
    ZeroPolynomial,
)

MAX_EXPONENT = 2**16 - 1

LEX = "lex"
DEGLEX = "deglex"
DEGREVLEX = "degrevlex"

ORDERING_NAMES = (LEX, DEGLEX, DEGREVLEX)


class TermOrdering:
    """Total order on power products.  ``elim`` > 0 marks a block ordering
    that compares the first ``elim`` exponents lexicographically before the
    base ordering on the remaining ones (used for elimination)."""

    def __init__(self, kind, elim=0):
        if kind not in ORDERING_NAMES:
            raise ParseError(f"unknown term ordering {kind!r}")
        self.kind = kind
        self.elim = elim

    @property
    def degree_compatible(self):
        return self.elim == 0 and self.kind in (DEGLEX, DEGREVLEX)

    def key(self, e):
        if self.elim:
            return (e[: self.elim], self._base_key(e[self.elim :]))
        return self._base_key(e)

    def _base_key(self, e):
        if self.kind == LEX:
            return e
        if self.kind == DEGLEX:
            return (sum(e), e)
        return (sum(e), tuple(-x for x in reversed(e)))

    def __eq__(self, other):
        return (
            isinstance(other, TermOrdering)
            and other.kind == self.kind
            and other.elim == self.elim
        )

    def __hash__(self):
        return hash((self.kind, self.elim))

    def __repr__(self):
        return self.kind if not self.elim else f"elim({self.elim})+{self.kind}"


class PolyRing:
    def __init__(self, field, variables, ordering):
        if isinstance(ordering, str):
            ordering = TermOrdering(ordering)
        self.field = field
        self.variables = tuple(variables)
        self.ordering = ordering
        self.nvars = len(self.variables)

    # -- constructors -------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(self.field.one())

    def constant(self, c):
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def from_int(self, n):
        return self.constant(self.field.from_int(n))

    def variable(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one()})

    def var_by_name(self, name):
        return self.variable(self.variables.index(name))

    def monomial(self, exps, coeff=None):
        coeff = self.field.one() if coeff is None else coeff
        if self.field.is_zero(coeff):
            return self.zero()
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text):
        return parse_polynomial(self, text)

    # -- derived rings ------------------------------------------------

    def with_ordering(self, ordering):
        if isinstance(ordering, str):
            ordering = TermOrdering(ordering)
        if ordering == self.ordering:
            return self
        return PolyRing(self.field, self.variables, ordering)

    def append_variable(self, name):
        return PolyRing(self.field, self.variables + (name,), self.ordering)

    def prepend_variables(self, names, ordering):
        return PolyRing(self.field, tuple(names) + self.variables, ordering)

    def convert(self, f):
        """Re-ring a polynomial from a ring with the same field/variables."""
        if f.ring is self or f.ring == self:
            return Polynomial(self, dict(f.terms))
        if f.ring.field != self.field or f.ring.variables != self.variables:
            raise FieldMismatch("polynomial belongs to an incompatible ring")
        return Polynomial(self, dict(f.terms))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
            and other.ordering == self.ordering
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.ordering))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}] {self.ordering}"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self):
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def sorted_terms(self):
        """Terms as (exponent, coeff) pairs, decreasing in the ring order."""
        key = self.ring.ordering.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        key = self.ring.ordering.key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def constant_coeff(self):
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, self.ring.field.zero())

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading_coeff()
        if self.ring.field.is_one(lc):
            return self
        return self.scale(self.ring.field.div(self.ring.field.one(), lc))

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise FieldMismatch("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        field = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = field.add(terms[e], c)
                if field.is_zero(s):
                    del terms[e]
                else:
                    terms[e] = s
            else:
                terms[e] = c
        return Polynomial(self.ring, terms)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        field = self.ring.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > MAX_EXPONENT for x in e):
                    raise ExponentOverflow(f"exponent overflow in product: {e}")
                c = field.mul(c1, c2)
                if e in terms:
                    c = field.add(terms[e], c)
                if field.is_zero(c):
                    terms.pop(e, None)
                else:
                    terms[e] = c
        return Polynomial(self.ring, terms)

    def scale(self, c):
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {e: field.mul(coeff, c) for e, coeff in self.terms.items()})

    def mul_term(self, exps, coeff):
        """Multiply by a single term coeff * x^exps."""
        field = self.ring.field
        if field.is_zero(coeff):
            return self.ring.zero()
        terms = {}
        for e, c in self.terms.items():
            ne = tuple(a + b for a, b in zip(e, exps))
            if any(x > MAX_EXPONENT for x in ne):
                raise ExponentOverflow(f"exponent overflow in product: {ne}")
            terms[ne] = field.mul(c, coeff)
        return Polynomial(self.ring, terms)

    def __pow__(self, n):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring.field != other.ring.field or self.ring.variables != other.ring.variables:
            return False
        if set(self.terms) != set(other.terms):
            return False
        field = self.ring.field
        return all(field.eq(c, other.terms[e]) for e, c in self.terms.items())

    def __hash__(self):
        # coefficient values are not reliably hashable (RatFunc); hash on support
        return hash((self.ring.variables, frozenset(self.terms)))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


# ---------------------------------------------------------------------------
# structural operations


def degree_form(f):
    """The homogeneous component of highest total degree."""
    if f.is_zero():
        raise ZeroPolynomial("degree form of the zero polynomial")
    d = f.total_degree()
    return Polynomial(f.ring, {e: c for e, c in f.terms.items() if sum(e) == d})


def is_homogeneous(f):
    degrees = {sum(e) for e in f.terms}
    return len(degrees) <= 1


def homogenize(f, new_var_name="x0"):
    """Homogenize with a fresh variable appended to the ring."""
    if f.is_zero():
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    ring = f.ring.append_variable(new_var_name)
    d = f.total_degree()
    terms = {e + (d - sum(e),): c for e, c in f.terms.items()}
    return Polynomial(ring, terms)


def dehomogenize(f):
    """Substitute 1 for the last variable, dropping it from the ring."""
    ring = PolyRing(f.ring.field, f.ring.variables[:-1], f.ring.ordering)
    field = ring.field
    terms = {}
    for e, c in f.terms.items():
        ne = e[:-1]
        if ne in terms:
            c = field.add(terms[ne], c)
        if field.is_zero(c):
            terms.pop(ne, None)
        else:
            terms[ne] = c
    return Polynomial(ring, terms)


def partial_derivative(f, i):
    """Formal partial derivative with respect to the i-th variable (0-based)."""
    field = f.ring.field
    terms = {}
    for e, c in f.terms.items():
        if e[i] == 0:
            continue
        nc = field.mul(c, field.from_int(e[i]))
        if field.is_zero(nc):
            continue
        ne = list(e)
        ne[i] -= 1
        terms[tuple(ne)] = nc
    return Polynomial(f.ring, terms)


def split_by_variables(h):
    """Write a homogeneous h of degree >= 1 as sum(h_i * x_i).

    Each term goes to the smallest variable index dividing it, so the result
    is deterministic.
    """
    if h.is_zero() or not is_homogeneous(h):
        raise NotHomogeneous("split_by_variables needs a nonzero homogeneous input")
    if h.total_degree() < 1:
        raise ConstantPolynomial("cannot split a constant")
    ring = h.ring
    parts = [dict() for _ in range(ring.nvars)]
    for e, c in h.terms.items():
        i = next(k for k, x in enumerate(e) if x > 0)
        ne = list(e)
        ne[i] -= 1
        parts[i][tuple(ne)] = c
    return [Polynomial(ring, p) for p in parts]


# ---------------------------------------------------------------------------
# printing


def format_monomial(ring, e):
    factors = []
    for name, k in zip(ring.variables, e):
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append(f"{name}^{k}")
    return "*".join(factors)


def format_polynomial(f):
    if f.is_zero():
        return "0"
    field = f.ring.field
    pieces = []
    for e, c in f.sorted_terms():
        sign, abs_text = field.sign_split(c)
        mono = format_monomial(f.ring, e)
        if not mono:
            body = abs_text
        elif abs_text == "1":
            body = mono
        else:
            body = f"{abs_text}*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign < 0 else "") + body
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


# ---------------------------------------------------------------------------
# parsing


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.index = 0

    def _scan(self):
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("name", text[i:j], i))
                i = j
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("eof", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.index += 1
        return tok


def parse_polynomial(ring, text):
    """Parse the polynomial text grammar: +, -, *, /, ^, parentheses,
    integer and a/b literals, ring variables and (for function fields)
    parameter names."""
    toks = _Tokenizer(text)
    result = _parse_expr(ring, toks)
    tok = toks.peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
    return result


def _parse_expr(ring, toks):
    negate = False
    tok = toks.peek()
    if tok[0] in ("+", "-"):
        toks.next()
        negate = tok[0] == "-"
    acc = _parse_term(ring, toks)
    if negate:
        acc = -acc
    while True:
        tok = toks.peek()
        if tok[0] == "+":
            toks.next()
            acc = acc + _parse_term(ring, toks)
        elif tok[0] == "-":
            toks.next()
            acc = acc - _parse_term(ring, toks)
        else:
            return acc


def _parse_term(ring, toks):
    acc = _parse_factor(ring, toks)
    while True:
        tok = toks.peek()
        if tok[0] == "*":
            toks.next()
            acc = acc * _parse_factor(ring, toks)
        elif tok[0] == "/":
            toks.next()
            divisor = _parse_factor(ring, toks)
            if divisor.is_zero():
                raise ParseError("division by zero", tok[2])
            if not divisor.is_constant():
                raise ParseError("division by a non-constant polynomial", tok[2])
            inv = ring.field.div(ring.field.one(), divisor.constant_coeff())
            acc = acc.scale(inv)
        else:
            return acc


def _parse_factor(ring, toks):
    base = _parse_base(ring, toks)
    tok = toks.peek()
    if tok[0] == "^":
        toks.next()
        exp_tok = toks.next()
        if exp_tok[0] != "int":
            raise ParseError("expected an integer exponent", exp_tok[2])
        return base ** int(exp_tok[1])
    return base


def _parse_base(ring, toks):
    tok = toks.next()
    if tok[0] == "int":
        return ring.from_int(int(tok[1]))
    if tok[0] == "name":
        name = tok[1]
        if name in ring.variables:
            return ring.var_by_name(name)
        field = ring.field
        if hasattr(field, "from_parameter") and name in field.parameters:
            return ring.constant(field.from_parameter(name))
        raise ParseError(f"unknown variable {name!r}", tok[2])
    if tok[0] == "(":
        inner = _parse_expr(ring, toks)
        close = toks.next()
        if close[0] != ")":
            raise ParseError("expected ')'", close[2])
        return inner
    if tok[0] == "-":
        return -_parse_base(ring, toks)
    raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def validate_sorted(f):
    """Debug check: term dict has no zero coefficients and sorted_terms is
    strictly decreasing."""
    field = f.ring.field
    assert all(not field.is_zero(c) for c in f.terms.values())
    keys = [f.ring.ordering.key(e) for e, _ in f.sorted_terms()]
    assert all(a > b for a, b in zip(keys, keys[1:]))
    return True

"""Exact coefficient arithmetic for Q, F_p and rational-function fields Q(c1,...,cm).

Elements are plain values: ``fractions.Fraction`` for Q, ints in ``[0, p)``
for F_p, and :class:`RatFunc` for a rational-function field.  All arithmetic
is mediated by the field object, which keeps the element representations
lightweight.
"""

from fractions import Fraction

import sympy

from .errors import DivisionByZero, FieldMismatch, UnsupportedField

# Rational-function elements above this many monomials get gcd-normalized
# eagerly; below it they stay lazily normalized.
NORMALIZE_TERM_THRESHOLD = 64

_MAX_PRIME = 2**31


def _is_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin, valid for p < 3,215,031,751
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface of the three supported coefficient fields."""

    characteristic = 0

    def zero(self):
        raise NotImplementedError

    def one(self):
        return self.from_int(1)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_one(self, a):
        return self.eq(a, self.one())

    def normalize(self, a):
        return a

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))


class RationalField(Field):
    characteristic = 0

    def zero(self):
        return Fraction(0)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, fr):
        return Fraction(fr)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def format(self, a):
        return str(a)

    def sign_split(self, a):
        """Return (sign, abs-string) used by the polynomial printer."""
        if a < 0:
            return -1, str(-a)
        return 1, str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p):
        if p >= _MAX_PRIME:
            raise UnsupportedField(f"modulus {p} too large (must be < 2^31)")
        if not _is_prime(p):
            raise UnsupportedField(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p

    def zero(self):
        return 0

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, fr):
        return self.div(fr.numerator % self.p, fr.denominator % self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def format(self, a):
        return str(a % self.p)

    def sign_split(self, a):
        return 1, str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class RatFunc:
    """A fraction num/den of multivariate polynomials in the field parameters.

    Kept lazily normalized: arithmetic only multiplies/adds the sympy
    polynomials, and gcd cancellation runs when the term count grows past
    NORMALIZE_TERM_THRESHOLD or when a canonical form is requested.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def term_count(self):
        return len(self.num.terms()) + len(self.den.terms())


class FunctionField(Field):
    characteristic = 0

    def __init__(self, parameters):
        if not parameters:
            raise UnsupportedField("function field needs at least one parameter")
        self.parameters = tuple(parameters)
        self.symbols = tuple(sympy.Symbol(name) for name in self.parameters)

    def _poly(self, expr):
        return sympy.Poly(expr, *self.symbols, domain="QQ")

    def _make(self, num, den):
        if den.is_zero:
            raise DivisionByZero("zero denominator in rational function")
        el = RatFunc(num, den)
        if el.term_count() > NORMALIZE_TERM_THRESHOLD:
            el = self.normalize(el)
        return el

    def zero(self):
        return RatFunc(self._poly(0), self._poly(1))

    def from_int(self, n):
        return RatFunc(self._poly(n), self._poly(1))

    def from_fraction(self, fr):
        return RatFunc(self._poly(sympy.Rational(fr.numerator, fr.denominator)), self._poly(1))

    def from_parameter(self, name):
        if name not in self.parameters:
            raise FieldMismatch(f"unknown parameter {name}")
        return RatFunc(self._poly(self.symbols[self.parameters.index(name)]), self._poly(1))

    def add(self, a, b):
        if a.den == b.den:
            return self._make(a.num + b.num, a.den)
        return self._make(a.num * b.den + b.num * a.den, a.den * b.den)

    def neg(self, a):
        return RatFunc(-a.num, a.den)

    def mul(self, a, b):
        return self._make(a.num * b.num, a.den * b.den)

    def div(self, a, b):
        if b.num.is_zero:
            raise DivisionByZero("division by zero in function field")
        return self._make(a.num * b.den, a.den * b.num)

    def is_zero(self, a):
        return a.num.is_zero

    def eq(self, a, b):
        # cross multiplication; no normalization needed
        return (a.num * b.den - b.num * a.den).is_zero

    def normalize(self, a):
        """Cancel the gcd and scale so the denominator is primitive over Z
        with positive leading coefficient (rational content folded into the
        numerator)."""
        if a.num.is_zero:
            return RatFunc(self._poly(0), self._poly(1))
        num, den = a.num, a.den
        g = num.gcd(den)
        if not g.is_one:
            num = num.quo(g)
            den = den.quo(g)
        content, den_prim = den.primitive()
        if content != 1:
            num = num.mul_ground(sympy.Rational(1, 1) / content)
        if den_prim.LC() < 0:
            den_prim = -den_prim
            num = -num
        return RatFunc(num, den_prim)

    def format_param_poly(self, poly):
        """Deterministic text form of a parameter polynomial: terms sorted by
        (total degree, exponents) descending, '^' powers, '*' products."""
        terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        if not terms:
            return "0"
        parts = []
        for exps, coeff in terms:
            factors = []
            for sym, e in zip(self.parameters, exps):
                if e == 1:
                    factors.append(sym)
                elif e > 1:
                    factors.append(f"{sym}^{e}")
            c = sympy.Rational(coeff)
            abs_c = abs(c)
            if not factors:
                body = str(abs_c)
            elif abs_c == 1:
                body = "*".join(factors)
            else:
                body = str(abs_c) + "*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def format(self, a):
        a = self.normalize(a)
        num_text = self.format_param_poly(a.num)
        if a.den.is_one:
            return num_text
        return f"({num_text})/({self.format_param_poly(a.den)})"

    def sign_split(self, a):
        a = self.normalize(a)
        if a.den.is_one and a.num.is_ground:
            c = sympy.Rational(a.num.LC()) if not a.num.is_zero else sympy.Rational(0)
            if c < 0:
                return -1, str(-c)
            return 1, str(c)
        if a.den.is_one and len(a.num.terms()) == 1:
            (exps, coeff), = a.num.terms()
            c = sympy.Rational(coeff)
            sign = -1 if c < 0 else 1
            mono = RatFunc(a.num.mul_ground(sign), a.den)
            return sign, self.format_param_poly(mono.num)
        return 1, f"({self.format(a)})"

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.parameters == self.parameters

    def __hash__(self):
        return hash(("FF", self.parameters))

    def __repr__(self):
        return "Q(" + ",".join(self.parameters) + ")"


QQ = RationalField()


def GF(p):
    return PrimeField(p)

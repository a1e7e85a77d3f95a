"""Exact scalars: rationals and rational functions in named parameters.

A Scalar is a quotient num/den of polynomials with rational coefficients in
finitely many commuting parameters (symbols like "a", "h", "A").  Scalars are
kept in a canonical form so that equality is plain structural equality:

  * num and den have integer coefficients,
  * the integer contents of num and den are coprime,
  * gcd(num, den) = 1 as polynomials,
  * the grlex-leading coefficient of den is positive,
  * zero is 0/1.

The parameter list of each polynomial is sorted by name and pruned to the
parameters that actually occur.  Term order is graded lexicographic on the
sorted parameter list; rendering lists terms in descending order.

Plain rationals are handled by fractions.Fraction; a Scalar with no
parameters wraps one exactly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import (
    DivisionByZero,
    ParseError,
    PoleAtSpecialization,
    UnboundParameter,
    ZeroDenominator,
)

Rational = Fraction

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _grlex_key(exps):
    return (sum(exps), exps)


def _prune(params, terms):
    # drop zero coefficients, then drop parameters used by no term
    terms = {e: c for e, c in terms.items() if c}
    if not terms:
        return (), {}
    used = [i for i in range(len(params)) if any(e[i] for e in terms)]
    if len(used) == len(params):
        return tuple(params), dict(terms)
    kept = tuple(params[i] for i in used)
    out = {}
    for e, c in terms.items():
        out[tuple(e[i] for i in used)] = c
    return kept, out


class ParamPolynomial:
    """Sparse polynomial over Q in a sorted tuple of named parameters.

    terms maps exponent tuples (aligned with params) to nonzero Fractions.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("params", "terms")

    def __init__(self, params, terms):
        self.params = params
        self.terms = terms

    @classmethod
    def from_terms(cls, params, terms):
        params = tuple(params)
        if sorted(set(params)) != list(params):
            raise ValueError("parameters must be sorted and distinct")
        for name in params:
            if not _NAME_RE.match(name):
                raise ValueError("bad parameter name: %r" % (name,))
        clean = {}
        for e, c in terms.items():
            e = tuple(int(v) for v in e)
            if len(e) != len(params) or any(v < 0 for v in e):
                raise ValueError("bad exponent tuple %r" % (e,))
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        return cls(*_prune(params, clean))

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        if not value:
            return cls((), {})
        return cls((), {(): value})

    @classmethod
    def symbol(cls, name):
        if not _NAME_RE.match(name):
            raise ValueError("bad parameter name: %r" % (name,))
        return cls((name,), {(1,): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.params

    def constant_value(self):
        if self.params:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ParamPolynomial):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def __neg__(self):
        return ParamPolynomial(self.params, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        params, ta, tb = _unify(self, other)
        out = dict(ta)
        for e, c in tb.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ParamPolynomial(*_prune(params, out))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPolynomial.constant(other)
        if self.is_zero() or other.is_zero():
            return ParamPolynomial((), {})
        params, ta, tb = _unify(self, other)
        out = {}
        for ea, ca in ta.items():
            for eb, cb in tb.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, Fraction(0)) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return ParamPolynomial(*_prune(params, out))

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ParamPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, assignment):
        missing = [p for p in self.params if p not in assignment]
        if missing:
            raise UnboundParameter("unbound parameters: %s" % ", ".join(missing))
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for name, k in zip(self.params, e):
                if k:
                    v *= Fraction(assignment[name]) ** k
            total += v
        return total

    def __str__(self):
        return polynomial_to_string(self)

    def __repr__(self):
        return "ParamPolynomial(%s)" % polynomial_to_string(self)


def _unify(a, b):
    if a.params == b.params:
        return a.params, a.terms, b.terms
    params = tuple(sorted(set(a.params) | set(b.params)))
    return params, _embed(a, params), _embed(b, params)


def _embed(p, params):
    pos = {name: i for i, name in enumerate(params)}
    idx = [pos[name] for name in p.params]
    n = len(params)
    out = {}
    for e, c in p.terms.items():
        ne = [0] * n
        for i, v in zip(idx, e):
            ne[i] = v
        out[tuple(ne)] = c
    return out


_ZERO_POLY = ParamPolynomial((), {})
_ONE_POLY = ParamPolynomial((), {(): Fraction(1)})


def _is_one(p):
    return not p.params and p.terms == {(): Fraction(1)}


def _content_primitive(p):
    """Split nonzero p as c * prim with c a positive rational and prim an
    integer-coefficient polynomial of content 1 (sign kept in prim)."""
    g = 0
    l = 1
    for c in p.terms.values():
        g = math.gcd(g, abs(c.numerator))
        l = math.lcm(l, c.denominator)
    c = Fraction(g, l)
    prim = ParamPolynomial(p.params, {e: v / c for e, v in p.terms.items()})
    return c, prim


def _lead_sign(p):
    _, c = p.leading_term()
    return 1 if c > 0 else -1


def _positive_lead(p):
    if p.is_zero():
        return p
    return p if _lead_sign(p) > 0 else -p


def _exact_div(p, q):
    """Exact multivariate division p / q (raises ArithmeticError if inexact)."""
    if p.is_zero():
        return _ZERO_POLY
    params, tp, tq = _unify(p, q)
    eq = max(tq, key=_grlex_key)
    cq = tq[eq]
    rem = dict(tp)
    quot = {}
    while rem:
        er = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(er, eq))
        if any(v < 0 for v in diff):
            raise ArithmeticError("inexact polynomial division")
        c = rem[er] / cq
        quot[diff] = quot.get(diff, Fraction(0)) + c
        for e2, c2 in tq.items():
            e = tuple(a + b for a, b in zip(diff, e2))
            s = rem.get(e, Fraction(0)) - c * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return ParamPolynomial(*_prune(params, quot))


def _main_split(p, main):
    """View p as univariate in main: dict degree -> coefficient polynomial."""
    if main not in p.params:
        return {0: p}
    i = p.params.index(main)
    rest = p.params[:i] + p.params[i + 1:]
    buckets = {}
    for e, c in p.terms.items():
        buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
    return {d: ParamPolynomial(*_prune(rest, t)) for d, t in buckets.items()}


def _main_join(coeffs, main):
    x = ParamPolynomial.symbol(main)
    acc = _ZERO_POLY
    for d in sorted(coeffs):
        acc = acc + coeffs[d] * x ** d
    return acc


def _coeffs_gcd(coeffs):
    g = _ZERO_POLY
    for d in sorted(coeffs):
        g = poly_gcd(g, coeffs[d])
        if _is_one(g):
            break
    return g


def _main_primitive(coeffs):
    g = _coeffs_gcd(coeffs)
    if _is_one(g):
        return coeffs
    return {d: _exact_div(c, g) for d, c in coeffs.items()}


def _prem(A, B):
    """Pseudo-remainder of A by B, both univariate-in-main coefficient dicts."""
    db = max(B)
    lb = B[db]
    R = dict(A)
    while R and max(R) >= db:
        dr = max(R)
        lr = R[dr]
        new = {d: c * lb for d, c in R.items()}
        for d, c in B.items():
            nd = d + dr - db
            s = new.get(nd, _ZERO_POLY) - lr * c
            if s.is_zero():
                new.pop(nd, None)
            else:
                new[nd] = s
        R = new
    return R


def poly_gcd(p, q):
    """Gcd of the primitive parts of p and q over Q[params].

    Returns a primitive integer-coefficient polynomial with positive
    grlex-leading coefficient (1 for coprime or constant inputs, 0 only
    for gcd(0, 0)).
    """
    if p.is_zero() and q.is_zero():
        return _ZERO_POLY
    if p.is_zero():
        return _positive_lead(_content_primitive(q)[1])
    if q.is_zero():
        return _positive_lead(_content_primitive(p)[1])
    _, p = _content_primitive(p)
    _, q = _content_primitive(q)
    params = tuple(sorted(set(p.params) | set(q.params)))
    if not params:
        return _ONE_POLY
    main = params[0]
    A = _main_split(p, main)
    B = _main_split(q, main)
    cg = poly_gcd(_coeffs_gcd(A), _coeffs_gcd(B))
    A = _main_primitive(A)
    B = _main_primitive(B)
    if max(A) < max(B):
        A, B = B, A
    while B:
        R = _prem(A, B)
        A = B
        B = _main_primitive(R) if R else R
    res = _main_join(A, main) * cg
    return _positive_lead(_content_primitive(res)[1])


def _normalize_pair(num, den):
    if den.is_zero():
        raise ZeroDenominator("denominator is the zero polynomial")
    if num.is_zero():
        return _ZERO_POLY, _ONE_POLY
    cn, pn = _content_primitive(num)
    cd, pd = _content_primitive(den)
    g = poly_gcd(pn, pd)
    if not _is_one(g):
        pn = _exact_div(pn, g)
        pd = _exact_div(pd, g)
    if _lead_sign(pd) < 0:
        pn, pd = -pn, -pd
    c = cn / cd
    return pn * c.numerator, pd * c.denominator


def _coerce_poly(x):
    if isinstance(x, ParamPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return ParamPolynomial.constant(x)
    raise TypeError("cannot build a polynomial from %r" % (x,))


class Scalar:
    """Canonical quotient of integer-coefficient parameter polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce_poly(num)
        den = _ONE_POLY if den is None else _coerce_poly(den)
        self.num, self.den = _normalize_pair(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_fraction(cls, value):
        value = Fraction(value)
        return cls._raw(
            ParamPolynomial.constant(value.numerator),
            ParamPolynomial.constant(value.denominator),
        )

    @classmethod
    def param(cls, name):
        return cls._raw(ParamPolynomial.symbol(name), _ONE_POLY)

    @property
    def params(self):
        return tuple(sorted(set(self.num.params) | set(self.den.params)))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        if self.params:
            raise UnboundParameter(
                "scalar has free parameters: %s" % ", ".join(self.params)
            )
        return self.num.constant_value() / self.den.constant_value()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, frozenset(self.num.terms.items()),
                     self.den, frozenset(self.den.terms.items())))

    def __neg__(self):
        return Scalar._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return Scalar.from_fraction(self.constant_value() + other.constant_value())
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return Scalar.from_fraction(self.constant_value() * other.constant_value())
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero scalar")
        if self.is_constant() and other.is_constant():
            return Scalar.from_fraction(self.constant_value() / other.constant_value())
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            if self.is_zero():
                raise DivisionByZero("zero scalar raised to a negative power")
            return Scalar(self.den ** (-n), self.num ** (-n))
        return Scalar(self.num ** n, self.den ** n)

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of the zero scalar")
        return Scalar(self.den, self.num)

    def specialize(self, assignment):
        """Evaluate at a parameter assignment (symbol -> rational).

        The assignment must cover every parameter; extra keys are ignored.
        Raises PoleAtSpecialization when the denominator vanishes.
        """
        missing = [p for p in self.params if p not in assignment]
        if missing:
            raise UnboundParameter("unbound parameters: %s" % ", ".join(missing))
        d = self.den.evaluate(assignment)
        if not d:
            raise PoleAtSpecialization(
                "denominator %s vanishes at %s" % (self.den, dict(assignment))
            )
        return self.num.evaluate(assignment) / d

    def __str__(self):
        return scalar_to_string(self)

    def __repr__(self):
        return "Scalar(%s)" % scalar_to_string(self)


def _coerce_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_fraction(x)
    if isinstance(x, ParamPolynomial):
        return Scalar(x)
    return NotImplemented


ZERO = Scalar.from_fraction(0)
ONE = Scalar.from_fraction(1)


def normalize(num, den):
    """Canonical scalar num/den; raises ZeroDenominator when den = 0."""
    return Scalar(num, den)


def _monomial_string(params, exps):
    parts = []
    for name, e in zip(params, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else "%s^%d" % (name, e))
    return "*".join(parts)


def polynomial_to_string(p):
    if p.is_zero():
        return "0"
    chunks = []
    for e in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[e]
        mono = _monomial_string(p.params, e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        chunks.append(("-" if c < 0 else "+", body))
    sign, body = chunks[0]
    out = [body if sign == "+" else "-" + body]
    for sign, body in chunks[1:]:
        out.append(sign + body)
    return "".join(out)


_SAFE_DEN_RE = re.compile(r"(\d+|[A-Za-z_][A-Za-z0-9_]*(\^\d+)?)\Z")


def render(s):
    return scalar_to_string(s)


def scalar_to_string(s):
    num = polynomial_to_string(s.num)
    if _is_one(s.den):
        return num
    if len(s.num.terms) > 1:
        num = "(%s)" % num
    den = polynomial_to_string(s.den)
    if not _SAFE_DEN_RE.match(den):
        den = "(%s)" % den
    return "%s/%s" % (num, den)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError("bad character at position %d in %r" % (pos, text))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError("expected %r in %r" % (op, self.text))

    def parse(self):
        value = self.expr()
        if self.peek()[0] != "end":
            raise ParseError("trailing input in %r" % self.text)
        return value

    def expr(self):
        value = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            _, op = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero in %r" % self.text)
                value = value / rhs
        return value

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        return self.base()

    def base(self):
        value = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, n = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal in %r" % self.text)
            value = value ** n
        return value

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return Scalar.from_fraction(val)
        if kind == "name":
            return Scalar.param(val)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError("unexpected token %r in %r" % (val, self.text))


def parse(text):
    """Parse an expression over integers and parameter symbols to a Scalar.

    Grammar: + - * / ^ with the usual precedence, parentheses, nonnegative
    integer exponents.  Round-trips with render().
    """
    if not isinstance(text, str):
        raise ParseError("expected a string, got %r" % (text,))
    return _Parser(text).parse()

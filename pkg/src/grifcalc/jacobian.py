"""Graded Jacobian rings of smooth hypersurfaces, with exact arithmetic.

For a degree-d form F in nvars variables, the Jacobian ring is
R = k[x_0..x_{nvars-1}] / (dF/dx_0, ..., dF/dx_{nvars-1}).  R is graded
Artinian Gorenstein with socle in degree nvars*(d-2); multiplication into
the socle gives a perfect pairing between complementary degrees.

Monomials are exponent tuples.  Graded slices carry bases in descending
graded-lex order (x_0 largest).  When F is the Fermat form sum x_i^d the
Jacobian ideal is generated by the pure powers x_i^{d-1}, so the slice
basis is just the monomials with all exponents <= d-2 and reduction is a
term filter; any other F goes through sparse row reduction of the
degree-k slice of the ideal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeMismatch, NotReducedMonomial, ParameterInModP
from .linalg import (
    DEFAULT_PRIME,
    FRACTION_FIELD,
    SCALAR_FIELD,
    ModPField,
    determinant as _det_rows,
    rank_and_kernel,
    scalar_mod_p,
)
from .scalar import Scalar, parse as parse_scalar, render as render_scalar

ZERO = Scalar.from_fraction(0)
ONE = Scalar.from_fraction(1)


def monomial_degree(exps):
    return sum(exps)


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, k):
    """All exponent tuples of total degree k, descending graded-lex."""
    if k < 0:
        return ()
    if nvars == 0:
        return ((),) if k == 0 else ()
    if nvars == 1:
        return ((k,),)
    out = []
    for e0 in range(k, -1, -1):
        for rest in monomials_of_degree(nvars - 1, k - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_monomials(nvars, k, cap):
    """Degree-k exponent tuples with every entry <= cap, descending grlex."""
    if k < 0 or k > nvars * cap:
        return ()
    if nvars == 0:
        return ((),) if k == 0 else ()
    if nvars == 1:
        return ((k,),) if k <= cap else ()
    out = []
    for e0 in range(min(k, cap), -1, -1):
        for rest in reduced_monomials(nvars - 1, k - e0, cap):
            out.append((e0,) + rest)
    return tuple(out)


def ambient_dimension(nvars, k):
    if k < 0:
        return 0
    return math.comb(nvars - 1 + k, k)


def monomial_string(exps, prefix="x"):
    parts = []
    for i, e in enumerate(exps):
        if e == 0:
            continue
        parts.append("%s%d" % (prefix, i) if e == 1 else "%s%d^%d" % (prefix, i, e))
    return "*".join(parts) if parts else "1"


class HomogeneousPolynomial:
    """Homogeneous form: dict from exponent tuple to nonzero Scalar."""

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars, degree, terms):
        self.nvars = nvars
        self.degree = degree
        self.terms = terms

    @classmethod
    def zero(cls, nvars, degree):
        return cls(nvars, degree, {})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        exps = tuple(int(v) for v in exps)
        if len(exps) != nvars or any(v < 0 for v in exps):
            raise DegreeMismatch("bad exponent tuple %r for %d variables" % (exps, nvars))
        coeff = _as_scalar(coeff)
        if coeff.is_zero():
            return cls.zero(nvars, sum(exps))
        return cls(nvars, sum(exps), {exps: coeff})

    @classmethod
    def from_terms(cls, nvars, terms, degree=None):
        clean = {}
        deg = degree
        for exps, coeff in terms.items():
            exps = tuple(int(v) for v in exps)
            if len(exps) != nvars or any(v < 0 for v in exps):
                raise DegreeMismatch("bad exponent tuple %r" % (exps,))
            d = sum(exps)
            if deg is None:
                deg = d
            elif d != deg:
                raise DegreeMismatch("mixed degrees %d and %d" % (deg, d))
            coeff = _as_scalar(coeff)
            if coeff.is_zero():
                continue
            prev = clean.get(exps)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                clean.pop(exps, None)
            else:
                clean[exps] = coeff
        if deg is None:
            raise DegreeMismatch("cannot infer the degree of an empty polynomial")
        return cls(nvars, deg, clean)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return (self.nvars == other.nvars and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    def _check_compat(self, other):
        if self.nvars != other.nvars:
            raise DegreeMismatch("operands over %d and %d variables"
                                 % (self.nvars, other.nvars))

    def __add__(self, other):
        self._check_compat(other)
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add degrees %d and %d"
                                 % (self.degree, other.degree))
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return HomogeneousPolynomial(self.nvars, self.degree, terms)

    def __neg__(self):
        return HomogeneousPolynomial(
            self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = _as_scalar(coeff)
        if coeff.is_zero():
            return HomogeneousPolynomial.zero(self.nvars, self.degree)
        return HomogeneousPolynomial(
            self.nvars, self.degree, {e: c * coeff for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check_compat(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(e)
                s = ca * cb if s is None else s + ca * cb
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return HomogeneousPolynomial(self.nvars, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def mul_monomial(self, exps, coeff=None):
        terms = {}
        for e, c in self.terms.items():
            ne = tuple(x + y for x, y in zip(e, exps))
            terms[ne] = c if coeff is None else c * coeff
        return HomogeneousPolynomial(self.nvars, self.degree + sum(exps), terms)

    def partial(self, i):
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            terms[ne] = c * e[i]
        return HomogeneousPolynomial(self.nvars, self.degree - 1, terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            mono = monomial_string(e)
            cs = render_scalar(c)
            neg = cs.startswith("-") and "+" not in cs and "-" not in cs[1:]
            if neg:
                sign, cs = "-", cs[1:]
            else:
                sign = "+"
            if "+" in cs or "-" in cs[1:]:
                cs = "(%s)" % cs
            if mono == "1":
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = "%s*%s" % (cs, mono)
            chunks.append((sign, body))
        sign, body = chunks[0]
        out = [body if sign == "+" else "-" + body]
        for sign, body in chunks[1:]:
            out.append(sign + body)
        return "".join(out)

    def __repr__(self):
        return "HomogeneousPolynomial(%s)" % self

    def to_json(self):
        return {
            "nvars": self.nvars,
            "degree": self.degree,
            "terms": [{"exps": list(e), "coeff": render_scalar(c)}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        nvars = int(data["nvars"])
        degree = int(data["degree"])
        terms = {}
        for t in data["terms"]:
            exps = tuple(int(v) for v in t["exps"])
            coeff = parse_scalar(str(t["coeff"]))
            terms[exps] = terms.get(exps, ZERO) + coeff
        return cls.from_terms(nvars, terms, degree=degree)


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    return Scalar.from_fraction(x)


class GradedBasis:
    """Monomial basis of one graded slice of a Jacobian ring.

    pivots is None for the Fermat fast path (the ideal slice is monomial);
    otherwise it holds the reduced pivot rows of the ideal slice together
    with the ambient column list, so |basis| + len(pivots) = dim_ambient.
    """

    __slots__ = ("degree", "basis", "dim_ambient", "columns", "pivots", "index")

    def __init__(self, degree, basis, dim_ambient, columns=None, pivots=None):
        self.degree = degree
        self.basis = tuple(basis)
        self.dim_ambient = dim_ambient
        self.columns = columns
        self.pivots = pivots
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def ideal_rank(self):
        return self.dim_ambient - len(self.basis)


class HypersurfaceRing:
    """Jacobian ring of a homogeneous form, sliced by degree on demand."""

    def __init__(self, polynomial):
        if polynomial.is_zero():
            raise DegreeMismatch("the defining form must be nonzero")
        if polynomial.degree < 2:
            raise DegreeMismatch("the defining form must have degree >= 2")
        self.polynomial = polynomial
        self.nvars = polynomial.nvars
        self.degree = polynomial.degree
        self.socle_degree = self.nvars * (self.degree - 2)
        self.fermat_flag = self._is_fermat(polynomial)
        self._slices = {}

    @staticmethod
    def _is_fermat(p):
        want = {}
        for i in range(p.nvars):
            e = [0] * p.nvars
            e[i] = p.degree
            want[tuple(e)] = ONE
        return p.terms == want

    @classmethod
    def fermat(cls, d, nvars):
        terms = {}
        for i in range(nvars):
            e = [0] * nvars
            e[i] = d
            terms[tuple(e)] = ONE
        return cls(HomogeneousPolynomial(nvars, d, terms))

    def quotient_basis(self, k):
        gb = self._slices.get(k)
        if gb is None:
            gb = self._build_slice(k)
            self._slices[k] = gb
        return gb

    def _build_slice(self, k):
        if k < 0:
            return GradedBasis(k, (), 0)
        if self.fermat_flag:
            basis = reduced_monomials(self.nvars, k, self.degree - 2)
            return GradedBasis(k, basis, ambient_dimension(self.nvars, k))
        cols = monomials_of_degree(self.nvars, k)
        col_index = {m: i for i, m in enumerate(cols)}
        rows = []
        shift = k - (self.degree - 1)
        partials = [self.polynomial.partial(i) for i in range(self.nvars)]
        constant = all(c.is_constant() for c in self.polynomial.terms.values())
        for g in partials:
            for m in monomials_of_degree(self.nvars, shift):
                row = {}
                for e, c in g.terms.items():
                    ne = tuple(x + y for x, y in zip(e, m))
                    row[col_index[ne]] = (c.constant_value() if constant else c)
                if row:
                    rows.append(row)
        field = FRACTION_FIELD if constant else SCALAR_FIELD
        from .linalg import rref
        pivots = rref(rows, field)
        if constant:
            pivots = [(pc, {c: _as_scalar(v) for c, v in prow.items()})
                      for pc, prow in pivots]
        pivot_cols = {pc for pc, _ in pivots}
        basis = tuple(m for i, m in enumerate(cols) if i not in pivot_cols)
        return GradedBasis(k, basis, len(cols), columns=cols, pivots=pivots)

    def normal_form(self, p):
        """Canonical representative of p in the slice basis."""
        if p.nvars != self.nvars:
            raise DegreeMismatch("polynomial over %d variables, ring over %d"
                                 % (p.nvars, self.nvars))
        if p.is_zero():
            return p
        if self.fermat_flag:
            cap = self.degree - 2
            terms = {e: c for e, c in p.terms.items() if max(e) <= cap}
            return HomogeneousPolynomial(p.nvars, p.degree, terms)
        gb = self.quotient_basis(p.degree)
        col_index = {m: i for i, m in enumerate(gb.columns)}
        vec = {}
        for e, c in p.terms.items():
            vec[col_index[e]] = c
        for pc, prow in gb.pivots:
            coef = vec.pop(pc, None)
            if coef is None or coef.is_zero():
                continue
            for c, v in prow.items():
                if c == pc:
                    continue
                s = vec.get(c, ZERO) - coef * v
                if s.is_zero():
                    vec.pop(c, None)
                else:
                    vec[c] = s
        terms = {}
        for ci, coeff in vec.items():
            if not coeff.is_zero():
                terms[gb.columns[ci]] = coeff
        return HomogeneousPolynomial(p.nvars, p.degree, terms)

    def socle_dimension(self):
        return self.quotient_basis(self.socle_degree).dimension

    def socle_monomial(self):
        gb = self.quotient_basis(self.socle_degree)
        if gb.dimension != 1:
            raise ValueError("socle has dimension %d, expected 1" % gb.dimension)
        return gb.basis[0]

    def socle_coefficient(self, p):
        """Coefficient of the socle monomial in normal_form(p)."""
        if p.degree != self.socle_degree:
            raise DegreeMismatch("degree %d is not the socle degree %d"
                                 % (p.degree, self.socle_degree))
        nf = self.normal_form(p)
        return nf.coefficient(self.socle_monomial())

    def monomial_basis_polynomial(self, exps, coeff=1):
        p = HomogeneousPolynomial.monomial(self.nvars, exps, coeff)
        if self.fermat_flag and max(exps) > self.degree - 2:
            raise NotReducedMonomial(
                "monomial %s has an exponent above %d"
                % (monomial_string(exps), self.degree - 2))
        return p

    def __repr__(self):
        kind = "fermat" if self.fermat_flag else "general"
        return ("HypersurfaceRing(d=%d, nvars=%d, %s)"
                % (self.degree, self.nvars, kind))


class LinearMap:
    """Matrix of a linear map between two monomial-based graded slices.

    Rows are indexed by the codomain basis, columns by the domain basis.
    entries maps (row, col) to a nonzero Scalar.
    """

    __slots__ = ("domain", "codomain", "entries")

    def __init__(self, domain, codomain, entries):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    @property
    def nrows(self):
        return len(self.codomain)

    @property
    def ncols(self):
        return len(self.domain)

    def entry(self, i, j):
        return self.entries.get((i, j), ZERO)

    def rows_as_dicts(self):
        rows = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.entries == other.entries)

    def to_json(self):
        items = sorted(self.entries.items())
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[i, j, render_scalar(v)] for (i, j), v in items],
        }

    @classmethod
    def from_json(cls, data, domain=None, codomain=None):
        nrows = int(data["rows"])
        ncols = int(data["cols"])
        domain = tuple(domain) if domain is not None else tuple(range(ncols))
        codomain = tuple(codomain) if codomain is not None else tuple(range(nrows))
        entries = {}
        for i, j, s in data["entries"]:
            entries[(int(i), int(j))] = parse_scalar(str(s))
        return cls(domain, codomain, entries)

    def __repr__(self):
        return "LinearMap(%d x %d, %d nonzero)" % (self.nrows, self.ncols,
                                                   len(self.entries))


def mult_map(ring, p, j):
    """Matrix of multiplication by p from slice j to slice j + deg(p)."""
    if p.nvars != ring.nvars:
        raise DegreeMismatch("polynomial over %d variables, ring over %d"
                             % (p.nvars, ring.nvars))
    dom = ring.quotient_basis(j)
    cod = ring.quotient_basis(j + p.degree)
    entries = {}
    for col, m in enumerate(dom.basis):
        q = ring.normal_form(p.mul_monomial(m))
        for e, c in q.terms.items():
            entries[(cod.index[e], col)] = c
    return LinearMap(dom.basis, cod.basis, entries)


def pairing_matrix(ring, p, j, k):
    """Socle pairing (u, v) -> socle coefficient of p*u*v on slices j, k."""
    if p.degree + j + k != ring.socle_degree:
        raise DegreeMismatch(
            "deg(p) + j + k = %d is not the socle degree %d"
            % (p.degree + j + k, ring.socle_degree))
    soc = ring.socle_monomial()
    bj = ring.quotient_basis(j)
    bk = ring.quotient_basis(k)
    pr = ring.normal_form(p)
    entries = {}
    for i, u in enumerate(bj.basis):
        pu = ring.normal_form(pr.mul_monomial(u))
        for l, v in enumerate(bk.basis):
            c = ring.normal_form(pu.mul_monomial(v)).coefficient(soc)
            if not c.is_zero():
                entries[(i, l)] = c
    return LinearMap(bk.basis, bj.basis, entries)


def rank_kernel(linmap, mode="exact", prime=None, assignment=None):
    """Rank and kernel basis of a LinearMap.

    mode "exact" works over the scalar field (plain Fractions when no
    entry has parameters).  mode "mod_p" reduces entries modulo a prime
    (default 2^31 - 1) and returns integer kernel vectors; parameters
    must be specialized via assignment first.
    """
    rows = linmap.rows_as_dicts()
    n = linmap.ncols
    if mode == "exact":
        if all(not v.params for v in linmap.entries.values()):
            frows = [{c: v.constant_value() for c, v in r.items()} for r in rows]
            r, kern = rank_and_kernel(frows, n, FRACTION_FIELD)
            vecs = [tuple(Scalar.from_fraction(v.get(c, Fraction(0))) for c in range(n))
                    for v in kern]
            return r, vecs
        r, kern = rank_and_kernel(rows, n, SCALAR_FIELD)
        vecs = [tuple(v.get(c, ZERO) for c in range(n)) for v in kern]
        return r, vecs
    if mode == "mod_p":
        p = DEFAULT_PRIME if prime is None else int(prime)
        gf = ModPField(p)
        prow_list = []
        for r in rows:
            pr = {}
            for c, v in r.items():
                w = scalar_mod_p(v, p, assignment)
                if w:
                    pr[c] = w
            prow_list.append(pr)
        r, kern = rank_and_kernel(prow_list, n, gf)
        vecs = [tuple(v.get(c, 0) for c in range(n)) for v in kern]
        return r, vecs
    raise ValueError("unknown mode %r" % (mode,))


def determinant(linmap):
    """Determinant of a square LinearMap as a Scalar."""
    if linmap.nrows != linmap.ncols:
        raise ValueError("determinant of a %d x %d map"
                         % (linmap.nrows, linmap.ncols))
    rows = linmap.rows_as_dicts()
    if all(not v.params for v in linmap.entries.values()):
        frows = [{c: v.constant_value() for c, v in r.items()} for r in rows]
        return Scalar.from_fraction(
            _det_rows(frows, linmap.nrows, FRACTION_FIELD))
    return _det_rows(rows, linmap.nrows, SCALAR_FIELD)


class TensorSum:
    """Finite sum of decomposable tensors c * (left (x) right) over a ring's
    graded slices.  All lefts share one degree, all rights another."""

    __slots__ = ("nvars", "left_degree", "right_degree", "summands")

    def __init__(self, summands):
        summands = [(c if isinstance(c, Scalar) else Scalar.from_fraction(c), l, r)
                    for c, l, r in summands]
        summands = [(c, l, r) for c, l, r in summands if not c.is_zero()]
        nvars = left_degree = right_degree = None
        for _, l, r in summands:
            if l.nvars != r.nvars:
                raise DegreeMismatch("tensor factors over different variable counts")
            if nvars is None:
                nvars, left_degree, right_degree = l.nvars, l.degree, r.degree
            elif (l.nvars, l.degree, r.degree) != (nvars, left_degree, right_degree):
                raise DegreeMismatch("summands of mixed shape in a tensor sum")
        self.nvars = nvars
        self.left_degree = left_degree
        self.right_degree = right_degree
        self.summands = tuple(summands)

    @classmethod
    def simple(cls, left, right, coeff=1):
        return cls([(coeff, left, right)])

    def is_zero(self):
        return not self.summands

    def __add__(self, other):
        return TensorSum(list(self.summands) + list(other.summands))

    def scale(self, coeff):
        coeff = _as_scalar(coeff)
        return TensorSum([(c * coeff, l, r) for c, l, r in self.summands])

    def monomial_expansion(self):
        """Collect into monomial (x) monomial coefficients: dict keyed by
        (left_exps, right_exps)."""
        out = {}
        for c, l, r in self.summands:
            for el, cl in l.terms.items():
                for er, cr in r.terms.items():
                    key = (el, er)
                    s = out.get(key)
                    v = c * cl * cr
                    s = v if s is None else s + v
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        return out

    def __repr__(self):
        return "TensorSum(%d summands)" % len(self.summands)

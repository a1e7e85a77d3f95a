"""Primitive Hodge numbers, Euler characteristics, and odd-cohomology
vanishing checks for smooth hypersurfaces and complete intersections.

Two independent methods are implemented.

Hypersurfaces use the residue grading: for a smooth degree-d hypersurface
of dimension m the primitive piece h^{m-q,q} equals the dimension of the
graded slice R^{(q+1)d-(m+2)} of the Jacobian ring, and Hodge numbers are
deformation invariants, so the Fermat ring (whose slice dimensions are
bounded-exponent monomial counts) computes them.

Complete intersections use exact chi_y arithmetic: with phi(x) =
x*(1 + y*e^{-x})/(1 - e^{-x}) and virtual tangent bundle O(1)^{N+1} - O -
sum O(d_i), Hirzebruch-Riemann-Roch gives

  chi_y(Y) = (prod d_i) * coeff_{H^m} [ phi(H)^{N+1}
                / ((1+y) * prod_i phi(d_i*H)) ]

as a polynomial in y; the (1+y) factor is phi(0), the trivial summand of
the virtual bundle.  h^{p,m-p} then falls out of chi_p = sum_q (-1)^q
h^{p,q} together with weak Lefschetz (off-middle cohomology is that of
projective space).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .scalar import Scalar

ZERO = Scalar.from_fraction(0)
ONE = Scalar.from_fraction(1)


@dataclass(frozen=True)
class HodgeVector:
    """Primitive middle Hodge numbers (h^{m,0}, h^{m-1,1}, ..., h^{0,m})."""

    m: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.m + 1:
            raise ValueError("expected %d values, got %d"
                             % (self.m + 1, len(self.values)))
        if any(v < 0 for v in self.values):
            raise ValueError("negative Hodge number in %r" % (self.values,))
        if tuple(reversed(self.values)) != self.values:
            raise ValueError("Hodge vector is not symmetric: %r" % (self.values,))

    @property
    def primitive_betti(self):
        return sum(self.values)

    def to_json(self):
        return list(self.values)


@dataclass(frozen=True)
class CIData:
    """A smooth complete intersection of the given multidegree and
    dimension m inside P^{m + len(degrees)}."""

    degrees: tuple
    m: int

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("degrees must be non-empty")
        if any(d < 1 for d in self.degrees):
            raise ValueError("degrees must be >= 1")
        if self.m < 0:
            raise ValueError("dimension must be >= 0")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def ambient(self):
        return self.m + len(self.degrees)


@lru_cache(maxsize=None)
def bounded_slice_dimension(nvars, k, cap):
    """Number of degree-k monomials in nvars variables with every exponent
    <= cap: the dimension of the Fermat Jacobian ring slice R^k (cap=d-2).
    Computed by polynomial convolution, no enumeration."""
    if k < 0 or k > nvars * cap:
        return 0
    coeffs = [1]
    for _ in range(nvars):
        new = [0] * min(len(coeffs) + cap, k + 1)
        for i, c in enumerate(coeffs):
            for e in range(cap + 1):
                if i + e <= k:
                    new[i + e] += c
        coeffs = new
    return coeffs[k] if k < len(coeffs) else 0


def hypersurface_prim_hodge(d, m):
    """Primitive middle Hodge numbers of a smooth degree-d hypersurface of
    dimension m, through the residue grading of the Fermat Jacobian ring."""
    if d < 1 or m < 1:
        raise ValueError("need degree >= 1 and dimension >= 1")
    nvars = m + 2
    values = []
    for q in range(m + 1):
        k = (q + 1) * d - (m + 2)
        values.append(bounded_slice_dimension(nvars, k, d - 2) if k >= 0 else 0)
    return HodgeVector(m, tuple(values))


# truncated power series in H with Scalar coefficients, as length-(order) lists

def _series_mul(a, b, order):
    out = [ZERO] * order
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j >= order:
                break
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def _series_inv(a, order):
    lead = a[0]
    inv0 = ONE / lead
    out = [ZERO] * order
    out[0] = inv0
    for k in range(1, order):
        acc = ZERO
        for j in range(1, k + 1):
            if j < len(a) and not a[j].is_zero():
                acc = acc + a[j] * out[k - j]
        out[k] = -inv0 * acc
    return out


def _series_pow(a, n, order):
    result = [ZERO] * order
    result[0] = ONE
    base = list(a)
    while n:
        if n & 1:
            result = _series_mul(result, base, order)
        base = _series_mul(base, base, order)
        n >>= 1
    return result


def _phi_series(d, order, y):
    """phi(d*H) = d*H*(1 + y*e^{-dH})/(1 - e^{-dH}) as a unit series:
    (1 + y*e^{-dH}) / sum_{k>=0} (-1)^k d^k H^k / (k+1)!."""
    num = [ZERO] * order
    den = [ZERO] * order
    for k in range(order):
        c = Fraction((-d) ** k, math.factorial(k))
        num[k] = Scalar.from_fraction(c) * y if k > 0 else ONE + y
        den[k] = Scalar.from_fraction(Fraction((-d) ** k, math.factorial(k + 1)))
    return _series_mul(num, _series_inv(den, order), order)


def chi_y_coefficients(ci):
    """The integers chi_p = chi(Y, Omega^p) for p = 0..m, by exact
    truncated series arithmetic over Q(y)."""
    m = ci.m
    order = m + 1
    n_ambient = ci.ambient
    y = Scalar.param("y")
    cls = _series_pow(_phi_series(1, order, y), n_ambient + 1, order)
    for d in ci.degrees:
        cls = _series_mul(cls, _series_inv(_phi_series(d, order, y), order), order)
    unit = ONE / (ONE + y)
    chi = cls[m] * unit
    for d in ci.degrees:
        chi = chi * Scalar.from_fraction(d)
    assert not chi.den.params, "chi_y must be a polynomial in y"
    den = chi.den.constant_value()
    out = []
    for p in range(m + 1):
        if chi.num.params == ():
            c = chi.num.constant_value() if p == 0 else Fraction(0)
        else:
            c = chi.num.terms.get((p,), Fraction(0))
        v = c / den
        assert v.denominator == 1, "chi_p must be an integer"
        out.append(int(v))
    return out


def ci_prim_hodge(ci):
    """Primitive middle Hodge numbers of a smooth complete intersection,
    from its chi_y genus plus weak Lefschetz."""
    m = ci.m
    chi = chi_y_coefficients(ci)
    values = []
    for q in range(m + 1):
        p = m - q
        off_middle = 1 if 2 * p != m else 0
        h = (-1) ** (m - p) * (chi[p] - (-1) ** p * off_middle)
        if 2 * p == m:
            h -= 1  # remove the hyperplane-power class from the middle
        values.append(h)
    return HodgeVector(m, tuple(values))


def euler_characteristic(ci):
    """Topological Euler characteristic via the top Chern class:
    (prod d_i) * coeff_{H^m} [(1+H)^{N+1} / prod (1 + d_i H)]."""
    m = ci.m
    order = m + 1
    n_ambient = ci.ambient
    cls = [Fraction(math.comb(n_ambient + 1, k)) for k in range(order)]
    for d in ci.degrees:
        dser = [Fraction(1), Fraction(d)] + [Fraction(0)] * (order - 2)
        dser = dser[:order]
        inv = [Fraction(0)] * order
        inv[0] = Fraction(1)
        for k in range(1, order):
            inv[k] = -d * inv[k - 1]
        new = [Fraction(0)] * order
        for i in range(order):
            for j in range(order - i):
                new[i + j] += cls[i] * inv[j]
        cls = new
    chi = cls[m]
    for d in ci.degrees:
        chi *= d
    assert chi.denominator == 1
    return int(chi)


def full_diamond_euler(ci, prim=None):
    """Sum (-1)^{p+q} h^{p,q} over the full Hodge diamond: the m+1
    hyperplane-power classes plus the signed primitive middle entries."""
    if prim is None:
        prim = ci_prim_hodge(ci)
    return (ci.m + 1) + (-1) ** ci.m * prim.primitive_betti


def jacobian_vanishing_check(ci, k):
    """Whether H^{2k-1} of the complete intersection vanishes (so the
    intermediate Jacobian J^k is zero).

    Off the middle dimension this is weak Lefschetz (projective space has
    no odd cohomology).  In the middle dimension the primitive numbers
    decide it.
    """
    i = 2 * k - 1
    if i > 2 * ci.m:
        raise ValueError("cohomology degree %d exceeds 2m = %d" % (i, 2 * ci.m))
    if i != ci.m:
        return True
    return ci_prim_hodge(ci).primitive_betti == 0

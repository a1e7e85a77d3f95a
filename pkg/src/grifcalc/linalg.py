"""Sparse exact linear algebra over pluggable coefficient fields.

Matrices are lists of sparse rows (dict column -> coefficient).  Three
fields are supported: Scalar (rational functions), Fraction, and GF(p).
Pivot selection uses a Markowitz fill-in estimate with deterministic
tie-breaking, so every result is reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParameterInModP
from .scalar import Scalar

DEFAULT_PRIME = 2 ** 31 - 1


class ScalarField:
    zero = Scalar.from_fraction(0)
    one = Scalar.from_fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a):
        return a.is_zero()


class FractionField:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a):
        return not a


class ModPField:
    """Prime field GF(p) on Python ints in [0, p)."""

    def __init__(self, p):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return (a * pow(b, self.p - 2, self.p)) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a % self.p == 0


SCALAR_FIELD = ScalarField()
FRACTION_FIELD = FractionField()


def fraction_mod_p(x, p):
    """Image of a Fraction in GF(p); the denominator must be prime to p."""
    num = x.numerator % p
    den = x.denominator % p
    if den == 0:
        raise ZeroDivisionError("denominator divisible by %d" % p)
    return (num * pow(den, p - 2, p)) % p


def scalar_mod_p(x, p, assignment=None):
    """Image of a Scalar in GF(p), specializing parameters if given."""
    if x.params:
        if assignment is None:
            raise ParameterInModP(
                "entries contain free parameters (%s); pass a specialization"
                % ", ".join(x.params)
            )
        return fraction_mod_p(x.specialize(assignment), p)
    return fraction_mod_p(x.constant_value(), p)


def _clean_rows(rows, field):
    out = []
    for r in rows:
        out.append({c: v for c, v in r.items() if not field.is_zero(v)})
    return out


def _pick_pivot(active, col_count):
    """Markowitz pivot: minimize (row_fill-1)*(col_fill-1), ties by (col, row)."""
    best = None
    best_key = None
    for ri, row in active.items():
        rfill = len(row)
        for c in row:
            key = ((rfill - 1) * (col_count[c] - 1), c, ri)
            if best_key is None or key < best_key:
                best_key = key
                best = (ri, c)
    return best


def rref(rows, field):
    """Reduced row echelon form of sparse rows over the field.

    Returns a list of (pivot_col, row_dict) sorted by pivot column; each
    row_dict has 1 at its pivot column and support only on non-pivot columns
    elsewhere.  Input rows are not modified.
    """
    active = {i: dict(r) for i, r in enumerate(_clean_rows(rows, field)) if r}
    done = []
    col_count = {}
    for row in active.values():
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1

    def scale_row(row, factor):
        return {c: field.mul(v, factor) for c, v in row.items()}

    def axpy(row, coef, prow):
        # row -= coef * prow, maintaining col_count for active rows
        for c, v in prow.items():
            w = field.sub(row.get(c, field.zero), field.mul(coef, v))
            if field.is_zero(w):
                if c in row:
                    del row[c]
                    col_count[c] -= 1
            else:
                if c not in row:
                    col_count[c] = col_count.get(c, 0) + 1
                row[c] = w

    while active:
        ri, pc = _pick_pivot(active, col_count)
        prow = active.pop(ri)
        for c in prow:
            col_count[c] -= 1
        inv = field.div(field.one, prow[pc])
        prow = scale_row(prow, inv)
        for rj in list(active):
            row = active[rj]
            coef = row.get(pc)
            if coef is None:
                continue
            axpy(row, coef, prow)
            if not row:
                del active[rj]
        for (qc, qrow) in done:
            coef = qrow.get(pc)
            if coef is not None:
                for c, v in prow.items():
                    w = field.sub(qrow.get(c, field.zero), field.mul(coef, v))
                    if field.is_zero(w):
                        qrow.pop(c, None)
                    else:
                        qrow[c] = w
        done.append((pc, prow))
    done.sort(key=lambda t: t[0])
    return done


def rank(rows, field):
    return len(rref(rows, field))


def kernel_basis(pivot_rows, ncols, field):
    """Kernel basis vectors (one per free column) from an rref.

    Vectors come out as sparse dicts, ordered by their free column index.
    Each vector has 1 at its free column.
    """
    pivot_cols = {pc for pc, _ in pivot_rows}
    vecs = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = {f: field.one}
        for pc, prow in pivot_rows:
            v = prow.get(f)
            if v is not None:
                vec[pc] = field.neg(v)
        vecs.append(vec)
    return vecs


def rank_and_kernel(rows, ncols, field):
    pr = rref(rows, field)
    return len(pr), kernel_basis(pr, ncols, field)


def determinant(rows, n, field):
    """Determinant of an n x n sparse matrix via fraction-free-style
    elimination over the field (exact divisions, deterministic pivots)."""
    active = {i: dict(r) for i, r in enumerate(_clean_rows(rows, field))}
    if len(rows) != n:
        raise ValueError("matrix is not square")
    if any(not r for r in active.values()):
        return field.zero
    col_count = {}
    for row in active.values():
        for c in row:
            col_count[c] = col_count.get(c, 0) + 1
    det = field.one
    perm = []
    while active:
        picked = _pick_pivot(active, col_count)
        if picked is None:
            return field.zero
        ri, pc = picked
        prow = active.pop(ri)
        for c in prow:
            col_count[c] -= 1
        pv = prow[pc]
        det = field.mul(det, pv)
        perm.append((ri, pc))
        for rj in list(active):
            row = active[rj]
            coef = row.get(pc)
            if coef is None:
                continue
            factor = field.div(coef, pv)
            for c, v in prow.items():
                w = field.sub(row.get(c, field.zero), field.mul(factor, v))
                if field.is_zero(w):
                    if c in row:
                        del row[c]
                        col_count[c] -= 1
                else:
                    if c not in row:
                        col_count[c] = col_count.get(c, 0) + 1
                    row[c] = w
            if not row:
                return field.zero
    if len(perm) != n:
        return field.zero
    # sign of the permutation row index -> pivot column, by inversion count
    rows_order = [pc for _, pc in sorted(perm)]
    sign = 1
    for i in range(n):
        for j in range(i + 1, n):
            if rows_order[i] > rows_order[j]:
                sign = -sign
    if sign < 0:
        det = field.neg(det)
    return det


def solve(rows, n, rhs, field):
    """Solve A x = rhs for square nonsingular A given as sparse rows.

    rhs is a dense list of length n.  Returns a dense list.  Raises
    ZeroDivisionError-style ValueError if A is singular.
    """
    aug = []
    for i, r in enumerate(rows):
        row = dict(r)
        if not field.is_zero(rhs[i]):
            row[n] = rhs[i]
        aug.append(row)
    pr = rref(aug, field)
    pivot_cols = [pc for pc, _ in pr]
    if n in pivot_cols:
        raise ValueError("inconsistent linear system")
    if len(pivot_cols) != n:
        raise ValueError("singular matrix in solve()")
    x = [field.zero] * n
    for pc, prow in pr:
        x[pc] = prow.get(n, field.zero)
    return x


class RowReducer:
    """Incremental echelon accumulator: feed vectors, track the rank.

    Rows are reduced against stored pivots by smallest column index.  The
    stored pivot rows are normalized to 1 at their leading column.  Feeding
    order determines the basis but not the final rank.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Return vec reduced against the stored pivots (a new dict)."""
        field = self.field
        vec = {c: v for c, v in vec.items() if not field.is_zero(v)}
        while vec:
            c = min(vec)
            prow = self.pivots.get(c)
            if prow is None:
                return vec
            coef = vec[c]
            for pc, pv in prow.items():
                w = field.sub(vec.get(pc, field.zero), field.mul(coef, pv))
                if field.is_zero(w):
                    vec.pop(pc, None)
                else:
                    vec[pc] = w
        return vec

    def add(self, vec):
        """Reduce and install vec; True if it increased the rank."""
        vec = self.reduce(vec)
        if not vec:
            return False
        c = min(vec)
        inv = self.field.div(self.field.one, vec[c])
        self.pivots[c] = {k: self.field.mul(v, inv) for k, v in vec.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)

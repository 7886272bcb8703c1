"""Exact sparse linear algebra over the rationals.

Everything downstream (ideal graded pieces, biideals, axiom checks) reduces
to row reduction of sparse matrices with Fraction entries.  Vectors are
sparse rows: plain dicts mapping column index to a nonzero Fraction.
Subspaces are kept in reduced row echelon form, which is canonical, so two
subspaces are equal iff their stored bases are identical.

Internally, rows are scaled to integers and reduced by cross-multiplication
(a fraction-free Gaussian elimination) with gcd cleanup after every step;
Fractions only reappear when a finished basis is normalized to pivot 1.
"""

from fractions import Fraction
from math import gcd

Scalar = Fraction


def vec_add(u, v):
    """Sum of two sparse rows, dropping entries that cancel."""
    w = dict(u)
    for c, x in v.items():
        y = w.get(c, 0) + x
        if y:
            w[c] = y
        else:
            w.pop(c, None)
    return w


def vec_sub(u, v):
    return vec_add(u, {c: -x for c, x in v.items()})


def vec_scale(a, u):
    if not a:
        return {}
    return {c: a * x for c, x in u.items()}


class SparseMatrix:
    """Immutable sparse matrix keyed by (row, col); absent entries are zero."""

    def __init__(self, rows, cols, entries=()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        data = {}
        items = entries.items() if isinstance(entries, dict) else entries
        for key, val in items:
            r, c = key
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry index {key} out of range for {rows}x{cols} matrix")
            val = Fraction(val)
            if val:
                data[(r, c)] = val
        self.entries = data

    @classmethod
    def from_row_dicts(cls, row_dicts, cols):
        entries = {}
        for r, row in enumerate(row_dicts):
            for c, val in row.items():
                entries[(r, c)] = val
        return cls(len(row_dicts), cols, entries)

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (r, c), val in self.entries.items():
            out[r][c] = val
        return out

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, {len(self.entries)} entries)"


def _int_row(row):
    """Clear denominators and divide out content, returning an int-valued dict."""
    cleaned = {c: Fraction(x) for c, x in row.items() if x}
    if not cleaned:
        return {}
    denom_lcm = 1
    for x in cleaned.values():
        d = x.denominator
        denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    ints = {c: int(x * denom_lcm) for c, x in cleaned.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def _combine(a, row, b, piv):
    """a*row - b*piv over ints, gcd-normalized; used for one elimination step."""
    out = {}
    for c, v in row.items():
        out[c] = a * v
    for c, v in piv.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


class Echelon:
    """Incremental row echelon accumulator over integer-scaled rows.

    add() keeps rows forward-reduced only; finalize() back-reduces and
    normalizes pivots to 1, yielding a canonical Subspace.
    """

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self.pivot_rows = {}  # pivot column -> int row dict

    @property
    def rank(self):
        return len(self.pivot_rows)

    def rows(self):
        """Snapshot of the current (forward-reduced) rows as plain dicts."""
        return [dict(row) for row in self.pivot_rows.values()]

    def add(self, row):
        """Insert a sparse row (Fraction or int values). True iff rank grew."""
        work = _int_row(row)
        while work:
            col = min(work)
            piv = self.pivot_rows.get(col)
            if piv is None:
                if work[col] < 0:
                    work = {c: -v for c, v in work.items()}
                self.pivot_rows[col] = work
                return True
            work = _combine(piv[col], work, work[col], piv)
        return False

    def contains(self, row):
        """Membership test without inserting."""
        work = _int_row(row)
        while work:
            col = min(work)
            piv = self.pivot_rows.get(col)
            if piv is None:
                return False
            work = _combine(piv[col], work, work[col], piv)
        return True

    def finalize(self):
        """Full Gauss-Jordan cleanup; returns the canonical Subspace."""
        pivots = sorted(self.pivot_rows)
        rows = dict(self.pivot_rows)
        for p in pivots:
            piv = rows[p]
            for q in pivots:
                if q == p:
                    continue
                other = rows[q]
                if p in other:
                    rows[q] = _combine(piv[p], other, other[p], piv)
        basis = []
        for p in pivots:
            row = rows[p]
            lead = Fraction(row[p])
            basis.append({c: Fraction(v) / lead for c, v in row.items()})
        return Subspace(self.ambient_dim, basis, pivots)


class Subspace:
    """A subspace of k^n held as a canonical reduced-echelon basis."""

    def __init__(self, ambient_dim, basis_rows=(), pivots=None):
        self.ambient_dim = ambient_dim
        self.basis = tuple({c: Fraction(x) for c, x in row.items() if x} for row in basis_rows)
        if pivots is None:
            pivots = tuple(min(row) for row in self.basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, ambient_dim, rows):
        ech = Echelon(ambient_dim)
        for row in rows:
            ech.add(row)
        return ech.finalize()

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Canonical residue of vec modulo this subspace.

        The result is supported on non-pivot columns; it is zero iff
        vec lies in the subspace.
        """
        work = {c: Fraction(x) for c, x in vec.items() if x}
        for p, row in zip(self.pivots, self.basis):
            coeff = work.get(p)
            if coeff:
                work = vec_sub(work, vec_scale(coeff, row))
        return work

    def contains(self, vec):
        return not self.reduce(vec)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def reduced_echelon(m):
    """Reduced row echelon form of a SparseMatrix.

    Returns (SparseMatrix in RREF with zero rows dropped, pivot column list).
    """
    sub = Subspace.from_rows(m.cols, m.row_dicts())
    return SparseMatrix.from_row_dicts(sub.basis, m.cols), list(sub.pivots)


def null_space(m):
    """Canonical basis of the right null space {v : m v = 0}."""
    sub = Subspace.from_rows(m.cols, m.row_dicts())
    pivot_set = set(sub.pivots)
    kernel = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for p, row in zip(sub.pivots, sub.basis):
            coeff = row.get(free)
            if coeff:
                vec[p] = -coeff
        kernel.append(vec)
    return Subspace.from_rows(m.cols, kernel)


def span_contains(s, vec):
    """True iff the coefficient row vec lies in the subspace s."""
    if isinstance(vec, dict):
        row = vec
    else:
        if len(vec) != s.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        row = {c: x for c, x in enumerate(vec) if x}
    return s.contains(row)


def subspace_equal(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("subspaces live in different ambient dimensions")
    return a == b

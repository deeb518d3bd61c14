"""Exact linear algebra over the scalar fields.

Reduced row echelon form, null spaces, linear solves, inverses, minimal
polynomials and in-field root finding.  Everything is computed over the
exact scalars from `fields`; there is no floating point anywhere.

Conventions that downstream code relies on:
  * rref is the unique reduced form, so subspaces compared through their
    rref bases have canonical equality;
  * kernel bases follow the free-variable pattern (each free column set
    to 1 in turn, pivots back-substituted), so reports are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import Field, FieldError, PrimeField, RationalField


class Matrix:
    """Immutable dense matrix with entries in one scalar field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        self.field = field
        self.rows = rows

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field: Field, cols, nrows=None) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs an explicit row count")
            return cls(field, [[] for _ in range(nrows)])
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    # -- shape --------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows))) if self.rows else self

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a + b for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [[a - b for a, b in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.columns()
        return Matrix(self.field,
                      [[_dot(row, col) for col in cols] for row in self.rows])

    def scale(self, s) -> "Matrix":
        s = self.field.scalar(s)
        return Matrix(self.field, [[s * a for a in row] for row in self.rows])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def apply(self, vec):
        """Matrix-vector product, returning a coordinate tuple."""
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(_dot(row, vec) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix(%r, %r)" % (self.field, [list(r) for r in self.rows])


def _dot(u, v):
    acc = None
    for a, b in zip(u, v):
        term = a * b
        acc = term if acc is None else acc + term
    if acc is None:
        raise ValueError("dot product of empty vectors")
    return acc


def dot(u, v):
    return _dot(u, v)


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns (reduced, rank, pivot_columns); the reduced form is the
    unique one, so it doubles as a canonical representative of the row
    space.
    """
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(m.field, rows), len(pivots), tuple(pivots)


def kernel_vectors(m: Matrix):
    """Canonical null-space basis as a list of coordinate tuples.

    For each free column (in increasing order) the basis vector has a 1
    there and the pivot coordinates read off the reduced form.
    """
    reduced, rank, pivots = rref(m)
    field = m.field
    ncols = m.ncols
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(pivots):
            v[p] = -reduced.rows[i][f]
        basis.append(tuple(v))
    return basis


def kernel(m: Matrix) -> Matrix:
    """Null space of m, as a matrix whose columns are the canonical basis."""
    return Matrix.from_columns(m.field, kernel_vectors(m), nrows=m.ncols)


def solve(m: Matrix, vec):
    """One solution x of m x = vec, or None if the system is inconsistent."""
    field = m.field
    aug = Matrix(field, [list(row) + [vec[i]] for i, row in enumerate(m.rows)])
    reduced, rank, pivots = rref(aug)
    if m.ncols in pivots:  # pivot in the augmented column
        return None
    x = [field.zero] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = reduced.rows[i][m.ncols]
    return tuple(x)


def inverse(m: Matrix):
    """Inverse of a square matrix, or None if singular."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    field = m.field
    ident = Matrix.identity(field, n)
    aug = Matrix(field, [list(m.rows[i]) + list(ident.rows[i]) for i in range(n)])
    reduced, rank, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or rank < n:
        return None
    return Matrix(field, [row[n:] for row in reduced.rows])


# ---------------------------------------------------------------------------
# Polynomials


class Polynomial:
    """Dense polynomial, coefficients lowest degree first, trailing zeros
    trimmed so the leading coefficient is nonzero unless the polynomial
    is zero (empty coefficient list is not used: zero is [0])."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = [field.scalar(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [field.zero]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Polynomial":
        p = cls(field, [1])
        for r in roots:
            p = p * cls(field, [-field.scalar(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, m: Matrix) -> Matrix:
        n = m.nrows
        acc = Matrix.zeros(self.field, n, n)
        for c in reversed(self.coeffs):
            acc = acc * m + Matrix.identity(self.field, n).scale(c)
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Polynomial(self.field, [x + y for x, y in zip(a, b)])

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def monic(self) -> "Polynomial":
        lead = self.coeffs[-1]
        if lead == 0:
            return self
        return Polynomial(self.field, [c / lead for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial(self.field, [0])
        return Polynomial(self.field,
                          [i * c for i, c in enumerate(self.coeffs)][1:])

    def mod(self, other: "Polynomial") -> "Polynomial":
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and not all(c == 0 for c in rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            f = rem[-1] / lead
            shift = len(rem) - 1 - d
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * c
            rem.pop()
        return Polynomial(self.field, rem if rem else [0])

    def __repr__(self):
        return "Polynomial(%r)" % (list(self.coeffs),)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a.mod(b)
    return a.monic()


def is_squarefree(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic least-degree polynomial annihilating m.

    Found as the first linear dependence among I, m, m^2, ... in
    flattened coordinates.
    """
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    field = m.field
    n = m.nrows
    powers = [Matrix.identity(field, n)]
    flat = [_flatten(powers[0])]
    while True:
        nxt = powers[-1] * m
        target = _flatten(nxt)
        stack = Matrix.from_columns(field, flat, nrows=n * n)
        sol = solve(stack, target)
        if sol is not None:
            coeffs = [-c for c in sol] + [field.one]
            return Polynomial(field, coeffs)
        powers.append(nxt)
        flat.append(target)


def _flatten(m: Matrix):
    return tuple(x for row in m.rows for x in row)


def _divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def roots_in_field(p: Polynomial):
    """All roots of p lying in its field, as a set of scalars.

    Rationals: rational-root search over divisor pairs of the extreme
    integer coefficients after clearing denominators.  Prime fields:
    exhaustive evaluation.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial")
    field = p.field
    coeffs = list(p.coeffs)
    roots = set()
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.add(field.zero)
        coeffs.pop(0)
    stripped = Polynomial(field, coeffs)
    if stripped.degree == 0:
        return roots
    if isinstance(field, PrimeField):
        for x in field.elements():
            if stripped(x) == 0:
                roots.add(x)
        return roots
    if not isinstance(field, RationalField):
        raise FieldError("unsupported field %r" % (field,))
    denom = lcm(*[c.denominator for c in stripped.coeffs])
    ints = [int(c * denom) for c in stripped.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    lead, trail = ints[-1], ints[0]
    seen = set()
    for num in _divisors(trail):
        for den in _divisors(lead):
            cand = Fraction(num, den)
            for r in (cand, -cand):
                if r in seen:
                    continue
                seen.add(r)
                if stripped(r) == 0:
                    roots.add(r)
    return roots


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """A linear subspace in canonical form.

    The stored basis is the nonzero rows of the rref of any spanning
    set, so two subspaces are equal exactly when their stored bases are
    equal, and reports built from them are deterministic.
    """

    __slots__ = ("field", "ambient_dim", "rows")

    def __init__(self, field: Field, ambient_dim: int, rows):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = [tuple(field.scalar(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector of wrong length in span")
        if not vectors:
            return cls(field, ambient_dim, [])
        reduced, rank, _ = rref(Matrix(field, vectors))
        return cls(field, ambient_dim, reduced.rows[:rank])

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls.span(field, ambient_dim,
                        Matrix.identity(field, ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def vectors(self):
        return list(self.rows)

    def basis_matrix(self) -> Matrix:
        """Basis as columns, matching the canonical rref rows."""
        return Matrix.from_columns(self.field, self.rows, nrows=self.ambient_dim)

    def contains(self, vec) -> bool:
        if all(x == 0 for x in vec):
            return True
        if not self.rows:
            return False
        probe = Subspace.span(self.field, self.ambient_dim,
                              list(self.rows) + [tuple(vec)])
        return probe.dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim,
                             list(self.rows) + list(other.rows))

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        cols = [list(v) for v in self.rows] + [[-x for x in v] for v in other.rows]
        stacked = Matrix.from_columns(self.field, cols, nrows=self.ambient_dim)
        vecs = []
        for k in kernel_vectors(stacked):
            coeff = k[:self.dim]
            vec = [self.field.zero] * self.ambient_dim
            for c, basis_vec in zip(coeff, self.rows):
                if c != 0:
                    vec = [a + c * b for a, b in zip(vec, basis_vec)]
            vecs.append(tuple(vec))
        return Subspace.span(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

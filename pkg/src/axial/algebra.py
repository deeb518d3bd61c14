"""Finite-dimensional (not necessarily associative or commutative)
algebras presented by structure constants.

An `Algebra` is a list of basis labels plus the full n-by-n table of
basis products; elements are coordinate vectors over that basis.  The
table must be total: constructors reject presentations with missing
products instead of guessing zeros.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import Field, FieldError
from .linalg import Matrix, Subspace, kernel_vectors

_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


class AlgebraError(ValueError):
    """Malformed presentation or mismatched element."""


@dataclass(frozen=True)
class Element:
    """A coordinate vector over the ambient basis."""

    coords: tuple

    def __add__(self, other: "Element") -> "Element":
        if len(self.coords) != len(other.coords):
            raise AlgebraError("dimension mismatch")
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        if len(self.coords) != len(other.coords):
            raise AlgebraError("dimension mismatch")
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coords))

    def __rmul__(self, scalar) -> "Element":
        return Element(tuple(scalar * a for a in self.coords))

    def scale(self, scalar) -> "Element":
        return Element(tuple(scalar * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __len__(self) -> int:
        return len(self.coords)


class Algebra:
    """An algebra given by a total structure-constant table."""

    def __init__(self, field: Field, labels, table):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise AlgebraError("duplicate basis labels")
        for name in labels:
            if not _NAME_RE.match(name):
                raise AlgebraError("bad basis label %r" % name)
        n = len(labels)
        if n == 0:
            raise AlgebraError("empty basis")
        rows = []
        for i, row in enumerate(table):
            row = tuple(row)
            if len(row) != n:
                raise AlgebraError("structure table is not %d x %d" % (n, n))
            out = []
            for j, prod in enumerate(row):
                coords = tuple(field.scalar(c) for c in prod.coords) \
                    if isinstance(prod, Element) else tuple(field.scalar(c) for c in prod)
                if len(coords) != n:
                    raise AlgebraError("product of basis %d,%d has wrong length" % (i, j))
                out.append(Element(coords))
            rows.append(tuple(out))
        if len(rows) != n:
            raise AlgebraError("structure table is not %d x %d" % (n, n))
        self.field = field
        self.labels = labels
        self.table = tuple(rows)

    @property
    def dim(self) -> int:
        return len(self.labels)

    # -- element construction -----------------------------------------

    def zero(self) -> Element:
        return Element((self.field.zero,) * self.dim)

    def basis_element(self, i: int) -> Element:
        coords = [self.field.zero] * self.dim
        coords[i] = self.field.one
        return Element(tuple(coords))

    def element(self, coords) -> Element:
        coords = tuple(self.field.scalar(c) for c in coords)
        if len(coords) != self.dim:
            raise AlgebraError("coordinate vector of wrong length")
        return Element(coords)

    def named(self, label: str) -> Element:
        return self.basis_element(self.labels.index(label))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    # -- products -----------------------------------------------------

    def mul(self, x: Element, y: Element) -> Element:
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError("dimension mismatch")
        acc = self.zero()
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y.coords):
                if yj == 0:
                    continue
                acc = acc + (xi * yj) * row[j]
        return acc

    def left_mult_matrix(self, y: Element) -> Matrix:
        cols = [self.mul(y, self.basis_element(j)).coords for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, nrows=self.dim)

    def right_mult_matrix(self, y: Element) -> Matrix:
        cols = [self.mul(self.basis_element(j), y).coords for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, nrows=self.dim)

    def is_idempotent(self, x: Element) -> bool:
        return self.mul(x, x) == x

    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(n) for j in range(i + 1, n))

    # -- subspaces ----------------------------------------------------

    def span(self, elements) -> Subspace:
        return Subspace.span(self.field, self.dim, [e.coords for e in elements])

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def subalgebra(self, generators) -> Subspace:
        """Least subspace containing the generators and closed under the
        product; reaches its fixpoint in at most dim steps."""
        generators = list(generators)
        if not generators:
            raise AlgebraError("subalgebra of an empty generating set")
        space = self.span(generators)
        while True:
            vecs = [Element(v) for v in space.vectors]
            products = [self.mul(u, v) for u in vecs for v in vecs]
            grown = space.sum(self.span(products))
            if grown.dim == space.dim:
                return grown
            space = grown

    def is_ideal(self, w: Subspace) -> bool:
        vecs = [Element(v) for v in w.vectors]
        for i in range(self.dim):
            e = self.basis_element(i)
            for v in vecs:
                if not (w.contains(self.mul(e, v).coords)
                        and w.contains(self.mul(v, e).coords)):
                    return False
        return True

    def is_square_zero(self, w: Subspace) -> bool:
        vecs = [Element(v) for v in w.vectors]
        return all(self.mul(u, v).is_zero() for u in vecs for v in vecs)

    def is_annihilating(self, w: Subspace) -> bool:
        vecs = [Element(v) for v in w.vectors]
        for i in range(self.dim):
            e = self.basis_element(i)
            for v in vecs:
                if not (self.mul(e, v).is_zero() and self.mul(v, e).is_zero()):
                    return False
        return True

    def left_annihilated(self) -> Subspace:
        """The subspace of z with x z = 0 for every x in the algebra."""
        rows = []
        for i in range(self.dim):
            rows.extend(self.left_mult_matrix(self.basis_element(i)).rows)
        stacked = Matrix(self.field, rows)
        return Subspace.span(self.field, self.dim, kernel_vectors(stacked))

    # -- text ---------------------------------------------------------

    def render_element(self, x: Element) -> str:
        """Canonical element text: terms in basis order, unit scalars
        elided, negative scalars folded into the join."""
        parts = []
        for label, c in zip(self.labels, x.coords):
            if c == 0:
                continue
            neg = self.field.render(c).startswith("-")
            mag = self.field.render(-c if neg else c)
            term = label if mag == "1" else "%s*%s" % (mag, label)
            if not parts:
                parts.append("-" + term if neg else term)
            else:
                parts.append(("- " if neg else "+ ") + term)
        if not parts:
            return "0"
        return " ".join(parts)

    def parse_element(self, text: str) -> Element:
        """Parse element text: `scalar*name` terms joined by +/-, with
        the scalar optional (defaulting to 1)."""
        text = text.strip()
        if text == "0":
            return self.zero()
        tokens = re.findall(r"[+-]|[^+\-\s]+", text)
        coords = [self.field.zero] * self.dim
        sign = 1
        expect_term = True
        for tok in tokens:
            if tok in "+-":
                if expect_term and tok == "-":
                    sign = -sign
                    continue
                if expect_term:
                    raise AlgebraError("misplaced %r in element %r" % (tok, text))
                sign = -1 if tok == "-" else 1
                expect_term = True
                continue
            if not expect_term:
                raise AlgebraError("missing +/- before %r in element %r" % (tok, text))
            if "*" in tok:
                scalar_text, _, name = tok.partition("*")
                try:
                    scalar = self.field.parse(scalar_text)
                except FieldError as exc:
                    raise AlgebraError(str(exc)) from None
            else:
                scalar, name = self.field.one, tok
            if name not in self.labels:
                raise AlgebraError("unknown basis name %r in element %r" % (name, text))
            idx = self.labels.index(name)
            coords[idx] = coords[idx] + (sign * scalar if sign < 0 else scalar)
            sign = 1
            expect_term = False
        if expect_term:
            raise AlgebraError("dangling sign in element %r" % text)
        return Element(tuple(coords))

    def __eq__(self, other):
        return (isinstance(other, Algebra)
                and self.field == other.field
                and self.labels == other.labels
                and self.table == other.table)

    def __repr__(self):
        return "Algebra(%s, dim=%d)" % (self.field, self.dim)

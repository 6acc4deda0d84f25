"""Sparse square matrices over a local ring, constrained to fixed shapes.

A shape is a set of positions closed under matrix multiplication; the
matrices supported on it form a subring of the full matrix ring.  The
built-in shapes (1-indexed position sets, rows by semicolons):

=====  ====================================  ======================
name   mask                                  picture
=====  ====================================  ======================
T2     (1,1) (1,2) (2,2)                     [a b; 0 c]
T3     (1,1) (2,1) (2,2) (2,3) (3,3)         [a 0 0; b c d; 0 0 e]
L3     (1,1) (2,2) (3,1) (3,3)               [a 0 0; 0 b 0; c 0 d]
LOW3   (1,1) (2,2) (3,1) (3,2) (3,3)         [a 0 0; 0 b 0; c d e]
UP3    (1,1) (1,3) (2,2) (2,3) (3,3)         [a 0 b; 0 c d; 0 0 e]
S1     (1,1) (1,3) (2,2) (3,3)               [a 0 b; 0 c 0; 0 0 d]
S2     (1,1) (2,2) (3,2) (3,3)               [a 0 0; 0 b 0; 0 c d]
M2     full 2x2                              --
M3     full 3x3                              --
TN(n)  upper triangular n x n                --
=====  ====================================  ======================

For every triangular-type shape over a local ring a matrix is a unit of
the shape ring exactly when its diagonal entries are units, and lies in
the radical exactly when its diagonal entries do; for M2 the tests are
det(A) a unit, respectively all entries radical.  M3 carries no unit or
radical test here; it exists for input/output and negative results only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import (
    LocalRing,
    QpolarError,
    RingElement,
    RingMismatch,
    parse_ring,
)


class ShapeMismatch(QpolarError):
    """A matrix value does not fit the requested shape."""


class UnsupportedShape(QpolarError):
    """The operation is not defined for this shape."""


class MatrixParseError(QpolarError):
    """A matrix literal could not be parsed."""


@dataclass(frozen=True)
class Shape:
    """A multiplication-closed set of positions in an n x n grid."""

    name: str
    n: int
    mask: frozenset
    unit_rule: str = "diag"  # "diag", "det2", or "none"

    def __post_init__(self):
        for i in range(self.n):
            if (i, i) not in self.mask:
                raise ShapeMismatch(f"shape {self.name} is missing diagonal ({i},{i})")

    @property
    def positions(self):
        return sorted(self.mask)

    def closed_under_product(self) -> bool:
        for (i, k1) in self.mask:
            for (k2, j) in self.mask:
                if k1 == k2 and (i, j) not in self.mask:
                    return False
        return True

    def product_terms(self):
        # For each mask position (i,j), the k's contributing a[i][k]*b[k][j].
        terms = {}
        for (i, j) in self.positions:
            terms[(i, j)] = [
                k for k in range(self.n) if (i, k) in self.mask and (k, j) in self.mask
            ]
        return terms

    def __repr__(self):
        return f"Shape({self.name})"


def _mask(pairs):
    return frozenset((i - 1, j - 1) for i, j in pairs)


T2 = Shape("T2", 2, _mask([(1, 1), (1, 2), (2, 2)]))
T3 = Shape("T3", 3, _mask([(1, 1), (2, 1), (2, 2), (2, 3), (3, 3)]))
L3 = Shape("L3", 3, _mask([(1, 1), (2, 2), (3, 1), (3, 3)]))
LOW3 = Shape("LOW3", 3, _mask([(1, 1), (2, 2), (3, 1), (3, 2), (3, 3)]))
UP3 = Shape("UP3", 3, _mask([(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)]))
S1 = Shape("S1", 3, _mask([(1, 1), (1, 3), (2, 2), (3, 3)]))
S2 = Shape("S2", 3, _mask([(1, 1), (2, 2), (3, 2), (3, 3)]))
M2 = Shape("M2", 2, frozenset((i, j) for i in range(2) for j in range(2)), "det2")
M3 = Shape("M3", 3, frozenset((i, j) for i in range(3) for j in range(3)), "none")


def TN(n: int) -> Shape:
    """Upper triangular n x n."""
    if n == 2:
        return T2
    return Shape(f"TN{n}", n, frozenset((i, j) for i in range(n) for j in range(i, n)))


SHAPES = {s.name: s for s in (T2, T3, L3, LOW3, UP3, S1, S2, M2, M3)}


def parse_shape(name: str) -> Shape:
    key = name.strip().upper()
    if key in SHAPES:
        return SHAPES[key]
    if key.startswith("TN") and key[2:].isdigit():
        return TN(int(key[2:]))
    raise MatrixParseError(f"unknown shape {name!r}")


_TERMS_CACHE: dict = {}


def _terms_for(shape: Shape):
    got = _TERMS_CACHE.get(shape.name)
    if got is None:
        got = _TERMS_CACHE[shape.name] = shape.product_terms()
    return got


class ShapedMatrix:
    """An immutable matrix over a local ring, supported on a shape."""

    __slots__ = ("ring", "shape", "rows")

    def __init__(self, ring: LocalRing, shape: Shape, rows):
        self.ring = ring
        self.shape = shape
        self.rows = rows  # tuple of tuples of RingElement, full n x n

    @classmethod
    def from_rows(cls, ring: LocalRing, shape: Shape, rows) -> ShapedMatrix:
        n = shape.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ShapeMismatch(f"expected a {n}x{n} grid for shape {shape.name}")
        zero = ring.zero
        grid = []
        for i in range(n):
            out = []
            for j in range(n):
                v = rows[i][j]
                e = ring.parse(v) if isinstance(v, str) else ring.element(v)
                if (i, j) not in shape.mask and e != zero:
                    raise ShapeMismatch(
                        f"entry ({i + 1},{j + 1}) must be zero in shape {shape.name}"
                    )
                out.append(e)
            grid.append(tuple(out))
        return cls(ring, shape, tuple(grid))

    @classmethod
    def zero(cls, ring: LocalRing, shape: Shape) -> ShapedMatrix:
        z = ring.zero
        return cls(ring, shape, tuple(tuple(z for _ in range(shape.n)) for _ in range(shape.n)))

    @classmethod
    def identity(cls, ring: LocalRing, shape: Shape) -> ShapedMatrix:
        z, o = ring.zero, ring.one
        return cls(
            ring,
            shape,
            tuple(
                tuple(o if i == j else z for j in range(shape.n)) for i in range(shape.n)
            ),
        )

    def entry(self, i: int, j: int) -> RingElement:
        return self.rows[i][j]

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.shape.n))

    def _check_peer(self, other):
        if not isinstance(other, ShapedMatrix):
            raise TypeError(f"expected a ShapedMatrix, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatch("matrices over different rings")
        if other.shape.name != self.shape.name:
            raise ShapeMismatch(
                f"cannot combine shapes {self.shape.name} and {other.shape.name}"
            )

    def __add__(self, other):
        self._check_peer(other)
        return ShapedMatrix(
            self.ring,
            self.shape,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __sub__(self, other):
        self._check_peer(other)
        return ShapedMatrix(
            self.ring,
            self.shape,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def __neg__(self):
        return ShapedMatrix(
            self.ring, self.shape, tuple(tuple(-a for a in r) for r in self.rows)
        )

    def __mul__(self, other):
        self._check_peer(other)
        n = self.shape.n
        zero = self.ring.zero
        terms = _terms_for(self.shape)
        grid = [[zero] * n for _ in range(n)]
        a, b = self.rows, other.rows
        for (i, j), ks in terms.items():
            acc = zero
            for k in ks:
                acc = acc + a[i][k] * b[k][j]
            grid[i][j] = acc
        return ShapedMatrix(self.ring, self.shape, tuple(tuple(r) for r in grid))

    def scale(self, c: RingElement) -> ShapedMatrix:
        """Multiply every entry by the scalar c (the base ring is commutative)."""
        return ShapedMatrix(
            self.ring, self.shape, tuple(tuple(c * a for a in r) for r in self.rows)
        )

    def __eq__(self, other):
        return (
            isinstance(other, ShapedMatrix)
            and other.ring == self.ring
            and other.shape.name == self.shape.name
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash((self.ring, self.shape.name, self.rows))

    def is_unit(self) -> bool:
        """Invertibility inside the shape ring."""
        rule = self.shape.unit_rule
        if rule == "diag":
            return all(d.is_unit() for d in self.diagonal())
        if rule == "det2":
            return self.det2().is_unit()
        raise UnsupportedShape(f"no unit test for shape {self.shape.name}")

    def in_jacobson(self) -> bool:
        """Membership in the radical of the shape ring."""
        rule = self.shape.unit_rule
        if rule == "diag":
            return all(d.in_jacobson() for d in self.diagonal())
        if rule == "det2":
            return all(a.in_jacobson() for row in self.rows for a in row)
        raise UnsupportedShape(f"no radical test for shape {self.shape.name}")

    def det2(self) -> RingElement:
        if self.shape.n != 2:
            raise UnsupportedShape("det2 needs a 2x2 shape")
        r = self.rows
        return r[0][0] * r[1][1] - r[0][1] * r[1][0]

    def trace(self) -> RingElement:
        t = self.ring.zero
        for d in self.diagonal():
            t = t + d
        return t

    def __repr__(self):
        return "[" + "; ".join(
            ", ".join(repr(a) for a in row) for row in self.rows
        ) + "]"

    def to_json(self) -> dict:
        return {
            "ring": repr(self.ring),
            "shape": self.shape.name,
            "rows": [[repr(a) for a in row] for row in self.rows],
        }


def matrix_from_json(data: dict) -> ShapedMatrix:
    ring = parse_ring(data["ring"])
    shape = parse_shape(data["shape"])
    return ShapedMatrix.from_rows(ring, shape, data["rows"])


def parse_matrix(ring: LocalRing, shape: Shape, text: str) -> ShapedMatrix:
    """Parse ``[1,0,0; 1,2,0; 0,0,2]`` (brackets optional) over the ring."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise MatrixParseError(f"unbalanced brackets in {text!r}")
        s = s[1:-1]
    rows = [r for r in s.split(";")]
    if len(rows) != shape.n:
        raise MatrixParseError(
            f"expected {shape.n} rows for shape {shape.name}, got {len(rows)}"
        )
    grid = []
    for i, row in enumerate(rows):
        entries = [e.strip() for e in row.split(",")]
        if len(entries) != shape.n:
            raise MatrixParseError(
                f"row {i + 1} has {len(entries)} entries, expected {shape.n}"
            )
        grid.append(entries)
    try:
        return ShapedMatrix.from_rows(ring, shape, grid)
    except QpolarError as exc:
        raise MatrixParseError(f"bad matrix literal: {exc}") from None


@dataclass
class QuadraticCharPoly:
    """t^2 - tr*t + det for a 2x2 matrix, with an optional root pair."""

    tr: RingElement
    det: RingElement
    roots: tuple | None = None

    def evaluate(self, t: RingElement) -> RingElement:
        return t * t - self.tr * t + self.det

    def __str__(self):
        out = "t^2"
        if self.tr:
            ts = repr(self.tr)
            out += f" - {ts}*t" if ts != "1" else " - t"
        if self.det:
            out += f" + {self.det!r}"
        return out


def char_poly_2x2(a: ShapedMatrix) -> QuadraticCharPoly:
    """Trace and determinant of a 2x2 shaped matrix, as a monic quadratic."""
    if a.shape.n != 2:
        raise UnsupportedShape("char_poly_2x2 needs a 2x2 shape")
    return QuadraticCharPoly(a.trace(), a.det2())


# ---------------------------------------------------------------------------
# Shape isomorphisms.
#
# Each 3x3 sparse shape is a ring of the form (product of diagonal copies
# of R) plus connecting positions; two shapes are isomorphic when their
# connecting positions can be matched with left/right actions preserved.
# The maps below relocate entries; `reverses_products` marks the one map
# that is an anti-isomorphism (it matches T3's connecting positions to
# UP3's only after transposition, so phi(A*B) = phi(B)*phi(A)).  For
# witness transport the distinction is harmless because every component
# of a decomposition commutes with the matrix it decomposes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShapeIso:
    """Entry relocation between two shapes of the same size."""

    name: str
    source: Shape
    target: Shape
    moves: tuple  # pairs ((i,j) source, (i,j) target)
    reverses_products: bool = False

    def apply(self, a: ShapedMatrix) -> ShapedMatrix:
        if a.shape.name != self.source.name:
            raise ShapeMismatch(f"{self.name} expects shape {self.source.name}")
        n = self.target.n
        zero = a.ring.zero
        grid = [[zero] * n for _ in range(n)]
        for (si, sj), (ti, tj) in self.moves:
            grid[ti][tj] = a.rows[si][sj]
        return ShapedMatrix(a.ring, self.target, tuple(tuple(r) for r in grid))

    def inverse(self) -> ShapeIso:
        return ShapeIso(
            f"{self.name}^-1",
            self.target,
            self.source,
            tuple((dst, src) for src, dst in self.moves),
            self.reverses_products,
        )


def apply_iso(iso: ShapeIso, a: ShapedMatrix) -> ShapedMatrix:
    return iso.apply(a)


def _moves(pairs):
    return tuple(
        (((si - 1, sj - 1)), ((ti - 1, tj - 1))) for (si, sj), (ti, tj) in pairs
    )


# T3 -> LOW3: the middle row of T3 becomes the bottom row of LOW3.
ISO_T3_TO_LOW3 = ShapeIso(
    "T3->LOW3",
    T3,
    LOW3,
    _moves(
        [
            ((1, 1), (1, 1)),
            ((3, 3), (2, 2)),
            ((2, 1), (3, 1)),
            ((2, 3), (3, 2)),
            ((2, 2), (3, 3)),
        ]
    ),
)

ISO_LOW3_TO_T3 = ISO_T3_TO_LOW3.inverse()

# UP3 -> T3 is transposition followed by the LOW3 relabelling, hence an
# anti-isomorphism: [a11 0 a13; 0 a22 a23; 0 0 a33] -> [a11 0 0; a13 a33 a23; 0 0 a22].
ISO_UP3_TO_T3 = ShapeIso(
    "UP3->T3",
    UP3,
    T3,
    _moves(
        [
            ((1, 1), (1, 1)),
            ((1, 3), (2, 1)),
            ((3, 3), (2, 2)),
            ((2, 3), (2, 3)),
            ((2, 2), (3, 3)),
        ]
    ),
    reverses_products=True,
)

# S1 -> S2: [a11 0 a13; 0 a22 0; 0 0 a33] -> [a22 0 0; 0 a33 0; 0 a13 a11].
ISO_S1_TO_S2 = ShapeIso(
    "S1->S2",
    S1,
    S2,
    _moves(
        [
            ((2, 2), (1, 1)),
            ((3, 3), (2, 2)),
            ((1, 3), (3, 2)),
            ((1, 1), (3, 3)),
        ]
    ),
)


@dataclass(frozen=True)
class SplitIso:
    """An isomorphism from a 3x3 shape onto T2 x R (matrix part, scalar part).

    ``t2_from`` says which source position lands at each T2 position; the
    remaining diagonal position supplies the scalar factor.
    """

    name: str
    source: Shape
    t2_from: tuple  # pairs ((i,j) in T2, (i,j) in source), 0-indexed
    scalar_from: tuple  # (i,j) in source

    def apply(self, a: ShapedMatrix):
        if a.shape.name != self.source.name:
            raise ShapeMismatch(f"{self.name} expects shape {self.source.name}")
        zero = a.ring.zero
        grid = [[zero, zero], [zero, zero]]
        for (ti, tj), (si, sj) in self.t2_from:
            grid[ti][tj] = a.rows[si][sj]
        t2 = ShapedMatrix(a.ring, T2, tuple(tuple(r) for r in grid))
        return t2, a.rows[self.scalar_from[0]][self.scalar_from[1]]

    def build_source(self, t2: ShapedMatrix, scalar: RingElement) -> ShapedMatrix:
        zero = t2.ring.zero
        n = self.source.n
        grid = [[zero] * n for _ in range(n)]
        for (ti, tj), (si, sj) in self.t2_from:
            grid[si][sj] = t2.rows[ti][tj]
        grid[self.scalar_from[0]][self.scalar_from[1]] = scalar
        return ShapedMatrix(t2.ring, self.source, tuple(tuple(r) for r in grid))


# L3: [a11 0 0; 0 a22 0; a31 0 a33] -> ([a33 a31; 0 a11], a22).
SPLIT_L3 = SplitIso(
    "L3->T2xR",
    L3,
    (((0, 0), (2, 2)), ((0, 1), (2, 0)), ((1, 1), (0, 0))),
    (1, 1),
)

# S1: [a11 0 a13; 0 a22 0; 0 0 a33] -> ([a11 a13; 0 a33], a22).
SPLIT_S1 = SplitIso(
    "S1->T2xR",
    S1,
    (((0, 0), (0, 0)), ((0, 1), (0, 2)), ((1, 1), (2, 2))),
    (1, 1),
)

# S2: [a11 0 0; 0 a22 0; 0 a32 a33] -> ([a33 a32; 0 a22], a11).
SPLIT_S2 = SplitIso(
    "S2->T2xR",
    S2,
    (((0, 0), (2, 2)), ((0, 1), (2, 1)), ((1, 1), (1, 1))),
    (0, 0),
)


# ---------------------------------------------------------------------------
# The T2 corner of T3.
#
# With E = diag(1,1,0) the corner E*T3*E consists of T3 matrices with
# zero third row and column.  Matching left and right actions on the
# connecting entry forces the identification
#
#     [a b; 0 c]  <->  [c 0 0; b a 0; 0 0 0]
#
# (the T2 diagonal swaps), which is the unique multiplicative one; it is
# verified on random pairs in the tests.
# ---------------------------------------------------------------------------

_CORNER_POSITIONS = ((0, 0), (1, 0), (1, 1))


def corner_projector(ring: LocalRing) -> ShapedMatrix:
    """The idempotent diag(1,1,0) of T3, identity of the embedded T2 corner."""
    z, o = ring.zero, ring.one
    return ShapedMatrix(ring, T3, ((o, z, z), (z, o, z), (z, z, z)))


def corner_embed_t2(a: ShapedMatrix) -> ShapedMatrix:
    """Embed a T2 matrix into the diag(1,1,0) corner of T3."""
    if a.shape.name != T2.name:
        raise ShapeMismatch("corner_embed_t2 expects shape T2")
    z = a.ring.zero
    r = a.rows
    return ShapedMatrix(
        a.ring,
        T3,
        ((r[1][1], z, z), (r[0][1], r[0][0], z), (z, z, z)),
    )


def corner_extract_t2(a: ShapedMatrix) -> ShapedMatrix:
    """Invert :func:`corner_embed_t2`; the input must lie in the corner."""
    if a.shape.name != T3.name:
        raise ShapeMismatch("corner_extract_t2 expects shape T3")
    zero = a.ring.zero
    for (i, j) in T3.positions:
        if (i, j) not in _CORNER_POSITIONS and a.rows[i][j] != zero:
            raise ShapeMismatch(
                f"entry ({i + 1},{j + 1}) is outside the diag(1,1,0) corner"
            )
    r = a.rows
    return ShapedMatrix(a.ring, T2, ((r[1][1], r[1][0]), (zero, r[0][0])))

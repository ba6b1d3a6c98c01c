"""Exact linear algebra over the rationals.

Everything downstream rests on this module: dense matrices with
``fractions.Fraction`` entries, subspaces of Q^n held in a canonical
basis, linear solving, and signatures of symmetric bilinear forms by
exact congruence diagonalization.  There are no floats and no
tolerances anywhere.

The canonical basis of a subspace is its reduced column echelon form:
every basis column has a leading 1 (its pivot coordinate), pivot
coordinates strictly increase from one column to the next, and a pivot
coordinate is zero in every other basis column.  This is the unique
such basis of a given span (it is the reduced row echelon form of the
transposed generator matrix), so two subspaces are equal iff their
basis grids are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}: pass int, Fraction or a rational string")
    return Fraction(x)


def vector(entries: Iterable) -> Vector:
    """Coerce an iterable of exact numbers to a tuple of Fractions."""
    return tuple(_frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def _echelonize(rows: list[list[Fraction]], reduced: bool = True,
                pivot_limit: int | None = None) -> list[int]:
    """Row-reduce ``rows`` in place with leftmost pivots.

    Returns the pivot column indices in order.  Pivots are searched only
    in the first ``pivot_limit`` columns (all of them by default), which
    is how augmented systems keep their right-hand sides out of the
    pivot set; row operations always span the full width.  With
    ``reduced`` the result is the unique RREF: pivots are normalized to
    1 and cleared above as well as below.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    limit = n_cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    rank = 0
    for c in range(limit):
        if rank == n_rows:
            break
        p = next((i for i in range(rank, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != rank:
            rows[rank], rows[p] = rows[p], rows[rank]
        lead = rows[rank][c]
        row_r = rows[rank]
        if lead != 1:
            for j in range(c, n_cols):
                row_r[j] /= lead
        span = range(n_rows) if reduced else range(rank + 1, n_rows)
        for i in span:
            if i == rank:
                continue
            f = rows[i][c]
            if f:
                row_i = rows[i]
                for j in range(c, n_cols):
                    row_i[j] -= f * row_r[j]
        pivots.append(c)
        rank += 1
    return pivots


class RationalMatrix:
    """Immutable dense matrix with Fraction entries."""

    __slots__ = ("n_rows", "n_cols", "_rows")

    def __init__(self, rows: Iterable[Iterable], n_cols: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data:
            widths = {len(row) for row in data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if n_cols is not None and n_cols != width:
                raise ValueError(f"rows have {width} entries, expected {n_cols}")
            n_cols = width
        elif n_cols is None:
            n_cols = 0
        self._rows = data
        self.n_rows = len(data)
        self.n_cols = n_cols

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n_cols=n)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RationalMatrix":
        return cls([[0] * n_cols for _ in range(n_rows)], n_cols=n_cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], n_rows: int | None = None) -> "RationalMatrix":
        cols = [vector(c) for c in columns]
        if cols:
            heights = {len(c) for c in cols}
            if len(heights) != 1:
                raise ValueError("ragged columns")
            n_rows = heights.pop() if n_rows is None else n_rows
            if n_rows != len(cols[0]):
                raise ValueError("column height does not match n_rows")
        elif n_rows is None:
            n_rows = 0
        return cls([[c[i] for c in cols] for i in range(n_rows)], n_cols=len(cols))

    @classmethod
    def hstack(cls, *mats: "RationalMatrix") -> "RationalMatrix":
        if not mats:
            raise ValueError("nothing to stack")
        height = {m.n_rows for m in mats}
        if len(height) != 1:
            raise ValueError("row counts differ")
        n_rows = height.pop()
        rows = [sum((m.row(i) for m in mats), ()) for i in range(n_rows)]
        return cls(rows, n_cols=sum(m.n_cols for m in mats))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.n_cols))

    def to_rows(self) -> list[list[Fraction]]:
        """Mutable copy of the entries, for elimination routines."""
        return [list(row) for row in self._rows]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._rows[i][j] for i in range(self.n_rows)] for j in range(self.n_cols)],
            n_cols=self.n_rows,
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        rows = [
            [sum(a * b for a, b in zip(row, col)) for col in ocols]
            for row in self._rows
        ]
        return RationalMatrix(rows, n_cols=other.n_cols)

    def apply(self, v: Sequence) -> Vector:
        """Matrix times column vector."""
        w = vector(v)
        if len(w) != self.n_cols:
            raise ValueError(f"vector of length {len(w)} against {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(row, w)) for row in self._rows)

    def is_symmetric(self) -> bool:
        if self.n_rows != self.n_cols:
            return False
        return all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.n_rows)
            for j in range(i)
        )

    def rank(self) -> int:
        rows = self.to_rows()
        return len(_echelonize(rows, reduced=False))

    def kernel(self) -> "Subspace":
        """Null space {x : Mx = 0} as a canonical subspace of Q^n_cols."""
        rows = self.to_rows()
        pivots = _echelonize(rows)
        pivot_set = set(pivots)
        basis = []
        for free in range(self.n_cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.n_cols
            v[free] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -rows[i][free]
            basis.append(v)
        return Subspace(self.n_cols, basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.n_cols == other.n_cols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n_cols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self._rows)
        return f"RationalMatrix({self.n_rows}x{self.n_cols}: {body})"


def solve_many(M: RationalMatrix, rhs: Sequence[Sequence]) -> list[Vector | None]:
    """Solve Mx = b for each right-hand side, sharing one elimination.

    Returns, per b, a solution with all free variables set to zero
    (under leftmost-pivot echelon form) or None if inconsistent.
    """
    targets = [vector(b) for b in rhs]
    for b in targets:
        if len(b) != M.n_rows:
            raise ValueError(f"right-hand side of length {len(b)} against {M.shape} matrix")
    aug = [list(row) + [b[i] for b in targets] for i, row in enumerate(M.to_rows())]
    if not aug:
        # No equations at all: x = 0 works iff each b is (vacuously) met.
        return [zero_vector(M.n_cols) for _ in targets]
    pivots = _echelonize(aug, pivot_limit=M.n_cols)
    rank = len(pivots)
    out: list[Vector | None] = []
    for k in range(len(targets)):
        col = M.n_cols + k
        if any(aug[i][col] != 0 for i in range(rank, len(aug))):
            out.append(None)
            continue
        x = [Fraction(0)] * M.n_cols
        for i, p in enumerate(pivots):
            x[p] = aug[i][col]
        out.append(tuple(x))
    return out


def solve(M: RationalMatrix, b: Sequence) -> Vector | None:
    """One solution of Mx = b (free variables zero), or None if none exists."""
    return solve_many(M, [b])[0]


class Subspace:
    """A linear subspace of Q^n with its canonical echelon basis.

    Construction canonicalizes any generating set, so equality of
    subspaces is literal equality of their basis grids.  Sums,
    intersections and membership are all exact.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        rows = []
        for v in vectors:
            w = [_frac(x) for x in v]
            if len(w) != ambient_dim:
                raise ValueError(f"generator of length {len(w)} in Q^{ambient_dim}")
            rows.append(w)
        pivots = _echelonize(rows)
        kept = rows[: len(pivots)]
        self.ambient_dim = ambient_dim
        self.basis = RationalMatrix.from_columns(kept, n_rows=ambient_dim)
        self._pivots = tuple(pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim).columns())

    @property
    def dim(self) -> int:
        return self.basis.n_cols

    def columns(self) -> tuple[Vector, ...]:
        return self.basis.columns()

    def contains(self, v: Sequence) -> bool:
        w = list(vector(v))
        if len(w) != self.ambient_dim:
            raise ValueError(f"vector of length {len(w)} in Q^{self.ambient_dim}")
        for col, p in zip(self.basis.columns(), self._pivots):
            c = w[p]
            if c:
                for j in range(self.ambient_dim):
                    w[j] -= c * col[j]
        return not any(w)

    def __contains__(self, v: Sequence) -> bool:
        return self.contains(v)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.ambient_dim, self.columns() + other.columns())

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection, via the kernel of the stacked system [U | -V]."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        neg = RationalMatrix([[-x for x in row] for row in other.basis._rows],
                             n_cols=other.dim)
        stacked = RationalMatrix.hstack(self.basis, neg)
        meet = []
        for k in stacked.kernel().columns():
            meet.append(self.basis.apply(k[: self.dim]))
        return Subspace(self.ambient_dim, meet)

    def __le__(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(c) for c in self.columns())

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


class _EchelonTracker:
    """Incrementally maintained reduced echelon basis (rows are mutually
    reduced, so coefficient extraction is a single indexed read)."""

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, list[Fraction]] = {}

    def residual(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for p, row in self.rows.items():
            c = w[p]
            if c:
                for j in range(self.n):
                    w[j] -= c * row[j]
        return w

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert v; True iff it enlarged the span."""
        w = self.residual(v)
        p = next((j for j, x in enumerate(w) if x != 0), None)
        if p is None:
            return False
        lead = w[p]
        if lead != 1:
            w = [x / lead for x in w]
        for row in self.rows.values():
            c = row[p]
            if c:
                for j in range(self.n):
                    row[j] -= c * w[j]
        self.rows[p] = w
        return True


def quotient_basis(numerator: Subspace, denominator: Subspace) -> list[Vector]:
    """Representatives in N spanning the quotient N / D.

    D must be contained in N.  Representatives are picked
    deterministically: walk N's canonical basis columns left to right
    and keep each one that enlarges the span of D.  The result has
    exactly dim N - dim D vectors, each lying in N.
    """
    numerator._check_ambient(denominator)
    for c in denominator.columns():
        if not numerator.contains(c):
            raise ValueError("denominator is not a subspace of the numerator")
    tracker = _EchelonTracker(numerator.ambient_dim)
    for c in denominator.columns():
        tracker.add(c)
    reps = [c for c in numerator.columns() if tracker.add(c)]
    assert len(reps) == numerator.dim - denominator.dim
    return reps


@dataclass(frozen=True)
class SignatureTriple:
    """Inertia counts (positive, negative, zero) of a symmetric form."""

    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)


def symmetric_signature(S: RationalMatrix) -> SignatureTriple:
    """Inertia of an exactly symmetric matrix by congruence diagonalization.

    Repeatedly pivots on a nonzero diagonal entry of the active block
    and clears its row and column with paired row/column operations.
    When the active diagonal is all zero but some off-diagonal entry
    S[i][j] is not, adding row j to row i and column j to column i
    makes the (i,i) entry 2*S[i][j] != 0 and restores a usable pivot.
    Sylvester's law of inertia makes the sign counts independent of
    the choices made.
    """
    n = S.n_rows
    if n != S.n_cols:
        raise ValueError(f"matrix of shape {S.shape} is not square")
    if not S.is_symmetric():
        raise ValueError("matrix is not exactly symmetric")
    A = S.to_rows()
    n_plus = n_minus = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if A[i][i] != 0), None)
        if p is None:
            spot = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0),
                None,
            )
            if spot is None:
                break  # remaining block is identically zero
            i, j = spot
            for c in range(k, n):
                A[i][c] += A[j][c]
            for r in range(k, n):
                A[r][i] += A[r][j]
            p = i
        if p != k:
            A[k], A[p] = A[p], A[k]
            for r in range(k, n):
                A[r][k], A[r][p] = A[r][p], A[r][k]
        d = A[k][k]
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1
        for i in range(k + 1, n):
            f = A[i][k]
            if f:
                f /= d
                row_k, row_i = A[k], A[i]
                for c in range(k, n):
                    row_i[c] -= f * row_k[c]
                for r in range(k, n):
                    A[r][i] -= f * A[r][k]
        k += 1
    return SignatureTriple(n_plus, n_minus, n - n_plus - n_minus)

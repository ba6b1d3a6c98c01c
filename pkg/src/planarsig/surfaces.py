"""Homology of bordered surfaces, their curves, and boundary tori.

Conventions used throughout:

* A planar surface has boundary circles indexed 0..r, with circle 0
  distinguished.  H_1 has basis m_1, ..., m_r, where m_i is the class
  of boundary circle i; the classes of all r+1 boundary circles sum to
  zero, so circle 0 carries the class -(m_1 + ... + m_r).
* A simple closed curve on the planar surface is determined up to
  homology by the set of boundary circles it encloses.  Curves can be
  given that way, or as an explicit coefficient vector in the m basis.
* The union of boundary tori of (fiber boundary circles) x (disk
  boundary) has H_1 basis ordered (m_0, l_0, m_1, l_1, ..., m_r, l_r),
  where m_i is the fiber-boundary direction and l_i the disk-boundary
  direction of the i-th torus.  The intersection pairing is fixed so
  that Q(m_i, l_j) = delta_ij and is zero on m-m and l-l pairs.
* On a surface of genus g the right-handed Dehn twist along gamma acts
  on H_1 by x -> x + Q(gamma, x) * gamma; on a planar surface the
  intersection form vanishes and every twist acts trivially.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import RationalMatrix, Vector, vector


class NonAllowableCycleError(ValueError):
    """A vanishing cycle is null-homologous on its fiber."""


@dataclass(frozen=True)
class CurveClass:
    """A simple closed curve on a planar surface, up to homology.

    Exactly one of ``encloses`` / ``coefficients`` is set.  ``sign``
    records an orientation flip picked up by canonicalization (the
    enclosed-set description of a curve has no preferred orientation;
    no exported invariant depends on it).
    """

    encloses: frozenset[int] | None = None
    coefficients: tuple[int, ...] | None = None
    sign: int = 1

    def __post_init__(self):
        if (self.encloses is None) == (self.coefficients is None):
            raise ValueError("give exactly one of encloses / coefficients")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.encloses is not None:
            if not self.encloses:
                raise ValueError("enclosed set must be nonempty")
            if any(not isinstance(i, int) or i < 0 for i in self.encloses):
                raise ValueError("enclosed indices must be nonnegative integers")

    @classmethod
    def enclosing(cls, indices: Iterable[int]) -> "CurveClass":
        return cls(encloses=frozenset(indices))

    @classmethod
    def explicit(cls, coefficients: Sequence[int]) -> "CurveClass":
        return cls(coefficients=tuple(int(c) for c in coefficients))

    def negated(self) -> "CurveClass":
        return CurveClass(self.encloses, self.coefficients, -self.sign)


@dataclass(frozen=True)
class PlanarSurface:
    """Genus-zero surface with r+1 boundary circles (r >= 0)."""

    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("boundary count parameter r must be >= 0")

    @property
    def h1_dim(self) -> int:
        return self.r

    def boundary_class(self, i: int) -> tuple[int, ...]:
        """Class of boundary circle i in the basis (m_1, ..., m_r)."""
        if not 0 <= i <= self.r:
            raise ValueError(f"boundary index {i} out of range 0..{self.r}")
        if i == 0:
            return (-1,) * self.r
        return tuple(1 if j == i else 0 for j in range(1, self.r + 1))

    def _checked_subset(self, curve: CurveClass) -> frozenset[int]:
        S = curve.encloses
        assert S is not None
        bad = [i for i in S if i > self.r]
        if bad:
            raise ValueError(f"enclosed index {bad[0]} out of range 0..{self.r}")
        if len(S) == self.r + 1:
            raise ValueError(
                "curve enclosing every boundary circle is null-homologous; "
                "the enclosed set must be a proper subset"
            )
        return S

    def class_vector(self, curve: CurveClass) -> tuple[int, ...]:
        """Homology vector of a curve in the basis (m_1, ..., m_r)."""
        if curve.coefficients is not None:
            if len(curve.coefficients) != self.r:
                raise ValueError(
                    f"coefficient vector of length {len(curve.coefficients)}, expected {self.r}"
                )
            return tuple(curve.sign * c for c in curve.coefficients)
        S = self._checked_subset(curve)
        v = [0] * self.r
        for i in S:
            for j, c in enumerate(self.boundary_class(i)):
                v[j] += c
        return tuple(curve.sign * c for c in v)

    def canonical_curve(self, curve: CurveClass) -> CurveClass:
        """Normal form: enclosed sets never contain circle 0.

        When the given set contains 0 it is replaced by its complement,
        which represents the opposite orientation, so the sign flips.
        """
        if curve.coefficients is not None:
            if len(curve.coefficients) != self.r:
                raise ValueError(
                    f"coefficient vector of length {len(curve.coefficients)}, expected {self.r}"
                )
            return curve
        S = self._checked_subset(curve)
        if 0 not in S:
            return curve
        complement = frozenset(range(self.r + 1)) - S
        return CurveClass(encloses=complement, sign=-curve.sign)

    def is_allowable(self, curve: CurveClass) -> bool:
        return any(self.class_vector(curve))

    def boundary_torus(self) -> "TorusBoundarySpace":
        return TorusBoundarySpace(self.r)


class TorusBoundarySpace:
    """H_1 of the union of r+1 boundary tori, with its intersection pairing.

    Basis order is (m_0, l_0, m_1, l_1, ..., m_r, l_r); the pairing is
    skew-symmetric and unimodular with Q(m_i, l_j) = delta_ij.
    """

    __slots__ = ("r",)

    def __init__(self, r: int):
        if r < 0:
            raise ValueError("boundary count parameter r must be >= 0")
        self.r = r

    @property
    def dim(self) -> int:
        return 2 * (self.r + 1)

    def m_index(self, i: int) -> int:
        self._check_torus(i)
        return 2 * i

    def l_index(self, i: int) -> int:
        self._check_torus(i)
        return 2 * i + 1

    def _check_torus(self, i: int) -> None:
        if not 0 <= i <= self.r:
            raise ValueError(f"torus index {i} out of range 0..{self.r}")

    def basis_m(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[self.m_index(i)] = Fraction(1)
        return tuple(v)

    def basis_l(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[self.l_index(i)] = Fraction(1)
        return tuple(v)

    def pairing_matrix(self) -> RationalMatrix:
        n = self.dim
        grid = [[0] * n for _ in range(n)]
        for i in range(self.r + 1):
            grid[2 * i][2 * i + 1] = 1
            grid[2 * i + 1][2 * i] = -1
        return RationalMatrix(grid)

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        """Intersection pairing Q(u, v); skew so Q(u, v) = -Q(v, u)."""
        a, b = vector(u), vector(v)
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        total = Fraction(0)
        for i in range(self.r + 1):
            total += a[2 * i] * b[2 * i + 1] - a[2 * i + 1] * b[2 * i]
        return total

    def embed(self, m_coefficients: Sequence) -> Vector:
        """Include a fiber class (coefficients of m_1..m_r) into this space."""
        w = vector(m_coefficients)
        if len(w) != self.r:
            raise ValueError(f"fiber vector of length {len(w)}, expected {self.r}")
        v = [Fraction(0)] * self.dim
        for i, c in enumerate(w, start=1):
            v[self.m_index(i)] = c
        return tuple(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusBoundarySpace) and self.r == other.r

    def __hash__(self) -> int:
        return hash(("TorusBoundarySpace", self.r))

    def __repr__(self) -> str:
        return f"TorusBoundarySpace(r={self.r})"


class GeneralSurfaceH1:
    """H_1 of a genus-g surface with boundary, hosting the twist action.

    Basis order is (a_1, b_1, ..., a_g, b_g, m_1, ..., m_r) with
    Q(a_i, b_j) = delta_ij and the boundary classes m_k in the radical.
    Only the homological shadow of a Dehn twist lives here; for g = 0
    the form vanishes and every twist acts as the identity.
    """

    __slots__ = ("genus", "r")

    def __init__(self, genus: int, r: int):
        if genus < 0 or r < 0:
            raise ValueError("genus and boundary parameter must be >= 0")
        self.genus = genus
        self.r = r

    @classmethod
    def planar(cls, r: int) -> "GeneralSurfaceH1":
        return cls(0, r)

    @property
    def dim(self) -> int:
        return 2 * self.genus + self.r

    def a_index(self, i: int) -> int:
        self._check_handle(i)
        return 2 * (i - 1)

    def b_index(self, i: int) -> int:
        self._check_handle(i)
        return 2 * (i - 1) + 1

    def m_index(self, k: int) -> int:
        if not 1 <= k <= self.r:
            raise ValueError(f"boundary index {k} out of range 1..{self.r}")
        return 2 * self.genus + (k - 1)

    def _check_handle(self, i: int) -> None:
        if not 1 <= i <= self.genus:
            raise ValueError(f"handle index {i} out of range 1..{self.genus}")

    def basis_vector(self, index: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[index] = Fraction(1)
        return tuple(v)

    def intersection_matrix(self) -> RationalMatrix:
        n = self.dim
        grid = [[0] * n for _ in range(n)]
        for i in range(self.genus):
            grid[2 * i][2 * i + 1] = 1
            grid[2 * i + 1][2 * i] = -1
        return RationalMatrix(grid)

    def intersection(self, u: Sequence, v: Sequence) -> Fraction:
        a, b = vector(u), vector(v)
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        total = Fraction(0)
        for i in range(self.genus):
            total += a[2 * i] * b[2 * i + 1] - a[2 * i + 1] * b[2 * i]
        return total

    def twist(self, gamma: Sequence, x: Sequence) -> Vector:
        """Right-handed Dehn twist action: x -> x + Q(gamma, x) * gamma."""
        g, w = vector(gamma), vector(x)
        c = self.intersection(g, w)
        return tuple(xi + c * gi for xi, gi in zip(w, g))

    def twist_matrix(self, gamma: Sequence) -> RationalMatrix:
        cols = [self.twist(gamma, self.basis_vector(j)) for j in range(self.dim)]
        return RationalMatrix.from_columns(cols, n_rows=self.dim)

    def monodromy_matrix(self, word: Iterable[Sequence]) -> RationalMatrix:
        """Composite action of a twist word, first curve applied first."""
        result = RationalMatrix.identity(self.dim)
        for gamma in word:
            result = self.twist_matrix(gamma) @ result
        return result

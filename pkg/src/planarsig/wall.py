"""Signature correction of a triple of isotropic subspaces.

Given an ambient space V with a skew pairing Q and three isotropic
subspaces L-, L0, L+, the correction term is the signature of the
symmetric bilinear form Psi induced on the quotient

    W = (L- meet (L0 + L+)) / ((L- meet L0) + (L- meet L+)),

where Psi(a, a') = Q(a, b') for any b' in L0 with a' + b' + c' = 0 and
c' in L+.  Isotropy makes Psi independent of the decomposition chosen
and symmetric; both facts are verified at runtime rather than assumed.

The second half of this module builds the specific triple attached to
a mapping torus of a planar fiber: L- and L0 are the meridian and
longitude spans of the boundary tori, and L+ is the kernel of the
boundary-inclusion map on first homology.  That kernel is produced two
independent ways, from an explicitly assembled boundary map matrix and
from closed-form generators, and the two must agree on every instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    RationalMatrix,
    SignatureTriple,
    Subspace,
    Vector,
    quotient_basis,
    solve_many,
    symmetric_signature,
    vector,
)
from .surfaces import CurveClass, NonAllowableCycleError, PlanarSurface, TorusBoundarySpace


class SkewSpace:
    """Ambient Q^n carrying an arbitrary skew-symmetric pairing matrix."""

    __slots__ = ("pairing",)

    def __init__(self, pairing: RationalMatrix):
        if pairing.n_rows != pairing.n_cols:
            raise ValueError("pairing matrix must be square")
        if any(
            pairing[i, j] != -pairing[j, i]
            for i in range(pairing.n_rows)
            for j in range(i + 1)
        ):
            raise ValueError("pairing matrix must be skew-symmetric")
        self.pairing = pairing

    @property
    def dim(self) -> int:
        return self.pairing.n_rows

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        a, b = vector(u), vector(v)
        if len(a) != self.dim or len(b) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return sum((x * y for x, y in zip(a, self.pairing.apply(b))), Fraction(0))


@dataclass(frozen=True)
class WallTriple:
    """Three isotropic subspaces of a skew-paired ambient space.

    ``space`` may be any object exposing ``dim`` and ``pair(u, v)``
    (a TorusBoundarySpace or a SkewSpace).  Isotropy of each subspace
    is checked at construction.
    """

    space: object
    l_minus: Subspace
    l_zero: Subspace
    l_plus: Subspace

    def __post_init__(self):
        n = self.space.dim
        for name, sub in (
            ("l_minus", self.l_minus),
            ("l_zero", self.l_zero),
            ("l_plus", self.l_plus),
        ):
            if sub.ambient_dim != n:
                raise ValueError(f"{name} lives in Q^{sub.ambient_dim}, ambient is Q^{n}")
            cols = sub.columns()
            for i, u in enumerate(cols):
                for v in cols[: i + 1]:
                    if self.space.pair(u, v) != 0:
                        raise ValueError(f"{name} is not isotropic for the pairing")


@dataclass(frozen=True)
class WallCorrection:
    """Output of the correction computation.

    ``psi`` is the Gram matrix of the induced form on the chosen
    quotient representatives; ``correction`` its inertia triple and
    ``defect`` its signature (the term subtracted when gluing).
    """

    w_dim: int
    representatives: tuple[Vector, ...]
    psi: RationalMatrix
    correction: SignatureTriple
    defect: int


def wall_correction(triple: WallTriple) -> WallCorrection:
    """Compute the quotient W, the form Psi on it, and its signature."""
    lm, l0, lp = triple.l_minus, triple.l_zero, triple.l_plus
    numerator = lm & (l0 + lp)
    denominator = (lm & l0) + (lm & lp)
    reps = quotient_basis(numerator, denominator)
    w_dim = len(reps)

    # Decompose each representative a' as -(b' + c'), b' in L0, c' in L+.
    system = RationalMatrix.hstack(l0.basis, lp.basis)
    solutions = solve_many(system, [tuple(-x for x in rep) for rep in reps])
    b_parts: list[Vector] = []
    for sol in solutions:
        if sol is None:
            raise RuntimeError(
                "quotient representative failed to decompose inside L0 + L+; "
                "this cannot happen for a valid triple and indicates a bug"
            )
        b_parts.append(l0.basis.apply(sol[: l0.dim]))

    grid = [[triple.space.pair(a, b) for b in b_parts] for a in reps]
    for i in range(w_dim):
        for j in range(i):
            if grid[i][j] != grid[j][i]:
                raise RuntimeError(
                    "induced form came out asymmetric; the triple violates "
                    "the well-definedness hypotheses"
                )
    psi = RationalMatrix(grid, n_cols=w_dim)
    correction = symmetric_signature(psi)
    return WallCorrection(
        w_dim=w_dim,
        representatives=tuple(reps),
        psi=psi,
        correction=correction,
        defect=correction.signature,
    )


@dataclass(frozen=True)
class MappingTorusBoundaryMap:
    """Matrix of H_1(boundary of mapping torus) -> H_1(mapping torus).

    Planar fiber with r+1 boundary circles; the monodromy is a product
    of twists along the given cycles.  Domain basis is the torus order
    (m_0, l_0, ..., m_r, l_r); codomain basis is (m_1, ..., m_r, l_0).
    The columns satisfy: m_0 maps to -(m_1 + ... + m_r), m_j to m_j,
    l_0 to l_0, and l_j (j >= 1) to l_0 minus the twist defect
    sum_s Q(gamma_s, l_j) * gamma_s.
    """

    r: int
    matrix: RationalMatrix


def _checked_class_vectors(
    surface: PlanarSurface, cycles: Sequence[CurveClass], force: bool
) -> list[tuple[int, ...]]:
    vectors = [surface.class_vector(c) for c in cycles]
    if not force:
        bad = [i for i, v in enumerate(vectors) if not any(v)]
        if bad:
            raise NonAllowableCycleError(
                f"cycle {bad[0]} is null-homologous on the fiber; "
                "pass force to compute outside the allowable range"
            )
    return vectors


def mapping_torus_boundary_map(
    surface: PlanarSurface, cycles: Sequence[CurveClass], force: bool = False
) -> MappingTorusBoundaryMap:
    """Assemble the boundary-inclusion matrix column by column."""
    r = surface.r
    xs = _checked_class_vectors(surface, cycles, force)
    grid = [[Fraction(0)] * (2 * (r + 1)) for _ in range(r + 1)]
    space = surface.boundary_torus()
    # m_0 column: -(m_1 + ... + m_r).
    for i in range(r):
        grid[i][space.m_index(0)] = Fraction(-1)
    # m_j columns are fixed; l_0 maps to itself.
    for j in range(1, r + 1):
        grid[j - 1][space.m_index(j)] = Fraction(1)
    grid[r][space.l_index(0)] = Fraction(1)
    # l_j columns: l_0 - sum_s Q(gamma_s, l_j) gamma_s, and Q(gamma_s, l_j)
    # is the j-th m coefficient of gamma_s.
    for j in range(1, r + 1):
        col = space.l_index(j)
        grid[r][col] = Fraction(1)
        for x in xs:
            c = x[j - 1]
            if c:
                for i in range(r):
                    grid[i][col] -= c * x[i]
    return MappingTorusBoundaryMap(r=r, matrix=RationalMatrix(grid))


def lplus_kernel(bmap: MappingTorusBoundaryMap) -> Subspace:
    """Kernel of the boundary map; always of dimension r + 1."""
    kernel = bmap.matrix.kernel()
    assert kernel.dim == bmap.r + 1
    return kernel


def lplus_closed_form(
    surface: PlanarSurface, cycles: Sequence[CurveClass], force: bool = False
) -> Subspace:
    """Span of the closed-form kernel generators.

    The generators are l_k - l_0 + sum_s Q(gamma_s, l_k) gamma_s for
    k = 1..r together with m_0 + ... + m_r.  On every instance this
    must equal lplus_kernel of the assembled boundary map; the package
    test suite enforces that cross-check.
    """
    r = surface.r
    xs = _checked_class_vectors(surface, cycles, force)
    space = surface.boundary_torus()
    gens: list[list[Fraction]] = []
    for k in range(1, r + 1):
        v = [Fraction(0)] * space.dim
        v[space.l_index(k)] = Fraction(1)
        v[space.l_index(0)] = Fraction(-1)
        for x in xs:
            c = x[k - 1]
            if c:
                for i in range(r):
                    v[space.m_index(i + 1)] += c * x[i]
        gens.append(v)
    total_m = [Fraction(0)] * space.dim
    for i in range(r + 1):
        total_m[space.m_index(i)] = Fraction(1)
    gens.append(total_m)
    return Subspace(space.dim, gens)


def standard_triple(
    surface: PlanarSurface, cycles: Sequence[CurveClass], force: bool = False
) -> WallTriple:
    """The triple attached to a fibration over the disk with this fiber.

    L- is spanned by the meridians m_0..m_r (they bound disks on the
    outer piece), L0 by the longitudes l_0..l_r, and L+ is the kernel
    of the mapping torus boundary map.
    """
    space = surface.boundary_torus()
    r = surface.r
    l_minus = Subspace(space.dim, [space.basis_m(i) for i in range(r + 1)])
    l_zero = Subspace(space.dim, [space.basis_l(i) for i in range(r + 1)])
    l_plus = lplus_kernel(mapping_torus_boundary_map(surface, cycles, force))
    return WallTriple(space=space, l_minus=l_minus, l_zero=l_zero, l_plus=l_plus)


def psi_gram_closed_form(
    surface: PlanarSurface, cycles: Sequence[CurveClass], force: bool = False
) -> RationalMatrix:
    """Gram matrix of the induced form on its standard generating set.

    Equals B * B^T where the columns of B are the cycle class vectors;
    positive semidefinite of rank equal to the span of the cycles.
    """
    xs = _checked_class_vectors(surface, cycles, force)
    B = RationalMatrix.from_columns(xs, n_rows=surface.r)
    return B @ B.transpose()

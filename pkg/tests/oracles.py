"""Independent oracles used only by the tests.

These deliberately avoid the package's elimination code: determinants
come from cofactor expansion, ranks from brute-force minor search, and
inertia counts from Descartes' rule of signs applied to an exactly
interpolated characteristic polynomial.  Descartes' count of positive
roots is exact (not just an upper bound) for polynomials whose roots
are all real, which holds for characteristic polynomials of symmetric
matrices.
"""

from fractions import Fraction
from itertools import combinations


def det_cofactor(rows):
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    sign = 1
    for j in range(n):
        a = rows[0][j]
        if a:
            minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
            total += sign * Fraction(a) * det_cofactor(minor)
        sign = -sign
    return total


def rank_by_minors(rows):
    """Largest k admitting a nonsingular k x k submatrix."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    for k in range(min(m, n), 0, -1):
        for rsel in combinations(range(m), k):
            for csel in combinations(range(n), k):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if det_cofactor(sub) != 0:
                    return k
    return 0


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def charpoly(rows):
    """Coefficients, low degree first, of det(t*I - S).

    Evaluated at t = 0..n by cofactor determinants, then recovered by
    exact Lagrange interpolation.
    """
    n = len(rows)
    xs = [Fraction(i) for i in range(n + 1)]
    ys = []
    for x in xs:
        shifted = [
            [(x if i == j else Fraction(0)) - Fraction(rows[i][j]) for j in range(n)]
            for i in range(n)
        ]
        ys.append(det_cofactor(shifted))
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = _poly_mul(basis, [-xj, Fraction(1)])
                denom *= xi - xj
        scale = yi / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs


def inertia_by_descartes(rows):
    """(n_plus, n_minus, n_zero) of a symmetric matrix, exactly."""
    n = len(rows)
    coeffs = charpoly(rows)
    n_zero = 0
    while n_zero <= n and coeffs[n_zero] == 0:
        n_zero += 1
    nonzero = [c for c in coeffs[n_zero:] if c != 0]
    n_plus = sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))
    return (n_plus, n - n_zero - n_plus, n_zero)

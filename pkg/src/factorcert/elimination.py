"""Exact resultants and discriminants over the integers.

The resultant R(f, g) of f = a_n x^n + ... + a_0 and g = b_m x^m + ... + b_0
(n, m >= 1) is the determinant of the (m+n) x (m+n) Sylvester matrix whose
first m columns carry the coefficients of f and last n columns those of g,
each column shifted down one row from its neighbour:

        [ a_n  0   ...  b_m  0   ... ]
        [ a_n-1 a_n ... b_m-1 b_m ... ]
        [ ...              ...       ]
        [ 0 ... a_0    0 ...     b_0 ]

R(f, g) = 0 exactly when f and g share a positive-degree common divisor.
Determinants are evaluated by fraction-free (Bareiss) elimination, so every
intermediate value is an integer and the result is exact.

The discriminant is D_f = (-1)^(n(n-1)/2) R(f, f') / a_n, an integer for
integer f; D_f = 1 when deg f = 1.  The scaled variant
|c|^((d-1)(d-2)) * |D_f| bounds the discriminant of the number field defined
by a root of f after passing to a monic model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeError, RepeatedFactorError, ZeroPolynomialError
from .poly import IntPoly, derivative

__all__ = ["SylvesterMatrix", "sylvester", "resultant", "discriminant", "d_bold"]


@dataclass(frozen=True)
class SylvesterMatrix:
    entries: tuple[tuple[int, ...], ...]
    n: int  # degree of the first polynomial
    m: int  # degree of the second polynomial

    @property
    def size(self) -> int:
        return self.n + self.m


def sylvester(f: IntPoly, g: IntPoly) -> SylvesterMatrix:
    n, m = f.degree, g.degree
    if n is None or m is None or n < 1 or m < 1:
        raise DegreeError("positive degree required")
    size = n + m
    a, b = f.coeffs, g.coeffs
    rows = []
    for i in range(size):
        row = []
        for j in range(m):
            k = n - (i - j)
            row.append(a[k] if 0 <= k <= n else 0)
        for j in range(n):
            k = m - (i - j)
            row.append(b[k] if 0 <= k <= m else 0)
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), n, m)


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination.

    Divisions are by the previous pivot and are exact; a missing pivot means
    the determinant is zero.
    """
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Exact resultant.

    Nonzero constant arguments are admitted via R(f, b) = b^(deg f) and
    R(b, g) = b^(deg g), the empty-product limit of the root-difference
    formula; two constants have no resultant.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of zero polynomial")
    n, m = f.degree, g.degree
    if n == 0 and m == 0:
        raise DegreeError("resultant needs a positive-degree argument")
    if m == 0:
        return g.coeffs[0] ** n
    if n == 0:
        return f.coeffs[0] ** m
    rows = [list(r) for r in sylvester(f, g).entries]
    return _det_bareiss(rows)


def discriminant(f: IntPoly) -> int:
    n = f.degree
    if n is None or n < 1:
        raise DegreeError("discriminant requires positive degree")
    if n == 1:
        return 1
    r = resultant(f, derivative(f))
    a_n = f.leading
    value, remainder = divmod(r if (n * (n - 1) // 2) % 2 == 0 else -r, a_n)
    if remainder != 0:
        raise RuntimeError("internal consistency: discriminant division inexact")
    return value


def d_bold(f: IntPoly) -> int:
    """|c|^((d-1)(d-2)) * |D_f| for leading coefficient c and degree d."""
    d = f.degree
    if d is None or d < 1:
        raise DegreeError("positive degree required")
    disc = discriminant(f)
    if disc == 0:
        raise RepeatedFactorError("repeated factor")
    return abs(f.leading) ** ((d - 1) * (d - 2)) * abs(disc)

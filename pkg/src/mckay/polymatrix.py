"""Exact determinants of matrices with integer-polynomial entries.

The primary path evaluates the matrix at small integer nodes, takes
fraction-free integer determinants, and interpolates; Bareiss elimination
directly on polynomial entries is kept as an independent cross-check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import IntPolynomial


def interpolation_nodes(count: int) -> list[int]:
    """0, 1, -1, 2, -2, ...: deterministic small-magnitude nodes."""
    nodes = [0]
    k = 1
    while len(nodes) < count:
        nodes.append(k)
        if len(nodes) < count:
            nodes.append(-k)
        k += 1
    return nodes[:count]


def det_int_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def poly_matrix_det(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Exact determinant of a square matrix of integer polynomials.

    Evaluates at n*maxdeg + 1 integer nodes and interpolates back; the
    result of the underlying integer determinants is exact, so the
    interpolated coefficients must come out integral.
    """
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
    maxdeg = max((e.degree for row in matrix for e in row), default=0)
    maxdeg = max(maxdeg, 0)
    count = n * maxdeg + 1
    nodes = interpolation_nodes(count)
    values = []
    for x in nodes:
        rows = [[e(x) for e in row] for row in matrix]
        values.append(det_int_bareiss(rows))
    coeffs = _interpolate_integer(nodes, values)
    return IntPolynomial(coeffs)


def _interpolate_integer(nodes: list[int], values: list[int]) -> list[int]:
    """Newton interpolation through integer data; asserts integral output."""
    m = len(nodes)
    divided = [Fraction(v) for v in values]
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (
                nodes[i] - nodes[i - level]
            )
    # Expand the Newton form sum_k divided[k] * prod_{j<k} (t - nodes[j]).
    coeffs = [Fraction(0)] * m
    basis = [Fraction(1)] + [Fraction(0)] * (m - 1)
    for k in range(m):
        if divided[k]:
            for j in range(k + 1):
                coeffs[j] += divided[k] * basis[j]
        if k + 1 < m:
            new = [Fraction(0)] * m
            for j in range(k + 1):
                if basis[j]:
                    new[j + 1] += basis[j]
                    new[j] -= nodes[k] * basis[j]
            basis = new
    out = []
    for f in coeffs:
        if f.denominator != 1:
            raise ArithmeticError("interpolation produced non-integer coefficient")
        out.append(f.numerator)
    return out


def det_poly_bareiss(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Bareiss fraction-free elimination on polynomial entries.

    Independent of the interpolation path; every internal division is an
    exact polynomial division.
    """
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    m = [list(row) for row in matrix]
    sign = 1
    prev = IntPolynomial.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return IntPolynomial.zero()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev)
            m[i][k] = IntPolynomial.zero()
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def det_poly_cofactor(matrix: Sequence[Sequence[IntPolynomial]]) -> IntPolynomial:
    """Cofactor-expansion determinant; exponential, for small test oracles."""
    n = len(matrix)
    if n == 0:
        return IntPolynomial.one()
    if n == 1:
        return matrix[0][0]
    total = IntPolynomial.zero()
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [
            [matrix[i][k] for k in range(n) if k != j] for i in range(1, n)
        ]
        term = entry * det_poly_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total

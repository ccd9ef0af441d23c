"""Exact integer linear algebra for the characteristic-function basis.

The certificate matrix has one row per family member and one column per
element of the union of all members; the entry is 1 when the column vector
lies in the row subspace.  Unimodularity (determinant +-1) is certified by
fraction-free elimination over Z; a Smith-normal-form cross-check is
available for small sizes.  Floating point is never used.
"""

from __future__ import annotations

import functools
import io
import json
import csv
from dataclasses import dataclass
from fractions import Fraction

from .f2core import Vec
from .family import Subspace, enumerate_family
from .phimap import tilde_v


class TheoremViolation(AssertionError):
    """The certificate matrix failed to be unimodular."""


@dataclass(frozen=True)
class BasisCertificate:
    d: int
    row_order: tuple[Subspace, ...]
    column_order: tuple[Vec, ...]
    matrix: tuple[tuple[int, ...], ...]
    determinant: int


def bareiss_determinant(matrix: list[list[int]] | tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Straightforward pivot-reduce implementation; intended as an independent
    cross-check at small sizes, not for performance.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    s = 0
    while s < rows and s < cols:
        # locate a nonzero pivot of minimal absolute value
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[s], m[bi] = m[bi], m[s]
        for row in m:
            row[s], row[bj] = row[bj], row[s]
        while True:
            reduced = False
            for i in range(s + 1, rows):
                if m[i][s] != 0:
                    q = m[i][s] // m[s][s]
                    for j in range(s, cols):
                        m[i][j] -= q * m[s][j]
                    if m[i][s] != 0:
                        m[s], m[i] = m[i], m[s]
                    reduced = True
            for j in range(s + 1, cols):
                if m[s][j] != 0:
                    q = m[s][j] // m[s][s]
                    for i in range(s, rows):
                        m[i][j] -= q * m[i][s]
                    if m[s][j] != 0:
                        for i in range(s, rows):
                            m[i][s], m[i][j] = m[i][j], m[i][s]
                    reduced = True
            if not reduced:
                break
        diag.append(abs(m[s][s]))
        s += 1
    return diag


@functools.lru_cache(maxsize=None)
def basis_matrix(d: int) -> BasisCertificate:
    """Build and certify the 0/1 membership matrix for parameter d.

    Rows are sorted by (dim, canonical rows); columns lexicographically by
    bitstring.  Raises TheoremViolation if the determinant is not +-1.
    """
    rows = enumerate_family(d)  # already sorted by (dim, rows)
    cols = tuple(sorted(tilde_v(d), key=lambda v: v.to_bitstring()))
    if len(rows) != len(cols):
        raise TheoremViolation(
            f"matrix not square at d={d}: {len(rows)} rows vs {len(cols)} columns"
        )
    matrix = tuple(
        tuple(1 if x.contains(v) else 0 for v in cols) for x in rows
    )
    det = bareiss_determinant(matrix)
    if det not in (1, -1):
        raise TheoremViolation(f"determinant {det} at d={d}, expected +-1")
    return BasisCertificate(d, rows, cols, matrix, det)


@functools.lru_cache(maxsize=None)
def _inverse_transpose(d: int) -> tuple[tuple[int, ...], ...]:
    """Exact integer inverse of the transposed certificate matrix.

    Solving (M^T) c = f gives the coefficients c of f over the characteristic
    functions.  The inverse is integral because the determinant is +-1.
    """
    cert = basis_matrix(d)
    n = len(cert.matrix)
    # augmented Gauss-Jordan over Q on M^T
    a = [
        [Fraction(cert.matrix[j][i]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    out = []
    for r in range(n):
        row = a[r][n:]
        assert all(x.denominator == 1 for x in row)
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def decompose(values: dict[Vec, int], d: int) -> dict[Subspace, int]:
    """Unique integer coefficients expressing a function over the basis.

    ``values`` must be defined on exactly the union of all family members.
    """
    cert = basis_matrix(d)
    if set(values) != set(cert.column_order):
        raise ValueError("function domain must be exactly the union of members")
    f = [values[v] for v in cert.column_order]
    inv = _inverse_transpose(d)
    coeffs = [sum(inv[r][j] * f[j] for j in range(len(f))) for r in range(len(f))]
    return {x: c for x, c in zip(cert.row_order, coeffs)}


def recompose(coeffs: dict[Subspace, int], d: int) -> dict[Vec, int]:
    """Evaluate an integer combination of characteristic functions."""
    cert = basis_matrix(d)
    out: dict[Vec, int] = {v: 0 for v in cert.column_order}
    for x, c in coeffs.items():
        if c == 0:
            continue
        for v in x.vectors():
            out[v] += c
    return out


def certificate_to_json(cert: BasisCertificate) -> str:
    return json.dumps(
        {
            "d": cert.d,
            "determinant": str(cert.determinant),
            "row_order": [
                [Vec(cert.d, r).to_bitstring() for r in x.rows] for x in cert.row_order
            ],
            "column_order": [v.to_bitstring() for v in cert.column_order],
            "matrix": ["".join(str(e) for e in row) for row in cert.matrix],
        },
        indent=2,
    )


def certificate_to_csv(cert: BasisCertificate) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow([""] + [v.to_bitstring() for v in cert.column_order])
    for x, row in zip(cert.row_order, cert.matrix):
        w.writerow([";".join(Vec(cert.d, r).to_bitstring() for r in x.rows)] + list(row))
    return buf.getvalue()

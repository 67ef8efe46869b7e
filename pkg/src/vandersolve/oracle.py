"""Brute-force reference implementations.

Naive on purpose, exact over rationals, and sharing no code with the
closed-form solvers: subset enumeration for the symmetric coefficients,
Gaussian elimination with first-nonzero pivoting for solve and rank, and
Laplace expansion for determinants.  Used by the tests and the CLI's
--verify mode only.
"""

import math
from itertools import combinations

from .field import exact_div
from .vandermonde import DenseMatrix


class SingularMatrixError(ArithmeticError):
    """Elimination found an all-zero pivot column."""


def gaussian_solve(m: DenseMatrix, q) -> list:
    """Exact Gaussian elimination with first-nonzero pivoting.

    No zero-factor skipping and no pivot-size heuristics, so the operation
    count depends only on the matrix size.
    """
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    n = m.rows
    if len(q) != n:
        raise ValueError(f"{n} equations but {len(q)} values")
    a = m.to_rows()
    b = list(q)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot available in column {k}")
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            b[k], b[pivot] = b[pivot], b[k]
        for r in range(k + 1, n):
            f = exact_div(a[r][k], a[k][k])
            for c in range(k + 1, n):
                a[r][c] = a[r][c] - f * a[k][c]
            b[r] = b[r] - f * b[k]
            a[r][k] = 0
    x = [0] * n
    for i in range(n - 1, -1, -1):
        s = b[i]
        for c in range(i + 1, n):
            s = s - a[i][c] * x[c]
        x[i] = exact_div(s, a[i][i])
    return x


def gaussian_rank(m: DenseMatrix) -> int:
    """Exact row-echelon rank."""
    a = m.to_rows()
    rank = 0
    for col in range(m.cols):
        pivot = next((r for r in range(rank, m.rows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for r in range(rank + 1, m.rows):
            if a[r][col] != 0:
                f = exact_div(a[r][col], a[rank][col])
                for c in range(col, m.cols):
                    a[r][c] = a[r][c] - f * a[rank][c]
        rank += 1
        if rank == m.rows:
            break
    return rank


def sigma_bruteforce(nodes, t: int):
    """Sum over all size-t subsets of node products, by literal enumeration.

    1 for t = 0, 0 beyond the node count.  Exponential, keep p small.
    """
    if t == 0:
        return 1
    seq = list(nodes)
    if t > len(seq):
        return 0
    return sum(math.prod(c) for c in combinations(seq, t))


def cofactor_determinant(m: DenseMatrix):
    """Laplace expansion along the first row; factorial cost, keep n small."""
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    return _laplace(m.to_rows())


def _laplace(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _laplace(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total

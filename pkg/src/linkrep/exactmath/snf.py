"""Smith normal form over the integers with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass


Matrix = list[list[int]]


@dataclass(frozen=True)
class SnfResult:
    invariant_factors: tuple[int, ...]
    free_rank: int
    # U @ M @ V == diagonal
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    diagonal: tuple[tuple[int, ...], ...]
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Matrix, check: bool = True) -> SnfResult:
    """Diagonalize ``M`` by unimodular row and column operations.

    Pivots on the entry of smallest nonzero magnitude, which keeps the
    intermediate entries small on the sparse matrices we feed it.
    ``free_rank`` counts the zero columns of the diagonal form, i.e. the
    rank of the kernel of ``M`` acting on column vectors.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(map(int, row)) for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(A[i][t]), i, "r") for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), j, "c") for j in range(t + 1, n) if A[t][j]]
                _, k, kind = min(cand)
                if kind == "r":
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            # row and column are clear; enforce divisibility on the rest
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    result = SnfResult(
        invariant_factors=factors,
        free_rank=n - len(factors),
        U=tuple(map(tuple, U)),
        V=tuple(map(tuple, V)),
        diagonal=tuple(map(tuple, A)),
        rows=m,
        cols=n,
    )
    if check:
        verify_snf(M, result)
    return result


def verify_snf(M: Matrix, r: SnfResult) -> None:
    D = matmul(matmul([list(x) for x in r.U], M), [list(x) for x in r.V])
    if D != [list(x) for x in r.diagonal]:
        raise AssertionError("U*M*V does not reproduce the diagonal form")
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j and x:
                raise AssertionError("off-diagonal entry survived")
    f = r.invariant_factors
    if any(b % a for a, b in zip(f, f[1:])):
        raise AssertionError("divisibility chain broken")
    if any(x <= 0 for x in f):
        raise AssertionError("non-positive invariant factor")
    if abs(int_det(r.U)) != 1 or abs(int_det(r.V)) != 1:
        raise AssertionError("transform is not unimodular")


def int_det(M) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]

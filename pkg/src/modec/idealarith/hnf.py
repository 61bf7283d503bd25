"""Hermite and Smith normal forms of integer matrices (row lattices)."""
from __future__ import annotations


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Nonzero rows only; each pivot positive, entries above a pivot reduced
    into [0, pivot).  Unique for a given lattice.
    """
    return hnf_with_transform(rows)[0]


def hnf_with_transform(rows: list[list[int]]):
    """(H, U) with U * rows = H stacked over zero rows; U is unimodular.

    Only the first len(H) rows of U are returned (those producing H), which is
    all a caller needs to write lattice vectors in terms of the input rows.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    if not m:
        return [], []
    n = len(A[0])
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    pivots = []
    for col in range(n):
        if r == m:
            break
        # Euclid on column ``col`` among rows r..m-1
        while True:
            nz = [i for i in range(r, m) if A[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[i0] = A[i0], A[r]
            U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if A[i][col]:
                        done = False
            if done:
                break
        if r < m and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-x for x in A[r]]
                U[r] = [-x for x in U[r]]
            p = A[r][col]
            for i in range(r):
                q = A[i][col] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            pivots.append(col)
            r += 1
    return A[:r], U[:r]


def solve_in_lattice(H: list[list[int]], v: list[int]) -> list[int] | None:
    """Integer coefficients x with x * H = v for an HNF basis H, or None."""
    x = []
    v = list(v)
    for row in H:
        col = next(i for i, c in enumerate(row) if c)
        q, rem = divmod(v[col], row[col])
        if rem:
            return None
        x.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    if any(v):
        return None
    return x


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Invariant factors (diagonal of the Smith normal form), nonzero ones only."""
    A = [list(r) for r in rows if any(r)]
    diag = []
    while A and A[0]:
        # move a smallest nonzero entry to (0, 0)
        entries = [(abs(A[i][j]), i, j) for i in range(len(A)) for j in range(len(A[0])) if A[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        A[0], A[i0] = A[i0], A[0]
        for row in A:
            row[0], row[j0] = row[j0], row[0]
        p = A[0][0]
        clean = True
        for i in range(1, len(A)):
            q = A[i][0] // p
            A[i] = [x - q * y for x, y in zip(A[i], A[0])]
            if A[i][0]:
                clean = False
        for j in range(1, len(A[0])):
            q = A[0][j] // p
            for row in A:
                row[j] -= q * row[0]
            if A[0][j]:
                clean = False
        if not clean:
            continue
        bad = next(((i, j) for i in range(1, len(A)) for j in range(1, len(A[0])) if A[i][j] % p), None)
        if bad is not None:
            A[0] = [x + y for x, y in zip(A[0], A[bad[0]])]
            continue
        diag.append(abs(p))
        A = [row[1:] for row in A[1:]]
        A = [r for r in A if any(r)]
    return diag

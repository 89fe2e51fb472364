"""Small exact linear algebra over Fraction.

Dense tuple-of-tuples matrices; every space in the toolkit has dimension
at most 25, so nothing clever is needed.  All routines are pure.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


def mat(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    # row-major accumulation skipping zero entries; the Gram and unipotent
    # matrices here are sparse, so this saves most of the Fraction work
    m = len(b[0])
    out = []
    for row in a:
        acc = [Fraction(0)] * m
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j, y in enumerate(bk):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(
        sum((x * y for x, y in zip(row, v) if x and y), Fraction(0))
        for row in a
    )


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def det(a: Matrix) -> Fraction:
    """Determinant by exact Gaussian elimination with partial pivoting."""
    n = len(a)
    rows = [list(r) for r in a]
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            d = -d
        d *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] == 0:
                continue
            f = rows[r][col] * inv
            for c in range(col, n):
                rows[r][c] -= f * rows[col][c]
    return d


def solve(a: Matrix, b: Vector) -> Vector:
    """Solve a x = b exactly; raises ValueError if a is singular."""
    n = len(a)
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve(a, tuple(Fraction(1 if i == j else 0) for i in range(n)))
            for j in range(n)]
    return transpose(mat(cols))


def signature(gram: Matrix) -> tuple[int, int, int]:
    """Signature (n_plus, n_minus, n_zero) of a symmetric matrix.

    Exact symmetric congruence diagonalization (simultaneous row and column
    operations), so no eigenvalue computation is involved.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    todo = list(range(n))
    while todo:
        # pick a pivot position with nonzero diagonal, manufacturing one
        # from an off-diagonal entry if necessary
        k = next((i for i in todo if a[i][i] != 0), None)
        if k is None:
            pair = None
            for i in todo:
                for j in todo:
                    if j > i and a[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(todo)
                break
            i, j = pair
            # basis change e_i <- e_i + e_j makes the (i,i) entry 2 a_ij
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        todo.remove(k)
        for r in todo:
            if a[r][k] != 0:
                f = a[r][k] / piv
                for c in range(n):
                    a[r][c] -= f * a[k][c]
                for c in range(n):
                    a[c][r] -= f * a[c][k]
    return pos, neg, zero

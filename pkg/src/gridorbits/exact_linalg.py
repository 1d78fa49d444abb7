"""Exact linear algebra over the rationals and prime fields.

Everything operates on immutable :class:`Matrix` values whose entries live
in one of the fields from :mod:`gridorbits.fields`.  Ranks are computed by
exact Gaussian elimination; reduction to partial permutation canonical form
uses only invertible upper-triangular row/column operations, so all
south-west ranks are preserved.
"""

from __future__ import annotations

from .fields import QQ


class Matrix:
    """Immutable dense matrix over an exact field.

    Entries are stored row-major as a tuple of tuples.  The field object
    supplies all arithmetic (see :mod:`gridorbits.fields`).
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        data = tuple(tuple(row) for row in data)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols=None):
        zero = field.zero
        cols = rows if cols is None else cols
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def from_int_rows(cls, rows, field=QQ):
        return cls(field, [[field.from_int(x) for x in row] for row in rows])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field is other.field
            and self.data == other.data
        )

    def __hash__(self):
        return hash((id(self.field), self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}]({body})"

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"size mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        bt = list(zip(*other.data))
        out = []
        for row in self.data:
            out_row = []
            for col in bt:
                acc = zero
                for a, b in zip(row, col):
                    if a != zero and b != zero:
                        acc = add(acc, mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return Matrix(f, out)

    def entry(self, i, j):
        """1-based entry access."""
        return self.data[i - 1][j - 1]

    def submatrix(self, row_range, col_range):
        """Submatrix for 1-based inclusive ranges (r1, r2), (c1, c2)."""
        r1, r2 = row_range
        c1, c2 = col_range
        return Matrix(self.field, [row[c1 - 1:c2] for row in self.data[r1 - 1:r2]])


def is_upper_triangular(m):
    zero = m.field.zero
    return all(
        m.data[i][j] == zero for i in range(m.rows) for j in range(min(i, m.cols))
    )


def rank(m):
    """Rank over the matrix's field, by exact Gaussian elimination."""
    f = m.field
    zero = f.zero
    a = [list(row) for row in m.data]
    nrows, ncols = m.rows, m.cols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != zero), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv_p = f.inv(a[r][c])
        for i in range(r + 1, nrows):
            if a[i][c] != zero:
                coef = f.mul(a[i][c], inv_p)
                a[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def sw_rank(m, p, q):
    """Rank of the south-west window of an upper-triangular matrix.

    The window is rows p..size and columns 1..q (1-based); requires
    1 <= p <= q <= size.
    """
    size = m.rows
    if not (1 <= p <= q <= size):
        raise ValueError(f"sw_rank window ({p},{q}) out of range for size {size}")
    return rank(m.submatrix((p, size), (1, q)))


def compose_window(mats, j1, j2):
    """Product mats[j2] · ... · mats[j1] (1-based; map j1 applied first)."""
    if not (1 <= j1 <= j2 <= len(mats)):
        raise ValueError(f"window ({j1},{j2}) out of range for {len(mats)} maps")
    out = mats[j1 - 1]
    for j in range(j1, j2):
        out = mats[j] @ out
    return out


def principal_block(m, i):
    """Top-left i x i block (1-based size)."""
    if not (1 <= i <= m.rows):
        raise ValueError(f"principal block size {i} out of range for {m.rows}")
    return m.submatrix((1, i), (1, i))


def image_meet_coord_dim(m, k):
    """dim(im(m) ∩ span(e_1..e_k)) for a square matrix of size i, 0 <= k <= i.

    Computed as rank(m) - rank(rows k+1..i of m): intersecting the image
    with the first k coordinates kills exactly the directions visible in
    the last i-k rows.
    """
    i = m.rows
    if not (0 <= k <= i):
        raise ValueError(f"coordinate index {k} out of range for size {i}")
    if k == i:
        return rank(m)
    lower = m.submatrix((k + 1, i), (1, i))
    return rank(m) - rank(lower)


def b_reduce(m):
    """Canonical partial permutation representative of the B x B orbit.

    Sweeps right with invertible upper-triangular column operations and
    upwards with invertible upper-triangular row operations, normalising
    pivots to 1.  The result is the unique upper-triangular 0/1 matrix with
    at most one 1 per row and column that has the same south-west rank
    table as the input.
    """
    if not is_upper_triangular(m):
        raise ValueError("b_reduce expects an upper-triangular matrix")
    f = m.field
    zero, one = f.zero, f.one
    n = m.rows
    a = [list(row) for row in m.data]
    pivot_row_of_col = {}
    pivot_rows = set()
    for c in range(n):
        # entries in already-pivoted rows are cleared by adding the earlier
        # pivot column (a column operation sweeping to the right)
        for c0, r0 in pivot_row_of_col.items():
            coef = a[r0][c]
            if coef != zero:
                for r in range(n):
                    a[r][c] = f.sub(a[r][c], f.mul(coef, a[r][c0]))
        # bottom-most remaining nonzero becomes the pivot of this column
        r = next((x for x in range(n - 1, -1, -1) if a[x][c] != zero and x not in pivot_rows), None)
        if r is None:
            continue
        inv_p = f.inv(a[r][c])
        if a[r][c] != one:
            for x in range(n):
                a[x][c] = f.mul(a[x][c], inv_p)
        # sweep upwards: clear the column above the pivot with row operations
        for rr in range(r):
            coef = a[rr][c]
            if coef != zero:
                a[rr] = [f.sub(x, f.mul(coef, y)) for x, y in zip(a[rr], a[r])]
        pivot_row_of_col[c] = r
        pivot_rows.add(r)
    return Matrix(f, a)


def inverse_upper_triangular(m):
    """Exact inverse of an invertible upper-triangular matrix."""
    f = m.field
    zero = f.zero
    n = m.rows
    if any(m.data[i][i] == zero for i in range(n)):
        raise ValueError("matrix is singular")
    inv = [[zero] * n for _ in range(n)]
    for col in range(n):
        # back-substitute for the col-th column of the inverse
        x = [zero] * n
        for i in range(n - 1, -1, -1):
            s = f.one if i == col else zero
            for j in range(i + 1, n):
                s = f.sub(s, f.mul(m.data[i][j], x[j]))
            x[i] = f.div(s, m.data[i][i])
        for i in range(n):
            inv[i][col] = x[i]
    return Matrix(f, inv)


def solve_unique(columns, target, field=QQ):
    """Solve sum_j x_j * columns[j] = target for a full-column-rank system.

    Args:
        columns: list of equal-length vectors (the matrix columns).
        target: right-hand-side vector.

    Returns:
        The unique coefficient list, or raises ValueError when the system
        is inconsistent or rank-deficient.
    """
    ncols = len(columns)
    nrows = len(target)
    f = field
    zero = f.zero
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != zero), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv_p = f.inv(aug[r][c])
        aug[r] = [f.mul(x, inv_p) for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != zero:
                coef = aug[i][c]
                aug[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if r < ncols:
        raise ValueError("system is rank-deficient: solution not unique")
    # every column is a pivot, so all coefficient entries below row r vanish
    if any(row[-1] != zero for row in aug[r:]):
        raise ValueError("system is inconsistent")
    x = [zero] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][-1]
    return x

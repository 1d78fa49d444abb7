"""Rank vectors and the decomposition of points into thin indecomposables.

The rank vector collects, for every row i and window of consecutive maps,
the dimensions of the image of the windowed composition (restricted to the
top-left i x i block) intersected with each coordinate subspace.  It is a
complete orbit invariant; decomposing a point amounts to writing its rank
vector in terms of the indecomposables' rank vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_linalg import b_reduce, principal_block, rank, solve_unique
from .grid_quiver import (
    Decomposition,
    GridQuiverError,
    assemble_canonical,
    dims_of_heights,
    enumerate_indecomposables,
    full_dim_grid,
    matchings_to_decomposition,
    window_products,
    windows,
)


class SolveFailure(GridQuiverError):
    """The point admits no decomposition into thin indecomposables.

    For n = 2 every point decomposes and this error signals an
    implementation bug.  For n >= 3 genuinely indecomposable-beyond-thin
    points exist: the shared base change couples adjacent maps, so not
    every tuple reduces to partial permutation form simultaneously."""


@dataclass(frozen=True)
class RankVector:
    """Dimension grid plus intersection entries, flattened in a fixed order.

    ``inter`` holds the entries keyed by (i, j1, j2, k) in the order of
    :func:`inter_order`; k runs 1..i for the coordinate intersections and
    k = i+1 stores the plain rank of the windowed block.
    """

    shape: object
    dims: tuple
    inter: tuple


def inter_order(shape):
    """Fixed (i, j1, j2, k) enumeration order of the intersection part."""
    order = []
    for (j1, j2) in windows(shape):
        for i in range(1, shape.size + 1):
            for k in range(1, i + 2):
                order.append((i, j1, j2, k))
    return order


def rank_vector(point):
    """Rank vector of a point of the restricted representation space.

    For each window (j1, j2) and row i, the windowed composition is cut to
    its top-left i x i block; entry k <= i is dim(im ∩ span(e_1..e_k)),
    entry k = i+1 is the block's rank.
    """
    shape = point.shape
    prods = window_products(point)
    entries = []
    for (j1, j2) in windows(shape):
        comp = prods[(j1, j2)]
        for i in range(1, shape.size + 1):
            block = principal_block(comp, i)
            full = rank(block)
            for k in range(1, i):
                entries.append(full - rank(block.submatrix((k + 1, i), (1, i))))
            entries.append(full)  # k = i: im is contained in C^i already
            entries.append(full)  # k = i+1: the plain rank slot
    return RankVector(shape, full_dim_grid(shape), tuple(entries))


def heights_rank_vector(hv):
    """Rank vector of the thin indecomposable with height vector ``hv``.

    All spaces are 0 or C, so each entry is 0 or 1: the windowed image at
    row i is nonzero iff every column the window touches reaches row i,
    and it meets the image of the vertical chain from row k iff column
    j2+1 reaches row k.
    """
    shape = hv.shape
    size = shape.size
    h = hv.h
    entries = []
    for (j1, j2) in windows(shape):
        for i in range(1, size + 1):
            alive = all(h[j - 1] >= size + 1 - i for j in range(j1, j2 + 2))
            for k in range(1, i + 1):
                entries.append(1 if alive and h[j2] >= size + 1 - k else 0)
            entries.append(1 if alive else 0)
    return RankVector(shape, dims_of_heights(hv), tuple(entries))


def same_rank_vector(a, b):
    """Orbit-level equality: the intersection parts coincide (the dimension
    part never varies on the restricted space)."""
    return a.shape == b.shape and a.inter == b.inter


def flat_intersections(rv):
    """Flat reading order: per window, rows top to bottom, the k = 1..i
    coordinate intersections (without the duplicate rank slot)."""
    out = []
    pos = 0
    for (_j1, _j2) in windows(rv.shape):
        for i in range(1, rv.shape.size + 1):
            out.extend(rv.inter[pos:pos + i])
            pos += i + 1
    return tuple(out)


def full_vector(rv):
    """Dimension part (column-major) followed by all intersection entries."""
    dims = tuple(
        rv.dims[i][j] for j in range(rv.shape.n) for i in range(rv.shape.size)
    )
    return dims + rv.inter


def independence_check(shape):
    """Whether the indecomposables' rank vectors are linearly independent.

    A family larger than the vector length is dependent outright; otherwise
    the rank is computed exactly over Q.
    """
    from .exact_linalg import Matrix
    from .fields import QQ

    vecs = [full_vector(heights_rank_vector(hv)) for hv in enumerate_indecomposables(shape)]
    if len(vecs) > len(vecs[0]):
        return False
    m = Matrix(QQ, [[Fraction(x) for x in v] for v in vecs])
    return rank(m) == len(vecs)


def _pivot_pairs(mat, size):
    """Matched height pairs (a, b) read off a canonical partial permutation
    matrix: a 1 in row r, column c links height a = size+1-c of the left
    column to height b = size+1-r of the right one."""
    one = mat.field.one
    pairs = {}
    for r in range(1, size + 1):
        for c in range(1, size + 1):
            if mat.entry(r, c) == one:
                pairs[size + 1 - c] = size + 1 - r
    return pairs


def _sweep_decompose(point):
    """Constructive decomposition: reduce each map to canonical form, read
    the per-pair height matchings, and chain them into summands."""
    shape = point.shape
    matchings = [_pivot_pairs(b_reduce(m), shape.size) for m in point.maps]
    return matchings_to_decomposition(shape, matchings)


def decompose(point):
    """Unique decomposition of a point into thin indecomposables.

    For n = 2 this solves the exact linear system against the independent
    family of indecomposable rank vectors; the solution is certified to be
    nonnegative integers.  For n >= 3 the family is linearly dependent
    (there are more indecomposables than independent rank-vector
    coordinates), so the constructive canonical-form sweep is used instead;
    either way the result is verified by reassembly.

    Raises:
        SolveFailure: no multiset of thin summands reproduces the point's
            rank vector.  Impossible for n = 2; for n >= 3 such points
            exist (see :class:`SolveFailure`).
    """
    shape = point.shape
    rv = rank_vector(point)
    if shape.n <= 2:
        indecs = enumerate_indecomposables(shape)
        columns = [full_vector(heights_rank_vector(hv)) for hv in indecs]
        columns = [[Fraction(x) for x in col] for col in columns]
        target = [Fraction(x) for x in full_vector(rv)]
        try:
            mults = solve_unique(columns, target)
        except ValueError as exc:
            raise SolveFailure(str(exc)) from exc
        heights = []
        for hv, mult in zip(indecs, mults):
            if mult.denominator != 1 or mult < 0:
                raise SolveFailure(f"multiplicity of {hv.h} solved to {mult}")
            heights.extend([hv.h] * int(mult))
        dec = Decomposition.from_heights(shape, heights)
    else:
        dec = _sweep_decompose(point)
    if not same_rank_vector(rank_vector(assemble_canonical(dec)), rv):
        raise SolveFailure(
            "no multiset of thin summands reproduces the rank vector: the "
            "point's maps cannot be reduced to partial permutation form "
            "simultaneously"
        )
    return dec

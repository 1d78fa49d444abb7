"""Orbit census and the degeneration poset.

Orbits are enumerated combinatorially: between each pair of adjacent
columns, the heights 1..n+1 are partially matched with every matched pair
weakly increasing, and matchings of different column pairs are independent.
Chaining the matchings yields the decomposition; assembling it yields the
canonical representative.  An exhaustive F_2 census of south-west arrays
provides an independent count for small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .grid_quiver import Decomposition, assemble_canonical, matchings_to_decomposition
from .parametrizations import sw_array


def bell(m):
    """Bell numbers via the binomial recursion b_m = sum C(m-1, k) b_k."""
    if m < 0:
        raise ValueError("Bell numbers need m >= 0")
    b = [1]
    for t in range(1, m + 1):
        b.append(sum(comb(t - 1, k) * b[k] for k in range(t)))
    return b[m]


def order_matchings(size):
    """All partial matchings m on {1..size} with a <= m(a), each value used
    at most once; returned as dicts in a fixed depth-first order."""
    out = []

    def assign(a, current, used):
        if a > size:
            out.append(dict(current))
            return
        assign(a + 1, current, used)
        for b in range(a, size + 1):
            if b not in used:
                current[a] = b
                used.add(b)
                assign(a + 1, current, used)
                del current[a]
                used.remove(b)

    assign(1, {}, set())
    return out


def enumerate_orbits(shape):
    """All orbits of the restricted space, as decompositions, in a fixed
    order (the product order of the per-pair matchings)."""
    per_pair = order_matchings(shape.size)
    out = []
    for combo in itertools.product(per_pair, repeat=shape.num_maps):
        out.append(matchings_to_decomposition(shape, list(combo)))
    return out


def _f2_rank(rows):
    """Rank of a binary matrix given as bitmask rows."""
    r = 0
    rows = [x for x in rows if x]
    for col in range(16):
        bit = 1 << col
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


def _f2_sw_table(mat, size):
    """South-west rank table over F_2 of a 0/1 matrix (as nested lists)."""
    table = []
    for p in range(1, size + 1):
        row = []
        for q in range(p, size + 1):
            rows = [
                sum(mat[i][j] << j for j in range(q))
                for i in range(p - 1, size)
            ]
            row.append(_f2_rank(rows))
        table.append(tuple(row))
    return tuple(table)


def f2_distinct_count(shape):
    """Number of distinct south-west arrays over an exhaustive enumeration
    of all F_2 points (all tuples of 0/1 upper-triangular matrices).

    Ranks of the canonical 0/1 representatives are field independent, so
    every orbit's array shows up; arbitrary F_2 tuples can only repeat
    arrays, never create ones without a rational counterpart.
    """
    size = shape.size
    positions = [(i, j) for i in range(size) for j in range(i, size)]
    nbits = len(positions)
    ncodes = 1 << nbits
    mats = np.zeros((ncodes, size, size), dtype=np.uint8)
    codes = np.arange(ncodes)
    for b, (i, j) in enumerate(positions):
        mats[:, i, j] = (codes >> b) & 1

    tables = {}
    t_of_code = np.empty(ncodes, dtype=np.int64)
    for c in range(ncodes):
        t = _f2_sw_table(mats[c].tolist(), size)
        t_of_code[c] = tables.setdefault(t, len(tables))

    if shape.num_maps == 1:
        return len(set(t_of_code.tolist()))
    if shape.num_maps != 2:
        raise ValueError("exhaustive F_2 census implemented for n <= 3 only")

    # window (1,2) is f2·f1; encode each product back to its code
    shifts = np.arange(nbits, dtype=np.int64)
    pos_i = np.array([i for (i, j) in positions])
    pos_j = np.array([j for (i, j) in positions])
    ntab = len(tables)
    keys = np.empty(ncodes * ncodes, dtype=np.int64)
    for a in range(ncodes):
        prod = (mats @ mats[a]) % 2  # prod[b] = f2(b) · f1(a)
        prod_codes = (prod[:, pos_i, pos_j].astype(np.int64) << shifts).sum(axis=1)
        keys[a * ncodes:(a + 1) * ncodes] = (
            (t_of_code[a] * ntab) + t_of_code
        ) * ntab + t_of_code[prod_codes]
    return int(np.unique(keys).size)


@dataclass(frozen=True)
class CountReport:
    enumerated: int
    f2_distinct: object  # int, or None when the exhaustive census is off the table
    paper_formula: int


def count_report(shape):
    """Three counts side by side: direct enumeration of decompositions, the
    exhaustive F_2 array census (n <= 3), and the formula (n-1)·b_(n+2).

    All three are reported verbatim, never asserted against each other.
    For n = 2 they coincide at 15.  For n >= 3 they all differ: tuples
    exist whose maps cannot be reduced to partial permutation form
    simultaneously (the shared base change couples adjacent windows), so
    the census sees strictly more arrays than there are decompositions,
    and the formula matches neither.
    """
    enumerated = len(enumerate_orbits(shape))
    f2 = f2_distinct_count(shape) if shape.n <= 3 else None
    return CountReport(enumerated, f2, (shape.n - 1) * bell(shape.n + 2))


@dataclass(frozen=True)
class OrbitNode:
    id: int
    decomposition: Decomposition
    canonical: object
    sw: object


@dataclass(frozen=True)
class OrbitPoset:
    shape: object
    nodes: tuple
    edges: tuple  # (upper id, lower id) cover pairs

    def maximal(self):
        below_something = {v for _, v in self.edges}
        return sorted(n.id for n in self.nodes if n.id not in below_something)

    def minimal(self):
        above_something = {u for u, _ in self.edges}
        return sorted(n.id for n in self.nodes if n.id not in above_something)


def build_poset(shape):
    """Degeneration poset of all orbits: nodes carry the decomposition, the
    canonical representative and its array; edges are the covering pairs of
    the componentwise array order (transitive reduction)."""
    if shape.n > 4:
        raise ValueError("poset construction is limited to n <= 4")
    decs = enumerate_orbits(shape)
    nodes = []
    flats = []
    for idx, dec in enumerate(decs, start=1):
        point = assemble_canonical(dec)
        arr = sw_array(point)
        nodes.append(OrbitNode(idx, dec, point, arr))
        flats.append(arr.flat())
    a = np.array(flats, dtype=np.int16)
    nn = len(nodes)
    leq = np.empty((nn, nn), dtype=bool)  # leq[i, j]: orbit i degenerate below j
    chunk = max(1, (1 << 24) // max(1, nn * a.shape[1]))
    for lo in range(0, nn, chunk):
        hi = min(nn, lo + chunk)
        leq[lo:hi] = (a[lo:hi, None, :] <= a[None, :, :]).all(axis=2)
    less = leq & ~leq.T
    # path counts are bounded by the node count << 2^24, so float32 matmul
    # is exact here and much faster than integer matmul
    two_step = (less.astype(np.float32) @ less.astype(np.float32)) > 0
    cover = less & ~two_step
    edges = tuple(
        (int(j + 1), int(i + 1)) for i, j in zip(*np.nonzero(cover))
    )
    return OrbitPoset(shape, tuple(nodes), tuple(sorted(edges)))


def export_dot(poset):
    """Graphviz text for the poset, byte-deterministic, edges top-down."""
    lines = [
        "digraph orbit_poset {",
        "  rankdir=TB;",
        '  node [shape=box, fontname="Helvetica"];',
    ]
    for node in poset.nodes:
        lines.append(f'  o{node.id} [label="{node.id}: {node.decomposition}"];')
    for upper, lower in poset.edges:
        lines.append(f"  o{upper} -> o{lower};")
    lines.append("}")
    return "\n".join(lines) + "\n"

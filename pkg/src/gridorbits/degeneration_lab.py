"""Finite-field point counting, dimension estimation, the flat-locus scan,
the Euler-form lower bound, and the Hom-scheme complete-intersection audit.

Dimensions of the degenerate fibres are estimated by counting their points
over several finite fields and fitting one integer polynomial, validated on
held-out field sizes.  The audit compares the codimension of the Hom scheme
inside its ambient space against the rank of the defining bilinear system,
computed exactly over Q at sampled points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .decomposition import decompose
from .exact_linalg import Matrix, principal_block, rank
from .fields import GF, QQ, is_prime_power
from .grid_quiver import GridQuiverError, GridShape, assemble_canonical
from .orbit_poset import enumerate_orbits
from .parametrizations import sw_array
from .schubert import check_permutation, length, target_dims
from .subspaces import column_chains, in_span

DEFAULT_QS = (2, 3, 4, 5, 7, 8, 9)
DEFAULT_BUDGET = 10 ** 9


class InfeasibleSize(GridQuiverError):
    """Enumeration would exceed the configured budget."""


class FitFailure(GridQuiverError):
    """No integer polynomial within the degree bound fits the counts."""


class NoPointFound(GridQuiverError):
    """No rational point of the Hom scheme located within the budget."""


@dataclass(frozen=True)
class PointCountTable:
    counts: tuple  # ((q, count), ...) in schedule order

    def as_dict(self):
        return dict(self.counts)


@dataclass(frozen=True)
class DimEstimate:
    degree: int
    coefficients: tuple  # ascending, integers
    validated: bool


@dataclass(frozen=True)
class HomReport:
    dim_G: int
    dim_Gr: int
    dim_Hom0: int
    dim_V: int
    dim_Re: int
    codim: int
    indep_eqs: int
    lci: bool
    per_point_ranks: tuple


@dataclass(frozen=True)
class FlatScanRow:
    orbit_id: int
    decomposition: object
    counts: PointCountTable
    estimate: DimEstimate
    flat_candidate: bool


@dataclass(frozen=True)
class FlatScanResult:
    w: tuple
    target_dim: int
    rows: tuple
    upward_closed: bool


def _check_dim_grid(shape, e):
    if len(e) != shape.size or any(len(row) != shape.n for row in e):
        raise ValueError("dimension grid has the wrong shape")
    for i in range(1, shape.size + 1):
        for j in range(1, shape.n + 1):
            if not (0 <= e[i - 1][j - 1] <= i):
                raise ValueError(f"dimension grid entry ({i},{j}) out of range")


def _maps_over(point, field):
    """The stored maps with entries moved into the given finite field."""
    return [
        [[field.from_fraction(x) for x in row] for row in m.data]
        for m in point.maps
    ]


def subrep_count(point, e, q, budget=DEFAULT_BUDGET):
    """Number of F_q-subrepresentations of the point with dimension grid e.

    Enumerates, per column, the chains of subspaces with the prescribed
    dimensions (respecting the coordinate inclusions), then runs a dynamic
    programme over adjacent columns filtering on the horizontal conditions
    f(U) ⊆ U'.

    Raises:
        InfeasibleSize: the subspace enumeration exceeds the budget.
    """
    shape = point.shape
    if shape.n > 3:
        raise InfeasibleSize("point counting is limited to n <= 3")
    if q > 9 or not is_prime_power(q):
        raise ValueError(f"q must be a prime power <= 9, got {q}")
    _check_dim_grid(shape, e)
    field = GF(q)
    maps_gf = _maps_over(point, field)
    counter = [0]
    try:
        cols = [
            column_chains(tuple(e[i][j] for i in range(shape.size)), q, counter, budget)
            for j in range(shape.n)
        ]
    except OverflowError as exc:
        raise InfeasibleSize(str(exc)) from exc

    def compatible(chain, nxt, mat):
        for i in range(1, shape.size + 1):
            block = [row[:i] for row in mat[:i]]
            target = nxt[i - 1]
            for u in chain[i - 1]:
                img = tuple(
                    _dot(field, block[r], u) for r in range(i)
                )
                if not in_span(field, target, img):
                    return False
        return True

    vec = {c: 1 for c in cols[0]}
    for j in range(shape.n - 1):
        counter[0] += len(vec) * len(cols[j + 1])
        if counter[0] > budget:
            raise InfeasibleSize("pair filtering budget exceeded")
        nxt_vec = {}
        for nxt in cols[j + 1]:
            total = 0
            for chain, mult in vec.items():
                if compatible(chain, nxt, maps_gf[j]):
                    total += mult
            if total:
                nxt_vec[nxt] = total
        vec = nxt_vec
        if not vec:
            return 0
    return sum(vec.values())


def _dot(field, row, u):
    acc = field.zero
    for a, b in zip(row, u):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


def point_counts(point, e, qs, budget=DEFAULT_BUDGET):
    return PointCountTable(tuple((q, subrep_count(point, e, q, budget)) for q in qs))


# ---------------------------------------------------------------------------
# exact polynomial fitting

def _poly_trim(c):
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_eval(c, x):
    acc = Fraction(0)
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def _lagrange(points):
    """Coefficients (ascending, Fractions) of the interpolating polynomial."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _yj) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    return _poly_trim(coeffs)


def fit_dimension(counts, max_degree):
    """Fit one integer polynomial to (q, count) samples with mandatory
    holdout validation; the fitted degree is the dimension estimate.

    Args:
        counts: ordered (q, count) pairs; the fit uses a prefix and the
            rest must be reproduced exactly.
        max_degree: a priori bound on the degree.

    Raises:
        FitFailure: no integer polynomial of degree <= max_degree matches
            all samples with at least one held-out point.
    """
    pts = list(counts)
    if len(pts) < 3:
        raise ValueError("need at least 3 sample points")
    for k in range(len(pts) - 1):
        coeffs = _lagrange(pts[: k + 1])
        if len(coeffs) - 1 > max_degree:
            break
        if any(c.denominator != 1 for c in coeffs):
            continue
        if all(_poly_eval(coeffs, q) == c for q, c in pts[k + 1:]):
            ints = tuple(int(c) for c in coeffs)
            if any(c for _q, c in pts) and ints[-1] <= 0:
                continue
            return DimEstimate(len(ints) - 1, ints, True)
    raise FitFailure(
        f"no integer polynomial of degree <= {max_degree} fits {pts} with a holdout"
    )


def _degree_bound(shape, e):
    return sum(
        e[i - 1][j - 1] * (i - e[i - 1][j - 1])
        for i in range(1, shape.size + 1)
        for j in range(1, shape.n + 1)
    )


def estimate_dim(point, e, qs, budget=DEFAULT_BUDGET):
    """Dimension of the fibre with dimension grid e over the point, as the
    degree of the validated counting polynomial."""
    if len(qs) < 3 or len(set(qs)) != len(qs):
        raise ValueError("need at least 3 distinct field sizes")
    table = point_counts(point, e, qs, budget)
    return fit_dimension(table.counts, _degree_bound(point.shape, e))


def euler_form(a, b):
    """Euler form of the grid quiver with one relation per commuting square:
    sum_v a_v b_v - sum_arrows a_s b_t + sum_squares a_(i,j) b_(i+1,j+1)."""
    rows = len(a)
    cols = len(a[0])
    total = sum(a[i][j] * b[i][j] for i in range(rows) for j in range(cols))
    # horizontal arrows (i,j) -> (i,j+1)
    total -= sum(a[i][j] * b[i][j + 1] for i in range(rows) for j in range(cols - 1))
    # vertical arrows (i,j) -> (i+1,j)
    total -= sum(a[i][j] * b[i + 1][j] for i in range(rows - 1) for j in range(cols))
    # one relation per unit square (i,j) -> (i+1,j+1)
    total += sum(a[i][j] * b[i + 1][j + 1] for i in range(rows - 1) for j in range(cols - 1))
    return total


def flat_scan(w, qs=DEFAULT_QS, budget=DEFAULT_BUDGET):
    """Estimated fibre dimension over every orbit, flagged against the
    target dimension (the permutation's length).

    The flat-candidate set is reported raw; whether it is upward closed
    under the degeneration order is attached as a diagnostic only.
    """
    w = check_permutation(w)
    shape = GridShape(len(w) - 1)
    if shape.n > 3:
        raise InfeasibleSize("flat scan is limited to n <= 3")
    e = target_dims(w)
    target = length(w)
    rows = []
    flats = []
    for idx, dec in enumerate(enumerate_orbits(shape), start=1):
        pt = assemble_canonical(dec)
        table = point_counts(pt, e, qs, budget)
        est = fit_dimension(table.counts, _degree_bound(shape, e))
        rows.append(FlatScanRow(idx, dec, table, est, est.degree == target))
        flats.append(sw_array(pt).flat())
    candidates = {r.orbit_id for r in rows if r.flat_candidate}
    upward_closed = all(
        (rows[j].orbit_id in candidates)
        for i in range(len(rows))
        if rows[i].orbit_id in candidates
        for j in range(len(rows))
        if i != j and all(x <= y for x, y in zip(flats[i], flats[j]))
    )
    return FlatScanResult(w, target, tuple(rows), upward_closed)


# ---------------------------------------------------------------------------
# Hom-scheme audit

def _grid_arrows(shape):
    horiz = [
        ((i, j), (i, j + 1))
        for i in range(1, shape.size + 1)
        for j in range(1, shape.n)
    ]
    vert = [
        ((i, j), (i + 1, j))
        for i in range(1, shape.size)
        for j in range(1, shape.n + 1)
    ]
    return horiz, vert


def _squares(shape):
    return [
        (i, j)
        for i in range(1, shape.size)
        for j in range(1, shape.n)
    ]


def _edim(e, v):
    return e[v[0] - 1][v[1] - 1]


def _shaped_zero(r, c, zero):
    return [[zero] * c for _ in range(r)]


def _shaped_mul(field, a, b, r, m, c):
    out = _shaped_zero(r, c, field.zero)
    for i in range(r):
        for t in range(m):
            x = a[i][t]
            if x != field.zero:
                for j in range(c):
                    y = b[t][j]
                    if y != field.zero:
                        out[i][j] = field.add(out[i][j], field.mul(x, y))
    return out


def rep_variety_count(shape, e, q, budget=DEFAULT_BUDGET):
    """Points over F_q of the variety of representations with dimension
    grid e satisfying every square's commutativity relation.  Brute-force
    enumeration of all arrow matrices with per-leaf relation checks."""
    field = GF(q)
    horiz, vert = _grid_arrows(shape)
    arrows = horiz + vert
    var_arrows = [a for a in arrows if _edim(e, a[0]) and _edim(e, a[1])]
    sizes = [(_edim(e, t), _edim(e, s)) for s, t in var_arrows]
    nvars = sum(r * c for r, c in sizes)
    if q ** nvars > budget:
        raise InfeasibleSize(f"representation variety has q^{nvars} candidate points")
    squares = []
    for (i, j) in _squares(shape):
        if _edim(e, (i, j)) and _edim(e, (i + 1, j + 1)):
            squares.append((i, j))

    def matrices_from(flat):
        mats = {}
        pos = 0
        for (s, t), (r, c) in zip(var_arrows, sizes):
            mats[(s, t)] = [list(flat[pos + x * c:pos + (x + 1) * c]) for x in range(r)]
            pos += r * c
        return mats

    def arrow_matrix(mats, s, t):
        r, c = _edim(e, t), _edim(e, s)
        return mats.get((s, t), _shaped_zero(r, c, field.zero)), r, c

    count = 0
    for flat in product(range(q), repeat=nvars):
        mats = matrices_from(flat)
        ok = True
        for (i, j) in squares:
            es, et = _edim(e, (i, j)), _edim(e, (i + 1, j + 1))
            mid_r = _edim(e, (i, j + 1))
            mid_d = _edim(e, (i + 1, j))
            h1, _, _ = arrow_matrix(mats, (i, j), (i, j + 1))
            v2, _, _ = arrow_matrix(mats, (i, j + 1), (i + 1, j + 1))
            v1, _, _ = arrow_matrix(mats, (i, j), (i + 1, j))
            h2, _, _ = arrow_matrix(mats, (i + 1, j), (i + 1, j + 1))
            right_down = (
                _shaped_mul(field, v2, h1, et, mid_r, es)
                if mid_r
                else _shaped_zero(et, es, field.zero)
            )
            down_right = (
                _shaped_mul(field, h2, v1, et, mid_d, es)
                if mid_d
                else _shaped_zero(et, es, field.zero)
            )
            if right_down != down_right:
                ok = False
                break
        if ok:
            count += 1
    return count


def _coordinate_subreps(point, e, cap=8):
    """Subrepresentations spanned by standard basis vectors: the torus-fixed
    points of the fibre over a canonical representative."""
    shape = point.shape
    found = []
    cells = [(j, i) for j in range(1, shape.n + 1) for i in range(1, shape.size + 1)]

    def column_support(mat, t, i):
        return {r for r in range(1, i + 1) if mat.entry(r, t) != QQ.zero}

    def extend(idx, assign):
        if len(found) >= cap:
            return
        if idx == len(cells):
            found.append(dict(assign))
            return
        j, i = cells[idx]
        k = e[i - 1][j - 1]
        prev_up = assign.get((i - 1, j), frozenset())
        for cand in combinations(range(1, i + 1), k):
            s = frozenset(cand)
            if not prev_up <= s:
                continue
            if j >= 2:
                left = assign.get((i, j - 1), frozenset())
                block = principal_block(point.maps[j - 2], i)
                if any(not column_support(block, t, i) <= s for t in left):
                    continue
            assign[(i, j)] = s
            extend(idx + 1, assign)
            del assign[(i, j)]

    extend(0, {})
    return found


def _hom_point_from_subrep(point, e, assign):
    """Exact (N, g) pair over Q for a coordinate subrepresentation."""
    shape = point.shape
    horiz, vert = _grid_arrows(shape)
    bases = {v: sorted(assign.get(v, frozenset())) for v in assign}
    g = {}
    for (i, j), basis in bases.items():
        mat = _shaped_zero(i, len(basis), Fraction(0))
        for idx, t in enumerate(basis):
            mat[t - 1][idx] = Fraction(1)
        g[(i, j)] = mat
    n_mats = {}
    for (s, t) in horiz + vert:
        es, et = _edim(e, s), _edim(e, t)
        if not (es and et):
            continue
        sb, tb = bases[s], bases[t]
        i = s[0]
        if t[1] == s[1] + 1:  # horizontal: the stored map cut to row i
            block = principal_block(point.maps[s[1] - 1], i)
            col = lambda src: [block.entry(r, src) for r in range(1, i + 1)]
        else:  # vertical: the coordinate inclusion
            col = lambda src: [
                Fraction(1) if r == src else Fraction(0) for r in range(1, i + 2)
            ]
        mat = _shaped_zero(et, es, Fraction(0))
        for cdx, src in enumerate(sb):
            image = col(src)
            for rdx, dst in enumerate(tb):
                mat[rdx][cdx] = image[dst - 1]
        n_mats[(s, t)] = mat
    return n_mats, g


def _hom_residuals(point, e, n_mats, g):
    """Flattened defining equations of the Hom scheme at (N, g)."""
    shape = point.shape
    horiz, vert = _grid_arrows(shape)
    out = []
    for (s, t) in horiz + vert:
        i, j = s
        es = _edim(e, s)
        if es == 0:
            continue
        et = _edim(e, t)
        if t[1] == j + 1:
            block = principal_block(point.maps[j - 1], i)
            big = [list(row) for row in block.data]
            amb_t = i
        else:
            big = [
                [Fraction(1) if c == r else Fraction(0) for c in range(i)]
                for r in range(i + 1)
            ]
            amb_t = i + 1
        lhs = _shaped_mul(QQ, big, g[s], amb_t, i, es)
        if et:
            rhs = _shaped_mul(QQ, g[t], n_mats[(s, t)], amb_t, et, es)
        else:
            rhs = _shaped_zero(amb_t, es, Fraction(0))
        for r in range(amb_t):
            for c in range(es):
                out.append(lhs[r][c] - rhs[r][c])
    return out


def _comm_residuals(shape, e, n_mats):
    """Flattened commutativity relations of the representation variety."""
    out = []
    zero = Fraction(0)
    for (i, j) in _squares(shape):
        es, et = _edim(e, (i, j)), _edim(e, (i + 1, j + 1))
        if not (es and et):
            continue
        mid_r, mid_d = _edim(e, (i, j + 1)), _edim(e, (i + 1, j))
        right_down = (
            _shaped_mul(QQ, n_mats[((i, j + 1), (i + 1, j + 1))], n_mats[((i, j), (i, j + 1))], et, mid_r, es)
            if mid_r
            else _shaped_zero(et, es, zero)
        )
        down_right = (
            _shaped_mul(QQ, n_mats[((i + 1, j), (i + 1, j + 1))], n_mats[((i, j), (i + 1, j))], et, mid_d, es)
            if mid_d
            else _shaped_zero(et, es, zero)
        )
        for r in range(et):
            for c in range(es):
                out.append(right_down[r][c] - down_right[r][c])
    return out


def _variables(shape, e):
    horiz, vert = _grid_arrows(shape)
    vars_ = []
    for (s, t) in horiz + vert:
        es, et = _edim(e, s), _edim(e, t)
        if es and et:
            vars_.extend((("N", (s, t), r, c)) for r in range(et) for c in range(es))
    for i in range(1, shape.size + 1):
        for j in range(1, shape.n + 1):
            k = e[i - 1][j - 1]
            if k:
                vars_.extend((("g", (i, j), r, c)) for r in range(i) for c in range(k))
    return vars_


def _jacobian_ranks(point, e, n_mats, g):
    """Rank of the stacked [hom; commutativity] Jacobian and of the
    commutativity Jacobian alone, exactly over Q at the given point.

    The equations are multilinear in each scalar variable, so a unit
    perturbation gives the exact partial derivative column.
    """
    shape = point.shape
    base_h = _hom_residuals(point, e, n_mats, g)
    base_c = _comm_residuals(shape, e, n_mats)
    assert all(x == 0 for x in base_h) and all(x == 0 for x in base_c)
    cols_h, cols_c = [], []
    for kind, key, r, c in _variables(shape, e):
        store = n_mats if kind == "N" else g
        store[key][r][c] += 1
        cols_h.append(_hom_residuals(point, e, n_mats, g))
        cols_c.append(_comm_residuals(shape, e, n_mats))
        store[key][r][c] -= 1
    nh, nc = len(base_h), len(base_c)
    if not cols_h:
        return 0, 0
    stacked = [
        [cols_h[v][r] for v in range(len(cols_h))] for r in range(nh)
    ] + [
        [cols_c[v][r] for v in range(len(cols_c))] for r in range(nc)
    ]
    comm_only = [[cols_c[v][r] for v in range(len(cols_c))] for r in range(nc)]
    rank_stacked = rank(Matrix(QQ, stacked)) if stacked else 0
    rank_comm = rank(Matrix(QQ, comm_only)) if comm_only else 0
    return rank_stacked, rank_comm


def _random_unimodular(size, rng):
    upper = [
        [Fraction(1) if i == j else (Fraction(rng.randint(-2, 2)) if j > i else Fraction(0)) for j in range(size)]
        for i in range(size)
    ]
    lower = [
        [Fraction(1) if i == j else (Fraction(rng.randint(-2, 2)) if j < i else Fraction(0)) for j in range(size)]
        for i in range(size)
    ]
    return _shaped_mul(QQ, upper, lower, size, size, size)


def _invert_square(mat, size):
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(size)] for i, row in enumerate(mat)]
    for c in range(size):
        piv = next(r for r in range(c, size) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv_p = 1 / aug[c][c]
        aug[c] = [x * inv_p for x in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                coef = aug[r][c]
                aug[r] = [x - coef * y for x, y in zip(aug[r], aug[c])]
    return [row[size:] for row in aug]


def _translate_point(shape, e, n_mats, g, rng):
    """Base change of the subrepresentation by random invertible matrices:
    another exact point of the same Hom scheme."""
    a = {}
    a_inv = {}
    for i in range(1, shape.size + 1):
        for j in range(1, shape.n + 1):
            k = e[i - 1][j - 1]
            if k:
                m = _random_unimodular(k, rng)
                a[(i, j)] = m
                a_inv[(i, j)] = _invert_square([list(r) for r in m], k)
    new_n = {}
    for (s, t), mat in n_mats.items():
        es, et = _edim(e, s), _edim(e, t)
        new_n[(s, t)] = _shaped_mul(
            QQ, a[t], _shaped_mul(QQ, mat, a_inv[s], et, es, es), et, et, es
        )
    new_g = {}
    for (i, j), mat in g.items():
        k = e[i - 1][j - 1]
        new_g[(i, j)] = _shaped_mul(QQ, mat, a_inv[(i, j)], i, k, k) if k else mat
    return new_n, new_g


def hom_report(w, point, qs=DEFAULT_QS, seed=0, budget=DEFAULT_BUDGET, samples=5):
    """Complete-intersection audit of the Hom scheme for (w, point).

    All reported quantities are orbit invariants, so the audit runs on the
    canonical representative of the point's orbit, where coordinate
    subrepresentations provide exact rational points of the scheme.

    Raises:
        NoPointFound: no coordinate subrepresentation exists (sampling
            budget exhausted).
    """
    w = check_permutation(w)
    shape = point.shape
    if len(w) != shape.size:
        raise ValueError("permutation size does not match the shape")
    e = target_dims(w)
    canon = assemble_canonical(decompose(point))
    dim_g = sum(x * x for row in e for x in row)
    total_e = sum(
        e[i - 1][j - 1] * i for i in range(1, shape.size + 1) for j in range(1, shape.n + 1)
    )
    if all(x == 0 for row in e for x in row):
        return HomReport(0, 0, 0, 0, 0, 0, 0, True, ())
    est_gr = estimate_dim(canon, e, qs, budget)
    re_counts = tuple((q, rep_variety_count(shape, e, q, budget)) for q in qs)
    nvars = sum(
        _edim(e, s) * _edim(e, t)
        for pair in _grid_arrows(shape)
        for (s, t) in pair
    )
    est_re = fit_dimension(re_counts, nvars)
    dim_hom0 = est_gr.degree + dim_g
    dim_v = est_re.degree + total_e
    codim = dim_v - dim_hom0
    base_points = _coordinate_subreps(canon, e)
    if not base_points:
        raise NoPointFound("no coordinate subrepresentation of the canonical point")
    rng = random.Random(seed)
    ranks = []
    idx = 0
    while len(ranks) < max(samples, len(base_points)) and idx < 4 * max(samples, len(base_points)):
        assign = base_points[idx % len(base_points)]
        n_mats, g = _hom_point_from_subrep(canon, e, assign)
        if idx >= len(base_points):
            n_mats, g = _translate_point(shape, e, n_mats, g, rng)
        stacked, comm = _jacobian_ranks(canon, e, n_mats, g)
        ranks.append(stacked - comm)
        idx += 1
    indep = max(ranks)
    return HomReport(
        dim_g,
        est_gr.degree,
        dim_hom0,
        dim_v,
        est_re.degree,
        codim,
        indep,
        indep == codim,
        tuple(ranks),
    )

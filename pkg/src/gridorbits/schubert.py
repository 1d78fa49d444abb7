"""Permutation combinatorics: length, pattern avoidance, and the two
dimension grids attached to a permutation.

Permutations are tuples in one-line notation with values 1..n+1; they feed
the degeneration experiments (the grid selected by :func:`target_dims` is
the dimension vector of the fibres being degenerated).
"""

from __future__ import annotations

from itertools import combinations

SMOOTHNESS_PATTERNS = ((4, 2, 3, 1), (3, 4, 1, 2))


def check_permutation(w):
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def length(w):
    """Number of inversions (the dimension of the associated variety)."""
    w = check_permutation(w)
    return sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])


def contains_pattern(w, pattern):
    """Whether some subsequence of w is order-isomorphic to the pattern."""
    w = tuple(w)
    pattern = tuple(pattern)
    k = len(pattern)
    if k > len(w):
        return False
    rel = tuple(sorted(range(k), key=lambda t: pattern[t]))
    for pick in combinations(w, k):
        if tuple(sorted(range(k), key=lambda t: pick[t])) == rel:
            return True
    return False


def is_smooth(w):
    """Smoothness criterion: w avoids the patterns 4231 and 3412."""
    return not any(contains_pattern(w, p) for p in SMOOTHNESS_PATTERNS)


def r_grid(w):
    """Grid r(i, j) = #{k <= j : w(k) <= i}, i = 1..n+1, j = 1..n."""
    w = check_permutation(w)
    n = len(w) - 1
    return tuple(
        tuple(sum(1 for k in range(j) if w[k] <= i) for j in range(1, n + 1))
        for i in range(1, n + 2)
    )


def e_grid(w):
    """The free-subspace grid: where r is extremal (0 or min(i,j)) copy it,
    elsewhere take the max of the upper and left neighbours (zero
    boundary).  Evaluated in increasing i+j order."""
    w = check_permutation(w)
    n = len(w) - 1
    r = r_grid(w)
    e = [[0] * n for _ in range(n + 1)]
    for i in range(1, n + 2):
        for j in range(1, n + 1):
            rv = r[i - 1][j - 1]
            if rv == min(i, j) or rv == 0:
                e[i - 1][j - 1] = rv
            else:
                up = e[i - 2][j - 1] if i >= 2 else 0
                left = e[i - 1][j - 2] if j >= 2 else 0
                e[i - 1][j - 1] = max(up, left)
    return tuple(tuple(row) for row in e)


def target_dims(w):
    """Dimension grid used for degenerations of w's variety: the
    free-subspace grid when it is smooth, the full rank grid otherwise."""
    return e_grid(w) if is_smooth(w) else r_grid(w)

"""Exact rank computations for the divergence operator.

The divergence from degree k down to degree k - 1 is an integer matrix with
a 0/1 entry for each containment J subset I.  Its kernel dimension is found
by Gaussian elimination modulo a large prime; a full-rank certificate mod p
lifts to the integers, and in the (never yet observed) deficient case the
computation falls back to exact rational elimination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

_PRIME = (1 << 61) - 1


def _rank_mod_p(rows: list[list[int]], p: int = _PRIME) -> int:
    rows = [[v % p for v in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        lead = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(v - factor * lv) % p for v, lv in zip(rows[r], lead)]
        rank += 1
        col += 1
    return rank


def _rank_exact(rows: list[list[int]]) -> int:
    work = [[Fraction(v) for v in row] for row in rows]
    ncols = len(work[0]) if work else 0
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [v * inv for v in work[rank]]
        lead = work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                factor = work[r][col]
                work[r] = [v - factor * lv for v, lv in zip(work[r], lead)]
        rank += 1
        col += 1
    return rank


def divergence_matrix(n: int, k: int) -> list[list[int]]:
    """Rows indexed by (k-1)-subsets, columns by k-subsets, entry 1 on
    containment."""
    if not (1 <= k and 2 * k <= n):
        raise ValueError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    cols = {key: c for c, key in enumerate(combinations(range(1, n + 1), k))}
    rows = []
    for sub in combinations(range(1, n + 1), k - 1):
        row = [0] * len(cols)
        free = set(range(1, n + 1)) - set(sub)
        for extra in free:
            row[cols[tuple(sorted(sub + (extra,)))]] = 1
        rows.append(row)
    return rows


def harmonic_dim(n: int, k: int) -> int:
    """Kernel dimension of the degree-k divergence, computed from rank."""
    if not 0 <= 2 * k <= n:
        raise ValueError(f"need 0 <= k <= n/2, got n={n}, k={k}")
    if k == 0:
        return 1
    rows = divergence_matrix(n, k)
    ncols = len(rows[0])
    rank = _rank_mod_p(rows)
    if rank < len(rows):
        # Rank can only drop mod p, so a deficit needs exact confirmation.
        rank = _rank_exact(rows)
    return ncols - rank

"""Gelfand-Tsetlin bases for two-row representations, from closed formulas.

For a tableau u with second-row entries p_1 < ... < p_k, the harmonic basis
vector is the sum of pseudo-monomials

    h_u = sum prod_j (x_{i_j} - x_{p_j})

over all choices i_1, .., i_k with i_j < p_j and all 2k indices pairwise
distinct.  These vectors are eigenvectors of every partial-transposition-sum
operator, with eigenvalue at level l the content of the cell holding l, so
they form the Gelfand-Tsetlin basis of the harmonic space.  Applying psi
carries the basis into each higher-degree copy of the same irreducible.

Vectors are kept unnormalized with their exact squared norms; the expected
closed forms for those norms live in ``closed_harmonic_norm_sq``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from .forms import Permutation, SquareFreeForm, act, inner, psi
from .ygraph import TwoRowDiagram, TwoRowTableau, enumerate_tableaux


@dataclass(frozen=True, eq=False)
class GzVector:
    """A basis vector: tableau label, exact form, exact squared norm."""

    tableau: TwoRowTableau
    form: SquareFreeForm
    norm_sq: Fraction


@lru_cache(maxsize=None)
def gz_harmonic(u: TwoRowTableau) -> GzVector:
    """The harmonic Gelfand-Tsetlin vector labeled by u, unnormalized."""
    n = u.n
    ps = u.second_row
    k = len(ps)
    taken = set(ps)
    coeffs: dict[tuple[int, ...], Fraction] = {}

    def place(j: int, chosen: tuple[int, ...]) -> None:
        if j == k:
            _accumulate(coeffs, chosen, ps)
            return
        for i in range(1, ps[j]):
            if i in taken or i in chosen:
                continue
            place(j + 1, chosen + (i,))

    place(0, ())
    form = SquareFreeForm(n, k, coeffs)
    return GzVector(u, form, inner(form, form))


def _accumulate(
    coeffs: dict[tuple[int, ...], Fraction],
    lows: tuple[int, ...],
    highs: tuple[int, ...],
) -> None:
    """Add the expansion of prod_j (x_{lows[j]} - x_{highs[j]}) into coeffs."""
    for picks in product((0, 1), repeat=len(lows)):
        key = tuple(sorted(h if b else l for l, h, b in zip(lows, highs, picks)))
        sign = (-1) ** sum(picks)
        coeffs[key] = coeffs.get(key, Fraction(0)) + sign


@lru_cache(maxsize=None)
def gz_in_H(u: TwoRowTableau, m: int) -> GzVector:
    """The vector for u inside the degree-m module, via the psi lift."""
    k = len(u.second_row)
    if not k <= m:
        raise ValueError(f"degree {m} is below the tableau's second row {k}")
    if 2 * m > u.n:
        raise ValueError(f"degree {m} exceeds half of {u.n} variables")
    base = gz_harmonic(u)
    form = psi(base.form, m - k)
    return GzVector(u, form, inner(form, form))


def closed_harmonic_norm_sq(u: TwoRowTableau) -> Fraction:
    """Product formula prod_j (p_j - 2j + 1)(p_j - 2j + 2) for |h_u|^2."""
    out = Fraction(1)
    for j, p in enumerate(u.second_row, start=1):
        out *= (p - 2 * j + 1) * (p - 2 * j + 2)
    return out


def closed_norm_sq_in_H(u: TwoRowTableau, m: int) -> Fraction:
    """The harmonic norm times the psi isometry constant C(n - 2k, m - k)."""
    k = len(u.second_row)
    return closed_harmonic_norm_sq(u) * comb(u.n - 2 * k, m - k)


@lru_cache(maxsize=None)
def full_gz_basis(n: int, m: int) -> tuple[GzVector, ...]:
    """The Gelfand-Tsetlin basis of the whole degree-m module in n variables.

    Vectors are ordered by second-row length k, then lexicographically by
    second-row entries; their count telescopes to C(n, m).
    """
    if not 0 <= 2 * m <= n:
        raise ValueError(f"need 0 <= m <= n/2, got n={n}, m={m}")
    out = []
    for k in range(m + 1):
        for u in enumerate_tableaux(TwoRowDiagram(n, k)):
            out.append(gz_in_H(u, m))
    return tuple(out)


def iter_basis(n: int, m: int):
    """Yield the degree-m basis vectors in order without caching them.

    Bulk export can touch thousands of large forms; this path keeps memory
    flat at one vector.  Cost still grows quickly with the second-row
    length, see the package notes on practical sizes.
    """
    if not 0 <= 2 * m <= n:
        raise ValueError(f"need 0 <= m <= n/2, got n={n}, m={m}")
    for k in range(m + 1):
        for u in enumerate_tableaux(TwoRowDiagram(n, k)):
            base = gz_harmonic.__wrapped__(u)
            form = psi(base.form, m - k)
            yield GzVector(u, form, inner(form, form))


def yjm_apply(l: int, f: SquareFreeForm) -> SquareFreeForm:
    """Apply the sum of transpositions (i l) over i < l to f."""
    if not 1 <= l <= f.n:
        raise ValueError(f"index must lie in 1..{f.n}, got {l}")
    out = SquareFreeForm.zero(f.n, f.k)
    for i in range(1, l):
        out = out + act(Permutation.transposition(f.n, i, l), f)
    return out


def yjm_eigencheck(u: TwoRowTableau, m: int | None = None) -> bool:
    """Check that u's vector is an eigenvector of every level's operator,
    with eigenvalue the content of the cell holding that level."""
    vec = gz_harmonic(u) if m is None else gz_in_H(u, m)
    for l in range(1, u.n + 1):
        if yjm_apply(l, vec.form) != u.content(l) * vec.form:
            return False
    return True


def _swap_levels(u: TwoRowTableau, i: int) -> TwoRowTableau:
    """The tableau with entries i and i + 1 exchanged (rows differ)."""
    ps = set(u.second_row)
    if i in ps:
        ps.remove(i)
        ps.add(i + 1)
    elif i + 1 in ps:
        ps.remove(i + 1)
        ps.add(i)
    return TwoRowTableau(u.n, tuple(sorted(ps)))


def orthogonal_form_matrix(i: int, d: TwoRowDiagram) -> list[list[Fraction]]:
    """Matrix of the adjacent transposition (i i+1) in the basis of shape d.

    Rows index the source vector, columns the target, both in the order of
    ``enumerate_tableaux``.  With c the content difference between the cells
    of i + 1 and i in the source tableau, the diagonal entry is 1/c; when
    exchanging i and i + 1 is again standard the off-diagonal entry is
    1 - 1/c.  The unnormalized basis makes every entry rational.
    """
    if not 1 <= i <= d.n - 1:
        raise ValueError(f"transposition index must lie in 1..{d.n - 1}, got {i}")
    tabs = enumerate_tableaux(d)
    index = {u.second_row: r for r, u in enumerate(tabs)}
    size = len(tabs)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for r, u in enumerate(tabs):
        dist = u.content(i + 1) - u.content(i)
        matrix[r][r] = Fraction(1, dist)
        if abs(dist) >= 2:
            v = _swap_levels(u, i)
            matrix[r][index[v.second_row]] = 1 - Fraction(1, dist)
    return matrix


def transposition_matrix_in_basis(
    i: int, d: TwoRowDiagram, m: int | None = None
) -> list[list[Fraction]]:
    """Matrix of (i i+1) computed directly from the forms, row = source.

    Each image is expanded over the shape's basis by orthogonal projection
    and the expansion is verified exactly, so the result is trustworthy
    independent of any closed formula.
    """
    if not 1 <= i <= d.n - 1:
        raise ValueError(f"transposition index must lie in 1..{d.n - 1}, got {i}")
    if m is None:
        m = d.k
    basis = [gz_in_H(u, m) for u in enumerate_tableaux(d)]
    sigma = Permutation.transposition(d.n, i, i + 1)
    matrix = []
    for vec in basis:
        image = act(sigma, vec.form)
        row = [inner(image, w.form) / w.norm_sq for w in basis]
        recon = SquareFreeForm.zero(d.n, m)
        for c, w in zip(row, basis):
            recon = recon + c * w.form
        if recon != image:
            raise ValueError("image does not lie in the span of the shape's basis")
        matrix.append(row)
    return matrix

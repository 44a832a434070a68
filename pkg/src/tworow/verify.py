"""Self-checks tying the closed formulas to first-principles computations.

Every check recomputes something two independent ways and compares exactly.
The suites are sized by level bounds so both the command line tool and the
test suite can run them at the documented desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .forms import decompose_step, harmonic_preimage, inner, is_harmonic, psi
from .gz import (
    closed_harmonic_norm_sq,
    closed_norm_sq_in_H,
    full_gz_basis,
    gz_harmonic,
    gz_in_H,
    orthogonal_form_matrix,
    transposition_matrix_in_basis,
    yjm_eigencheck,
)
from .linalg import harmonic_dim
from .markov import (
    BitPrefix,
    central_alpha_transition,
    central_table,
    central_transition_oracle,
    good_tableau_ratio,
    induced_transition,
    is_markov,
    kernel_from_prefix,
    kernel_matches,
    negative_control_tables,
    path_product_table,
    spectral_measure,
)
from .ygraph import (
    TwoRowDiagram,
    dim,
    enumerate_diagrams,
    enumerate_tableaux,
    good_tableau,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _result(name: str, failures: list[str], ok_detail: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:5])
        if len(failures) > 5:
            shown += f"; and {len(failures) - 5} more"
        return CheckResult(name, False, shown)
    return CheckResult(name, True, ok_detail)


def check_basis(n_max: int = 8) -> list[CheckResult]:
    """Eigenvector property, orthogonality and closed norms of the basis."""
    eig_fail: list[str] = []
    orth_fail: list[str] = []
    norm_fail: list[str] = []
    vectors = 0
    for n in range(1, n_max + 1):
        for d in enumerate_diagrams(n):
            for u in enumerate_tableaux(d):
                vectors += 1
                if not yjm_eigencheck(u):
                    eig_fail.append(f"harmonic {u.second_row} at n={n}")
                if gz_harmonic(u).norm_sq != closed_harmonic_norm_sq(u):
                    norm_fail.append(f"harmonic norm {u.second_row} at n={n}")
        for m in range(n // 2 + 1):
            basis = full_gz_basis(n, m)
            for vec in basis:
                if not yjm_eigencheck(vec.tableau, m):
                    eig_fail.append(f"lifted {vec.tableau.second_row} at n={n} m={m}")
                if vec.norm_sq != closed_norm_sq_in_H(vec.tableau, m):
                    norm_fail.append(
                        f"lifted norm {vec.tableau.second_row} at n={n} m={m}"
                    )
            for a in range(len(basis)):
                for b in range(a + 1, len(basis)):
                    if inner(basis[a].form, basis[b].form) != 0:
                        orth_fail.append(
                            f"n={n} m={m}: {basis[a].tableau.second_row} vs "
                            f"{basis[b].tableau.second_row}"
                        )
    return [
        _result(
            "basis-eigen",
            eig_fail,
            f"all {vectors} vectors at n <= {n_max} are eigenvectors of every "
            f"partial transposition sum, eigenvalues the entry contents",
        ),
        _result(
            "basis-orthogonal",
            orth_fail,
            f"full bases pairwise orthogonal for n <= {n_max}",
        ),
        _result(
            "basis-norms",
            norm_fail,
            f"squared norms match prod (p_j - 2j + 1)(p_j - 2j + 2) and its "
            f"binomial lift for n <= {n_max}",
        ),
    ]


def check_psi(n_max: int = 8) -> list[CheckResult]:
    """The averaging map scales squared norms by C(n - 2k, m - k)."""
    failures: list[str] = []
    cases = 0
    for n in range(0, n_max + 1):
        for d in enumerate_diagrams(n):
            k = d.k
            for u in enumerate_tableaux(d):
                base = gz_harmonic(u)
                for m in range(k, n // 2 + 1):
                    cases += 1
                    lifted = psi(base.form, m - k)
                    expect = comb(n - 2 * k, m - k) * base.norm_sq
                    if inner(lifted, lifted) != expect:
                        failures.append(f"n={n}, u={u.second_row}, m={m}")
    return [
        _result(
            "psi-isometry",
            failures,
            f"{cases} lifts at n <= {n_max} scale squared norms by "
            f"C(n - 2k, m - k); at k = 0 this is the norm C(n, m) of the "
            f"averaged constant",
        )
    ]


def check_decompose(n_max: int = 7) -> list[CheckResult]:
    """One-level splits: sum, orthogonality, norm ratios, exact preimages."""
    failures: list[str] = []
    cases = 0
    for n in range(1, n_max + 1):
        for d in enumerate_diagrams(n):
            k = d.k
            for u in enumerate_tableaux(d):
                f0 = gz_harmonic(u).form
                for m in range(k, n // 2 + 1):
                    f = psi(f0, m - k)
                    norm_f = inner(f, f)
                    for bit in (0, 1):
                        if 2 * (m + bit) > n + 1:
                            continue
                        cases += 1
                        stay, up = decompose_step(f, f0, bit)
                        whole = f.embedded(n + 1)
                        if bit:
                            whole = whole.times_var(n + 1)
                        if stay + up != whole:
                            failures.append(f"sum n={n} u={u.second_row} m={m} b={bit}")
                            continue
                        if inner(stay, up) != 0:
                            failures.append(f"orth n={n} u={u.second_row} m={m} b={bit}")
                        p_stay, p_up = induced_transition(n, k, m, bit)
                        if inner(stay, stay) != p_stay * norm_f:
                            failures.append(f"stay-norm n={n} u={u.second_row} m={m} b={bit}")
                        if inner(up, up) != p_up * norm_f:
                            failures.append(f"up-norm n={n} u={u.second_row} m={m} b={bit}")
                        try:
                            if not stay.is_zero():
                                harmonic_preimage(stay, k)
                            if not up.is_zero():
                                harmonic_preimage(up, k + 1)
                        except ValueError:
                            failures.append(f"preimage n={n} u={u.second_row} m={m} b={bit}")
    return [
        _result(
            "decompose-step",
            failures,
            f"{cases} splits at n <= {n_max}: components sum back, are "
            f"orthogonal, carry the kernel's share of the squared norm, and "
            f"project back to harmonic forms",
        )
    ]


def _valid_prefixes(length: int) -> list[BitPrefix]:
    out = []
    for bits in product((0, 1), repeat=length):
        try:
            out.append(BitPrefix(bits))
        except ValueError:
            continue
    return out


def check_spectral(n_max: int = 8) -> list[CheckResult]:
    """Projection tables equal kernel path products for every valid
    direction sequence, and the step ratios equal the kernel exactly."""
    table_fail: list[str] = []
    markov_fail: list[str] = []
    prefixes = 0
    for length in range(1, n_max + 1):
        for prefix in _valid_prefixes(length):
            prefixes += 1
            left = spectral_measure(prefix)
            right = path_product_table(prefix)
            if left != right:
                table_fail.append(f"xi={prefix}")
                continue
            if length >= 2:
                kernel = kernel_from_prefix(prefix)
                shallow = spectral_measure(prefix, length - 1)
                if not is_markov(shallow, left).ok:
                    markov_fail.append(f"xi={prefix}")
                elif not kernel_matches(shallow, left, kernel):
                    markov_fail.append(f"kernel xi={prefix}")
    return [
        _result(
            "spectral-vs-paths",
            table_fail,
            f"projection and path-product tables agree for all {prefixes} "
            f"valid sequences of length <= {n_max}",
        ),
        _result(
            "spectral-markov",
            markov_fail,
            f"step ratios depend only on the shape and match the closed "
            f"kernel for all sequences of length <= {n_max}",
        ),
    ]


def check_good(n_max: int = 12) -> list[CheckResult]:
    """Norms and level ratios for the tableau with second row 2, 4, ..., 2k."""
    norm_fail: list[str] = []
    ratio_fail: list[str] = []
    for n in range(0, n_max + 1):
        for k in range(n // 2 + 1):
            u = good_tableau(n, k)
            if gz_harmonic(u).norm_sq != 2**k:
                norm_fail.append(f"harmonic n={n} k={k}")
            for m in range(k, n // 2 + 1):
                vec = gz_in_H(u, m)
                if vec.norm_sq != 2**k * comb(n - 2 * k, m - k):
                    norm_fail.append(f"lifted n={n} k={k} m={m}")
                for bit in (0, 1):
                    if 2 * (m + bit) > n + 1:
                        continue
                    stay, _ = induced_transition(n, k, m, bit)
                    if good_tableau_ratio(n, k, m, m + bit) != stay:
                        ratio_fail.append(f"n={n} k={k} m={m} b={bit}")
    return [
        _result(
            "good-tableau-norms",
            norm_fail,
            f"squared norms are 2^k and 2^k C(n - 2k, m - k) for n <= {n_max}",
        ),
        _result(
            "good-tableau-ratio",
            ratio_fail,
            f"consecutive-level norm ratios equal the stay probability for "
            f"n <= {n_max}",
        ),
    ]


def check_central(mass_max: int = 12, ratio_max: int = 10) -> list[CheckResult]:
    """Total mass, kernel against weight ratios, and the Markov property of
    the two-frequency central measure."""
    mass_fail: list[str] = []
    ratio_fail: list[str] = []
    markov_fail: list[str] = []
    for n in range(1, mass_max + 1):
        try:
            central_table(n)
        except ValueError as exc:
            mass_fail.append(f"n={n}: {exc}")
    for n in range(0, ratio_max + 1):
        for k in range(n // 2 + 1):
            if central_alpha_transition(n, k) != central_transition_oracle(n, k):
                ratio_fail.append(f"n={n} k={k}")
    for n in range(1, min(mass_max, 9)):
        if not is_markov(central_table(n), central_table(n + 1)).ok:
            markov_fail.append(f"n={n}")
    return [
        _result(
            "central-mass",
            mass_fail,
            f"per-path weights 2^-n prod (2 + content)/hook sum to exactly 1 "
            f"at every level n <= {mass_max}",
        ),
        _result(
            "central-kernel",
            ratio_fail,
            f"the rows ((n - 2k + 2)/(2(n - 2k + 1)), "
            f"(n - 2k)/(2(n - 2k + 1))) equal the weight ratios at every "
            f"level n <= {ratio_max} and every k, with no parity restriction",
        ),
        _result(
            "central-markov",
            markov_fail,
            "central tables pass the shape-dependence test across levels",
        ),
    ]


def check_parity(n_max: int = 8) -> list[CheckResult]:
    """Pin down the alternating sequence's kernel by parity.

    For directions 0, 1, 0, 1, ... the exact rows are (1/2, 1/2) at every
    odd level and the central rows at every even level.  A convention that
    attaches the flat 1/2 rows to even levels instead is refuted by these
    values; the direct projection tables below n_max certify the kernel.
    """
    failures: list[str] = []
    prefix = BitPrefix.alternating(n_max + 1)
    kernel = kernel_from_prefix(prefix)
    for n in range(1, n_max + 1):
        m = prefix.ones(n)
        for k in range(m + 1):
            entry = kernel.transition(n, k)
            if n % 2 == 1:
                expect = (Fraction(1, 2), Fraction(1, 2))
                label = "odd level, flat row"
            else:
                expect = central_alpha_transition(n, k)
                label = "even level, central row"
            if (entry.p_stay, entry.p_up) != expect:
                failures.append(f"{label} fails at n={n} k={k}")
    for n in range(1, n_max):
        shallow = spectral_measure(prefix, n)
        deeper = spectral_measure(prefix, n + 1)
        if not kernel_matches(shallow, deeper, kernel):
            failures.append(f"projection disagrees with kernel at n={n}")
    return [
        _result(
            "alternating-parity",
            failures,
            f"flat (1/2, 1/2) rows at odd levels, central rows at even "
            f"levels, certified against direct projection for n <= {n_max}; "
            f"the opposite parity attribution is refuted",
        )
    ]


def check_markov_detector() -> list[CheckResult]:
    """The shape-dependence test accepts the real chains and rejects the
    built-in corrupted pair."""
    failures: list[str] = []
    prefix = BitPrefix.from_string("010010")
    for n in range(1, 6):
        if not is_markov(spectral_measure(prefix, n), spectral_measure(prefix, n + 1)).ok:
            failures.append(f"spectral pair rejected at n={n}")
    if not is_markov(central_table(5), central_table(6)).ok:
        failures.append("central pair rejected")
    bad = negative_control_tables()
    report = is_markov(*bad)
    if report.ok:
        failures.append("corrupted pair accepted")
    elif not report.violations:
        failures.append("corrupted pair rejected without a witness")
    return [
        _result(
            "markov-detector",
            failures,
            "real chains accepted, corrupted pair rejected with a "
            "same-shape witness",
        )
    ]


def check_dimensions(n_max: int = 10) -> list[CheckResult]:
    """Harmonic dimensions by exact rank, and how they fill the module."""
    dim_fail: list[str] = []
    sum_fail: list[str] = []
    ranks: dict[tuple[int, int], int] = {}
    for n in range(0, n_max + 1):
        for k in range(n // 2 + 1):
            got = harmonic_dim(n, k)
            ranks[(n, k)] = got
            if got != dim(TwoRowDiagram(n, k)):
                dim_fail.append(f"n={n} k={k}: rank gives {got}")
        for m in range(n // 2 + 1):
            if sum(ranks[(n, k)] for k in range(m + 1)) != comb(n, m):
                sum_fail.append(f"n={n} m={m}")
    return [
        _result(
            "harmonic-dimension",
            dim_fail,
            f"divergence kernel ranks equal C(n, k) - C(n, k - 1) for "
            f"n <= {n_max}",
        ),
        _result(
            "module-filling",
            sum_fail,
            f"harmonic pieces fill the degree-m module to C(n, m) for "
            f"n <= {n_max}",
        ),
    ]


def _mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(a)
    return [
        [sum((a[r][t] * b[t][c] for t in range(size)), Fraction(0)) for c in range(size)]
        for r in range(size)
    ]


def _identity(size: int) -> list[list[Fraction]]:
    return [
        [Fraction(1) if r == c else Fraction(0) for c in range(size)]
        for r in range(size)
    ]


def check_matrices(n_max: int = 6) -> list[CheckResult]:
    """Adjacent-transposition matrices: closed entries against direct
    projection, involutions, braid and commutation relations."""
    agree_fail: list[str] = []
    relation_fail: list[str] = []
    for n in range(2, n_max + 1):
        for d in enumerate_diagrams(n):
            mats = {}
            for i in range(1, n):
                closed = orthogonal_form_matrix(i, d)
                direct = transposition_matrix_in_basis(i, d)
                if closed != direct:
                    agree_fail.append(f"n={n} k={d.k} i={i}")
                if d.k < n // 2 and closed != transposition_matrix_in_basis(i, d, d.k + 1):
                    agree_fail.append(f"lifted n={n} k={d.k} i={i}")
                mats[i] = closed
            size = len(mats[1])
            ident = _identity(size)
            for i in range(1, n):
                if _mat_mul(mats[i], mats[i]) != ident:
                    relation_fail.append(f"involution n={n} k={d.k} i={i}")
            for i in range(1, n - 1):
                left = _mat_mul(mats[i], _mat_mul(mats[i + 1], mats[i]))
                right = _mat_mul(mats[i + 1], _mat_mul(mats[i], mats[i + 1]))
                if left != right:
                    relation_fail.append(f"braid n={n} k={d.k} i={i}")
            for i in range(1, n - 2):
                for j in range(i + 2, n):
                    if _mat_mul(mats[i], mats[j]) != _mat_mul(mats[j], mats[i]):
                        relation_fail.append(f"commute n={n} k={d.k} i={i} j={j}")
    return [
        _result(
            "matrices-agree",
            agree_fail,
            f"closed-entry matrices equal the projection-built ones, also "
            f"after lifting, for n <= {n_max}",
        ),
        _result(
            "matrices-relations",
            relation_fail,
            f"involution, braid and commutation relations hold for "
            f"n <= {n_max}",
        ),
    ]


def run_scope(scope: str, n_max: int | None = None) -> list[CheckResult]:
    """The suites behind one verification scope, optionally capped.

    ``n_max`` lowers each suite's level bound; it never raises a suite past
    its documented ceiling, so runtimes stay at desk scale.
    """
    if scope not in ("all", "gz", "markov", "central"):
        raise ValueError(f"unknown scope {scope!r}")
    if n_max is not None and n_max < 1:
        raise ValueError(f"level cap must be at least 1, got {n_max}")

    def bound(ceiling: int) -> int:
        return ceiling if n_max is None else min(ceiling, n_max)

    out: list[CheckResult] = []
    if scope in ("all", "gz"):
        out += check_basis(bound(8))
        out += check_psi(bound(8))
        out += check_good(bound(12))
        out += check_matrices(bound(6))
        out += check_dimensions(bound(10))
    if scope in ("all", "markov"):
        out += check_decompose(bound(7))
        out += check_spectral(bound(8))
        out += check_parity(bound(8))
        out += check_markov_detector()
    if scope in ("all", "central"):
        out += check_central(bound(12), bound(10))
    return out


def run_all(
    basis_levels: int = 8,
    psi_levels: int = 8,
    decompose_levels: int = 7,
    spectral_levels: int = 8,
    good_levels: int = 12,
    central_levels: int = 12,
    ratio_levels: int = 10,
    rank_levels: int = 10,
    matrix_levels: int = 6,
) -> list[CheckResult]:
    out: list[CheckResult] = []
    out += check_basis(basis_levels)
    out += check_psi(psi_levels)
    out += check_decompose(decompose_levels)
    out += check_spectral(spectral_levels)
    out += check_good(good_levels)
    out += check_central(central_levels, ratio_levels)
    out += check_parity(min(spectral_levels, 8))
    out += check_markov_detector()
    out += check_dimensions(rank_levels)
    out += check_matrices(matrix_levels)
    return out

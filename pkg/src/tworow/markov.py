"""Spectral measures of induced representations and their random walks.

A direction sequence xi in {0,1}^N with at most t/2 ones among the first t
entries picks out, at every level n, the monomial over the one-positions
inside the degree-m(n) module.  Projecting that vector onto the
Gelfand-Tsetlin basis gives a probability on level-n tableaux, the spectral
measure.  These measures cohere across levels and are Markov: the chance of
the walk staying at second-row length k or moving up depends only on
(n, k, m(n)) and the next direction bit, through the closed kernel in
``induced_transition``.

The same machinery covers the exchangeable central measure with two equal
frequencies, whose kernel is level-homogeneous, and exact-arithmetic
samplers for both walks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gz import full_gz_basis
from .ygraph import (
    TwoRowDiagram,
    TwoRowTableau,
    enumerate_all_tableaux,
    enumerate_diagrams,
    enumerate_tableaux,
    hook_length,
)


@dataclass(frozen=True)
class BitPrefix:
    """A direction sequence: bits with at most t/2 ones in every prefix."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        ones = 0
        for t, b in enumerate(self.bits, start=1):
            if b not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {b!r}")
            ones += b
            if 2 * ones > t:
                raise ValueError(
                    f"prefix of length {t} has {ones} ones, more than half"
                )

    @classmethod
    def from_string(cls, s: str) -> BitPrefix:
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"direction sequence must match [01]+, got {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def alternating(cls, length: int) -> BitPrefix:
        """The sequence 0, 1, 0, 1, ... with ones at even positions."""
        return cls(tuple(t % 2 for t in range(length)))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def ones(self, t: int) -> int:
        """Number of ones among the first t bits."""
        if not 0 <= t <= len(self.bits):
            raise ValueError(f"prefix length must lie in 0..{len(self.bits)}, got {t}")
        return sum(self.bits[:t])


class SpectralTable:
    """An exact probability table on the standard tableaux of one level."""

    __slots__ = ("level", "probs")

    def __init__(self, level: int, probs: dict[TwoRowTableau, Fraction]):
        clean: dict[TwoRowTableau, Fraction] = {}
        total = Fraction(0)
        for u, p in probs.items():
            if u.n != level:
                raise ValueError(f"tableau {u} does not live at level {level}")
            p = Fraction(p)
            if p < 0:
                raise ValueError(f"negative probability {p} at {u}")
            total += p
            if p:
                clean[u] = p
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
        self.level = level
        self.probs = clean

    def prob(self, u: TwoRowTableau) -> Fraction:
        return self.probs.get(u, Fraction(0))

    def items(self) -> list[tuple[TwoRowTableau, Fraction]]:
        """Entries sorted by second-row length, then second row."""
        return sorted(
            self.probs.items(), key=lambda kv: (len(kv[0].second_row), kv[0].second_row)
        )

    def support(self) -> list[TwoRowTableau]:
        return [u for u, _ in self.items()]

    def restricted(self) -> SpectralTable:
        """The exact marginal one level down."""
        if self.level == 0:
            raise ValueError("cannot restrict a level-0 table")
        out: dict[TwoRowTableau, Fraction] = {}
        for u, p in self.probs.items():
            v = u.restricted()
            out[v] = out.get(v, Fraction(0)) + p
        return SpectralTable(self.level - 1, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpectralTable):
            return NotImplemented
        return self.level == other.level and self.probs == other.probs

    def __repr__(self) -> str:
        entries = ", ".join(f"{u.second_row}: {p}" for u, p in self.items())
        return f"SpectralTable(level={self.level}, {{{entries}}})"


@dataclass(frozen=True)
class KernelEntry:
    """One transition row: direction bit (None when level-homogeneous) and
    exact stay/up probabilities."""

    bit: int | None
    p_stay: Fraction
    p_up: Fraction

    def __post_init__(self) -> None:
        if self.bit not in (0, 1, None):
            raise ValueError(f"bit must be 0, 1 or None, got {self.bit!r}")
        if self.p_stay < 0 or self.p_up < 0 or self.p_stay + self.p_up != 1:
            raise ValueError(
                f"probabilities must be nonnegative and sum to 1, "
                f"got {self.p_stay}, {self.p_up}"
            )


class TransitionKernel:
    """Stay/up probabilities keyed by (level, second-row length)."""

    __slots__ = ("depth", "entries")

    def __init__(self, depth: int, entries: dict[tuple[int, int], KernelEntry]):
        if depth < 1:
            raise ValueError(f"depth must be at least 1, got {depth}")
        for (n, k), entry in entries.items():
            if not 1 <= n < depth:
                raise ValueError(f"level {n} outside 1..{depth - 1}")
            if not 0 <= 2 * k <= n:
                raise ValueError(f"state k={k} invalid at level {n}")
        self.depth = depth
        self.entries = dict(entries)

    def transition(self, n: int, k: int) -> KernelEntry:
        try:
            return self.entries[(n, k)]
        except KeyError:
            raise ValueError(f"no transition stored for level {n}, k={k}") from None

    def rows(self) -> list[tuple[int, int, KernelEntry]]:
        return [(n, k, self.entries[(n, k)]) for n, k in sorted(self.entries)]


def induced_transition(n: int, k: int, m: int, bit: int) -> tuple[Fraction, Fraction]:
    """Stay/up probabilities for the induced walk at level n, second-row
    length k, degree m, next direction bit.

    With d = n - 2k + 1, bit 0 gives ((n - m - k + 1)/d, (m - k)/d) and
    bit 1 gives ((m - k + 1)/d, (n - m - k)/d).
    """
    if bit not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {bit}")
    if not 0 <= 2 * k <= n:
        raise ValueError(f"need 0 <= k <= n/2, got n={n}, k={k}")
    if not k <= m <= n - k:
        raise ValueError(f"degree must lie in {k}..{n - k}, got {m}")
    if 2 * (m + bit) > n + 1:
        raise ValueError(
            f"next degree {m + bit} exceeds half of {n + 1}, not a valid step"
        )
    d = n - 2 * k + 1
    if bit == 0:
        return Fraction(n - m - k + 1, d), Fraction(m - k, d)
    return Fraction(m - k + 1, d), Fraction(n - m - k, d)


def kernel_from_prefix(prefix: BitPrefix, depth: int | None = None) -> TransitionKernel:
    """The induced walk's kernel along a direction sequence, levels
    1 .. depth - 1, states k = 0 .. m(n)."""
    if depth is None:
        depth = len(prefix)
    if not 1 <= depth <= len(prefix):
        raise ValueError(f"depth must lie in 1..{len(prefix)}, got {depth}")
    entries: dict[tuple[int, int], KernelEntry] = {}
    for n in range(1, depth):
        bit = prefix.bits[n]
        m = prefix.ones(n)
        for k in range(m + 1):
            stay, up = induced_transition(n, k, m, bit)
            entries[(n, k)] = KernelEntry(bit, stay, up)
    return TransitionKernel(depth, entries)


def spectral_measure(prefix: BitPrefix, level: int | None = None) -> SpectralTable:
    """Project the direction sequence's monomial onto the basis: the weight
    of tableau u is the squared coefficient over the squared norm."""
    if level is None:
        level = len(prefix)
    if not 1 <= level <= len(prefix):
        raise ValueError(f"level must lie in 1..{len(prefix)}, got {level}")
    m = prefix.ones(level)
    key = tuple(t for t in range(1, level + 1) if prefix.bits[t - 1])
    probs: dict[TwoRowTableau, Fraction] = {}
    for vec in full_gz_basis(level, m):
        c = vec.form.coeffs.get(key)
        if c:
            probs[vec.tableau] = c * c / vec.norm_sq
    return SpectralTable(level, probs)


def path_product_table(prefix: BitPrefix, level: int | None = None) -> SpectralTable:
    """The same table from the closed kernel: each tableau's weight is the
    product of stay/up probabilities along its path."""
    if level is None:
        level = len(prefix)
    if not 1 <= level <= len(prefix):
        raise ValueError(f"level must lie in 1..{len(prefix)}, got {level}")
    probs: dict[TwoRowTableau, Fraction] = {}
    for u in enumerate_all_tableaux(level):
        second = set(u.second_row)
        p = Fraction(1)
        k = 0
        for t in range(1, level):
            m = prefix.ones(t)
            if k > m:
                p = Fraction(0)
                break
            stay, up = induced_transition(t, k, m, prefix.bits[t])
            if t + 1 in second:
                p *= up
                k += 1
            else:
                p *= stay
            if not p:
                break
        if p:
            probs[u] = p
    return SpectralTable(level, probs)


@dataclass(frozen=True)
class MarkovViolation:
    """Two same-shape tableaux whose conditional step weights differ."""

    first: TwoRowTableau
    second: TwoRowTableau
    up: bool
    first_ratio: Fraction
    second_ratio: Fraction


@dataclass(frozen=True)
class MarkovReport:
    ok: bool
    violations: tuple[MarkovViolation, ...]


def _step_ratio(table: SpectralTable, deeper: SpectralTable, u: TwoRowTableau, up: bool) -> Fraction:
    if up and 2 * (len(u.second_row) + 1) > u.n + 1:
        return Fraction(0)
    return deeper.prob(u.extended(up)) / table.prob(u)


def is_markov(table: SpectralTable, deeper: SpectralTable) -> MarkovReport:
    """Decide whether the level-to-level step depends only on the shape.

    ``deeper`` must be one level up with exact marginal ``table``; violations
    list same-shape tableau pairs with different stay or up ratios.
    """
    if deeper.level != table.level + 1:
        raise ValueError(
            f"levels {table.level} and {deeper.level} are not consecutive"
        )
    if deeper.restricted() != table:
        raise ValueError("deeper table does not marginalize to the shallow one")
    by_shape: dict[int, list[TwoRowTableau]] = {}
    for u in table.support():
        by_shape.setdefault(len(u.second_row), []).append(u)
    violations: list[MarkovViolation] = []
    for _, group in sorted(by_shape.items()):
        lead = group[0]
        for up in (False, True):
            lead_ratio = _step_ratio(table, deeper, lead, up)
            for u in group[1:]:
                ratio = _step_ratio(table, deeper, u, up)
                if ratio != lead_ratio:
                    violations.append(
                        MarkovViolation(lead, u, up, lead_ratio, ratio)
                    )
    return MarkovReport(not violations, tuple(violations))


def kernel_matches(
    table: SpectralTable, deeper: SpectralTable, kernel: TransitionKernel
) -> bool:
    """Check that the observed step ratios equal the kernel's rows exactly."""
    for u, p in table.items():
        entry = kernel.transition(table.level, len(u.second_row))
        if _step_ratio(table, deeper, u, False) != entry.p_stay:
            return False
        if _step_ratio(table, deeper, u, True) != entry.p_up:
            return False
    return True


def good_tableau_ratio(n: int, k: int, m_n: int, m_n1: int) -> Fraction:
    """Squared-norm ratio, level n over level n + 1, for the tableau with
    second row 2, 4, ..., 2k: C(n - 2k, m_n - k) / C(n + 1 - 2k, m_n1 - k).

    Equals the stay probability of the induced walk for the matching bit
    m_n1 - m_n.
    """
    if not 0 <= 2 * k <= n:
        raise ValueError(f"need 0 <= k <= n/2, got n={n}, k={k}")
    if not k <= m_n <= n - k:
        raise ValueError(f"degree must lie in {k}..{n - k}, got {m_n}")
    if m_n1 - m_n not in (0, 1):
        raise ValueError(f"degrees must step by 0 or 1, got {m_n} -> {m_n1}")
    if not k <= m_n1 <= n + 1 - k:
        raise ValueError(f"next degree must lie in {k}..{n + 1 - k}, got {m_n1}")
    return Fraction(comb(n - 2 * k, m_n - k), comb(n + 1 - 2 * k, m_n1 - k))


def central_shape_weight(d: TwoRowDiagram) -> Fraction:
    """Per-path weight of the two-frequency central measure at shape d:
    2^-n times the product over cells of (2 + content) / hook."""
    w = Fraction(1, 2**d.n)
    for cell in d.cells():
        w *= Fraction(2 + cell.content, hook_length(d, cell))
    return w


def central_alpha_prob(u: TwoRowTableau) -> Fraction:
    """The central measure's mass on the path u, a function of its shape
    alone."""
    return central_shape_weight(u.shape)


def central_table(level: int) -> SpectralTable:
    """The central measure's table: every path to a shape gets that shape's
    weight."""
    if level < 1:
        raise ValueError(f"level must be at least 1, got {level}")
    probs: dict[TwoRowTableau, Fraction] = {}
    for d in enumerate_diagrams(level):
        w = central_shape_weight(d)
        for u in enumerate_tableaux(d):
            probs[u] = w
    return SpectralTable(level, probs)


def central_alpha_transition(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Closed stay/up probabilities of the central walk at every level:
    ((n - 2k + 2) / (2(n - 2k + 1)), (n - 2k) / (2(n - 2k + 1)))."""
    if not 0 <= 2 * k <= n:
        raise ValueError(f"need 0 <= k <= n/2, got n={n}, k={k}")
    d = 2 * (n - 2 * k + 1)
    return Fraction(n - 2 * k + 2, d), Fraction(n - 2 * k, d)


def central_transition_oracle(n: int, k: int) -> tuple[Fraction, Fraction]:
    """The same probabilities from first principles, as weight ratios
    between consecutive levels."""
    here = central_shape_weight(TwoRowDiagram(n, k))
    stay = central_shape_weight(TwoRowDiagram(n + 1, k)) / here
    if 2 * (k + 1) <= n + 1:
        up = central_shape_weight(TwoRowDiagram(n + 1, k + 1)) / here
    else:
        up = Fraction(0)
    return stay, up


def central_kernel(depth: int) -> TransitionKernel:
    """The central walk's kernel for levels 1 .. depth - 1."""
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    entries: dict[tuple[int, int], KernelEntry] = {}
    for n in range(1, depth):
        for k in range(n // 2 + 1):
            stay, up = central_alpha_transition(n, k)
            entries[(n, k)] = KernelEntry(None, stay, up)
    return TransitionKernel(depth, entries)


def negative_control_tables() -> tuple[SpectralTable, SpectralTable]:
    """A coherent but non-Markov pair of tables, for exercising detectors.

    The level-4 table refines the level-3 one exactly, yet the two level-3
    tableaux of shape (2, 1) step up with different conditional weights.
    """
    t3 = SpectralTable(
        3,
        {
            TwoRowTableau(3, ()): Fraction(1, 2),
            TwoRowTableau(3, (2,)): Fraction(1, 4),
            TwoRowTableau(3, (3,)): Fraction(1, 4),
        },
    )
    t4 = SpectralTable(
        4,
        {
            TwoRowTableau(4, ()): Fraction(1, 2),
            TwoRowTableau(4, (2,)): Fraction(1, 4),
            TwoRowTableau(4, (3, 4)): Fraction(1, 4),
        },
    )
    return t3, t4


def bernoulli(rng: random.Random, p: Fraction) -> bool:
    """One exact-threshold coin flip from 64 fresh bits: true with
    probability within 2^-64 of p, and exactly 0 or 1 at the endpoints."""
    if not 0 <= p <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    r = rng.getrandbits(64)
    return r * p.denominator < p.numerator << 64


def _as_rng(rng: random.Random | int) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def sample_path(kernel: TransitionKernel, depth: int, rng: random.Random | int) -> list[int]:
    """Run the walk once; the second-row length at levels 1 .. depth.

    ``rng`` is a Random instance or an integer seed.  Each step consumes
    exactly 64 bits, so traces are reproducible byte for byte under a
    fixed seed.
    """
    rng = _as_rng(rng)
    if not 1 <= depth <= kernel.depth:
        raise ValueError(f"depth must lie in 1..{kernel.depth}, got {depth}")
    ks = [0]
    k = 0
    for n in range(1, depth):
        entry = kernel.transition(n, k)
        if bernoulli(rng, entry.p_up):
            k += 1
        ks.append(k)
    return ks


def sample_tableau(kernel: TransitionKernel, depth: int, rng: random.Random | int) -> TwoRowTableau:
    """Run the walk from the one-cell tableau down to ``depth`` levels."""
    ks = sample_path(kernel, depth, _as_rng(rng))
    second = tuple(t for t in range(2, depth + 1) if ks[t - 1] > ks[t - 2])
    return TwoRowTableau(depth, second)


def transition_counts(
    kernel: TransitionKernel, depth: int, paths: int, seed: int
) -> dict[tuple[int, int], tuple[int, int]]:
    """Visit and up counts per (level, k) over ``paths`` sampled walks."""
    if not 1 <= depth <= kernel.depth:
        raise ValueError(f"depth must lie in 1..{kernel.depth}, got {depth}")
    if paths < 0:
        raise ValueError(f"path count must be nonnegative, got {paths}")
    rng = random.Random(seed)
    counts: dict[tuple[int, int], list[int]] = {}
    for _ in range(paths):
        k = 0
        for n in range(1, depth):
            entry = kernel.transition(n, k)
            c = counts.setdefault((n, k), [0, 0])
            c[0] += 1
            if bernoulli(rng, entry.p_up):
                c[1] += 1
                k += 1
    return {key: (c[0], c[1]) for key, c in sorted(counts.items())}


def within_three_sigma(visits: int, ups: int, p: Fraction) -> bool:
    """Exact integer test of |ups - visits p|^2 <= 9 visits p (1 - p)."""
    num, den = p.numerator, p.denominator
    lhs = (ups * den - visits * num) ** 2
    rhs = 9 * visits * num * (den - num)
    return lhs <= rhs

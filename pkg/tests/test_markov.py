import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tworow import (
    BitPrefix,
    KernelEntry,
    SpectralTable,
    TransitionKernel,
    TwoRowDiagram,
    TwoRowTableau,
    bernoulli,
    central_alpha_prob,
    central_alpha_transition,
    central_kernel,
    central_shape_weight,
    central_table,
    central_transition_oracle,
    dim,
    enumerate_diagrams,
    good_tableau_ratio,
    induced_transition,
    is_markov,
    kernel_from_prefix,
    kernel_matches,
    negative_control_tables,
    path_product_table,
    sample_path,
    sample_tableau,
    spectral_measure,
    transition_counts,
    within_three_sigma,
)


@st.composite
def prefixes(draw, min_len=1, max_len=7):
    """Direction sequences built left to right, respecting the ballot
    condition at every step."""
    length = draw(st.integers(min_value=min_len, max_value=max_len))
    bits = []
    ones = 0
    for t in range(1, length + 1):
        if 2 * (ones + 1) <= t:
            b = draw(st.integers(min_value=0, max_value=1))
        else:
            b = 0
        bits.append(b)
        ones += b
    return BitPrefix(tuple(bits))


# direction sequences


def test_prefix_validation():
    BitPrefix((0, 1, 0, 1))
    with pytest.raises(ValueError):
        BitPrefix((1,))
    with pytest.raises(ValueError):
        BitPrefix((0, 1, 1))
    with pytest.raises(ValueError):
        BitPrefix((0, 2))
    with pytest.raises(ValueError):
        BitPrefix.from_string("")
    with pytest.raises(ValueError):
        BitPrefix.from_string("0x1")


def test_prefix_roundtrip_and_counts():
    p = BitPrefix.from_string("00101")
    assert str(p) == "00101"
    assert len(p) == 5
    assert [p.ones(t) for t in range(6)] == [0, 0, 0, 1, 1, 2]
    with pytest.raises(ValueError):
        p.ones(6)


def test_alternating_prefix():
    assert BitPrefix.alternating(6).bits == (0, 1, 0, 1, 0, 1)
    assert BitPrefix.alternating(1).bits == (0,)


@given(prefixes())
def test_generated_prefixes_respect_ballot(p):
    for t in range(1, len(p) + 1):
        assert 2 * p.ones(t) <= t


# one-step transition probabilities


def test_induced_transition_known_values():
    assert induced_transition(2, 0, 1, 0) == (Fraction(2, 3), Fraction(1, 3))
    assert induced_transition(2, 1, 1, 0) == (Fraction(1), Fraction(0))
    assert induced_transition(1, 0, 0, 1) == (Fraction(1, 2), Fraction(1, 2))
    assert induced_transition(2, 0, 0, 1) == (Fraction(1, 3), Fraction(2, 3))
    assert induced_transition(5, 1, 2, 0) == (Fraction(3, 4), Fraction(1, 4))


def test_induced_transition_validation():
    with pytest.raises(ValueError):
        induced_transition(2, 0, 1, 2)
    with pytest.raises(ValueError):
        induced_transition(2, 2, 2, 0)
    with pytest.raises(ValueError):
        induced_transition(4, 1, 0, 0)  # degree below second-row length
    with pytest.raises(ValueError):
        induced_transition(4, 0, 2, 1)  # next degree 3 exceeds half of 5
    with pytest.raises(ValueError):
        induced_transition(4, 0, 3, 0)  # next degree 3 exceeds half of 5


@given(st.data())
def test_induced_transition_is_a_distribution(data):
    n = data.draw(st.integers(min_value=1, max_value=12))
    k = data.draw(st.integers(min_value=0, max_value=n // 2))
    bit = data.draw(st.integers(min_value=0, max_value=1))
    lo, hi = k, min(n - k, (n + 1) // 2 - bit)
    if lo > hi:
        return
    m = data.draw(st.integers(min_value=lo, max_value=hi))
    stay, up = induced_transition(n, k, m, bit)
    assert stay + up == 1
    assert stay >= 0 and up >= 0


def test_boundary_rows_never_move_up():
    # a second row already at the degree cannot grow on a 0 step
    assert induced_transition(2, 1, 1, 0)[1] == 0
    assert induced_transition(4, 2, 2, 0)[1] == 0
    assert induced_transition(6, 3, 3, 0)[1] == 0


# kernels from direction sequences


def test_kernel_all_zeros():
    kern = kernel_from_prefix(BitPrefix.from_string("0000"))
    for n, k, entry in kern.rows():
        assert k == 0
        assert entry.bit == 0
        assert entry.p_stay == 1
        assert entry.p_up == 0


def test_kernel_001():
    kern = kernel_from_prefix(BitPrefix.from_string("001"))
    assert kern.transition(2, 0) == KernelEntry(1, Fraction(1, 3), Fraction(2, 3))


def test_kernel_0101_rows():
    kern = kernel_from_prefix(BitPrefix.from_string("0101"))
    expect = {
        (1, 0): KernelEntry(1, Fraction(1, 2), Fraction(1, 2)),
        (2, 0): KernelEntry(0, Fraction(2, 3), Fraction(1, 3)),
        (2, 1): KernelEntry(0, Fraction(1), Fraction(0)),
        (3, 0): KernelEntry(1, Fraction(1, 2), Fraction(1, 2)),
        (3, 1): KernelEntry(1, Fraction(1, 2), Fraction(1, 2)),
    }
    assert {(n, k): e for n, k, e in kern.rows()} == expect


def test_kernel_lookup_errors():
    kern = kernel_from_prefix(BitPrefix.from_string("0101"))
    with pytest.raises(ValueError):
        kern.transition(4, 0)
    with pytest.raises(ValueError):
        kern.transition(2, 2)


@given(prefixes(min_len=2, max_len=9))
def test_kernel_boundary_states(p):
    """Whenever the degree is pinned, the corresponding move has weight 0."""
    kern = kernel_from_prefix(p)
    for n, k, entry in kern.rows():
        m = p.ones(n)
        if k == m and entry.bit == 0:
            assert entry.p_up == 0
        if k == n - m and entry.bit == 1:
            assert entry.p_up == 0


def test_kernel_entry_validation():
    with pytest.raises(ValueError):
        KernelEntry(0, Fraction(1, 2), Fraction(1, 3))
    with pytest.raises(ValueError):
        KernelEntry(2, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        KernelEntry(None, Fraction(3, 2), Fraction(-1, 2))


def test_transition_kernel_validation():
    good = KernelEntry(None, Fraction(1), Fraction(0))
    with pytest.raises(ValueError):
        TransitionKernel(0, {})
    with pytest.raises(ValueError):
        TransitionKernel(3, {(3, 0): good})
    with pytest.raises(ValueError):
        TransitionKernel(3, {(2, 2): good})


# spectral tables


def test_table_validation():
    with pytest.raises(ValueError):
        SpectralTable(2, {TwoRowTableau(2, ()): Fraction(1, 2)})
    with pytest.raises(ValueError):
        SpectralTable(2, {TwoRowTableau(3, ()): Fraction(1)})
    with pytest.raises(ValueError):
        SpectralTable(
            2,
            {
                TwoRowTableau(2, ()): Fraction(3, 2),
                TwoRowTableau(2, (2,)): Fraction(-1, 2),
            },
        )


def test_table_drops_zero_entries():
    t = SpectralTable(
        2, {TwoRowTableau(2, ()): Fraction(1), TwoRowTableau(2, (2,)): Fraction(0)}
    )
    assert t.support() == [TwoRowTableau(2, ())]
    assert t.prob(TwoRowTableau(2, (2,))) == 0


def test_measure_01():
    table = spectral_measure(BitPrefix.from_string("01"))
    assert table.prob(TwoRowTableau(2, ())) == Fraction(1, 2)
    assert table.prob(TwoRowTableau(2, (2,))) == Fraction(1, 2)


def test_measure_all_zeros_is_point_mass():
    table = spectral_measure(BitPrefix.from_string("0000"))
    assert table.items() == [(TwoRowTableau(4, ()), Fraction(1))]


def test_measure_0101_full_table():
    table = spectral_measure(BitPrefix.from_string("0101"))
    expect = {
        (): Fraction(1, 6),
        (2,): Fraction(1, 4),
        (3,): Fraction(1, 12),
        (4,): Fraction(1, 6),
        (2, 4): Fraction(1, 4),
        (3, 4): Fraction(1, 12),
    }
    assert {u.second_row: p for u, p in table.items()} == expect


def test_measure_level_argument():
    p = BitPrefix.from_string("0101")
    assert spectral_measure(p, 2) == spectral_measure(BitPrefix.from_string("01"))
    with pytest.raises(ValueError):
        spectral_measure(p, 5)
    with pytest.raises(ValueError):
        spectral_measure(p, 0)


@given(prefixes(max_len=7))
@settings(max_examples=60)
def test_measure_equals_path_products(p):
    """The projection route and the kernel route agree table for table."""
    for level in range(1, len(p) + 1):
        assert spectral_measure(p, level) == path_product_table(p, level)


@given(prefixes(min_len=2, max_len=7))
@settings(max_examples=40)
def test_measure_marginals_are_coherent(p):
    deep = spectral_measure(p)
    shallow = spectral_measure(p, len(p) - 1)
    assert deep.restricted() == shallow


@given(prefixes(max_len=7))
@settings(max_examples=40)
def test_measure_support_respects_degree(p):
    table = spectral_measure(p)
    m = p.ones(len(p))
    for u in table.support():
        assert len(u.second_row) <= m


# the step detector


@given(prefixes(min_len=2, max_len=7))
@settings(max_examples=40)
def test_measure_steps_are_markov(p):
    level = len(p)
    table = spectral_measure(p, level - 1)
    deeper = spectral_measure(p, level)
    report = is_markov(table, deeper)
    assert report.ok
    assert report.violations == ()
    kern = kernel_from_prefix(p)
    assert kernel_matches(table, deeper, kern)


def test_detector_rejects_negative_control():
    t3, t4 = negative_control_tables()
    report = is_markov(t3, t4)
    assert not report.ok
    assert len(report.violations) >= 1
    v = report.violations[0]
    assert v.first.shape == v.second.shape
    assert v.first_ratio != v.second_ratio
    rows = {v.first.second_row, v.second.second_row}
    assert rows == {(2,), (3,)}


def test_detector_validates_inputs():
    p = BitPrefix.from_string("0101")
    with pytest.raises(ValueError):
        is_markov(spectral_measure(p, 2), spectral_measure(p, 4))
    broken = SpectralTable(
        3,
        {
            TwoRowTableau(3, ()): Fraction(1, 2),
            TwoRowTableau(3, (2,)): Fraction(1, 2),
        },
    )
    with pytest.raises(ValueError):
        is_markov(broken, spectral_measure(p, 4))


# squared-norm ratios of the distinguished tableau


def test_good_tableau_ratio_known_values():
    assert good_tableau_ratio(1, 0, 0, 1) == Fraction(1, 2)
    assert good_tableau_ratio(2, 0, 1, 1) == Fraction(2, 3)
    assert good_tableau_ratio(2, 1, 1, 1) == Fraction(1)


def test_good_tableau_ratio_validation():
    with pytest.raises(ValueError):
        good_tableau_ratio(2, 0, 1, 3)
    with pytest.raises(ValueError):
        good_tableau_ratio(2, 2, 2, 2)
    with pytest.raises(ValueError):
        good_tableau_ratio(4, 1, 0, 0)


@given(prefixes(min_len=2, max_len=9))
@settings(max_examples=40)
def test_good_tableau_ratio_equals_stay_probability(p):
    kern = kernel_from_prefix(p)
    for n, k, entry in kern.rows():
        ratio = good_tableau_ratio(n, k, p.ones(n), p.ones(n + 1))
        assert ratio == entry.p_stay


# the central measure


def test_central_weights_small_levels():
    assert central_alpha_prob(TwoRowTableau(1, ())) == 1
    assert central_shape_weight(TwoRowDiagram(2, 0)) == Fraction(3, 4)
    assert central_shape_weight(TwoRowDiagram(2, 1)) == Fraction(1, 4)
    assert central_shape_weight(TwoRowDiagram(3, 1)) == Fraction(1, 4)


def test_central_mass_sums_to_one():
    for level in range(1, 11):
        total = sum(
            dim(d) * central_shape_weight(d) for d in enumerate_diagrams(level)
        )
        assert total == 1
        central_table(level)  # construction revalidates the same sum


def test_central_transition_known_values():
    assert central_alpha_transition(1, 0) == (Fraction(3, 4), Fraction(1, 4))
    assert central_alpha_transition(3, 1) == (Fraction(3, 4), Fraction(1, 4))
    assert central_alpha_transition(2, 1) == (Fraction(1), Fraction(0))
    assert central_alpha_transition(4, 2) == (Fraction(1), Fraction(0))


def test_central_transition_matches_weight_ratios():
    """The closed stay/up rule agrees with the ratio of consecutive shape
    weights at every reachable state."""
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            assert central_alpha_transition(n, k) == central_transition_oracle(n, k)


def test_central_tables_are_markov():
    for level in range(1, 7):
        table = central_table(level)
        deeper = central_table(level + 1)
        assert is_markov(table, deeper).ok
        assert kernel_matches(table, deeper, central_kernel(level + 1))


def test_central_kernel_rows_have_no_bit():
    for _, _, entry in central_kernel(6).rows():
        assert entry.bit is None
        assert entry.p_stay + entry.p_up == 1


def test_spectral_table_is_not_central():
    """Same-shape tableaux get different weights under a direction sequence,
    so the two families of measures genuinely differ."""
    table = spectral_measure(BitPrefix.from_string("0101"))
    a = table.prob(TwoRowTableau(4, (2,)))
    b = table.prob(TwoRowTableau(4, (3,)))
    assert TwoRowTableau(4, (2,)).shape == TwoRowTableau(4, (3,)).shape
    assert a == Fraction(1, 4)
    assert b == Fraction(1, 12)
    assert a != b


# sampling


def test_bernoulli_endpoints_are_exact():
    rng = random.Random(123)
    assert not any(bernoulli(rng, Fraction(0)) for _ in range(200))
    assert all(bernoulli(rng, Fraction(1)) for _ in range(200))
    with pytest.raises(ValueError):
        bernoulli(rng, Fraction(3, 2))


def test_sample_path_all_zero_directions():
    kern = kernel_from_prefix(BitPrefix.from_string("000000"))
    ks = sample_path(kern, 6, random.Random(0))
    assert ks == [0, 0, 0, 0, 0, 0]


def test_sample_path_is_seed_deterministic():
    kern = central_kernel(12)
    a = sample_path(kern, 12, random.Random(99))
    b = sample_path(kern, 12, random.Random(99))
    c = sample_path(kern, 12, 99)
    assert a == b == c


def test_sample_path_steps_are_valid():
    kern = central_kernel(16)
    rng = random.Random(5)
    for _ in range(50):
        ks = sample_path(kern, 16, rng)
        assert ks[0] == 0
        for n in range(1, 16):
            assert ks[n] - ks[n - 1] in (0, 1)
            assert 2 * ks[n] <= n + 1


def test_sample_tableau_matches_path():
    kern = kernel_from_prefix(BitPrefix.alternating(10))
    u = sample_tableau(kern, 10, 42)
    ks = sample_path(kern, 10, 42)
    assert u.n == 10
    assert len(u.second_row) == ks[-1]


def test_sample_depth_validation():
    kern = central_kernel(6)
    with pytest.raises(ValueError):
        sample_path(kern, 7, random.Random(0))
    with pytest.raises(ValueError):
        sample_path(kern, 0, random.Random(0))


def test_transition_counts_structure():
    kern = central_kernel(8)
    counts = transition_counts(kern, 8, 500, seed=3)
    for n in range(1, 8):
        level_total = sum(v for (lev, _), (v, _) in counts.items() if lev == n)
        assert level_total == 500
    for (n, k), (visits, ups) in counts.items():
        assert 0 <= ups <= visits
        assert 2 * k <= n
    assert counts == transition_counts(kern, 8, 500, seed=3)


def test_transition_counts_track_frequencies():
    kern = kernel_from_prefix(BitPrefix.alternating(12))
    counts = transition_counts(kern, 12, 4000, seed=11)
    for (n, k), (visits, ups) in counts.items():
        p_up = kern.transition(n, k).p_up
        assert within_three_sigma(visits, ups, p_up)


def test_within_three_sigma_boundary_is_exact():
    half = Fraction(1, 2)
    assert within_three_sigma(100, 35, half)
    assert within_three_sigma(100, 65, half)
    assert not within_three_sigma(100, 34, half)
    assert not within_three_sigma(100, 66, half)
    assert within_three_sigma(0, 0, half)
    assert within_three_sigma(77, 0, Fraction(0))
    assert within_three_sigma(77, 77, Fraction(1))

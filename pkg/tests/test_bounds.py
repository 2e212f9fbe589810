import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dmin_by_enumeration, permanent_by_definition, ring_permanent_by_definition
from qcldpc.bounds import (
    _ring_determinant,
    cofactor_codeword,
    exhaustive_dmin,
    isd_search,
    permanent,
    subset_sum,
    theorem1_bound,
)
from qcldpc.errors import (
    DimensionTooLarge,
    NoNonzeroBound,
    NoNonzeroCodeword,
    NotApplicable,
    NotSquare,
    SideTooLarge,
    WrongSubsetSize,
    ZeroDimension,
)
from qcldpc.fixtures import EX1, EX2, EX3, EX4, EX4_COVER2, EX4_COVER3
from qcldpc.protograph import BaseMatrix, terminate
from qcldpc.qc_lift import ShiftAssignment, is_codeword, lift, poly_from_exponents, random_assignment


# -- permanent -------------------------------------------------------------------

def test_permanent_small_values():
    assert permanent(np.eye(5, dtype=int)) == 1
    assert permanent(np.ones((3, 3), dtype=int)) == 6
    assert permanent(np.ones((7, 7), dtype=int)) == 5040
    assert permanent([[2, 1], [1, 2]]) == permanent_by_definition([[2, 1], [1, 2]]) == 5
    assert permanent(np.zeros((0, 0))) == 1


def test_permanent_errors():
    with pytest.raises(NotSquare):
        permanent([[1, 2, 3]])
    with pytest.raises(SideTooLarge):
        permanent(np.ones((17, 17), dtype=int))


def test_permanent_side16_all_ones():
    import math
    assert permanent(np.ones((16, 16), dtype=int)) == math.factorial(16)


def test_permanent_against_definition_100_random():
    rng = np.random.default_rng(20100601)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        m = rng.integers(0, 4, size=(n, n))
        assert permanent(m) == permanent_by_definition(m)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(0, 3), min_size=(n + 1) * n, max_size=(n + 1) * n).map(
        lambda v: np.array(v).reshape(n, n + 1))))
def test_subset_sum_equals_sum_of_minors(m):
    expected = sum(permanent_by_definition(np.delete(m, i, axis=1)) for i in range(m.shape[1]))
    assert subset_sum(m, range(m.shape[1])) == expected


# -- the bound ------------------------------------------------------------------------

def test_example4_single_subset_components():
    b = terminate(EX4, 2).assembled.entries
    minors = [permanent_by_definition(np.delete(b, i, axis=1)) for i in range(4)]
    assert minors == [5, 10, 10, 5]
    r = theorem1_bound(b)
    assert r.value == 30 and r.witness == (0, 1, 2, 3) and r.subsets_examined == 1


@pytest.mark.parametrize("L", [3, 4, 5, 6])
def test_example1_bound_constant_in_L(L):
    assert theorem1_bound(terminate(EX1, L).assembled).value == 56


def test_all_ones_3x6_gives_factorial():
    assert theorem1_bound(np.ones((3, 6), dtype=int)).value == 24


@pytest.mark.parametrize("L", [2, 3])
def test_example2_bound(L):
    assert theorem1_bound(terminate(EX2, L).assembled).value == 176


def test_example3_literal_bound_misses_substructure():
    b = terminate(EX3, 2).assembled
    assert theorem1_bound(b).value == 432
    r = theorem1_bound(b, submatrices=True)
    assert r.value == 36
    sub = b.entries[np.ix_(r.rows, r.witness)]
    assert len(r.rows) == 4 and len(r.witness) == 5
    assert sorted(map(tuple, sub.tolist())) == sorted(
        [(1, 1, 1, 0, 0), (1, 1, 1, 1, 1), (1, 1, 1, 1, 1), (0, 0, 0, 1, 1)]
    )


@pytest.mark.slow
def test_example3_substructure_persists_for_larger_L():
    assert theorem1_bound(terminate(EX3, 3).assembled, submatrices=True).value == 36


def test_cover_bounds():
    assert theorem1_bound(terminate(EX4_COVER2, 2).assembled).value == 82
    assert theorem1_bound(terminate(EX4_COVER3, 2).assembled).value == 210


def test_submatrix_mode_agrees_on_example_instances():
    for s, L, v in [(EX1, 3, 56), (EX2, 2, 176), (EX4, 2, 30), (EX4_COVER2, 2, 82), (EX4_COVER3, 2, 210)]:
        assert theorem1_bound(terminate(s, L).assembled, submatrices=True).value == v


@pytest.mark.slow
def test_example2_L3_substructure_bound_is_tighter():
    b = terminate(EX2, 3).assembled
    r = theorem1_bound(b, submatrices=True)
    assert r.value == 136
    h = lift(b, random_assignment(b, 211, seed=1))
    cw = cofactor_codeword(h, r.witness, r.rows)
    assert not cw.is_zero
    assert is_codeword(h, cw.expanded)
    assert cw.weight <= 136 < 176


def test_bound_errors():
    with pytest.raises(NotApplicable):
        theorem1_bound(np.ones((3, 2), dtype=int))
    with pytest.raises(NoNonzeroBound):
        theorem1_bound([[0, 0, 0], [1, 1, 1]])
    assert theorem1_bound([[0, 0, 0], [1, 1, 1]], submatrices=True).value == 2


def test_min_star_skips_zero_subsets():
    # columns {0,1,2} leave row 1 empty, so their sum is zero; only subsets touching column 3 count
    b = [[1, 1, 1, 0], [0, 0, 0, 1]]
    r = theorem1_bound(b, keep_table=True)
    assert r.per_subset[(0, 1, 2)] == 0
    assert r.value == min(v for v in r.per_subset.values() if v)


def test_subset_cap_reports_incomplete():
    r = theorem1_bound(terminate(EX1, 6).assembled, max_subsets=10)
    assert not r.complete and r.subsets_examined == 10 and r.value == 56
    with pytest.raises(NoNonzeroBound):
        theorem1_bound(terminate(EX2, 3).assembled, max_subsets=10)


def test_witness_is_lexicographically_smallest():
    r = theorem1_bound(np.ones((2, 5), dtype=int), keep_table=True)
    assert r.witness == (0, 1, 2)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(1, 3).flatmap(lambda r: st.integers(r + 1, r + 3).flatmap(
        lambda c: st.lists(st.integers(0, 2), min_size=r * c, max_size=r * c).map(
            lambda v: np.array(v).reshape(r, c)))),
    st.integers(0, 2**32 - 1),
    st.booleans(),
)
def test_bound_invariant_under_permutations(b, seed, sub):
    rng = np.random.default_rng(seed)
    shuffled = b[rng.permutation(b.shape[0])][:, rng.permutation(b.shape[1])]
    try:
        v = theorem1_bound(b, submatrices=sub).value
    except NoNonzeroBound:
        with pytest.raises(NoNonzeroBound):
            theorem1_bound(shuffled, submatrices=sub)
        return
    assert theorem1_bound(shuffled, submatrices=sub).value == v


def test_dp_and_direct_paths_agree():
    from qcldpc import bounds
    b = terminate(EX2, 2).assembled
    saved = bounds._DP_MAX_COLUMNS
    try:
        bounds._DP_MAX_COLUMNS = 0
        direct = theorem1_bound(b, keep_table=True)
    finally:
        bounds._DP_MAX_COLUMNS = saved
    dp = theorem1_bound(b, keep_table=True)
    assert direct.per_subset == dp.per_subset
    assert (direct.value, direct.witness) == (dp.value, dp.witness)


# -- cofactor codewords --------------------------------------------------------------

def test_cofactor_1x2():
    h = lift([[1, 1]], ShiftAssignment(7, {(0, 0): (3,), (0, 1): (5,)}))
    cw = cofactor_codeword(h, [0, 1])
    assert cw.polynomials == {0: 1 << 5, 1: 1 << 3}
    assert cw.weight == 2 and is_codeword(h, cw.expanded)


def test_cofactor_zero_flag():
    base = np.ones((2, 3), dtype=int)
    h = lift(base, ShiftAssignment(4, {(x, y): (0,) for x in range(2) for y in range(3)}))
    cw = cofactor_codeword(h, [0, 1, 2])
    assert cw.is_zero and cw.weight == 0


def test_cofactor_subset_errors(ex4_code):
    with pytest.raises(WrongSubsetSize):
        cofactor_codeword(ex4_code, [0, 1, 2])
    with pytest.raises(NotApplicable):
        cofactor_codeword(ex4_code, [0, 1], rows=[0])


def test_example_codewords_reach_the_bound(ex1_code, ex4_code):
    cw = cofactor_codeword(ex1_code, range(6))
    assert cw.weight == 56 and cw.integer_bound == 56
    assert is_codeword(ex1_code, cw.expanded)
    assert is_codeword(ex1_code, cw.to_array(294))
    cw = cofactor_codeword(ex4_code, range(4))
    assert cw.weight == 30 and is_codeword(ex4_code, cw.expanded)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_ring_determinant_matches_permutation_sum(n, N, seed):
    rng = np.random.default_rng(seed)
    polys = [[sorted(rng.choice(N, size=int(rng.integers(0, 3)), replace=False).tolist()) for _ in range(n)]
             for _ in range(n)]
    mat = [[poly_from_exponents(p) for p in row] for row in polys]
    det = _ring_determinant(mat, N)
    expected = ring_permanent_by_definition(polys, N)
    assert sorted(i for i in range(N) if det >> i & 1) == expected


@st.composite
def small_codes(draw, max_k=20):
    rows = draw(st.integers(1, 3))
    cols = draw(st.integers(rows + 1, rows + 2))
    N = draw(st.integers(2, 5))
    entries = draw(st.lists(st.integers(0, 2), min_size=rows * cols, max_size=rows * cols))
    base = BaseMatrix(np.array(entries).reshape(rows, cols))
    h = lift(base, random_assignment(base, N, draw(st.integers(0, 2**32 - 1))))
    return h


@settings(max_examples=40, deadline=None)
@given(small_codes(), st.data())
def test_cofactor_codeword_properties(h, data):
    n_c, n_v = h.base.shape
    S = data.draw(st.sampled_from(list(itertools.combinations(range(n_v), n_c + 1))))
    cw = cofactor_codeword(h, S)
    assert is_codeword(h, cw.expanded)
    assert cw.weight <= subset_sum(h.base, S)
    if not cw.is_zero:
        d = dmin_by_enumeration(h.to_dense()) if h.shape[1] <= 18 else exhaustive_dmin(h)
        assert d <= cw.weight


# -- searches -------------------------------------------------------------------------

def test_exhaustive_dmin_examples():
    h = lift([[1, 1]], ShiftAssignment(5, {(0, 0): (0,), (0, 1): (1,)}))
    assert exhaustive_dmin(h) == dmin_by_enumeration(h.to_dense()) == 2
    with pytest.raises(NoNonzeroCodeword):
        exhaustive_dmin(lift([[1]], ShiftAssignment(3, {(0, 0): (0,)})))
    # I_0 + I_1 always annihilates the all-ones word
    assert exhaustive_dmin(lift([[2]], ShiftAssignment(2, {(0, 0): (0, 1)}))) == 2


def test_exhaustive_dimension_cap(ex4_code):
    with pytest.raises(DimensionTooLarge):
        exhaustive_dmin(ex4_code)


def test_isd_zero_dimension():
    with pytest.raises(ZeroDimension):
        isd_search(lift([[1]], ShiftAssignment(3, {(0, 0): (0,)})), 5, 0)


@settings(max_examples=30, deadline=None)
@given(small_codes())
def test_exhaustive_matches_enumeration(h):
    if h.shape[1] > 16:
        return
    expected = dmin_by_enumeration(h.to_dense())
    if expected is None:
        with pytest.raises(NoNonzeroCodeword):
            exhaustive_dmin(h)
    else:
        assert exhaustive_dmin(h) == expected


def test_isd_equals_exhaustive_on_20_random_lifts():
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 20:
        rows = int(rng.integers(1, 4))
        base = BaseMatrix(rng.integers(0, 3, size=(rows, rows + int(rng.integers(1, 3)))))
        N = int(rng.integers(2, 7))
        h = lift(base, random_assignment(base, N, int(rng.integers(2**31))))
        try:
            d = exhaustive_dmin(h, max_dimension=20)
        except (NoNonzeroCodeword, DimensionTooLarge):
            continue
        assert isd_search(h, 300, seed=checked) == d
        checked += 1


def test_example4_small_lift_oracle_equivalence():
    base = terminate(EX4, 2).assembled
    h = lift(base, random_assignment(base, 4, seed=11))
    assert isd_search(h, 200, seed=3) == exhaustive_dmin(h) == dmin_by_enumeration(h.to_dense())


def test_isd_deterministic_and_monotone(ex4_code):
    runs = [isd_search(ex4_code, it, seed=99) for it in (1, 5, 25, 100)]
    assert runs == sorted(runs, reverse=True)
    assert isd_search(ex4_code, 25, seed=99) == runs[2]

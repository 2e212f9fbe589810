from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_cover_part
from qcldpc.errors import DimensionMismatch, InvalidEntries, NotACover, SumMismatch
from qcldpc.fixtures import EX1, EX2, EX3, EX4, EX4_COVER2, EX4_COVER3
from qcldpc.protograph import (
    BaseMatrix,
    check_cover,
    degree_profile,
    design_rate,
    is_cover,
    spreading_from_parts,
    terminate,
    validate_spreading,
)

ONES = np.ones((3, 6), dtype=int)


def test_base_matrix_rejects_bad_entries():
    with pytest.raises(InvalidEntries):
        BaseMatrix([[1, -1]])
    with pytest.raises(InvalidEntries):
        BaseMatrix([[256]])
    with pytest.raises(InvalidEntries):
        BaseMatrix([])


def test_base_matrix_is_immutable():
    b = BaseMatrix([[1, 2]])
    with pytest.raises(ValueError):
        b.entries[0, 0] = 5


def test_validate_spreading_examples():
    s = validate_spreading(ONES, EX2.parts)
    assert s.ms == 1
    s = validate_spreading([[3, 3]], [[[2, 1]], [[1, 2]]])
    assert s.ms == 1


def test_validate_spreading_sum_mismatch_reports_first_cell():
    with pytest.raises(SumMismatch) as err:
        validate_spreading([[3, 3]], [[[2, 1]], [[2, 2]]])
    assert err.value.cell == (0, 0)


def test_validate_spreading_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        validate_spreading([[3, 3]], [[[3]]])
    with pytest.raises(DimensionMismatch):
        validate_spreading([[3, 3]], [])


def test_terminate_example1_L3():
    t = terminate(EX1, 3)
    assert t.assembled.tolist() == [
        [1, 1, 0, 0, 0, 0],
        [1, 1, 1, 1, 0, 0],
        [1, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 0, 1, 1],
    ]


def test_terminate_example4_L2():
    assert terminate(EX4, 2).assembled.tolist() == [[2, 1, 0, 0], [1, 2, 2, 1], [0, 0, 1, 2]]


def test_terminate_L1_is_stack():
    for s in (EX1, EX2, EX4_COVER3):
        stacked = np.vstack([p.entries for p in s.parts])
        assert terminate(s, 1).assembled.tolist() == stacked.tolist()


def test_terminate_rejects_zero_L():
    with pytest.raises(ValueError):
        terminate(EX1, 0)


def test_design_rates():
    assert design_rate(terminate(EX1, 4)) == Fraction(1, 4)
    assert design_rate(terminate(EX1, 10)) == Fraction(2, 5)
    assert design_rate(BaseMatrix(np.eye(3, dtype=int))) == 0


def test_example1_rate_strictly_increasing_towards_half():
    rates = [design_rate(terminate(EX1, L)) for L in range(3, 40)]
    assert all(a < b for a, b in zip(rates, rates[1:]))
    assert all(r < Fraction(1, 2) for r in rates)


def test_degree_profiles():
    checks, variables = degree_profile(terminate(EX2, 4))
    assert checks == Counter({3: 6, 6: 9})
    assert variables == Counter({3: 24})
    checks, variables = degree_profile(terminate(EX1, 3))
    assert checks == Counter([2, 4, 6, 4, 2])
    assert variables == Counter({3: 6})
    checks, variables = degree_profile(ONES)
    assert checks == Counter({6: 3}) and variables == Counter({3: 6})


@pytest.mark.parametrize("L", [2, 3, 5, 8])
def test_example2_has_six_degree3_checks(L):
    checks, _ = degree_profile(terminate(EX2, L))
    assert checks == Counter({3: 6, 6: 3 * L - 3})


def test_printed_covers_are_valid():
    assert check_cover(EX4, EX4_COVER2, 2).m == 2
    assert check_cover(EX4, EX4_COVER3, 3).m == 3
    assert check_cover(EX4, EX4, 1).m == 1


def test_not_a_cover_reports_part_and_cell():
    with pytest.raises(DimensionMismatch):
        check_cover(EX4, EX4_COVER2, 3)
    broken = EX4_COVER2.parts[1].entries.copy()
    broken[0, 0], broken[0, 1] = 0, 1
    with pytest.raises(NotACover) as err:
        check_cover(EX4, spreading_from_parts([EX4_COVER2.parts[0].entries, broken]), 2)
    assert err.value.part == 1


def _spreadings():
    @st.composite
    def build(draw):
        bc = draw(st.integers(1, 3))
        bv = draw(st.integers(1, 4))
        ms = draw(st.integers(0, 3))
        cells = st.lists(st.integers(0, 2), min_size=bc * bv, max_size=bc * bv)
        parts = [np.array(draw(cells)).reshape(bc, bv) for _ in range(ms + 1)]
        return spreading_from_parts(parts)

    return build()


@settings(max_examples=60, deadline=None)
@given(_spreadings(), st.integers(1, 6))
def test_terminate_preserves_variable_degrees(s, L):
    t = terminate(s, L)
    a = t.assembled.entries
    bc, bv = s.part_shape
    assert a.shape == ((L + s.ms) * bc, L * bv)
    for j in range(L):
        assert (a[:, j * bv:(j + 1) * bv].sum(axis=0) == s.base.entries.sum(axis=0)).all()
        for t_blk in range(L + s.ms):
            blk = a[t_blk * bc:(t_blk + 1) * bc, j * bv:(j + 1) * bv]
            i = t_blk - j
            expected = s.parts[i].entries if 0 <= i <= s.ms else np.zeros_like(blk)
            assert (blk == expected).all()


@settings(max_examples=30, deadline=None)
@given(_spreadings(), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_cover_composes(s, k, m, seed):
    rng = np.random.default_rng(seed)
    k_cover = spreading_from_parts([random_cover_part(p.entries, k, rng) for p in s.parts])
    mk_cover = spreading_from_parts([random_cover_part(p.entries, m, rng) for p in k_cover.parts])
    check_cover(s, k_cover, k)
    check_cover(k_cover, mk_cover, m)
    check_cover(s, mk_cover, m * k)


@settings(max_examples=30, deadline=None)
@given(_spreadings(), st.integers(1, 3), st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_terminating_a_cover_is_a_cover_of_the_termination(s, m, L, seed):
    rng = np.random.default_rng(seed)
    cover = spreading_from_parts([random_cover_part(p.entries, m, rng) for p in s.parts])
    assert is_cover(terminate(s, L).assembled, terminate(cover, L).assembled, m)


def test_example4_covers_terminate_to_covers():
    for cover, m in ((EX4_COVER2, 2), (EX4_COVER3, 3)):
        for L in (1, 2, 3):
            assert is_cover(terminate(EX4, L).assembled, terminate(cover, L).assembled, m)


def test_example3_spreading_matches_printed_structure():
    assert EX3.parts[1].tolist() == (ONES - EX3.parts[0].entries).tolist()

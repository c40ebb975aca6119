"""Character tables, formal codegrees, class dimensions, and their support sums."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fuscat.chartab import (
    characters_numeric,
    class_function_from_chi,
    lambda_subcategory,
    match_numeric_columns,
    support_JD,
    validate_character_table,
    verify_eq_2_4,
    verify_eq_2_7,
)
from fuscat.errors import (
    ExactDataMissing,
    NotAlgebraMap,
    NotIdempotent,
    SingularTable,
)
from fuscat.exactnum import CycNum
from fuscat.fusion import Subcategory, check_subcategory, validate_fusion_ring
from fuscat.reports import all_passed

from rings import (
    fib_ring,
    fib_table_rows,
    golden,
    group_ring,
    group_table_rows,
    ising_ring,
    ising_table_rows,
    reps3_ring,
    reps3_table_rows,
    sqrt2,
)

ONE = CycNum.from_rational(1)


# ---------------------------------------------------------------------------
# validation and derived data
# ---------------------------------------------------------------------------

def test_ising_table_class_dims():
    table = validate_character_table(ising_ring(), ising_table_rows())
    assert table.fp_column == 0
    assert table.codegrees == (CycNum.from_rational(4), CycNum.from_rational(4),
                               CycNum.from_rational(2))
    assert table.class_dims == (ONE, ONE, CycNum.from_rational(2))


def test_reps3_table_class_dims_match_class_sizes():
    table = validate_character_table(reps3_ring(), reps3_table_rows())
    assert [c.as_rational() for c in table.class_dims] == [1, 3, 2]


def test_fib_table_class_dims():
    table = validate_character_table(fib_ring(), fib_table_rows())
    phi = golden()
    assert table.class_dims == (ONE, phi * phi)


def test_group_table_class_dims_all_one():
    table = validate_character_table(group_ring(4), group_table_rows(4))
    assert all(c == 1 for c in table.class_dims)
    assert table.fp_column == 0


def test_table_requires_exact_dims():
    floaty = validate_fusion_ring(
        [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], (0, 1))
    with pytest.raises(ExactDataMissing):
        validate_character_table(floaty, ((1, 1), (1, -1)))


def test_tampered_value_is_not_algebra_map():
    rows = [list(r) for r in ising_table_rows()]
    rows[2][1] = ONE   # then mu(s)^2 = 1 but 1 + mu(f) = 2
    with pytest.raises(NotAlgebraMap) as err:
        validate_character_table(ising_ring(), rows)
    assert err.value.column == 1


def test_duplicate_columns_rejected():
    rows = (
        (ONE, ONE, ONE),
        (ONE, ONE, ONE),
        (sqrt2(), sqrt2(), -sqrt2()),
    )
    with pytest.raises(SingularTable):
        validate_character_table(ising_ring(), rows)


def test_unit_row_must_be_ones():
    rows = [list(r) for r in ising_table_rows()]
    rows[0][2] = CycNum.from_rational(2)
    with pytest.raises(NotAlgebraMap) as err:
        validate_character_table(ising_ring(), rows)
    assert err.value.column == 2


# ---------------------------------------------------------------------------
# class functions and subcategory support
# ---------------------------------------------------------------------------

def test_unit_class_function_evaluates_to_one_everywhere():
    table = validate_character_table(reps3_ring(), reps3_table_rows())
    cf = class_function_from_chi(table, (1, 0, 0))
    assert all(v == 1 for v in cf.f_coords)


def test_lambda_full_category_is_fp_indicator():
    ring = ising_ring()
    table = validate_character_table(ring, ising_table_rows())
    lam = lambda_subcategory(ring, table, check_subcategory(ring, (0, 1, 2)))
    assert lam.f_coords[0] == 1
    assert lam.f_coords[1].is_zero() and lam.f_coords[2].is_zero()


@pytest.mark.parametrize("members,expected", [
    ((0,), (0, 1, 2)),
    ((0, 1), (0, 1)),
    ((0, 1, 2), (0,)),
])
def test_support_ising(members, expected):
    ring = ising_ring()
    table = validate_character_table(ring, ising_table_rows())
    assert support_JD(ring, table, check_subcategory(ring, members)) == expected


def test_support_reps3_pointed():
    ring = reps3_ring()
    table = validate_character_table(ring, reps3_table_rows())
    sub = check_subcategory(ring, (0, 1))
    assert support_JD(ring, table, sub) == (0, 2)


def test_support_rejects_unclosed_set():
    ring = ising_ring()
    table = validate_character_table(ring, ising_table_rows())
    with pytest.raises(NotIdempotent):
        support_JD(ring, table, Subcategory((0, 2)))


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("ring_fn,rows_fn", [
    (ising_ring, ising_table_rows),
    (fib_ring, fib_table_rows),
    (reps3_ring, reps3_table_rows),
])
def test_support_class_dim_sum(ring_fn, rows_fn):
    ring = ring_fn()
    table = validate_character_table(ring, rows_fn())
    full = check_subcategory(ring, range(ring.rank))
    res = verify_eq_2_7(ring, table, full)
    assert res.passed and res.lhs == 1


def test_class_dim_sum_ising_pointed():
    ring = ising_ring()
    table = validate_character_table(ring, ising_table_rows())
    res = verify_eq_2_7(ring, table, check_subcategory(ring, (0, 1)))
    assert res.passed
    assert res.lhs == 2 and res.rhs == 2


def test_orthogonality_scan():
    for ring_fn, rows_fn in [(ising_ring, ising_table_rows),
                             (reps3_ring, reps3_table_rows),
                             (fib_ring, fib_table_rows)]:
        ring = ring_fn()
        table = validate_character_table(ring, rows_fn())
        results = verify_eq_2_4(ring, table)
        assert len(results) == ring.rank ** 2
        assert all_passed(results)


# ---------------------------------------------------------------------------
# numeric cross-check
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("ring_fn,rows_fn", [
    (ising_ring, ising_table_rows),
    (fib_ring, fib_table_rows),
    (reps3_ring, reps3_table_rows),
])
def test_numeric_characters_match_exact(ring_fn, rows_fn):
    ring = ring_fn()
    table = validate_character_table(ring, rows_fn())
    numeric = characters_numeric(ring, seed=0)
    perm = match_numeric_columns(table, numeric)
    assert sorted(perm) == list(range(ring.rank))


def test_numeric_characters_deterministic():
    a = characters_numeric(reps3_ring(), seed=7)
    b = characters_numeric(reps3_ring(), seed=7)
    assert np.array_equal(a, b)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------

@settings(max_examples=12, deadline=None)
@given(n=st.integers(min_value=1, max_value=7))
def test_group_tables_validate(n):
    ring = group_ring(n)
    table = validate_character_table(ring, group_table_rows(n))
    assert all(c == 1 for c in table.class_dims)
    # every subgroup's support sums to the index
    for d in range(1, n + 1):
        if n % d:
            continue
        sub = check_subcategory(ring, range(0, n, n // d))
        res = verify_eq_2_7(ring, table, sub)
        assert res.passed
        assert res.rhs == n // d


@settings(max_examples=12, deadline=None)
@given(n=st.integers(min_value=2, max_value=6), seed=st.integers(0, 2 ** 16))
def test_numeric_group_characters(n, seed):
    ring = group_ring(n)
    table = validate_character_table(ring, group_table_rows(n))
    numeric = characters_numeric(ring, seed=seed)
    perm = match_numeric_columns(table, numeric, tol=1e-7)
    assert sorted(perm) == list(range(n))

"""Catalog entries against independently constructed oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuscat.catalog import (BUILTIN_KEYS, CatalogEntry, builtin,
                            classification, entry_summary, product)
from fuscat.errors import UnknownKey
from fuscat.exactnum import CycNum
from fuscat.fusion import global_fpdim
from fuscat.premod import muger_center

from rings import (fib_ring, golden, ising_ring, ising_smatrix_rows,
                   ising_table_rows, pointed_smatrix_rows, reps3_ring, sqrt2)

ONE = CycNum.from_rational(1)


def test_all_listed_keys_load():
    for key in BUILTIN_KEYS:
        entry = builtin(key)
        assert isinstance(entry, CatalogEntry)
        assert entry.key == key
        assert entry.ring.fpdims is not None
        assert entry.description


def test_entries_are_cached():
    assert builtin("ising") is builtin("ising")
    assert builtin("ising*svec") is builtin("ising*svec")


def test_unknown_keys():
    for bad in ("nosuch", "", "su2k-", "su2k-x", "pointed-z4", "a**b",
                "pointed-z0-q1", "su2k--1", "*ising"):
        with pytest.raises(UnknownKey):
            builtin(bad)


def test_ising_matches_independent_construction():
    entry = builtin("ising")
    oracle = ising_ring()
    assert entry.ring.tensor == oracle.tensor
    assert entry.ring.dual == oracle.dual
    assert entry.ring.fpdims == oracle.fpdims
    for row, orow in zip(entry.table.alpha, ising_table_rows()):
        assert tuple(row) == tuple(orow)
    for row, orow in zip(entry.smatrix.s, ising_smatrix_rows()):
        assert tuple(row) == tuple(orow)


def test_fib_dimensions():
    entry = builtin("fib")
    oracle = fib_ring()
    assert entry.ring.tensor == oracle.tensor
    assert entry.ring.fpdims[1] == golden()
    assert global_fpdim(entry.ring) == golden() + 2


def test_rep_s3_class_dims_are_conjugacy_class_sizes():
    entry = builtin("rep-s3")
    assert entry.ring.tensor == reps3_ring().tensor
    sizes = sorted(c.as_rational() for c in entry.table.class_dims)
    assert sizes == [1, 2, 3]


def test_su2k4_dimension_oracles():
    entry = builtin("su2k-4")
    d = entry.ring.fpdims
    assert entry.ring.rank == 5
    assert d[0] == 1 and d[4] == 1
    assert d[1] == d[3]
    assert d[1] * d[1] == 3
    assert d[2] == 2
    assert global_fpdim(entry.ring) == 12


def test_su2k2_dimension_matches_ising_square_root():
    assert builtin("su2k-2").ring.fpdims[1] == sqrt2()


def test_su2k_generator_fusion_rule():
    # X1 x Xj = X_{j-1} + X_{j+1}, truncated at the boundary labels
    for k in (1, 2, 3, 4, 5):
        ring = builtin(f"su2k-{k}").ring
        for j in range(ring.rank):
            expected = [0] * ring.rank
            if j - 1 >= 0:
                expected[j - 1] = 1
            if j + 1 <= k:
                expected[j + 1] = 1
            assert tuple(ring.tensor[1][j]) == tuple(expected)


def test_su2k_matrix_is_symmetric_with_dimension_first_row():
    for k in (2, 3, 4):
        entry = builtin(f"su2k-{k}")
        s = entry.smatrix.s
        assert tuple(s[0]) == entry.ring.fpdims
        for i in range(entry.ring.rank):
            for j in range(entry.ring.rank):
                assert s[i][j] == s[j][i]


def test_pointed_matrix_matches_polarization_oracle():
    entry = builtin("pointed-z3-q1")
    for row, orow in zip(entry.smatrix.s, pointed_smatrix_rows(3, 1)):
        assert tuple(row) == tuple(orow)


def test_pointed_center_depends_on_form():
    c1 = muger_center(builtin("pointed-z4-q1").ring,
                      builtin("pointed-z4-q1").smatrix)
    c2 = muger_center(builtin("pointed-z4-q2").ring,
                      builtin("pointed-z4-q2").smatrix)
    assert c1.members == (0,)
    assert c2.members == (0, 2)


def test_classifications():
    expected = {
        "trivial": "modular",
        "svec": "symmetric",
        "ising": "modular",
        "fib": "modular",
        "rep-s3": "symmetric",
        "su2k-2": "modular",
        "su2k-3": "modular",
        "su2k-4": "modular",
        "pointed-z2-q1": "modular",
        "pointed-z3-q1": "modular",
        "pointed-z4-q1": "modular",
        "pointed-z4-q2": "degenerate",
        "ising*svec": "degenerate",
    }
    for key, cls in expected.items():
        assert classification(builtin(key)) == cls, key


def test_product_ising_svec():
    entry = product("ising", "svec")
    assert entry.key == "ising*svec"
    assert entry.ring.rank == 6
    center = muger_center(entry.ring, entry.smatrix)
    # (1, 1) and (1, f) in the (i, ip) -> 2 i + ip flattening
    assert center.members == (0, 1)


def test_product_svec_svec_is_symmetric():
    entry = product("svec", "svec")
    assert entry.ring.rank == 4
    center = muger_center(entry.ring, entry.smatrix)
    assert center.members == (0, 1, 2, 3)


def test_product_with_trivial_preserves_data():
    entry = product("fib", "trivial")
    fib = builtin("fib")
    assert entry.ring.tensor == fib.ring.tensor
    assert entry.ring.fpdims == fib.ring.fpdims
    assert [tuple(r) for r in entry.smatrix.s] == [tuple(r) for r in fib.smatrix.s]


def test_triple_product_key():
    entry = builtin("svec*svec*svec")
    assert entry.ring.rank == 8
    assert classification(entry) == "symmetric"


def test_entry_summary_fields():
    summary = entry_summary(builtin("ising*svec"))
    assert summary == {
        "key": "ising*svec",
        "rank": 6,
        "fpdim": 8.0,
        "center_size": 2,
        "class": "degenerate",
    }


def test_level4_symmetric_matrix_landscape():
    """Every symmetric character-row matrix on the level-4 ring, by brute
    force over row-character assignments: exactly four exist, and none has
    center {0, 4}."""
    from itertools import product as iproduct

    from fuscat.premod import validate_smatrix

    entry = builtin("su2k-4")
    ring, table = entry.ring, entry.table
    r = ring.rank
    centers = {}
    for assign in iproduct(range(r), repeat=r):
        rows = [[table.alpha[j][assign[i]] * ring.fpdims[i] for j in range(r)]
                for i in range(r)]
        if any(rows[0][j] != ring.fpdims[j] for j in range(r)):
            continue
        if any(rows[i][j] != rows[j][i]
               for i in range(r) for j in range(i + 1, r)):
            continue
        sm = validate_smatrix(ring, table, rows)
        centers.setdefault(muger_center(ring, sm).members, []).append(assign)
    assert sorted(centers) == [(0,), (0, 1, 2, 3, 4), (0, 2, 4)]
    assert sorted(len(v) for v in centers.values()) == [1, 1, 2]
    # in particular no symmetric matrix makes exactly the boundary object
    # X_4 transparent: a center of {0, 4} is unrealizable on this ring
    assert (0, 4) not in centers


@settings(max_examples=10, deadline=None)
@given(n=st.integers(min_value=1, max_value=7),
       c=st.integers(min_value=0, max_value=6))
def test_pointed_center_is_kernel_subgroup(n, c):
    import math

    entry = builtin(f"pointed-z{n}-q{c}")
    step = n // math.gcd(c % n, n)
    center = muger_center(entry.ring, entry.smatrix)
    assert center.members == tuple(range(0, n, step))

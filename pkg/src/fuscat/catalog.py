"""Built-in fusion rings with exact character tables and symmetric matrices.

Every entry is constructed from closed forms in a fixed cyclotomic field and is
fully re-validated on first access: the ring axioms, the character-table
axioms, and (when a symmetric matrix ships) the row-character conditions all
run before the entry is returned.  Entries are immutable and cached.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .chartab import CharacterTable, validate_character_table
from .errors import UnknownKey
from .exactnum import CycNum
from .fusion import (FusionRing, deligne_product, global_fpdim,
                     validate_fusion_ring)
from .premod import SMatrix, muger_center, validate_smatrix

_ONE = CycNum.from_rational(1)

#: Keys shown by the builtin listing.  ``builtin`` additionally accepts any
#: "su2k-<k>" and "pointed-z<n>-q<c>" key and '*'-joined products of keys.
BUILTIN_KEYS = (
    "trivial",
    "svec",
    "ising",
    "fib",
    "rep-s3",
    "su2k-2",
    "su2k-3",
    "su2k-4",
    "pointed-z2-q1",
    "pointed-z3-q1",
    "pointed-z4-q1",
    "pointed-z4-q2",
    "ising*svec",
)


@dataclass(frozen=True)
class CatalogEntry:
    """A validated ring together with its exact derived data."""

    key: str
    ring: FusionRing
    table: CharacterTable
    smatrix: Optional[SMatrix]
    description: str


def _sqrt2() -> CycNum:
    z = CycNum.zeta(8)
    return z - z ** 3


def _sqrt5() -> CycNum:
    z = CycNum.zeta(5)
    return _ONE + (z + z ** 4) * 2


def _entry(key, ring, table_rows, smatrix_rows, description) -> CatalogEntry:
    table = validate_character_table(ring, table_rows)
    sm = None
    if smatrix_rows is not None:
        sm = validate_smatrix(ring, table, smatrix_rows)
    return CatalogEntry(key, ring, table, sm, description)


def _trivial() -> CatalogEntry:
    ring = validate_fusion_ring([[[1]]], (0,), names=("1",), fpdims=(_ONE,))
    return _entry("trivial", ring, [[_ONE]], [[_ONE]],
                  "rank-1 ring of the tensor unit")


def _group_ring(n: int, names) -> FusionRing:
    tensor = [[[1 if k == (i + j) % n else 0 for k in range(n)]
               for j in range(n)] for i in range(n)]
    dual = tuple((-i) % n for i in range(n))
    return validate_fusion_ring(tensor, dual, names=tuple(names),
                                fpdims=tuple(_ONE for _ in range(n)))


def _group_table_rows(n: int):
    return [[CycNum.zeta(n, (i * j) % n) for j in range(n)] for i in range(n)]


def _svec() -> CatalogEntry:
    ring = _group_ring(2, ("1", "f"))
    smatrix = [[_ONE, _ONE], [_ONE, _ONE]]
    return _entry("svec", ring, _group_table_rows(2), smatrix,
                  "rank-2 pointed ring on Z/2 with the all-ones symmetric "
                  "matrix; every object is transparent")


def _ising() -> CatalogEntry:
    tensor = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 1], [1, 1, 0]],
    ]
    r2 = _sqrt2()
    ring = validate_fusion_ring(tensor, (0, 1, 2), names=("1", "f", "s"),
                                fpdims=(_ONE, _ONE, r2))
    table = [
        [_ONE, _ONE, _ONE],
        [_ONE, _ONE, -_ONE],
        [r2, -r2, CycNum.from_rational(0)],
    ]
    smatrix = [
        [_ONE, _ONE, r2],
        [_ONE, _ONE, -r2],
        [r2, -r2, CycNum.from_rational(0)],
    ]
    return _entry("ising", ring, table, smatrix,
                  "rank-3 ring with s*s = 1 + f; the dimension of s is "
                  "zeta_8 - zeta_8^3 and the symmetric matrix is the "
                  "standard one in Q(zeta_8)")


def _fib() -> CatalogEntry:
    tensor = [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 1]],
    ]
    phi = (_ONE + _sqrt5()) / 2
    ring = validate_fusion_ring(tensor, (0, 1), names=("1", "t"),
                                fpdims=(_ONE, phi))
    table = [[_ONE, _ONE], [phi, _ONE - phi]]
    smatrix = [[_ONE, phi], [phi, -_ONE]]
    return _entry("fib", ring, table, smatrix,
                  "rank-2 ring with t*t = 1 + t; golden-ratio dimension "
                  "(1 + sqrt 5)/2 realized in Q(zeta_5)")


def _rep_s3() -> CatalogEntry:
    tensor = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[0, 0, 1], [0, 0, 1], [1, 1, 1]],
    ]
    two = CycNum.from_rational(2)
    ring = validate_fusion_ring(tensor, (0, 1, 2), names=("1", "u", "v"),
                                fpdims=(_ONE, _ONE, two))
    table = [
        [_ONE, _ONE, _ONE],
        [_ONE, -_ONE, _ONE],
        [two, CycNum.from_rational(0), -_ONE],
    ]
    dims = ring.fpdims
    smatrix = [[dims[i] * dims[j] for j in range(3)] for i in range(3)]
    return _entry("rep-s3", ring, table, smatrix,
                  "character ring of the symmetric group on three letters; "
                  "the symmetric matrix is the rank-one form d d^T, so every "
                  "object is transparent")


def _su2k_tensor(k: int):
    """Truncated Clebsch-Gordan structure constants at level k."""
    rank = k + 1
    tensor = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i in range(rank):
        for j in range(rank):
            top = min(i + j, 2 * k - i - j)
            for l in range(abs(i - j), top + 1, 2):
                tensor[i][j][l] = 1
    return tensor


def _su2k_rule_check(tensor, k: int):
    """Re-derive every entry from the admissibility condition, stated as an
    iff per triple, independently of the range enumeration above."""
    rank = k + 1
    for i in range(rank):
        for j in range(rank):
            for l in range(rank):
                admissible = (abs(i - j) <= l <= min(i + j, 2 * k - i - j)
                              and (i + j + l) % 2 == 0)
                assert tensor[i][j][l] == (1 if admissible else 0), \
                    f"level-{k} structure constants disagree at {(i, j, l)}"


def _su2k(k: int) -> CatalogEntry:
    if k < 0:
        raise UnknownKey(f"su2k-{k}")
    rank = k + 1
    conductor = 4 * (k + 2)
    tensor = _su2k_tensor(k)
    _su2k_rule_check(tensor, k)

    def gap(m: int) -> CycNum:
        # zeta^(2m) - zeta^(-2m), a scalar multiple of sin(m*pi/(k+2))
        return (CycNum.zeta(conductor, (2 * m) % conductor)
                - CycNum.zeta(conductor, (-2 * m) % conductor))

    unit_gap = gap(1)
    smatrix = [[gap((i + 1) * (j + 1)) / unit_gap for j in range(rank)]
               for i in range(rank)]
    denom = math.sin(math.pi / (k + 2))
    for i in range(rank):
        for j in range(rank):
            target = math.sin((i + 1) * (j + 1) * math.pi / (k + 2)) / denom
            got = smatrix[i][j].embed_complex()
            assert abs(got - target) <= 1e-9, \
                f"exact matrix entry ({i},{j}) drifts from its sine value"
    dims = tuple(smatrix[0][j] for j in range(rank))
    ring = validate_fusion_ring(tensor, tuple(range(rank)),
                                names=tuple(f"X{i}" for i in range(rank)),
                                fpdims=dims)
    table = [[smatrix[i][j] / dims[j] for j in range(rank)]
             for i in range(rank)]
    return _entry(f"su2k-{k}", ring, table, smatrix,
                  f"level-{k} truncated Clebsch-Gordan ring on {rank} "
                  f"self-dual objects; matrix entries are exact difference "
                  f"quotients of powers of zeta_{conductor}")


def _pointed(n: int, c: int) -> CatalogEntry:
    if n < 1:
        raise UnknownKey(f"pointed-z{n}-q{c}")
    ring = _group_ring(n, (f"a{i}" for i in range(n)))
    cc = c % n
    smatrix = [[CycNum.zeta(n, (cc * a * b) % n) for b in range(n)]
               for a in range(n)]
    for a in range(n):
        for b in range(n):
            for x in range(n):
                assert smatrix[(a + b) % n][x] == smatrix[a][x] * smatrix[b][x], \
                    f"bilinearity fails at {(a, b, x)}"
    return _entry(f"pointed-z{n}-q{c}", ring, _group_table_rows(n), smatrix,
                  f"pointed ring on Z/{n} with the bilinear symmetric matrix "
                  f"s_ab = zeta_{n}^({c}ab), the polarization of the "
                  f"quadratic form a -> zeta_{2 * n}^({c}a^2)")


def _product_entry(a: CatalogEntry, b: CatalogEntry) -> CatalogEntry:
    ring = deligne_product(a.ring, b.ring)
    ra, rb = a.ring.rank, b.ring.rank
    table = [[a.table.alpha[i][j] * b.table.alpha[ip][jp]
              for j in range(ra) for jp in range(rb)]
             for i in range(ra) for ip in range(rb)]
    smatrix = None
    if a.smatrix is not None and b.smatrix is not None:
        smatrix = [[a.smatrix.s[i][j] * b.smatrix.s[ip][jp]
                    for j in range(ra) for jp in range(rb)]
                   for i in range(ra) for ip in range(rb)]
    return _entry(f"{a.key}*{b.key}", ring, table, smatrix,
                  f"entrywise product of '{a.key}' and '{b.key}'")


_SU2K = re.compile(r"su2k-(\d+)\Z")
_POINTED = re.compile(r"pointed-z(\d+)-q(\d+)\Z")

_FIXED = {
    "trivial": _trivial,
    "svec": _svec,
    "ising": _ising,
    "fib": _fib,
    "rep-s3": _rep_s3,
}


@lru_cache(maxsize=None)
def builtin(key: str) -> CatalogEntry:
    """Return the validated entry for a catalog key.

    Accepts the fixed keys, the parametric families "su2k-<k>" and
    "pointed-z<n>-q<c>", and '*'-joined products of other keys.
    """
    if "*" in key:
        parts = key.split("*")
        if any(not p for p in parts):
            raise UnknownKey(key)
        entry = builtin(parts[0])
        for part in parts[1:]:
            entry = _product_entry(entry, builtin(part))
        return entry
    if key in _FIXED:
        return _FIXED[key]()
    m = _SU2K.match(key)
    if m:
        return _su2k(int(m.group(1)))
    m = _POINTED.match(key)
    if m:
        return _pointed(int(m.group(1)), int(m.group(2)))
    raise UnknownKey(key)


def product(a: str, b: str) -> CatalogEntry:
    """Validated entrywise product of two catalog entries, keyed "a*b"."""
    return builtin(f"{a}*{b}")


def classification(entry: CatalogEntry) -> str:
    """"modular", "symmetric", or "degenerate" by the size of the center;
    "no-smatrix" when the entry carries no symmetric matrix."""
    if entry.smatrix is None:
        return "no-smatrix"
    center = muger_center(entry.ring, entry.smatrix)
    if len(center.members) == 1:
        return "modular"
    if len(center.members) == entry.ring.rank:
        return "symmetric"
    return "degenerate"


def entry_summary(entry: CatalogEntry) -> dict:
    """Plain-data line for the builtin listing."""
    center_size = (0 if entry.smatrix is None else
                   len(muger_center(entry.ring, entry.smatrix).members))
    return {
        "key": entry.key,
        "rank": entry.ring.rank,
        "fpdim": float(global_fpdim(entry.ring).embed_complex().real),
        "center_size": center_size,
        "class": classification(entry),
    }

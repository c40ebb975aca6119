"""Character tables of fusion rings.

The table alpha[i][j] holds the value of the j-th character on the i-th
basis element.  Columns must be pairwise distinct exact algebra maps;
distinct characters of a commutative ring are linearly independent, so
distinctness already gives invertibility.  The table is validated input:
exact character values are never solved for numerically.

Formal codegrees and class dimensions are derived from the table; the
class dimension attached to the dimension character is always 1, and the
class dimensions sum to the global dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpectrum,
    ExactDataMissing,
    NoFPColumn,
    NotAlgebraMap,
    NotIdempotent,
    SingularTable,
)
from .exactnum import CycNum
from .fusion import FusionRing, Subcategory, global_fpdim, sub_fpdim
from .reports import CheckResult

ZERO = CycNum.from_rational(0)


@dataclass(frozen=True)
class CharacterTable:
    """Validated table with derived codegrees and class dimensions."""

    alpha: tuple[tuple[CycNum, ...], ...]
    fp_column: int
    codegrees: tuple[CycNum, ...]
    class_dims: tuple[CycNum, ...]

    @property
    def rank(self):
        return len(self.alpha)

    def value(self, i, j) -> CycNum:
        """Value of character j on basis element i."""
        return self.alpha[i][j]

    def column(self, j) -> tuple[CycNum, ...]:
        return tuple(self.alpha[i][j] for i in range(self.rank))


@dataclass(frozen=True)
class ClassFunction:
    """Element of the character algebra, in both natural bases.

    chi_coords expands over the basis characters chi_i; f_coords over the
    primitive idempotents F_j, so f_coords[j] is the value of the j-th
    algebra map on the element.
    """

    chi_coords: tuple[CycNum, ...]
    f_coords: tuple[CycNum, ...]


def class_function_from_chi(table: CharacterTable, chi_coords) -> ClassFunction:
    chi = tuple(c if isinstance(c, CycNum) else CycNum.from_rational(c)
                for c in chi_coords)
    r = table.rank
    f = []
    for j in range(r):
        total = ZERO
        for i in range(r):
            if not chi[i].is_zero():
                total = total + table.alpha[i][j] * chi[i]
        f.append(total)
    return ClassFunction(chi, tuple(f))


def validate_character_table(ring: FusionRing, rows) -> CharacterTable:
    """Check each column is a character, columns are distinct, derive class data."""
    if ring.fpdims is None:
        raise ExactDataMissing("character table validation needs exact dimensions")
    r = ring.rank
    alpha = tuple(tuple(v if isinstance(v, CycNum) else CycNum.from_rational(v)
                        for v in row) for row in rows)
    if len(alpha) != r or any(len(row) != r for row in alpha):
        raise SingularTable(f"table must be {r} x {r}")

    for j in range(r):
        if alpha[0][j] != 1:
            raise NotAlgebraMap(j, (0,))
        for i in range(r):
            for k in range(i, r):
                rhs = ZERO
                for l in range(r):
                    n = ring.tensor[i][k][l]
                    if n:
                        rhs = rhs + alpha[l][j] * n
                if alpha[i][j] * alpha[k][j] != rhs:
                    raise NotAlgebraMap(j, (i, k))

    for j in range(r):
        for jj in range(j + 1, r):
            if all(alpha[i][j] == alpha[i][jj] for i in range(r)):
                raise SingularTable(f"columns {j} and {jj} coincide")

    fp_column = None
    for j in range(r):
        if all(alpha[i][j] == ring.fpdims[i] for i in range(r)):
            fp_column = j
            break
    if fp_column is None:
        raise NoFPColumn("no column equals the dimension vector")

    total_dim = global_fpdim(ring)
    codegrees, class_dims = [], []
    for j in range(r):
        cod = ZERO
        for i in range(r):
            cod = cod + alpha[i][j] * alpha[ring.dual[i]][j]
        if cod.is_zero():
            raise SingularTable(f"column {j} has zero codegree")
        codegrees.append(cod)
        class_dims.append(total_dim / cod)

    total = ZERO
    for c in class_dims:
        total = total + c
    assert total == total_dim, "class dimensions must sum to the global dimension"
    assert class_dims[fp_column] == 1, "dimension character must have class dimension 1"

    return CharacterTable(alpha=alpha, fp_column=fp_column,
                          codegrees=tuple(codegrees), class_dims=tuple(class_dims))


# ---------------------------------------------------------------------------
# subcategory integrals and their support
# ---------------------------------------------------------------------------

def lambda_subcategory(ring: FusionRing, table: CharacterTable,
                       sub: Subcategory) -> ClassFunction:
    """Normalized integral of a subcategory: (1/dim D) sum of d_i chi_i over D."""
    dim_d = sub_fpdim(ring, sub)
    chi = tuple(ring.fpdims[i] / dim_d if i in sub else ZERO
                for i in range(ring.rank))
    return class_function_from_chi(table, chi)


def support_JD(ring: FusionRing, table: CharacterTable,
               sub: Subcategory) -> tuple[int, ...]:
    """Columns where the subcategory integral evaluates to 1 (elsewhere 0)."""
    lam = lambda_subcategory(ring, table, sub)
    out = []
    for j, v in enumerate(lam.f_coords):
        if v == 1:
            out.append(j)
        elif not v.is_zero():
            raise NotIdempotent(f"integral evaluates to {v} at column {j}")
    assert table.fp_column in out, "dimension character always lies in the support"
    return tuple(out)


def verify_eq_2_7(ring: FusionRing, table: CharacterTable,
                  sub: Subcategory) -> CheckResult:
    """Class dimensions over the support sum to dim(C)/dim(D)."""
    jd = support_JD(ring, table, sub)
    lhs = ZERO
    for j in jd:
        lhs = lhs + table.class_dims[j]
    rhs = global_fpdim(ring) / sub_fpdim(ring, sub)
    return CheckResult(check="eq-2.7", inputs={"D": list(sub.members)},
                       lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_eq_2_4(ring: FusionRing, table: CharacterTable) -> list[CheckResult]:
    """Dual-pairing orthogonality of table columns, all pairs."""
    r = ring.rank
    out = []
    for l in range(r):
        for k in range(r):
            s = ZERO
            for i in range(r):
                s = s + table.alpha[i][l] * table.alpha[ring.dual[i]][k]
            rhs = global_fpdim(ring) / table.class_dims[k] if l == k else ZERO
            out.append(CheckResult(check="eq-2.4", inputs={"l": l, "k": k},
                                   lhs=s, rhs=rhs, passed=s == rhs))
    return out


# ---------------------------------------------------------------------------
# numeric cross-check
# ---------------------------------------------------------------------------

def characters_numeric(ring: FusionRing, seed: int = 0,
                       max_retries: int = 8) -> np.ndarray:
    """Eigenvector characters of a random combination of fusion matrices.

    Returns a complex array with the same orientation as the exact table
    (rows index basis elements, columns index characters).  Retries with
    fresh coefficients when the spectrum is degenerate.
    """
    rng = np.random.default_rng(seed)
    r = ring.rank
    mats = [ring.fusion_matrix(i) for i in range(r)]
    for _ in range(max_retries):
        coeff = rng.uniform(0.5, 1.5, size=r)
        m = sum(c * mat for c, mat in zip(coeff, mats))
        w, vec = np.linalg.eig(m)
        gap = min(abs(w[a] - w[b]) for a in range(r) for b in range(a + 1, r)) \
            if r > 1 else 1.0
        if gap < 1e-6:
            continue
        cols = []
        ok = True
        for idx in range(r):
            v = vec[:, idx]
            anchor = int(np.argmax(np.abs(v)))
            mu = np.array([(mat @ v)[anchor] / v[anchor] for mat in mats])
            cols.append(mu)
        alpha_num = np.array(cols).T  # rows = basis, columns = characters
        for i in range(r):
            for k in range(r):
                resid = alpha_num[i] * alpha_num[k] - sum(
                    ring.tensor[i][k][l] * alpha_num[l] for l in range(r))
                if np.max(np.abs(resid)) > 1e-8:
                    ok = False
        if ok:
            order = np.lexsort((np.round(w.imag, 9), np.round(w.real, 9)))
            return alpha_num[:, order]
    raise DegenerateSpectrum(f"no separated spectrum after {max_retries} draws")


def match_numeric_columns(table: CharacterTable, numeric: np.ndarray,
                          tol: float = 1e-8) -> list[int]:
    """Bijection from exact columns to numeric ones within tolerance."""
    r = table.rank
    exact = np.array([[table.alpha[i][j].embed_complex() for j in range(r)]
                      for i in range(r)])
    used, perm = set(), []
    for j in range(r):
        best = None
        for jn in range(r):
            if jn in used:
                continue
            if np.max(np.abs(exact[:, j] - numeric[:, jn])) <= tol:
                best = jn
                break
        if best is None:
            raise ValueError(f"no numeric column matches exact column {j} within {tol}")
        used.add(best)
        perm.append(best)
    return perm

"""S-matrix layer: centralizers, transparent objects, central elements.

The S-matrix of a braided ring is symmetric with first row the dimensions;
each row, normalized by its dimension, must be a character of the ring and
therefore matches exactly one column of the character table.  That matching
is the M-function; its fibers, the transparent subcategory (center), and a
family of dimension and divisibility identities are verified here in exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, ClassFunction, support_JD
from .cosets import restricted_blocks, coset_partition
from .errors import (
    AsymmetricS,
    BadFirstRow,
    ExactDataMissing,
    NoMatchingColumn,
    PreconditionFailed,
    PsiNotCharacter,
    ValidationError,
)
from .exactnum import CycNum, integrality_witness, is_algebraic_integer
from .fusion import (
    FusionRing,
    Subcategory,
    check_subcategory,
    global_fpdim,
    pointed_part,
    sub_fpdim,
)
from .reports import CheckResult

ZERO = CycNum.from_rational(0)
ONE = CycNum.from_rational(1)


@dataclass(frozen=True)
class SMatrix:
    """Validated symmetric matrix whose normalized rows are characters."""

    s: tuple[tuple[CycNum, ...], ...]

    def entry(self, i, j) -> CycNum:
        return self.s[i][j]


@dataclass(frozen=True)
class CentralElement:
    """Coordinates in the idempotent basis dual to the basis elements."""

    e_coords: tuple[CycNum, ...]

    def __mul__(self, other):
        return CentralElement(tuple(a * b for a, b in
                                    zip(self.e_coords, other.e_coords)))

    def scale(self, c) -> "CentralElement":
        return CentralElement(tuple(a * c for a in self.e_coords))

    def __eq__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        return len(self.e_coords) == len(other.e_coords) and all(
            a == b for a, b in zip(self.e_coords, other.e_coords))

    __hash__ = None


@dataclass(frozen=True)
class PremodAnalysis:
    """The M-function, its fibers and image, the center, and stabilizers."""

    M: tuple[int, ...]
    J2: tuple[int, ...]
    fibers: tuple[tuple[int, ...], ...]
    center: Subcategory
    stabilizers: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _match_column(ring: FusionRing, table: CharacterTable, s, i: int) -> int:
    """Table column equal to row i of s divided by d_i; unique by distinctness."""
    di = ring.fpdims[i]
    for j in range(ring.rank):
        if all(table.alpha[a][j] * di == s[i][a] for a in range(ring.rank)):
            return j
    raise NoMatchingColumn(i)


def validate_smatrix(ring: FusionRing, table: CharacterTable, rows) -> SMatrix:
    """Symmetry, first row, per-row character property, column matching."""
    if ring.fpdims is None:
        raise ExactDataMissing("s-matrix validation needs exact dimensions")
    r = ring.rank
    s = tuple(tuple(v if isinstance(v, CycNum) else CycNum.from_rational(v)
                    for v in row) for row in rows)
    if len(s) != r or any(len(row) != r for row in s):
        raise ValidationError("smatrix-shape", None, f"matrix must be {r} x {r}")
    for i in range(r):
        for j in range(i + 1, r):
            if s[i][j] != s[j][i]:
                raise AsymmetricS(f"entries ({i},{j}) and ({j},{i}) differ")
    for i in range(r):
        if s[0][i] != ring.fpdims[i]:
            raise BadFirstRow(f"entry {i} of the first row is not the dimension")
    for i in range(r):
        di = ring.fpdims[i]
        psi = [s[i][a] / di for a in range(r)]
        for a in range(r):
            for b in range(a, r):
                rhs = ZERO
                for c in range(r):
                    n = ring.tensor[a][b][c]
                    if n:
                        rhs = rhs + psi[c] * n
                if psi[a] * psi[b] != rhs:
                    raise PsiNotCharacter(i, (a, b))
        _match_column(ring, table, s, i)
    return SMatrix(s=s)


# ---------------------------------------------------------------------------
# centralizers and the center
# ---------------------------------------------------------------------------

def centralizer(ring: FusionRing, sm: SMatrix, sub: Subcategory) -> Subcategory:
    """Objects pairing with every member of `sub` as if transparent."""
    members = [ip for ip in range(ring.rank)
               if all(sm.s[i][ip] == ring.fpdims[i] * ring.fpdims[ip]
                      for i in sub.members)]
    return check_subcategory(ring, members)


def muger_center(ring: FusionRing, sm: SMatrix) -> Subcategory:
    return centralizer(ring, sm, Subcategory(tuple(range(ring.rank))))


# ---------------------------------------------------------------------------
# central elements
# ---------------------------------------------------------------------------

def f_Q(ring: FusionRing, sm: SMatrix, cf: ClassFunction) -> CentralElement:
    """Algebra map from class functions to central elements, row-by-dimension."""
    r = ring.rank
    coords = []
    for ip in range(r):
        total = ZERO
        for i in range(r):
            x = cf.chi_coords[i]
            if not x.is_zero():
                total = total + x * sm.s[i][ip] / ring.fpdims[ip]
        coords.append(total)
    return CentralElement(tuple(coords))


def _f_q_basis(ring: FusionRing, sm: SMatrix, i: int) -> CentralElement:
    return CentralElement(tuple(sm.s[i][ip] / ring.fpdims[ip]
                                for ip in range(ring.rank)))


def class_sum(ring: FusionRing, table: CharacterTable, j: int) -> CentralElement:
    """C_j: class dimension times the dimension-normalized column j."""
    coords = tuple(table.alpha[ip][j] / ring.fpdims[ip] for ip in range(ring.rank))
    return CentralElement(coords).scale(table.class_dims[j])


# ---------------------------------------------------------------------------
# analysis
# ---------------------------------------------------------------------------

def m_map(ring: FusionRing, table: CharacterTable, sm: SMatrix) -> PremodAnalysis:
    """Match every row to its table column; derive fibers, image, center,
    stabilizers; re-verify the row/column compatibility on all pairs."""
    r = ring.rank
    m = tuple(_match_column(ring, table, sm.s, i) for i in range(r))

    # row/column compatibility on all pairs: alpha_{i M(i')} d_{i'} = s_{i i'}
    for i in range(r):
        for ip in range(r):
            if table.alpha[i][m[ip]] * ring.fpdims[ip] != sm.s[i][ip]:
                raise NoMatchingColumn(ip)

    # multiplicativity of the central map on basis pairs
    for a in range(r):
        fa = _f_q_basis(ring, sm, a)
        for b in range(a, r):
            fb = _f_q_basis(ring, sm, b)
            rhs = CentralElement((ZERO,) * r)
            for c in range(r):
                n = ring.tensor[a][b][c]
                if n:
                    rhs = CentralElement(tuple(
                        x + y * n for x, y in
                        zip(rhs.e_coords, _f_q_basis(ring, sm, c).e_coords)))
            if fa * fb != rhs:
                raise PsiNotCharacter(a, (a, b))

    # expansion through the matching equals the direct evaluation
    for i in range(r):
        expanded = CentralElement(tuple(table.alpha[i][m[ip]] for ip in range(r)))
        if expanded != _f_q_basis(ring, sm, i):
            raise NoMatchingColumn(i)

    fiber_map = {}
    for i in range(r):
        fiber_map.setdefault(m[i], []).append(i)
    fibers = tuple(sorted((tuple(v) for v in fiber_map.values()), key=lambda b: b[0]))
    j2 = tuple(sorted(fiber_map))
    center = muger_center(ring, sm)
    invertible = set(pointed_part(ring).members)
    stabs = tuple(tuple(g for g in center.members
                        if g in invertible and ring.tensor[g][y][y] >= 1)
                  for y in range(r))
    return PremodAnalysis(M=m, J2=j2, fibers=fibers, center=center,
                          stabilizers=stabs)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def verify_eq_4_3(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                  analysis: PremodAnalysis) -> list[CheckResult]:
    """Normalized table entries at matched columns against normalized s-entries."""
    out = []
    for i in range(ring.rank):
        ok = all(table.alpha[i][analysis.M[ip]] * ring.fpdims[ip] == sm.s[i][ip]
                 for ip in range(ring.rank))
        out.append(CheckResult(check="eq-4.3", inputs={"i": i},
                               lhs="alpha_{i M(i')} d_{i'}", rhs="s_{i i'}",
                               passed=ok))
    return out


def verify_thm_4_6(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                   analysis: PremodAnalysis) -> list[CheckResult]:
    """Central image of each basis character is its class sum, rescaled."""
    out = []
    for i in range(ring.rank):
        j = analysis.M[i]
        lhs = _f_q_basis(ring, sm, i)
        rhs = class_sum(ring, table, j).scale(ring.fpdims[i] / table.class_dims[j])
        out.append(CheckResult(check="thm-4.6", inputs={"i": i, "column": j},
                               lhs=list(lhs.e_coords), rhs=list(rhs.e_coords),
                               passed=lhs == rhs))
    return out


def verify_thm_4_10(ring: FusionRing, table: CharacterTable,
                    analysis: PremodAnalysis) -> list[CheckResult]:
    """Fibers of the matching equal the cosets with respect to the center,
    and the fiber count is the support size of the center."""
    dec = coset_partition(ring, analysis.center)
    same = set(map(frozenset, analysis.fibers)) == set(map(frozenset, dec.blocks))
    out = [CheckResult(check="thm-4.10", inputs={},
                       lhs=[list(b) for b in analysis.fibers],
                       rhs=[list(b) for b in dec.blocks],
                       passed=same, detail="fibers vs center cosets")]
    jz = support_JD(ring, table, analysis.center)
    ok = len(analysis.fibers) == len(analysis.J2) and set(analysis.J2) == set(jz)
    out.append(CheckResult(check="thm-4.10", inputs={},
                           lhs=len(analysis.fibers), rhs=len(jz),
                           passed=ok, detail="fiber count vs support size"))
    return out


def _center_trace(ring: FusionRing, analysis: PremodAnalysis,
                  sub: Subcategory) -> Subcategory:
    return check_subcategory(
        ring, set(sub.members) & set(analysis.center.members))


def _rd_blocks(analysis: PremodAnalysis, sub: Subcategory) -> dict[int, tuple[int, ...]]:
    """Basis members of `sub` grouped by matched column."""
    grouped: dict[int, list[int]] = {}
    for i in sub.members:
        grouped.setdefault(analysis.M[i], []).append(i)
    return {j: tuple(v) for j, v in grouped.items()}


def verify_prop_4_12(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                     analysis: PremodAnalysis, sub: Subcategory) -> list[CheckResult]:
    """Support of the centralizer is the matched image of D, and each matched
    group has dimension dim(D ∩ center) times the class dimension."""
    dprime = centralizer(ring, sm, sub)
    jdp = support_JD(ring, table, dprime)
    image = sorted({analysis.M[i] for i in sub.members})
    out = [CheckResult(check="prop-4.12",
                       inputs={"D": list(sub.members), "part": "image"},
                       lhs=image, rhs=sorted(jdp),
                       passed=set(image) == set(jdp))]
    inter = _center_trace(ring, analysis, sub)
    dim_inter = sub_fpdim(ring, inter)
    blocks = _rd_blocks(analysis, sub)
    total_block_dim = ZERO
    for j in sorted(blocks):
        dim_j = ZERO
        for i in blocks[j]:
            dim_j = dim_j + ring.fpdims[i] * ring.fpdims[i]
        total_block_dim = total_block_dim + dim_j
        rhs = dim_inter * table.class_dims[j]
        out.append(CheckResult(check="prop-4.12",
                               inputs={"D": list(sub.members), "j": j},
                               lhs=dim_j, rhs=rhs, passed=dim_j == rhs))
    # support sum over the centralizer, and its consequence for dim(D)
    cd_sum = ZERO
    for j in jdp:
        cd_sum = cd_sum + table.class_dims[j]
    total = global_fpdim(ring)
    out.append(CheckResult(check="prop-4.12",
                           inputs={"D": list(sub.members), "part": "support-sum"},
                           lhs=cd_sum, rhs=total / sub_fpdim(ring, dprime),
                           passed=cd_sum == total / sub_fpdim(ring, dprime)))
    out.append(CheckResult(check="prop-4.12",
                           inputs={"D": list(sub.members), "part": "dim-sum"},
                           lhs=total_block_dim, rhs=sub_fpdim(ring, sub),
                           passed=total_block_dim == sub_fpdim(ring, sub)))
    return out


def verify_eq_4_15(ring: FusionRing, sm: SMatrix, analysis: PremodAnalysis,
                   sub: Subcategory) -> CheckResult:
    """dim(D) dim(D') = dim(C) dim(D ∩ center)."""
    dprime = centralizer(ring, sm, sub)
    inter = _center_trace(ring, analysis, sub)
    lhs = sub_fpdim(ring, sub) * sub_fpdim(ring, dprime)
    rhs = global_fpdim(ring) * sub_fpdim(ring, inter)
    return CheckResult(check="eq-4.15", inputs={"D": list(sub.members)},
                       lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_cor_4_16(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                    analysis: PremodAnalysis, sub: Subcategory) -> list[CheckResult]:
    """dim(C) dim(center ∩ D) / dim(R(D)_j) is an algebraic integer."""
    dprime = centralizer(ring, sm, sub)
    jdp = support_JD(ring, table, dprime)
    inter = _center_trace(ring, analysis, sub)
    blocks = _rd_blocks(analysis, sub)
    total = global_fpdim(ring)
    out = []
    for j in sorted(jdp):
        if j not in blocks:
            continue
        dim_j = ZERO
        for i in blocks[j]:
            dim_j = dim_j + ring.fpdims[i] * ring.fpdims[i]
        value = total * sub_fpdim(ring, inter) / dim_j
        ok = is_algebraic_integer(value)
        out.append(CheckResult(check="cor-4.16",
                               inputs={"D": list(sub.members), "j": j},
                               lhs=value, rhs="algebraic integer", passed=ok,
                               detail=f"min poly {integrality_witness(value)}" if ok else ""))
    return out


def verify_eq_4_20(ring: FusionRing, table: CharacterTable,
                   analysis: PremodAnalysis) -> list[CheckResult]:
    """Fiber dimensions are dim(center) times the class dimensions."""
    dim_center = sub_fpdim(ring, analysis.center)
    out = []
    for fiber in analysis.fibers:
        j = analysis.M[fiber[0]]
        dim_f = ZERO
        for i in fiber:
            dim_f = dim_f + ring.fpdims[i] * ring.fpdims[i]
        rhs = dim_center * table.class_dims[j]
        out.append(CheckResult(check="eq-4.20", inputs={"j": j, "fiber": list(fiber)},
                               lhs=dim_f, rhs=rhs, passed=dim_f == rhs))
    return out


def verify_prop_4_21(ring: FusionRing, analysis: PremodAnalysis,
                     sub: Subcategory) -> CheckResult:
    """Matched groups inside D are exactly the cosets of D by D ∩ center."""
    inter = _center_trace(ring, analysis, sub)
    blocks = {frozenset(b) for b in _rd_blocks(analysis, sub).values()}
    inner = {frozenset(b)
             for b in restricted_blocks(ring, sub.members, inter.members)}
    return CheckResult(check="prop-4.21", inputs={"D": list(sub.members)},
                       lhs=sorted(sorted(b) for b in blocks),
                       rhs=sorted(sorted(b) for b in inner),
                       passed=blocks == inner)


def _squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def verify_cor_4_18(ring: FusionRing, analysis: PremodAnalysis,
                    sub: Subcategory) -> CheckResult:
    """Integral ring, squarefree global dimension, trivial center trace:
    then the subcategory is pointed.  Vacuous pass when a hypothesis fails."""
    inputs = {"D": list(sub.members)}
    integral = all(d.is_rational() and d.as_rational().denominator == 1
                   for d in ring.fpdims)
    if not integral:
        return CheckResult(check="cor-4.18", inputs=inputs, lhs=None, rhs=None,
                           passed=True, detail="vacuous: ring not integral")
    total = global_fpdim(ring).as_rational()
    if total.denominator != 1 or not _squarefree(int(total)):
        return CheckResult(check="cor-4.18", inputs=inputs, lhs=None, rhs=None,
                           passed=True,
                           detail="vacuous: global dimension not squarefree")
    inter = _center_trace(ring, analysis, sub)
    if inter.members != (0,):
        return CheckResult(check="cor-4.18", inputs=inputs, lhs=None, rhs=None,
                           passed=True, detail="vacuous: center trace nontrivial")
    pointed = set(pointed_part(ring).members)
    ok = set(sub.members) <= pointed
    return CheckResult(check="cor-4.18", inputs=inputs,
                       lhs=list(sub.members), rhs="pointed", passed=ok)


def verify_thm_1_1(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                   analysis: PremodAnalysis, sub: Subcategory) -> list[CheckResult]:
    """dim(C)/d_Y^2 is an algebraic integer for Y in D when D meets the
    center trivially; cross-checked through singleton matched groups."""
    inter = _center_trace(ring, analysis, sub)
    if inter.members != (0,):
        raise PreconditionFailed("subcategory meets the center nontrivially")
    total = global_fpdim(ring)
    out = []
    for y in sub.members:
        value = total / (ring.fpdims[y] * ring.fpdims[y])
        ok = is_algebraic_integer(value)
        out.append(CheckResult(check="thm-1.1",
                               inputs={"D": list(sub.members), "Y": y},
                               lhs=value, rhs="algebraic integer", passed=ok,
                               detail=f"min poly {integrality_witness(value)}" if ok else ""))
    blocks = _rd_blocks(analysis, sub)
    singletons = all(len(b) == 1 for b in blocks.values())
    out.append(CheckResult(check="thm-1.1", inputs={"D": list(sub.members)},
                           lhs=sorted(len(b) for b in blocks.values()),
                           rhs="all singleton", passed=singletons,
                           detail="matched groups inside D"))
    return out


def verify_thm_1_3(ring: FusionRing, table: CharacterTable, sm: SMatrix,
                   analysis: PremodAnalysis) -> list[CheckResult]:
    """Divisibility by squared dimensions against the center: the product
    form for every simple; stabilizer-corrected class dimensions; the free
    quotient form when the center acts freely."""
    pointed = set(pointed_part(ring).members)
    if not set(analysis.center.members) <= pointed:
        raise PreconditionFailed("center is not pointed")
    total = global_fpdim(ring)
    dim_center = sub_fpdim(ring, analysis.center)
    out = []
    for y in range(ring.rank):
        d2 = ring.fpdims[y] * ring.fpdims[y]
        value = total * dim_center / d2
        ok = is_algebraic_integer(value)
        out.append(CheckResult(check="thm-1.3",
                               inputs={"Y": y, "item": 1},
                               lhs=value, rhs="algebraic integer", passed=ok,
                               detail=f"min poly {integrality_witness(value)}" if ok else ""))
        g_y = analysis.stabilizers[y]
        cd = table.class_dims[analysis.M[y]]
        out.append(CheckResult(check="eq-4.23",
                               inputs={"Y": y, "stabilizer": list(g_y)},
                               lhs=cd * len(g_y), rhs=d2,
                               passed=cd * len(g_y) == d2))
        mid = total * len(g_y) / d2
        ok_mid = is_algebraic_integer(mid)
        out.append(CheckResult(check="thm-1.3",
                               inputs={"Y": y, "item": "4.24"},
                               lhs=mid, rhs="algebraic integer", passed=ok_mid,
                               detail=f"min poly {integrality_witness(mid)}" if ok_mid else ""))
    if all(len(g) == 1 for g in analysis.stabilizers):
        for y in range(ring.rank):
            d2 = ring.fpdims[y] * ring.fpdims[y]
            value = total / (dim_center * d2)
            ok = is_algebraic_integer(value)
            out.append(CheckResult(check="thm-1.3",
                                   inputs={"Y": y, "item": 2},
                                   lhs=value, rhs="algebraic integer", passed=ok,
                                   detail=f"min poly {integrality_witness(value)}" if ok else ""))
    return out


def verify_rem_4_25(ring: FusionRing, table: CharacterTable,
                    analysis: PremodAnalysis) -> list[CheckResult]:
    """d_i^2 dim(C)/(dim(center) dim(C^{M(i)})) is an algebraic integer."""
    total = global_fpdim(ring)
    dim_center = sub_fpdim(ring, analysis.center)
    out = []
    for i in range(ring.rank):
        d2 = ring.fpdims[i] * ring.fpdims[i]
        value = d2 * total / (dim_center * table.class_dims[analysis.M[i]])
        ok = is_algebraic_integer(value)
        out.append(CheckResult(check="rem-4.25", inputs={"i": i},
                               lhs=value, rhs="algebraic integer", passed=ok,
                               detail=f"min poly {integrality_witness(value)}" if ok else ""))
    return out

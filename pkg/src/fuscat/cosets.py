"""Coset partitions of the basis with respect to a subcategory.

Two basis elements lie in the same (right) coset when one appears in the
product of the other with a subcategory member.  Each coset carries a
regular element; the normalized regular elements span a small commutative
algebra whose structure constants are computed and cross-checked here,
along with two orthogonality relations and an integrality corollary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, support_JD
from .errors import (
    ExactDataMissing,
    InconsistentCoset,
    IndexNotInJD,
    PreconditionFailed,
)
from .exactnum import CycNum, integrality_witness, is_algebraic_integer
from .fusion import (
    FusionRing,
    KElement,
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
class CosetDecomposition:
    """Blocks (sorted by least member), representatives, block dims, dual action."""

    sub: Subcategory
    blocks: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]
    reg_dims: tuple[CycNum, ...]
    dual_map: tuple[int, ...]

    @property
    def n_blocks(self):
        return len(self.blocks)

    def block_of(self, i) -> int:
        for t, block in enumerate(self.blocks):
            if i in block:
                return t
        raise IndexError(f"index {i} in no block")


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def restricted_blocks(ring: FusionRing, members, sub_members) -> list[tuple[int, ...]]:
    """Connected components of `members` under x ~ k iff N_{x s}^k > 0, s in sub."""
    members = sorted(members)
    member_set = set(members)
    seen, blocks = set(), []
    for start in members:
        if start in seen:
            continue
        frontier, block = [start], {start}
        seen.add(start)
        while frontier:
            x = frontier.pop()
            for s in sub_members:
                row = ring.tensor[x][s]
                for k in member_set:
                    if row[k] and k not in seen:
                        seen.add(k)
                        block.add(k)
                        frontier.append(k)
        blocks.append(tuple(sorted(block)))
    blocks.sort(key=lambda b: b[0])
    return blocks


def coset_partition(ring: FusionRing, sub: Subcategory) -> CosetDecomposition:
    """Partition the basis; cross-check BFS blocks against union-find."""
    if ring.fpdims is None:
        raise ExactDataMissing("coset partition needs exact dimensions")
    rank = ring.rank
    blocks = restricted_blocks(ring, range(rank), sub.members)

    uf = _UnionFind(rank)
    for i in range(rank):
        for s in sub.members:
            row = ring.tensor[i][s]
            for k in range(rank):
                if row[k]:
                    uf.union(i, k)
    uf_blocks = {}
    for i in range(rank):
        uf_blocks.setdefault(uf.find(i), []).append(i)
    if sorted(tuple(sorted(b)) for b in uf_blocks.values()) != sorted(blocks):
        raise InconsistentCoset("closure and union-find partitions disagree")

    if blocks[0] != sub.members:
        raise InconsistentCoset(
            f"block of the unit is {blocks[0]}, expected {sub.members}")

    index_of = {}
    for t, block in enumerate(blocks):
        for i in block:
            index_of[i] = t
    dual_map = []
    for block in blocks:
        images = {index_of[ring.dual[i]] for i in block}
        if len(images) != 1:
            raise InconsistentCoset(f"duals of block {block} are split")
        dual_map.append(images.pop())

    # representative convention: least index, with a paired dual block taking
    # the dual of its partner's representative; self-dual blocks keep their min
    reps: list[int | None] = [None] * len(blocks)
    for t, block in enumerate(blocks):
        if reps[t] is not None:
            continue
        reps[t] = block[0]
        td = dual_map[t]
        if td != t and reps[td] is None:
            reps[td] = ring.dual[block[0]]

    reg_dims = []
    for block in blocks:
        total = ZERO
        for i in block:
            total = total + ring.fpdims[i] * ring.fpdims[i]
        reg_dims.append(total)
    total = ZERO
    for d in reg_dims:
        total = total + d
    assert total == global_fpdim(ring), "block dims must sum to the global dimension"
    assert reg_dims[0] == sub_fpdim(ring, sub)

    return CosetDecomposition(sub=sub, blocks=tuple(blocks), reps=tuple(reps),
                              reg_dims=tuple(reg_dims), dual_map=tuple(dual_map))


# ---------------------------------------------------------------------------
# the algebra spanned by normalized block elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeckeAlgebra:
    dec: CosetDecomposition
    structure: tuple[tuple[tuple[CycNum, ...], ...], ...]   # H[m][n][p]

    @property
    def n_blocks(self):
        return self.dec.n_blocks


def block_element(ring: FusionRing, dec: CosetDecomposition, t: int) -> KElement:
    """e_t: the regular element of block t divided by its dimension."""
    block = set(dec.blocks[t])
    return KElement(tuple(ring.fpdims[i] / dec.reg_dims[t] if i in block else ZERO
                          for i in range(ring.rank)))


def hecke_constants(ring: FusionRing, dec: CosetDecomposition) -> HeckeAlgebra:
    """Structure constants of e_m e_n = sum_p H_{mn}^p e_p, fully cross-checked.

    H is read off the product of normalized block elements, with the in-block
    coefficients asserted proportional to dimensions; the same value is then
    recomputed from every representative pair (X, Y) via
    sum_{Z in p} d_Z N_{XY}^Z / (d_X d_Y).
    """
    nb = dec.n_blocks
    es = [block_element(ring, dec, t) for t in range(nb)]
    structure = []
    for m in range(nb):
        row = []
        for n in range(nb):
            prod = ring.k_mul(es[m], es[n])
            consts = []
            for p in range(nb):
                vals = [prod.coeffs[i] * dec.reg_dims[p] / ring.fpdims[i]
                        for i in dec.blocks[p]]
                if any(v != vals[0] for v in vals[1:]):
                    raise InconsistentCoset(
                        f"e_{m} e_{n} is not dimension-proportional on block {p}")
                consts.append(vals[0])
            for p in range(nb):
                for x in dec.blocks[m]:
                    for y in dec.blocks[n]:
                        mass = ZERO
                        for z in dec.blocks[p]:
                            nxy = ring.tensor[x][y][z]
                            if nxy:
                                mass = mass + ring.fpdims[z] * nxy
                        direct = mass / (ring.fpdims[x] * ring.fpdims[y])
                        if direct != consts[p]:
                            raise InconsistentCoset(
                                f"H_{{{m}{n}}}^{p} differs at representatives ({x},{y})")
            total = ZERO
            for c in consts:
                total = total + c
            if total != 1:
                raise InconsistentCoset(f"row ({m},{n}) sums to {total}, not 1")
            row.append(tuple(consts))
        structure.append(tuple(row))
    for m in range(nb):
        for n in range(nb):
            if structure[m][n] != structure[n][m]:
                raise InconsistentCoset(f"structure constants asymmetric at ({m},{n})")
    return HeckeAlgebra(dec=dec, structure=tuple(structure))


def hecke_associative(h: HeckeAlgebra) -> bool:
    nb = h.n_blocks
    H = h.structure
    for m in range(nb):
        for n in range(nb):
            for p in range(nb):
                for s in range(nb):
                    lhs = ZERO
                    rhs = ZERO
                    for q in range(nb):
                        lhs = lhs + H[m][n][q] * H[q][p][s]
                        rhs = rhs + H[n][p][q] * H[m][q][s]
                    if lhs != rhs:
                        return False
    return True


def hecke_dual_symmetric(h: HeckeAlgebra) -> bool:
    """H_{mn}^p = H_{n* m*}^{p*} under the dual action on blocks."""
    nb = h.n_blocks
    d = h.dec.dual_map
    H = h.structure
    return all(H[m][n][p] == H[d[n]][d[m]][d[p]]
               for m in range(nb) for n in range(nb) for p in range(nb))


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------

def verify_eq_3_1(ring: FusionRing, dec: CosetDecomposition) -> list[CheckResult]:
    """[X] R_D / d_X is the same element for all X in a block — and equals
    FPdim(D) e_t — while different blocks give different elements."""
    sub = dec.sub
    dim_d = sub_fpdim(ring, sub)
    r_d = KElement(tuple(ring.fpdims[i] if i in sub else ZERO
                         for i in range(ring.rank)))
    out = []
    normalized = []
    for t, block in enumerate(dec.blocks):
        target = block_element(ring, dec, t).scale(dim_d)
        ok = True
        for x in block:
            lhs = ring.k_mul(ring.basis(x), r_d).scale(ONE / ring.fpdims[x])
            if lhs != target:
                ok = False
        normalized.append(target)
        out.append(CheckResult(check="eq-3.1",
                               inputs={"D": list(sub.members), "block": list(block)},
                               lhs="[X]R_D/d_X for X in block", rhs="FPdim(D) e_t",
                               passed=ok))
    distinct = all(normalized[a] != normalized[b]
                   for a in range(len(normalized)) for b in range(a + 1, len(normalized)))
    out.append(CheckResult(check="eq-3.1",
                           inputs={"D": list(sub.members), "blocks": "pairwise"},
                           lhs="normalized block elements", rhs="pairwise distinct",
                           passed=distinct))
    return out


def verify_prop_3_4(ring: FusionRing, table: CharacterTable,
                    dec: CosetDecomposition) -> list[CheckResult]:
    """Block count equals |J_D|; the block algebra is well-formed."""
    jd = support_JD(ring, table, dec.sub)
    out = [CheckResult(check="prop-3.4",
                       inputs={"D": list(dec.sub.members)},
                       lhs=dec.n_blocks, rhs=len(jd),
                       passed=dec.n_blocks == len(jd),
                       detail="algebra dimension = support size")]
    h = hecke_constants(ring, dec)   # raises InconsistentCoset on malformation
    out.append(CheckResult(check="prop-3.4", inputs={"D": list(dec.sub.members)},
                           lhs="structure constants", rhs="associative",
                           passed=hecke_associative(h)))
    out.append(CheckResult(check="prop-3.4", inputs={"D": list(dec.sub.members)},
                           lhs="structure constants", rhs="dual-symmetric",
                           passed=hecke_dual_symmetric(h)))
    return out


def verify_eq_3_6(ring: FusionRing, table: CharacterTable, dec: CosetDecomposition,
                  k: int, l: int) -> CheckResult:
    """First orthogonality: block sums of products of normalized character
    values at the representatives, against the class dimension of column k."""
    jd = support_JD(ring, table, dec.sub)
    if k not in jd:
        raise IndexNotInJD(f"column {k} outside the support of D")
    if l not in jd:
        raise IndexNotInJD(f"column {l} outside the support of D")
    lhs = ZERO
    for t in range(dec.n_blocks):
        xt = dec.reps[t]
        xts = dec.reps[dec.dual_map[t]]
        d2 = ring.fpdims[xt] * ring.fpdims[xt]
        lhs = lhs + (dec.reg_dims[t] / d2) * table.alpha[xt][k] * table.alpha[xts][l]
    rhs = global_fpdim(ring) / table.class_dims[k] if k == l else ZERO
    return CheckResult(check="eq-3.6",
                       inputs={"D": list(dec.sub.members), "k": k, "l": l},
                       lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_eq_3_7(ring: FusionRing, table: CharacterTable, dec: CosetDecomposition,
                  t: int, s: int) -> CheckResult:
    """Second orthogonality: support-weighted column sums at two representatives."""
    jd = support_JD(ring, table, dec.sub)
    xt = dec.reps[t]
    xss = dec.reps[dec.dual_map[s]]
    lhs = ZERO
    for k in jd:
        lhs = lhs + table.class_dims[k] * table.alpha[xt][k] * table.alpha[xss][k]
    if s == t:
        xs = dec.reps[s]
        rhs = ring.fpdims[xt] * ring.fpdims[xs] * global_fpdim(ring) / dec.reg_dims[t]
    else:
        rhs = ZERO
    return CheckResult(check="eq-3.7",
                       inputs={"D": list(dec.sub.members), "t": t, "s": s},
                       lhs=lhs, rhs=rhs, passed=lhs == rhs)


def verify_cor_3_9_1(ring: FusionRing, dec: CosetDecomposition) -> list[CheckResult]:
    """d_Z^2 FPdim(C) / FPdim(R_t) is an algebraic integer, every Z in every block."""
    total = global_fpdim(ring)
    out = []
    for t, block in enumerate(dec.blocks):
        for z in block:
            value = ring.fpdims[z] * ring.fpdims[z] * total / dec.reg_dims[t]
            ok = is_algebraic_integer(value)
            out.append(CheckResult(
                check="cor-3.9",
                inputs={"D": list(dec.sub.members), "claim": 1, "block": t, "member": z},
                lhs=value, rhs="algebraic integer",
                passed=ok,
                detail=f"min poly {integrality_witness(value)}" if ok else ""))
    return out


def free_action(ring: FusionRing, sub: Subcategory) -> bool:
    """No non-unit member fixes any basis element by left multiplication."""
    return all(ring.tensor[g][i][i] == 0
               for g in sub.members if g != 0
               for i in range(ring.rank))


def verify_cor_3_9_2(ring: FusionRing, table: CharacterTable,
                     dec: CosetDecomposition) -> list[CheckResult]:
    """FPdim(C) / (FPdim(D) dim(C^j)) is an algebraic integer for j in the
    support, when D is pointed and acts freely."""
    sub = dec.sub
    pointed = set(pointed_part(ring).members)
    if not set(sub.members) <= pointed:
        raise PreconditionFailed("subcategory is not pointed")
    if not free_action(ring, sub):
        raise PreconditionFailed("pointed subcategory fixes a basis element")
    total = global_fpdim(ring)
    dim_d = sub_fpdim(ring, sub)
    out = []
    for j in support_JD(ring, table, sub):
        value = total / (dim_d * table.class_dims[j])
        ok = is_algebraic_integer(value)
        out.append(CheckResult(
            check="cor-3.9",
            inputs={"D": list(sub.members), "claim": 2, "j": j},
            lhs=value, rhs="algebraic integer",
            passed=ok,
            detail=f"min poly {integrality_witness(value)}" if ok else ""))
    return out


def verify_lemma_3_12(ring: FusionRing, sub: Subcategory,
                      amb: Subcategory) -> CheckResult:
    """Nonempty traces of the blocks on a subcategory A are exactly the
    blocks of A with respect to A∩D."""
    dec = coset_partition(ring, sub)
    inter = check_subcategory(ring, set(sub.members) & set(amb.members))
    traces = set()
    amb_set = set(amb.members)
    for block in dec.blocks:
        trace = frozenset(set(block) & amb_set)
        if trace:
            traces.add(trace)
    inner = {frozenset(b) for b in restricted_blocks(ring, amb.members, inter.members)}
    return CheckResult(check="lemma-3.12",
                       inputs={"D": list(sub.members), "A": list(amb.members)},
                       lhs=sorted(sorted(b) for b in traces),
                       rhs=sorted(sorted(b) for b in inner),
                       passed=traces == inner)


def refines(fine, coarse) -> bool:
    """Every block of `fine` is contained in some block of `coarse`."""
    coarse_sets = [set(b) for b in coarse]
    return all(any(set(b) <= c for c in coarse_sets) for b in fine)

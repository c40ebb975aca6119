"""Fusion rings: based rings with duality, exact dimensions, subcategories.

The multiplicity tensor N[i][j][k] counts the k-th basis element inside
the product of the i-th and j-th.  Rings here are commutative; exact
Frobenius-Perron dimensions are part of the input data and are verified
against the homomorphism property rather than solved for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    ExactDataMissing,
    RankTooLarge,
    ValidationError,
)
from .exactnum import CycNum

ONE = CycNum.from_rational(1)
ZERO = CycNum.from_rational(0)


@dataclass(frozen=True)
class FusionRing:
    """A validated fusion ring.  `rank` counts basis elements (unit included)."""

    rank: int
    names: tuple[str, ...]
    tensor: tuple[tuple[tuple[int, ...], ...], ...]
    dual: tuple[int, ...]
    fpdims: tuple[CycNum, ...] | None
    fpdims_float: tuple[float, ...]

    def n(self, i, j, k) -> int:
        return self.tensor[i][j][k]

    def fusion_matrix(self, i) -> np.ndarray:
        """Left multiplication by basis element i, as (N_i)_{jk} = N[i][j][k]."""
        return np.array(self.tensor[i], dtype=float)

    def basis(self, i) -> "KElement":
        return KElement(tuple(ONE if k == i else ZERO for k in range(self.rank)))

    def k_mul(self, x: "KElement", y: "KElement") -> "KElement":
        out = [ZERO] * self.rank
        for i, xi in enumerate(x.coeffs):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y.coeffs):
                if yj.is_zero():
                    continue
                prod = xi * yj
                row = self.tensor[i][j]
                for k in range(self.rank):
                    if row[k]:
                        out[k] = out[k] + prod * row[k]
        return KElement(tuple(out))

    def dim(self, i) -> CycNum:
        if self.fpdims is None:
            raise ExactDataMissing("ring carries no exact dimensions")
        return self.fpdims[i]


@dataclass(frozen=True)
class KElement:
    """Element of the ring with scalar coefficients in the basis."""

    coeffs: tuple[CycNum, ...]

    def __add__(self, other):
        return KElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return KElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "KElement":
        return KElement(tuple(a * c for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, KElement):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None


@dataclass(frozen=True)
class Subcategory:
    """Fusion-closed, dual-closed set of basis indices containing the unit."""

    members: tuple[int, ...]

    def __contains__(self, i):
        return i in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def fpdim_numeric(tensor) -> tuple[float, ...]:
    """Perron roots of the left-multiplication matrices, by power iteration.

    Iterates on N_i + I so the dominant eigenvalue is strictly separated
    in modulus even when N_i is a permutation matrix.
    """
    rank = len(tensor)
    dims = []
    for i in range(rank):
        m = np.array(tensor[i], dtype=float) + np.eye(rank)
        x = np.ones(rank)
        lam_prev, stable = None, 0
        for _ in range(200_000):
            y = m @ x
            lam = float(x @ y) / float(x @ x)
            norm = np.linalg.norm(y)
            if norm == 0:
                raise ConvergenceFailure(f"matrix {i} annihilated the positive cone")
            x = y / norm
            if lam_prev is not None and abs(lam - lam_prev) <= 1e-12 * max(1.0, abs(lam)):
                stable += 1
                if stable >= 3:
                    break
            else:
                stable = 0
            lam_prev = lam
        else:
            raise ConvergenceFailure(f"power iteration did not settle for matrix {i}")
        dims.append(lam - 1.0)
    return tuple(dims)


def validate_fusion_ring(tensor, dual, names=None, fpdims=None) -> FusionRing:
    """Check every axiom; raise ValidationError naming the first violated one."""
    rank = len(tensor)
    if rank < 1:
        raise ValidationError("shape", None, "empty basis")
    tensor = tuple(tuple(tuple(int(x) for x in row) for row in plane) for plane in tensor)
    dual = tuple(int(d) for d in dual)
    if names is None:
        names = tuple(f"X{i}" for i in range(rank))
    names = tuple(str(s) for s in names)
    if len(names) != rank or len(set(names)) != rank:
        raise ValidationError("shape", None, "names must be distinct, one per basis element")
    if len(dual) != rank or sorted(dual) != list(range(rank)):
        raise ValidationError("shape", None, "dual must be a permutation of the basis")
    for i in range(rank):
        if len(tensor[i]) != rank or any(len(tensor[i][j]) != rank for j in range(rank)):
            raise ValidationError("shape", (i,), "tensor must be rank^3")
        for j in range(rank):
            for k in range(rank):
                if tensor[i][j][k] < 0:
                    raise ValidationError("nonnegativity", (i, j, k))

    for j in range(rank):
        for k in range(rank):
            want = 1 if j == k else 0
            if tensor[0][j][k] != want or tensor[j][0][k] != want:
                raise ValidationError("unit", (j, k))

    for i in range(rank):
        if dual[dual[i]] != i:
            raise ValidationError("duality", (i,), "dual is not an involution")
        for j in range(rank):
            want = 1 if j == dual[i] else 0
            if tensor[i][j][0] != want:
                raise ValidationError("duality", (i, j))

    for i in range(rank):
        for j in range(i + 1, rank):
            for k in range(rank):
                if tensor[i][j][k] != tensor[j][i][k]:
                    raise ValidationError("commutativity", (i, j, k))

    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                if tensor[i][j][k] != tensor[dual[i]][k][j]:
                    raise ValidationError("frobenius-reciprocity", (i, j, k))

    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                for l in range(rank):
                    lhs = sum(tensor[i][j][m] * tensor[m][k][l] for m in range(rank))
                    rhs = sum(tensor[j][k][m] * tensor[i][m][l] for m in range(rank))
                    if lhs != rhs:
                        raise ValidationError("associativity", (i, j, k, l))

    dims_float = fpdim_numeric(tensor)

    exact = None
    if fpdims is not None:
        exact = tuple(d if isinstance(d, CycNum) else CycNum.from_rational(d)
                      for d in fpdims)
        if len(exact) != rank:
            raise ValidationError("fpdims", None, "one dimension per basis element")
        if exact[0] != 1:
            raise ValidationError("fpdims", (0,), "unit must have dimension 1")
        for i in range(rank):
            z = exact[i].embed_complex()
            if abs(z.imag) > 1e-9 or z.real <= 0:
                raise ValidationError("fpdims", (i,), "dimensions must embed positive real")
            if abs(z.real - dims_float[i]) > 1e-9:
                raise ValidationError("fpdims", (i,),
                                      f"exact dimension embeds to {z.real}, "
                                      f"Perron root is {dims_float[i]}")
            if exact[dual[i]] != exact[i]:
                raise ValidationError("fpdims", (i,), "dual objects must share a dimension")
        for i in range(rank):
            for j in range(rank):
                rhs = ZERO
                for k in range(rank):
                    if tensor[i][j][k]:
                        rhs = rhs + exact[k] * tensor[i][j][k]
                if exact[i] * exact[j] != rhs:
                    raise ValidationError("fpdims", (i, j),
                                          "dimensions are not a ring homomorphism")
    else:
        # float-only sanity: homomorphism residual
        for i in range(rank):
            for j in range(rank):
                resid = dims_float[i] * dims_float[j] - sum(
                    tensor[i][j][k] * dims_float[k] for k in range(rank))
                if abs(resid) > 1e-8:
                    raise ValidationError("fpdims", (i, j),
                                          f"numeric homomorphism residual {resid}")

    return FusionRing(rank=rank, names=names, tensor=tensor, dual=dual,
                      fpdims=exact, fpdims_float=dims_float)


# ---------------------------------------------------------------------------
# derived structure
# ---------------------------------------------------------------------------

def global_fpdim(ring: FusionRing) -> CycNum:
    """Sum of squared dimensions."""
    if ring.fpdims is None:
        raise ExactDataMissing("global dimension needs exact dimensions")
    total = ZERO
    for d in ring.fpdims:
        total = total + d * d
    return total


def check_subcategory(ring: FusionRing, members) -> Subcategory:
    members = tuple(sorted(set(int(i) for i in members)))
    if 0 not in members:
        raise ValidationError("subcategory", members, "must contain the unit")
    mset = set(members)
    for i in members:
        if ring.dual[i] not in mset:
            raise ValidationError("subcategory", (i,), "not closed under duals")
        for j in members:
            for k in range(ring.rank):
                if ring.tensor[i][j][k] and k not in mset:
                    raise ValidationError("subcategory", (i, j, k),
                                          "not closed under fusion")
    return Subcategory(members)


def subcategory_closure(ring: FusionRing, generators) -> Subcategory:
    """Least fusion- and dual-closed set containing the unit and the generators."""
    closed = {0}
    closed.update(int(g) for g in generators)
    closed.update(ring.dual[g] for g in list(closed))
    while True:
        new = set()
        for i in closed:
            for j in closed:
                row = ring.tensor[i][j]
                new.update(k for k in range(ring.rank) if row[k] and k not in closed)
        if not new:
            break
        closed.update(new)
        closed.update(ring.dual[i] for i in new)
    return Subcategory(tuple(sorted(closed)))


def enumerate_subcategories(ring: FusionRing, max_rank: int = 16) -> tuple[Subcategory, ...]:
    """All subcategories, as closures of subsets of the distinct singleton closures."""
    if ring.rank > max_rank:
        raise RankTooLarge(f"rank {ring.rank} exceeds enumeration bound {max_rank}")
    singles = []
    seen = set()
    for i in range(ring.rank):
        c = subcategory_closure(ring, (i,))
        if c.members not in seen:
            seen.add(c.members)
            singles.append(c)
    found = {}
    for r in range(len(singles) + 1):
        for combo in itertools.combinations(singles, r):
            gens = frozenset(itertools.chain.from_iterable(c.members for c in combo))
            if gens in found:
                continue
            closure = subcategory_closure(ring, gens)
            found[gens] = closure
    uniq = {c.members: c for c in found.values()}
    return tuple(uniq[m] for m in sorted(uniq, key=lambda m: (len(m), m)))


def pointed_part(ring: FusionRing) -> Subcategory:
    """The invertible objects: dimension exactly 1 (float screen, exact confirm)."""
    if ring.fpdims is not None:
        members = [i for i in range(ring.rank) if ring.fpdims[i] == 1]
    else:
        members = [i for i in range(ring.rank) if abs(ring.fpdims_float[i] - 1.0) <= 1e-9]
    return check_subcategory(ring, members)


def regular_element(ring: FusionRing, sub: Subcategory) -> KElement:
    """R_D = sum of d_s * [X_s] over the subcategory."""
    if ring.fpdims is None:
        raise ExactDataMissing("regular element needs exact dimensions")
    return KElement(tuple(ring.fpdims[i] if i in sub else ZERO
                          for i in range(ring.rank)))


def sub_fpdim(ring: FusionRing, sub: Subcategory) -> CycNum:
    """Sum of squared dimensions over a subcategory."""
    if ring.fpdims is None:
        raise ExactDataMissing("subcategory dimension needs exact dimensions")
    total = ZERO
    for i in sub:
        total = total + ring.fpdims[i] * ring.fpdims[i]
    return total


def deligne_product(a: FusionRing, b: FusionRing) -> FusionRing:
    """Product ring on pairs, ordered (i, i') -> i * rank_b + i'."""
    if a.fpdims is None or b.fpdims is None:
        raise ExactDataMissing("product requires exact dimensions on both factors")
    ra, rb = a.rank, b.rank
    rank = ra * rb

    def flat(i, ip):
        return i * rb + ip

    tensor = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i in range(ra):
        for ip in range(rb):
            for j in range(ra):
                for jp in range(rb):
                    for k in range(ra):
                        nk = a.tensor[i][j][k]
                        if not nk:
                            continue
                        for kp in range(rb):
                            nkp = b.tensor[ip][jp][kp]
                            if nkp:
                                tensor[flat(i, ip)][flat(j, jp)][flat(k, kp)] = nk * nkp
    names = tuple(f"({a.names[i]},{b.names[ip]})"
                  for i in range(ra) for ip in range(rb))
    dual = tuple(flat(a.dual[i], b.dual[ip]) for i in range(ra) for ip in range(rb))
    fpdims = tuple(a.fpdims[i] * b.fpdims[ip] for i in range(ra) for ip in range(rb))
    return validate_fusion_ring(tensor, dual, names=names, fpdims=fpdims)

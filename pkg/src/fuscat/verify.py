"""Check orchestration: run registered identity checks on a target.

A target is a ring plus optional character table and symmetric matrix.  Every
check has a stable string id; checks whose inputs are missing, or whose
mathematical hypotheses fail, are reported as skipped with a reason rather
than failed.  Records are ordered by check id, then by serialized parameters,
so reports are byte-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .chartab import CharacterTable, support_JD, verify_eq_2_4, verify_eq_2_7
from .cosets import (coset_partition, verify_cor_3_9_1, verify_cor_3_9_2,
                     verify_eq_3_1, verify_eq_3_6, verify_eq_3_7,
                     verify_lemma_3_12, verify_prop_3_4)
from .errors import PreconditionFailed, UnknownKey
from .fusion import (FusionRing, Subcategory, check_subcategory,
                     enumerate_subcategories)
from .premod import (SMatrix, m_map, verify_cor_4_16, verify_cor_4_18,
                     verify_eq_4_3, verify_eq_4_15, verify_eq_4_20,
                     verify_prop_4_12, verify_prop_4_21, verify_rem_4_25,
                     verify_thm_1_1, verify_thm_1_3, verify_thm_4_6,
                     verify_thm_4_10)
from .reports import CheckResult
from .serialize import value_to_json

#: One line per check id: what equality or membership the check decides.
CHECK_LEGEND = {
    "eq-2.4": "table orthogonality: sum over i of alpha[i][l] alpha[i*][k] "
              "equals delta_{lk} FPdim(C)/dim(C^k)",
    "eq-2.7": "the class dimensions over the support J_D sum to "
              "FPdim(C)/FPdim(D)",
    "eq-3.1": "[X] R_D / d_X is the same element FPdim(D) e_t for every X in "
              "a block, and distinct blocks give distinct elements",
    "prop-3.4": "the block algebra has dimension |J_D| and associative, "
                "dual-symmetric structure constants",
    "eq-3.6": "first orthogonality over blocks: sum_t (FPdim(R_t)/d_{X_t}^2) "
              "alpha[X_t][k] alpha[X_{t*}][l] = delta_{kl} FPdim(C)/dim(C^k)",
    "eq-3.7": "second orthogonality over the support: sum_{k in J_D} "
              "dim(C^k) alpha[X_t][k] alpha[X_{s*}][k] = delta_{st} "
              "d_{X_t} d_{X_s} FPdim(C)/FPdim(R_t)",
    "cor-3.9": "divisibility: d_Z^2 FPdim(C)/FPdim(R_t) is an algebraic "
               "integer; for free pointed actions so is "
               "FPdim(C)/(FPdim(D) dim(C^j))",
    "lemma-3.12": "nonempty traces of the D-blocks on a subcategory A are "
                  "exactly the blocks of A with respect to A intersect D",
    "eq-4.3": "row/column compatibility of the matching: "
              "alpha[i][M(i')] d_{i'} = s_{i i'} for all pairs",
    "eq-4.15": "dim(D) dim(D') = dim(C) dim(D intersect center)",
    "eq-4.20": "every fiber of the matching has dimension "
               "dim(center) dim(C^j)",
    "eq-4.23": "dim(C^{M(Y)}) |G_Y| = d_Y^2 for the stabilizer G_Y of Y in "
               "the pointed center",
    "thm-4.6": "the central image of each basis character is its class sum "
               "rescaled by d_i/dim(C^{M(i)})",
    "thm-4.10": "the fibers of the matching are the cosets with respect to "
                "the center, and there are |J_2| of them",
    "prop-4.12": "the matched image of D is the support of its centralizer; "
                 "each matched group has dimension "
                 "dim(D intersect center) dim(C^j)",
    "cor-4.16": "dim(C) dim(center intersect D)/dim(R(D)_j) is an algebraic "
                "integer",
    "cor-4.18": "integral ring with squarefree global dimension: a "
                "subcategory meeting the center trivially is pointed",
    "prop-4.21": "matched groups inside D are the cosets of D by "
                 "D intersect center",
    "thm-1.1": "dim(C)/d_Y^2 is an algebraic integer for Y in a subcategory "
               "meeting the center trivially",
    "thm-1.3": "dim(C) dim(center)/d_Y^2 is an algebraic integer; with all "
               "stabilizers trivial so is dim(C)/(dim(center) d_Y^2)",
    "rem-4.25": "d_i^2 dim(C)/(dim(center) dim(C^{M(i)})) is an algebraic "
                "integer",
}

CHECK_IDS = tuple(sorted(CHECK_LEGEND))

_NO_TABLE = "target carries no character table"
_NO_SMATRIX = "target carries no symmetric matrix"


@dataclass(frozen=True)
class CheckRecord:
    """One executed or skipped check instance."""

    id: str
    params: dict
    lhs: object
    rhs: object
    passed: Optional[bool]
    skipped_reason: Optional[str] = None
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    target: str
    subcategories: tuple[tuple[int, ...], ...]
    checks: tuple[CheckRecord, ...]

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.checks if c.passed is True)
        failed = sum(1 for c in self.checks if c.passed is False)
        skipped = sum(1 for c in self.checks if c.passed is None)
        return {"passed": passed, "failed": failed, "skipped": skipped,
                "total": len(self.checks)}

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)


def _from_result(res: CheckResult) -> CheckRecord:
    return CheckRecord(id=res.check, params=dict(res.inputs), lhs=res.lhs,
                       rhs=res.rhs, passed=res.passed, detail=res.detail)


def _skip(check_id: str, params: dict, reason: str) -> CheckRecord:
    return CheckRecord(id=check_id, params=params, lhs=None, rhs=None,
                       passed=None, skipped_reason=reason)


def default_subcategories(ring: FusionRing) -> list[Subcategory]:
    """The two canonical subcategories: the unit and the whole ring."""
    subs = [check_subcategory(ring, {0})]
    if ring.rank > 1:
        subs.append(check_subcategory(ring, set(range(ring.rank))))
    return subs


def _sort_key(record: CheckRecord):
    params = json.dumps({k: value_to_json(v, approx=False)
                         for k, v in record.params.items()}, sort_keys=True)
    return (record.id, params)


def run_checks(ring: FusionRing,
               table: Optional[CharacterTable] = None,
               smatrix: Optional[SMatrix] = None,
               *,
               target: str = "",
               subcategories: Optional[Sequence[Subcategory]] = None,
               check_ids: Optional[Sequence[str]] = None) -> VerificationReport:
    """Run the requested checks (all by default) and assemble a report.

    D-parameterized checks run once per subcategory in ``subcategories``
    (default: the unit subcategory and the whole ring); the pairwise
    partition-compatibility check runs over ordered pairs from the pool.
    """
    wanted = list(check_ids) if check_ids is not None else list(CHECK_IDS)
    for cid in wanted:
        if cid not in CHECK_LEGEND:
            raise UnknownKey(f"unknown check id '{cid}'")
    wanted = set(wanted)

    if subcategories is None:
        pool = default_subcategories(ring)
    else:
        pool = list(subcategories)
    pool = sorted(pool, key=lambda s: (len(s.members), s.members))

    records: list[CheckRecord] = []

    def add(results):
        records.extend(_from_result(r) for r in results if r.check in wanted)

    analysis = None
    analysis_reason = None
    if smatrix is None:
        analysis_reason = _NO_SMATRIX
    elif table is None:
        analysis_reason = _NO_TABLE
    else:
        try:
            analysis = m_map(ring, table, smatrix)
        except Exception as exc:  # data admitted no consistent matching
            analysis_reason = f"matching analysis failed: {exc}"

    decs = {sub.members: coset_partition(ring, sub) for sub in pool}

    # ring-and-table checks -------------------------------------------------
    if "eq-2.4" in wanted:
        if table is None:
            records.append(_skip("eq-2.4", {}, _NO_TABLE))
        else:
            add(verify_eq_2_4(ring, table))

    if "eq-2.7" in wanted:
        if table is None:
            records.append(_skip("eq-2.7", {}, _NO_TABLE))
        else:
            for sub in pool:
                add([verify_eq_2_7(ring, table, sub)])

    if "eq-3.1" in wanted:
        for sub in pool:
            add(verify_eq_3_1(ring, decs[sub.members]))

    if "prop-3.4" in wanted:
        if table is None:
            records.append(_skip("prop-3.4", {}, _NO_TABLE))
        else:
            for sub in pool:
                add(verify_prop_3_4(ring, table, decs[sub.members]))

    if "eq-3.6" in wanted:
        if table is None:
            records.append(_skip("eq-3.6", {}, _NO_TABLE))
        else:
            for sub in pool:
                jd = support_JD(ring, table, sub)
                dec = decs[sub.members]
                add([verify_eq_3_6(ring, table, dec, k, l)
                     for k in jd for l in jd])

    if "eq-3.7" in wanted:
        if table is None:
            records.append(_skip("eq-3.7", {}, _NO_TABLE))
        else:
            for sub in pool:
                dec = decs[sub.members]
                add([verify_eq_3_7(ring, table, dec, t, s)
                     for t in range(dec.n_blocks)
                     for s in range(dec.n_blocks)])

    if "cor-3.9" in wanted:
        for sub in pool:
            add(verify_cor_3_9_1(ring, decs[sub.members]))
        if table is None:
            records.append(_skip("cor-3.9", {"claim": 2}, _NO_TABLE))
        else:
            for sub in pool:
                try:
                    add(verify_cor_3_9_2(ring, table, decs[sub.members]))
                except PreconditionFailed as exc:
                    records.append(_skip(
                        "cor-3.9", {"D": list(sub.members), "claim": 2},
                        str(exc)))

    if "lemma-3.12" in wanted:
        for sub in pool:
            for amb in pool:
                add([verify_lemma_3_12(ring, sub, amb)])

    # matching-dependent checks ---------------------------------------------
    def analysis_checks():
        yield "eq-4.3", lambda: verify_eq_4_3(ring, table, smatrix, analysis)
        yield "thm-4.6", lambda: verify_thm_4_6(ring, table, smatrix, analysis)
        yield "thm-4.10", lambda: verify_thm_4_10(ring, table, analysis)
        yield "eq-4.20", lambda: verify_eq_4_20(ring, table, analysis)
        yield "rem-4.25", lambda: verify_rem_4_25(ring, table, analysis)

    for cid, runner in analysis_checks():
        if cid not in wanted:
            continue
        if analysis is None:
            records.append(_skip(cid, {}, analysis_reason))
        else:
            add(runner())

    def per_sub_analysis_checks():
        yield "prop-4.12", lambda s: verify_prop_4_12(ring, table, smatrix,
                                                      analysis, s)
        yield "eq-4.15", lambda s: [verify_eq_4_15(ring, smatrix, analysis, s)]
        yield "cor-4.16", lambda s: verify_cor_4_16(ring, table, smatrix,
                                                    analysis, s)
        yield "cor-4.18", lambda s: [verify_cor_4_18(ring, analysis, s)]
        yield "prop-4.21", lambda s: [verify_prop_4_21(ring, analysis, s)]

    for cid, runner in per_sub_analysis_checks():
        if cid not in wanted:
            continue
        if analysis is None:
            records.append(_skip(cid, {}, analysis_reason))
        else:
            for sub in pool:
                add(runner(sub))

    if "thm-1.1" in wanted:
        if analysis is None:
            records.append(_skip("thm-1.1", {}, analysis_reason))
        else:
            for sub in pool:
                try:
                    add(verify_thm_1_1(ring, table, smatrix, analysis, sub))
                except PreconditionFailed as exc:
                    records.append(_skip("thm-1.1", {"D": list(sub.members)},
                                         str(exc)))

    if wanted & {"thm-1.3", "eq-4.23"}:
        if analysis is None:
            for cid in sorted(wanted & {"thm-1.3", "eq-4.23"}):
                records.append(_skip(cid, {}, analysis_reason))
        else:
            try:
                add(verify_thm_1_3(ring, table, smatrix, analysis))
            except PreconditionFailed as exc:
                for cid in sorted(wanted & {"thm-1.3", "eq-4.23"}):
                    records.append(_skip(cid, {}, str(exc)))

    records.sort(key=_sort_key)
    return VerificationReport(
        target=target,
        subcategories=tuple(sub.members for sub in pool),
        checks=tuple(records))


def all_subcategories(ring: FusionRing) -> list[Subcategory]:
    subs = enumerate_subcategories(ring)
    return sorted(subs, key=lambda s: (len(s.members), s.members))


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def report_to_json(report: VerificationReport) -> dict:
    checks = []
    for c in report.checks:
        entry = {
            "id": c.id,
            "params": {k: value_to_json(v, approx=False)
                       for k, v in c.params.items()},
            "lhs": value_to_json(c.lhs),
            "rhs": value_to_json(c.rhs),
            "pass": c.passed,
        }
        if c.skipped_reason is not None:
            entry["skipped_reason"] = c.skipped_reason
        if c.detail:
            entry["detail"] = c.detail
        checks.append(entry)
    legend = {cid: CHECK_LEGEND[cid]
              for cid in sorted({c.id for c in report.checks})}
    return {
        "target": report.target,
        "subcategories": [list(m) for m in report.subcategories],
        "checks": checks,
        "summary": report.summary,
        "legend": legend,
    }


def render_json(report: VerificationReport) -> str:
    return json.dumps(report_to_json(report), sort_keys=True, indent=2) + "\n"


def _show(value) -> str:
    from .exactnum import CycNum

    if value is None:
        return "-"
    if isinstance(value, CycNum):
        z = value.embed_complex()
        approx = (f"{z.real:.6g}" if abs(z.imag) < 1e-12
                  else f"{z.real:.6g}{z.imag:+.6g}j")
        return f"{value} (~{approx})"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


def render_markdown(report: VerificationReport) -> str:
    lines = [f"# verification report: {report.target}", ""]
    subs = " ".join("{" + ",".join(map(str, m)) + "}"
                    for m in report.subcategories)
    lines.append(f"subcategory pool: {subs}")
    lines.append("")
    lines.append("| check | params | lhs | rhs | status |")
    lines.append("|---|---|---|---|---|")
    for c in report.checks:
        if c.passed is None:
            status = f"skipped: {c.skipped_reason}"
        else:
            status = "pass" if c.passed else "FAIL"
        params = ", ".join(f"{k}={_show(v)}" for k, v in sorted(c.params.items()))
        lines.append(f"| {c.id} | {params} | {_show(c.lhs)} | {_show(c.rhs)} "
                     f"| {status} |")
    s = report.summary
    lines.append("")
    lines.append(f"summary: {s['passed']} passed, {s['failed']} failed, "
                 f"{s['skipped']} skipped, {s['total']} total")
    lines.append("")
    lines.append("## legend")
    for cid in sorted({c.id for c in report.checks}):
        lines.append(f"- {cid}: {CHECK_LEGEND[cid]}")
    return "\n".join(lines) + "\n"

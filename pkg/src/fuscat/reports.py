"""Check results: the atomic unit every verification routine returns."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """One verified identity (or set equality, or integrality verdict).

    `check` is the stable identifier used by the command line interface,
    `inputs` locates the instance (subcategory, indices), and lhs/rhs
    hold the two sides in serializable form.
    """

    check: str
    inputs: dict = field(default_factory=dict)
    lhs: object = None
    rhs: object = None
    passed: bool = True
    detail: str = ""

    def __bool__(self):
        return self.passed


def all_passed(results) -> bool:
    return all(r.passed for r in results)


def failures(results):
    return [r for r in results if not r.passed]

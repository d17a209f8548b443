"""Three-valued check results shared by the audit and theorem machinery."""

from __future__ import annotations

from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one named check.

    ``hypothesis_not_met`` is distinct from ``pass``: a statement whose
    hypotheses fail on the given input was never tested, and reporting it
    as passing would hide vacuity.
    """

    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def passed(name: str, detail: str = "") -> Verdict:
    return Verdict(name, PASS, detail)


def failed(name: str, detail: str = "") -> Verdict:
    return Verdict(name, FAIL, detail)


def not_met(name: str, detail: str = "") -> Verdict:
    return Verdict(name, HYPOTHESIS_NOT_MET, detail)


def checked(name: str, ok: bool, detail: str = "") -> Verdict:
    return passed(name, detail) if ok else failed(name, detail)

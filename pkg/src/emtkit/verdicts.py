"""Three-valued check outcomes carrying witnesses.

Every validator and verifier in the library answers with a :class:`Verdict`
rather than a bare boolean, so that a failure always travels with the data
that exhibits it and a skipped (cap-bounded) check is never mistaken for a
pass.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""
    witness: Any = None

    def __bool__(self) -> bool:
        return self.status == PASS

    @staticmethod
    def passed(detail: str = "") -> "Verdict":
        return Verdict(PASS, detail)

    @staticmethod
    def failed(detail: str, witness: Any = None) -> "Verdict":
        return Verdict(FAIL, detail, witness)

    @staticmethod
    def undecided(detail: str) -> "Verdict":
        return Verdict(INCONCLUSIVE, detail)

    def to_doc(self) -> dict:
        doc: dict = {"status": self.status, "detail": self.detail}
        if self.witness is not None:
            doc["witness"] = _plain(self.witness)
        return doc


def worst(verdicts: Iterable[Verdict]) -> Verdict:
    """Combine verdicts: any fail dominates, then any inconclusive."""
    out = Verdict.passed()
    for v in verdicts:
        if v.status == FAIL:
            return v
        if v.status == INCONCLUSIVE and out.status == PASS:
            out = v
    return out


def _plain(value):
    """Reduce a witness to JSON-serializable primitives."""
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_plain(v) for v in value]
    return repr(value)

"""Verdicts and per-check report containers used by the verification engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"

    def __str__(self) -> str:  # keep "PASS" rather than "Verdict.PASS"
        return self.value


@dataclass
class CheckReport:
    """Aggregated verdicts for one check over one table.

    ``domain`` names the parameter range examined (e.g. ``"n=3..2000"``).
    ``witnesses`` lists ``(parameter, detail)`` for every non-PASS instance;
    FAIL details always carry the exact integer and the exact bound interval
    that produced the violation.  ``threshold`` is the least n0 such that a
    "sufficiently large n" statement holds on [n0, nmax], when the check
    reports one.  ``blocking`` marks checks whose FAILs affect the exit code.
    """

    check_id: str
    ell: int
    domain: str
    category: str = "theorem"
    blocking: bool = True
    passes: int = 0
    fails: int = 0
    inconclusive: int = 0
    not_applicable: int = 0
    witnesses: list[tuple[object, str]] = field(default_factory=list)
    threshold: int | None = None

    def add(self, verdict: Verdict, param: object = None, detail: str = "") -> None:
        if verdict is Verdict.PASS:
            self.passes += 1
            return
        if verdict is Verdict.FAIL:
            self.fails += 1
        elif verdict is Verdict.INCONCLUSIVE:
            self.inconclusive += 1
        else:
            self.not_applicable += 1
        self.witnesses.append((param, detail))

    @property
    def overall(self) -> Verdict:
        if self.fails:
            return Verdict.FAIL
        if self.inconclusive:
            return Verdict.INCONCLUSIVE
        if self.passes:
            return Verdict.PASS
        return Verdict.NOT_APPLICABLE

    def verdict_summary(self) -> dict[str, int]:
        return {
            "PASS": self.passes,
            "FAIL": self.fails,
            "INCONCLUSIVE": self.inconclusive,
            "NOT_APPLICABLE": self.not_applicable,
        }

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "ell": self.ell,
            "domain": self.domain,
            "category": self.category,
            "blocking": self.blocking,
            "verdict_summary": self.verdict_summary(),
            "overall": self.overall.value,
            "witnesses": [[param, detail] for param, detail in self.witnesses],
            "threshold": self.threshold,
        }

    def format_block(self, max_witnesses: int = 10) -> str:
        """Human-readable block, witnesses capped at ``max_witnesses`` lines."""
        lines = [
            f"{self.check_id}  ell={self.ell}  {self.domain}  "
            f"[{self.category}]  -> {self.overall.value}",
            f"  PASS={self.passes} FAIL={self.fails} "
            f"INCONCLUSIVE={self.inconclusive} NOT_APPLICABLE={self.not_applicable}"
            + (f" threshold={self.threshold}" if self.threshold is not None else ""),
        ]
        for param, detail in self.witnesses[:max_witnesses]:
            lines.append(f"    at {param}: {detail}")
        hidden = len(self.witnesses) - max_witnesses
        if hidden > 0:
            lines.append(f"    ... {hidden} more witnesses")
        return "\n".join(lines)

"""Claim records shared by the verification suites and the CLI."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

__all__ = ["ClaimReport", "claim_status", "overall_status", "map_ordered"]


@dataclass
class ClaimReport:
    claim: str
    params: dict
    witnesses: list
    passed: bool
    flagged: bool = False
    note: str = ""

    def as_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "params": self.params,
            "witnesses": self.witnesses,
            "pass": self.passed,
            "status": claim_status(self),
        }
        if self.note:
            out["note"] = self.note
        return out


def claim_status(claim: ClaimReport) -> str:
    if claim.flagged:
        return "flagged"
    return "pass" if claim.passed else "fail"


def overall_status(claims: list[ClaimReport], strict: bool = False) -> str:
    for c in claims:
        if not c.passed and (strict or not c.flagged):
            return "fail"
    return "pass"


def thread_cap() -> int:
    raw = os.environ.get("BURAU_FORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_ordered(fn, items):
    """Apply fn over items, honouring the BURAU_FORGE_THREADS cap.

    Results always come back in input order, so reports stay deterministic
    regardless of the worker count.
    """
    items = list(items)
    cap = thread_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))

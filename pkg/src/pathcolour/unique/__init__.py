"""Uniquely 2-chromatic P4 systems: the forced-pair gadget, the order-109 base, and growth."""

from __future__ import annotations

from ..core import ExtensionContext
from ..solver import SearchBudget
from .base109 import build_unique_109
from .forced28 import ForcedPairCertificate, build_forced_pair_28
from .growth import (
    LEMMAS,
    CriticalPattern,
    GuardFailed,
    NotSupported,
    PatternUnavailable,
    certify_noncritical,
    extend_unique,
    find_patterns,
    route,
)


def unique_pipeline(n: int, certify_up_to: int = 0, budget: SearchBudget | None = None) -> ExtensionContext:
    """Uniquely 2-coloured P4 system of order ``n`` (n = 0, 1 mod 3, n >= 109).

    Consumed patterns are checked for non-criticality while the input order is
    at most ``certify_up_to``.
    """
    ctx = build_unique_109()
    for lemma in route(n):
        ctx = extend_unique(ctx, lemma, certify=ctx.order <= certify_up_to, budget=budget)
    if not ctx.system.is_complete():
        raise AssertionError(f"pipeline output of order {ctx.order} is not a complete decomposition")
    return ctx


__all__ = [
    "CriticalPattern",
    "ForcedPairCertificate",
    "GuardFailed",
    "LEMMAS",
    "NotSupported",
    "PatternUnavailable",
    "build_forced_pair_28",
    "build_unique_109",
    "certify_noncritical",
    "extend_unique",
    "find_patterns",
    "route",
    "unique_pipeline",
]

"""Engine-wide size limits and search budgets."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EngineLimits:
    """Caps that separate exhaustive verification from sampling or refusal.

    Operations that would exceed a cap raise :class:`srings.errors.CapacityError`
    instead of silently sampling, except where a sampling fallback is part of
    the documented contract (axiom audits).
    """

    # full associativity / ring-axiom scan over all triples up to this size
    structure_check_cap: int = 512
    ring_check_cap: int = 256
    # rings above this cardinality expose arithmetic but refuse enumeration
    enumeration_cap: int = 4096
    # dense numpy operation tables are materialised up to this cardinality
    table_cap: int = 2048
    # hard ceiling on enumerated subset families
    family_cap: int = 10**6
    # randomised triples checked at construction when above the check caps
    construction_samples: int = 2000
    # default sample count for ring_axiom_audit above the exhaustive cap
    audit_samples: int = 10**5
    # lattice caps: 4-variable identities and exact pentagon/diamond search
    identity4_cap: int = 256
    sublattice_cap: int = 64


DEFAULT_LIMITS = EngineLimits()

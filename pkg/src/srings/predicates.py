"""Ring-level classifications with witnesses or counterexamples.

A verdict is True/False, or None for "not applicable" when a definition's
precondition (usually "the ring carries a field subset") fails: that is a
distinct outcome, not falsity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bits import contains, elements_of, mask_of
from .errors import CapacityError
from .rings import RingHandle, subring_as_ring
from .structures import is_s_semigroup
from .elements import classify_idempotents, classify_nilpotents, classify_zero_divisors
from .substructures import (
    domain_subsets,
    field_subsets,
    has_s_ring,
    ideals,
    s_ideals,
    s_subrings,
    subrings,
    units_mask,
)


@dataclass(frozen=True)
class PredicateVerdict:
    predicate: str
    verdict: bool | None  # None = not applicable
    witness: object = None
    counterexample: object = None
    mode: str | None = None
    detail: str | None = None


# -- basic structure ------------------------------------------------------------


def commutativity(R: RingHandle) -> PredicateVerdict:
    mul = R.mul_table
    bad = np.argwhere(mul != mul.T)
    if len(bad):
        a, b = bad[0]
        return PredicateVerdict("commutative", False, counterexample=(int(a), int(b)))
    return PredicateVerdict("commutative", True)


def basic_census(R: RingHandle) -> dict[str, PredicateVerdict]:
    """Field / integral domain / division ring / boolean flags by direct scan."""
    comm = commutativity(R)
    units = units_mask(R)
    n = R.cardinality
    zd, _, _ = classify_zero_divisors(R)
    nonzero_all_units = all(
        contains(units, x) for x in R.elements() if x != R.zero
    ) and R.one is not None and n > 1
    field = comm.verdict and nonzero_all_units and not zd
    domain = bool(comm.verdict) and not zd and n > 1
    division = (not comm.verdict) and nonzero_all_units and not zd
    boolean = all(R.mul(x, x) == x for x in R.elements())
    return {
        "commutative": comm,
        "field": PredicateVerdict("field", bool(field), counterexample=None if field else (zd[:1] or None)),
        "integral_domain": PredicateVerdict("integral_domain", domain, counterexample=zd[:1] or None),
        "division_ring": PredicateVerdict("division_ring", bool(division)),
        "boolean": PredicateVerdict("boolean", boolean),
        "has_one": PredicateVerdict("has_one", R.one is not None),
    }


# -- S-ring levels -----------------------------------------------------------------


def s_ring(R: RingHandle, level: str = "I", mode: str = "strict") -> PredicateVerdict:
    ok, cert = has_s_ring(R, level, mode)
    return PredicateVerdict(f"s_ring_{level}", ok, witness=cert, mode=mode)


def s_commutative_II(R: RingHandle, mode: str = "strict") -> tuple[PredicateVerdict, PredicateVerdict]:
    """Standard: some domain/division certificate is commutative.  Strong:
    every S-subring II is commutative as a subring."""
    ok, _ = has_s_ring(R, "II", mode)
    if not ok:
        na = PredicateVerdict("s_commutative_II", None, detail="not an S-ring II")
        return na, PredicateVerdict("s_strongly_commutative_II", None, detail="not an S-ring II")
    witness = None
    for m in domain_subsets(R):
        if m.bit_count() < 2:
            continue
        members = elements_of(m)
        sub = R.mul_table[np.ix_(members, members)]
        if np.array_equal(sub, sub.T):
            witness = m
            break
    standard = PredicateVerdict("s_commutative_II", witness is not None, witness=witness, mode=mode)
    strong = True
    counter = None
    for v in s_subrings(R, "II", mode):
        members = elements_of(v.mask)
        sub = R.mul_table[np.ix_(members, members)]
        if not np.array_equal(sub, sub.T):
            strong = False
            counter = v.mask
            break
    return standard, PredicateVerdict(
        "s_strongly_commutative_II", strong, counterexample=counter, mode=mode
    )


# -- elementwise laws ----------------------------------------------------------------


def _power_data(R: RingHandle, x: int) -> tuple[int, int]:
    """(preperiod, period) of the power sequence x, x^2, ..."""
    seen: dict[int, int] = {}
    cur, i = x, 1
    while cur not in seen:
        seen[cur] = i
        cur = R.mul(cur, x)
        i += 1
    return seen[cur] - 1, i - seen[cur]


def _potency_exponent(R: RingHandle, x: int) -> int | None:
    """Least n > 1 with x^n = x, or None."""
    pre, period = _power_data(R, x)
    return 1 + period if pre == 0 else None


def law_holds_on(R: RingHandle, members: list[int], law: str, p: int | None = None):
    """Evaluate one elementwise law on a subset; returns (holds, data)."""
    if law == "zero_square":
        for x in members:
            if R.mul(x, x) != R.zero:
                return False, x
        return True, None
    if law == "p_ring":
        if p is None:
            # existential prime: px = 0 forces p to be the additive exponent
            p = 1
            for x in members:
                order, acc = 1, x
                while acc != R.zero:
                    acc = R.add(acc, x)
                    order += 1
                p = math.lcm(p, order)
            if not _is_prime_int(p):
                return False, None
        for x in members:
            if R.power(x, p) != x or _n_times(R, p, x) != R.zero:
                return False, x
        return True, p
    if law == "e_ring":
        # uniform n >= 1 with x^(2^n) = x and 2x = 0 on the subset
        for x in members:
            if _n_times(R, 2, x) != R.zero:
                return False, x
        for n_exp in range(1, 13):
            if all(R.power(x, 2**n_exp) == x for x in members if x != R.zero):
                return True, n_exp
        return False, None
    if law in ("j_ring", "weakly_boolean"):
        exps = {}
        for x in members:
            if x == R.zero:
                continue
            e = _potency_exponent(R, x)
            if e is None:
                return False, x
            exps[x] = e
        uniform = _uniform_exponent(R, [x for x in members if x != R.zero])
        return True, {"exponents": exps, "uniform": uniform}
    if law == "pre_j_ring":
        # uniform n in 2..bound with a^n b = a b^n for all pairs
        if not members:
            return True, 2
        bound = 2
        for x in members:
            pre, period = _power_data(R, x)
            bound = max(bound, pre + 1 + period)
        lcm_p = 1
        for x in members:
            lcm_p = math.lcm(lcm_p, _power_data(R, x)[1])
        for n in range(2, bound + lcm_p + 1):
            if all(
                R.mul(R.power(a, n), b) == R.mul(a, R.power(b, n))
                for a in members
                for b in members
                if a != R.zero and b != R.zero
            ):
                return True, n
        return False, None
    raise ValueError(f"unknown law {law!r}")


def _n_times(R: RingHandle, n: int, x: int) -> int:
    acc = R.zero
    for _ in range(n):
        acc = R.add(acc, x)
    return acc


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, int(n**0.5) + 1))


def _uniform_exponent(R: RingHandle, members: list[int]) -> int | None:
    """Least uniform n > 1 with x^n = x for all members, if any."""
    periods = []
    for x in members:
        pre, period = _power_data(R, x)
        if pre != 0:
            return None
        periods.append(period)
    return 1 + math.lcm(*periods) if periods else 2


def elementwise_law(R: RingHandle, law: str, p: int | None = None) -> PredicateVerdict:
    members = list(R.elements())
    holds, data = law_holds_on(R, members, law, p)
    name = law if p is None else f"{law}({p})"
    if holds:
        return PredicateVerdict(name, True, witness=data)
    return PredicateVerdict(name, False, counterexample=data)


def s_localized_law(
    R: RingHandle, law: str, placement: str, p: int | None = None, mode: str = "strict"
) -> PredicateVerdict:
    """A law satisfied by a subring in the placement a definition demands:

    - "subring_of_s_ring": R is an S-ring and some subring of R obeys the law
    - "subring_of_s_subring": some subring B inside an S-subring A obeys it
    - "s_subring": some S-subring itself obeys it
    """
    name = f"s_{law}" if p is None else f"s_{law}({p})"
    # {0} satisfies every elementwise law vacuously; witnesses must be larger
    if placement == "subring_of_s_ring":
        ok, _ = has_s_ring(R, "I", mode)
        if not ok:
            return PredicateVerdict(name, None, detail="not an S-ring I", mode=mode)
        for mask in subrings(R):
            if mask.bit_count() < 2:
                continue
            holds, data = law_holds_on(R, elements_of(mask), law, p)
            if holds:
                return PredicateVerdict(name, True, witness=(mask, data), mode=mode)
        return PredicateVerdict(name, False, mode=mode)
    s_subs = s_subrings(R, "I", mode)
    if not s_subs:
        return PredicateVerdict(name, None, detail="no S-subring", mode=mode)
    if placement == "s_subring":
        for v in s_subs:
            holds, data = law_holds_on(R, elements_of(v.mask), law, p)
            if holds:
                return PredicateVerdict(name, True, witness=(v.mask, data), mode=mode)
        return PredicateVerdict(name, False, mode=mode)
    if placement == "subring_of_s_subring":
        sub_family = subrings(R)
        for v in s_subs:
            for b in sub_family:
                if b & ~v.mask or b.bit_count() < 2:
                    continue
                holds, data = law_holds_on(R, elements_of(b), law, p)
                if holds:
                    return PredicateVerdict(name, True, witness=(v.mask, b, data), mode=mode)
        return PredicateVerdict(name, False, mode=mode)
    raise ValueError(f"unknown placement {placement!r}")


# -- S-domain family -----------------------------------------------------------------


def s_domain_flags(R: RingHandle, mode: str = "strict") -> dict[str, PredicateVerdict]:
    comm = bool(commutativity(R).verdict)
    _, s_pairs, _ = classify_zero_divisors(R)
    nil, s_nil, _ = classify_nilpotents(R)
    s_semiprime = True
    counter = None
    for v in s_ideals(R, "I", mode, include_trivial=False):
        members = elements_of(v.mask)
        if all(R.mul(a, b) == R.zero for a in members for b in members) and v.mask != 1 << R.zero:
            s_semiprime = False
            counter = v.mask
            break
    return {
        "s_integral_domain": PredicateVerdict(
            "s_integral_domain", comm and not s_pairs, counterexample=s_pairs[:1] or None
        ),
        "s_division_ring": PredicateVerdict(
            "s_division_ring", (not comm) and not s_pairs, counterexample=s_pairs[:1] or None
        ),
        "s_semiprime": PredicateVerdict("s_semiprime", s_semiprime, counterexample=counter, mode=mode),
        "reduced": PredicateVerdict("reduced", not nil, counterexample=nil[:1] or None),
        "s_reduced": PredicateVerdict("s_reduced", not s_nil, counterexample=s_nil[:1] or None),
    }


# -- chain conditions ------------------------------------------------------------------


def _totally_ordered(masks: list[int]) -> bool:
    return all(a & ~b == 0 or b & ~a == 0 for a in masks for b in masks)


def chain_ring_flags(R: RingHandle, mode: str = "strict") -> dict[str, PredicateVerdict]:
    ideal_masks = ideals(R)
    chain = PredicateVerdict("chain_ring", _totally_ordered(ideal_masks))
    s_masks = [v.mask for v in s_ideals(R, "I", mode)]
    s_chain = PredicateVerdict("s_chain_ring", _totally_ordered(s_masks), mode=mode)
    weak = None
    s_subs = s_subrings(R, "I", mode)
    if s_subs:
        weak = False
        for v in s_subs:
            A = subring_as_ring(R, v.mask)
            masks_a = [w.mask for w in s_ideals(A, "I", mode)]
            if _totally_ordered(masks_a):
                weak = True
                break
    return {
        "chain_ring": chain,
        "s_chain_ring": s_chain,
        "s_weakly_chain_ring": PredicateVerdict(
            "s_weakly_chain_ring", weak, mode=mode, detail=None if s_subs else "no S-subring"
        ),
    }


# -- dispotent -----------------------------------------------------------------------


def dispotent_flags(R: RingHandle, mode: str = "strict") -> dict[str, PredicateVerdict]:
    idem, _, _, _ = classify_idempotents(R)
    disp = PredicateVerdict("dispotent", len(idem) == 2, witness=idem if len(idem) == 2 else None)
    s_disp = None
    s_subs = s_subrings(R, "I", mode)
    if s_subs:
        s_disp = False
        wit = None
        for v in s_subs:
            A = subring_as_ring(R, v.mask)
            _, s_idem_a, _, _ = classify_idempotents(A)
            if len(s_idem_a) == 2:
                s_disp = True
                wit = v.mask
                break
        return {
            "dispotent": disp,
            "s_dispotent": PredicateVerdict("s_dispotent", s_disp, witness=wit, mode=mode),
        }
    return {
        "dispotent": disp,
        "s_dispotent": PredicateVerdict("s_dispotent", None, detail="no S-subring", mode=mode),
    }


# -- group / semigroup ring flags -------------------------------------------------------


def s_group_semigroup_ring_flags(R: RingHandle, mode: str = "strict") -> dict[str, PredicateVerdict]:
    out = {}
    if R.construction == "group_ring":
        base = R.meta["base"]
        ok, cert = has_s_ring(base, "I", mode)
        out["s_group_ring"] = PredicateVerdict("s_group_ring", ok, witness=cert, mode=mode)
        out["s_semigroup_ring"] = PredicateVerdict(
            "s_semigroup_ring", None, detail="built over a group, not a semigroup"
        )
    elif R.construction == "semigroup_ring":
        sgrp = R.meta["structure"]
        ok, wit = is_s_semigroup(sgrp, min_group_size=2)
        out["s_semigroup_ring"] = PredicateVerdict(
            "s_semigroup_ring", ok, witness=(wit.members, wit.identity) if wit else None
        )
        base = R.meta["base"]
        ok2, cert = has_s_ring(base, "I", mode)
        out["s_group_ring"] = PredicateVerdict("s_group_ring", ok2, witness=cert, mode=mode)
    else:
        out["s_group_ring"] = PredicateVerdict("s_group_ring", None, detail="not a structure ring")
        out["s_semigroup_ring"] = PredicateVerdict(
            "s_semigroup_ring", None, detail="not a structure ring"
        )
    return out


# -- orchestration ------------------------------------------------------------------------


_BASIC_IDS = ("commutative", "field", "integral_domain", "division_ring", "boolean", "has_one")
_DOMAIN_IDS = ("s_integral_domain", "s_division_ring", "s_semiprime", "reduced", "s_reduced")
_CHAIN_IDS = ("chain_ring", "s_chain_ring", "s_weakly_chain_ring")
_DISPOTENT_IDS = ("dispotent", "s_dispotent")
_STRUCTURE_RING_IDS = ("s_group_ring", "s_semigroup_ring")
_LAW_IDS = ("e_ring", "j_ring", "weakly_boolean", "pre_j_ring", "zero_square")


def run_predicates(R: RingHandle, only: list[str] | None = None, mode: str = "strict"):
    """Evaluate the battery; returns verdicts keyed by predicate id.

    With a filter, only the groups a requested id belongs to are computed,
    which keeps targeted checks possible on rings above the census caps.
    """
    out: dict[str, PredicateVerdict] = {}

    def want(name: str) -> bool:
        return only is None or name in only

    if any(want(n) for n in _BASIC_IDS):
        for name, v in basic_census(R).items():
            if want(name):
                out[name] = v
    for level in ("I", "II"):
        if want(f"s_ring_{level}"):
            out[f"s_ring_{level}"] = s_ring(R, level, mode)
    if want("s_commutative_II") or want("s_strongly_commutative_II"):
        std, strong = s_commutative_II(R, mode)
        out["s_commutative_II"] = std
        out["s_strongly_commutative_II"] = strong
    for law in _LAW_IDS:
        if want(law):
            out[law] = elementwise_law(R, law)
    if any(want(n) for n in _DOMAIN_IDS):
        for name, v in s_domain_flags(R, mode).items():
            if want(name):
                out[name] = v
    if any(want(n) for n in _CHAIN_IDS):
        for name, v in chain_ring_flags(R, mode).items():
            if want(name):
                out[name] = v
    if any(want(n) for n in _DISPOTENT_IDS):
        for name, v in dispotent_flags(R, mode).items():
            if want(name):
                out[name] = v
    if any(want(n) for n in _STRUCTURE_RING_IDS):
        for name, v in s_group_semigroup_ring_flags(R, mode).items():
            if want(name):
                out[name] = v
    if want("s_zero_square"):
        out["s_zero_square"] = s_localized_law(R, "zero_square", "subring_of_s_subring", mode=mode)
    if want("s_e_ring"):
        out["s_e_ring"] = s_localized_law(R, "e_ring", "subring_of_s_subring", mode=mode)
    if want("s_pre_j_ring"):
        out["s_pre_j_ring"] = s_localized_law(R, "pre_j_ring", "subring_of_s_subring", mode=mode)
    if want("s_j_ring"):
        out["s_j_ring"] = s_localized_law(R, "j_ring", "s_subring", mode=mode)
    if want("s_p_ring"):
        out["s_p_ring"] = s_localized_law(R, "p_ring", "subring_of_s_ring", mode=mode)
    for level in ("I", "II"):
        if want(f"s_simple_{level}"):
            from .substructures import s_simplicity

            out[f"s_simple_{level}"] = PredicateVerdict(
                f"s_simple_{level}", s_simplicity(R, level, mode), mode=mode
            )
    return out

"""Subsets of indexed elements as Python int bitmasks.

Bit i set means element code i is a member.  Masks are the universal
currency for subrings, ideals, field subsets and witnesses; their integer
value doubles as the canonical ordering and the report fingerprint.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elements_of(mask: int) -> list[int]:
    return list(bits(mask))


def size(mask: int) -> int:
    return mask.bit_count()


def contains(mask: int, e: int) -> bool:
    return bool(mask >> e & 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def fingerprint(mask: int) -> str:
    """Hex encoding of the canonical bitset; stable across runs."""
    return format(mask, "x")

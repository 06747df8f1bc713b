"""Triplets (t-4, t-2, t), their generation maps, and per-range censuses.

A term ``d`` has the child ``2d + 1`` one range below and spawns the
triplet ``(4d - 1, 4d + 1, 4d + 3)`` two ranges below.  Dividing out the
low three bits inverts the spawn map.  Terms caught in no triplet are
*lone*; they root the ternary trees handled by :mod:`dyckforest.forest`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    U64_MAX,
    NotAMemberError,
    WidthOverflowError,
    dyck_mask,
    is_dyck,
    range_size,
)

# Census scans touch every odd value of a range; past this the candidate
# space (2**29+) stops being desk-scale.
MAX_CENSUS_RANGE = 30

_CHUNK = 1 << 21  # odd values examined per vectorised block


class NotInTripletError(ValueError):
    """The value does not belong to any detected triplet."""


@dataclass(frozen=True, slots=True)
class Triplet:
    """Three consecutive terms ``(t - 4, t - 2, t)`` with ``t = 7 (mod 8)``."""

    low: int
    mid: int
    high: int

    def __post_init__(self):
        if self.mid != self.low + 2 or self.high != self.low + 4:
            raise ValueError(f"not consecutive odd values: {self}")
        if self.high % 8 != 7:
            raise ValueError(f"senior member must end in binary 111: {self}")

    @classmethod
    def around_high(cls, high: int) -> "Triplet":
        return cls(high - 4, high - 2, high)

    def members(self) -> tuple[int, int, int]:
        return (self.low, self.mid, self.high)


def child(d: int) -> int:
    """``2d + 1``, a term one range below ``d``."""
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    result = 2 * d + 1
    if result > U64_MAX:
        raise WidthOverflowError("child would exceed 64 bits")
    return result


def parent_unary(d: int) -> int | None:
    """Inverse of :func:`child` when ``(d - 1) / 2`` is itself a term."""
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    p = (d - 1) // 2
    return p if is_dyck(p) else None


def spawn_triplet(d: int) -> Triplet:
    """The triplet ``(4d - 1, 4d + 1, 4d + 3)`` generated two ranges below ``d``."""
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    if 4 * d + 3 > U64_MAX:
        raise WidthOverflowError("spawned triplet would exceed 64 bits")
    return Triplet(4 * d - 1, 4 * d + 1, 4 * d + 3)


def triplet_of(d: int) -> Triplet | None:
    """The detected triplet containing ``d``, or None for a lone term.

    Detection checks all three memberships; a trailing-111 code alone is
    not enough (231 ends in 111 yet sits in no triplet because 227 is not
    a term).
    """
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    r = d % 8
    if r == 1:
        return None
    t = d + (7 - r)
    if is_dyck(t) and is_dyck(t - 2) and is_dyck(t - 4):
        return Triplet.around_high(t)
    return None


def triplet_parent(x: int) -> int:
    """The term whose spawned triplet contains ``x`` (inverse of the spawn map)."""
    if triplet_of(x) is None:
        raise NotInTripletError(f"{x} is not in any triplet")
    return 2 * (x // 8) + 1


@lru_cache(maxsize=16)
def _members_array(n: int) -> np.ndarray:
    """All terms of range ``n``, ascending, as a read-only uint64 array."""
    if n < 1:
        raise ValueError("range number must be positive")
    if n > MAX_CENSUS_RANGE:
        raise ValueError(
            f"census over range {n} is not supported (limit {MAX_CENSUS_RANGE})"
        )
    if n == 1:
        arr = np.array([1], dtype=np.uint64)
    else:
        lo, hi = 1 << (n - 1), (1 << n) - 1
        blocks = []
        for start in range(lo + 1, hi + 1, 2 * _CHUNK):
            odds = np.arange(start, min(start + 2 * _CHUNK, hi + 2), 2, dtype=np.uint64)
            blocks.append(odds[dyck_mask(odds)])
        arr = np.concatenate(blocks)
    arr.flags.writeable = False
    return arr


def _detected_highs(members: np.ndarray) -> np.ndarray:
    highs = members[members % np.uint64(8) == np.uint64(7)]
    ok = np.isin(highs - np.uint64(2), members, assume_unique=True)
    ok &= np.isin(highs - np.uint64(4), members, assume_unique=True)
    return highs[ok]


def triplets_in_range(n: int) -> list[Triplet]:
    """All triplets fully contained in range ``n``, ascending.

    Ranges 1..3 yield nothing: the only early triplet (3, 5, 7) spans two
    ranges and never enters per-range censuses.
    """
    if n < 1:
        raise ValueError("range number must be positive")
    if n < 4:
        return []
    highs = _detected_highs(_members_array(n))
    return [Triplet.around_high(int(t)) for t in highs]


def lone_terms_in_range(n: int) -> list[int]:
    """Terms of range ``n`` contained in no triplet, ascending.

    The base term 1 roots the base tree and is never counted lone, so
    ranges 1..5 come back empty (the first lone term is 39 in range 6).
    """
    if n < 1:
        raise ValueError("range number must be positive")
    if n < 4:
        return []
    members = _members_array(n)
    highs = _detected_highs(members)
    caught = np.concatenate([highs, highs - np.uint64(2), highs - np.uint64(4)])
    return [int(v) for v in members[~np.isin(members, caught, assume_unique=True)]]


def predicted_lone_count(n: int) -> int:
    """Lone-term count of range ``n`` from the size identity.

    Every triplet of range ``n`` descends from one term of range ``n - 2``
    and covers three terms, so ``range_size(n) - 3 * range_size(n - 2)``
    terms stay lone.  Defined from range 4 on.
    """
    if n < 4:
        raise ValueError("the size identity applies from range 4 on")
    return range_size(n) - 3 * range_size(n - 2)

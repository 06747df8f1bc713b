"""Deterministic primality, Dyck primes, and prime-triplet censuses.

A *prime triplet* holds at least two primes; past the spanning triplet
(3, 5, 7) that means exactly two, the third member being the inevitable
multiple of three among three consecutive odd numbers.  The two primes
differ by 2 (twins) or by 4 (cousins).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Iterator

import numpy as np

from .core import dyck_mask, iter_range
from .forest import tree_level
from .triplets import Triplet, _members_array, triplets_in_range

# Strong-probable-prime bases; this set is known to decide primality
# exactly for every n below 3.3 * 10**24, which covers the 64-bit domain.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Bulk censuses use a sieve while values stay below this, scalar
# Miller-Rabin beyond.
_SIEVE_CAP = 1 << 26


def is_prime(value: int) -> bool:
    """Deterministic primality verdict, exact for all 64-bit inputs."""
    n = value
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4)
def _sieve(limit: int) -> np.ndarray:
    """Primality lookup table for 0..limit (read-only boolean array)."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    flags.flags.writeable = False
    return flags


def _prime_flags(values: np.ndarray) -> np.ndarray:
    if values.size == 0:
        return np.zeros(0, dtype=bool)
    top = int(values.max())
    if top <= _SIEVE_CAP:
        return _sieve(top)[values]
    return np.array([is_prime(int(v)) for v in values], dtype=bool)


@dataclass(frozen=True, slots=True)
class PrimeTripletRecord:
    """A triplet with the primality verdict of each member."""

    triplet: Triplet
    prime_mask: tuple[bool, bool, bool]

    @property
    def verdict(self) -> bool:
        """True iff at least two members are prime."""
        return sum(self.prime_mask) >= 2

    @property
    def gap(self) -> str | None:
        """``"twin"`` or ``"cousin"`` by the distance of the prime pair."""
        low, mid, high = self.prime_mask
        if (low and mid) or (mid and high):
            return "twin"
        if low and high:
            return "cousin"
        return None

    @property
    def masked(self) -> str:
        """Display form ``a/b/c`` with non-prime members zeroed."""
        return "/".join(
            str(v) if p else "0"
            for v, p in zip(self.triplet.members(), self.prime_mask)
        )


def is_prime_triplet(t: Triplet) -> PrimeTripletRecord:
    """Record the primality mask of ``t``; ``verdict`` tells if it qualifies."""
    return PrimeTripletRecord(t, tuple(is_prime(v) for v in t.members()))


def _qualifying_records(trips: list[Triplet]) -> list[PrimeTripletRecord]:
    if not trips:
        return []
    lows = np.fromiter((t.low for t in trips), dtype=np.uint64, count=len(trips))
    flags = (
        _prime_flags(lows),
        _prime_flags(lows + np.uint64(2)),
        _prime_flags(lows + np.uint64(4)),
    )
    out = []
    for i, t in enumerate(trips):
        mask = (bool(flags[0][i]), bool(flags[1][i]), bool(flags[2][i]))
        if sum(mask) >= 2:
            out.append(PrimeTripletRecord(t, mask))
    return out


def prime_triplets_in_range(n: int) -> list[PrimeTripletRecord]:
    """Records for the prime triplets of range ``n``, ascending."""
    return _qualifying_records(triplets_in_range(n))


def prime_triplets_in_tree(root: int, depth: int) -> list[PrimeTripletRecord]:
    """Prime triplets among the depth-``depth`` nodes of a tree, by parent."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth == 0:
        return []  # a root alone forms no triplet
    parents = tree_level(root, depth - 1)
    trips = [Triplet(4 * d - 1, 4 * d + 1, 4 * d + 3) for d in parents]
    return _qualifying_records(trips)


def gap_census(n: int) -> tuple[int, int]:
    """(twin, cousin) counts over the prime triplets of range ``n``."""
    twins = cousins = 0
    for record in prime_triplets_in_range(n):
        if record.gap == "cousin":
            cousins += 1
        else:
            twins += 1
    return twins, cousins


def iter_dyck_primes() -> Iterator[int]:
    """Yield the prime terms in ascending order."""
    for n in count(2):
        for v in iter_range(n):
            if is_prime(v):
                yield v


def dyck_primes_up_to(limit: int) -> list[int]:
    """All prime terms up to ``limit``, ascending."""
    if limit < 2:
        raise ValueError("limit must be at least 2")
    out: list[int] = []
    for n in range(2, limit.bit_length() + 1):
        members = _members_array(n)
        flags = _prime_flags(members)
        for v, f in zip(members.tolist(), flags.tolist()):
            if v > limit:
                return out
            if f:
                out.append(v)
    return out


def count_dyck_among_primes(how_many: int = 1_000_000) -> int:
    """How many of the first ``how_many`` primes are terms."""
    if how_many < 1:
        raise ValueError("how_many must be positive")
    if how_many < 6:
        bound = 16
    else:
        # p_n < n (ln n + ln ln n) for n >= 6
        ln = math.log(how_many)
        bound = int(how_many * (ln + math.log(ln))) + 10
    primes = np.nonzero(_sieve(bound))[0]
    if len(primes) < how_many:  # defensive; the bound above suffices
        raise RuntimeError("sieve bound too small")
    return int(dyck_mask(primes[:how_many]).sum())

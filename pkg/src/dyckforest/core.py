"""Membership, ranges, and ordered enumeration of OEIS A036991.

A036991 collects the positive integers whose binary code is suffix
dominant: scanning bits from the least significant upward, a running
balance (+1 per 1-bit, -1 per 0-bit) never drops below zero.  Such
numbers are necessarily odd.  Terms of one bit length form a *range*;
range ``n`` ends at the Mersenne number ``2**n - 1`` and holds
``binomial(n - 1, (n - 1) // 2)`` terms.

All values live in the unsigned 64-bit domain.  Operations whose result
would leave that domain raise :class:`WidthOverflowError` instead of
wrapping.
"""

from __future__ import annotations

import math
from itertools import count
from typing import Iterable, Iterator

import numpy as np

U64_MAX = 2**64 - 1

#: Largest supported range; ``mersenne(n)`` is defined for n up to here.
MAX_RANGE = 63

# binomial(68, 34) is the first central binomial above 2**64 - 1
_MAX_CENTRAL = 67


class WidthOverflowError(OverflowError):
    """A result does not fit the unsigned 64-bit value domain."""


class NotAMemberError(ValueError):
    """The input is not a term of the sequence."""


def _byte_tables() -> tuple[list[int], list[int], list[int]]:
    # full_min/full_sum treat all 8 bits of a byte; last_min only the bits
    # up to the byte's own leading 1 (bits above a value's MSB must not
    # count as 0-steps).
    full_min, full_sum, last_min = [0] * 256, [0] * 256, [-1] * 256
    for b in range(256):
        bal, lo = 0, 8
        for i in range(8):
            bal += 1 if (b >> i) & 1 else -1
            lo = min(lo, bal)
        full_min[b], full_sum[b] = lo, bal
        if b:
            bal, lo = 0, 8
            for i in range(b.bit_length()):
                bal += 1 if (b >> i) & 1 else -1
                lo = min(lo, bal)
            last_min[b] = lo
    return full_min, full_sum, last_min


_FULL_MIN, _FULL_SUM, _LAST_MIN = _byte_tables()


def is_dyck(value: int) -> bool:
    """True iff ``value`` is a term (suffix-dominant binary code).

    Total on all integers: zero, negatives and even numbers return False.
    """
    v = value
    if v <= 0:
        return False
    bal = 0
    while v > 0xFF:
        b = v & 0xFF
        if bal + _FULL_MIN[b] < 0:
            return False
        bal += _FULL_SUM[b]
        v >>= 8
    return bal + _LAST_MIN[v] >= 0


def dyck_mask(values: Iterable[int] | np.ndarray) -> np.ndarray:
    """Vectorised :func:`is_dyck` over an array of unsigned integers."""
    v = np.ascontiguousarray(values, dtype=np.uint64)
    bal = np.zeros(v.shape, dtype=np.int64)
    alive = v != 0
    top = int(v.max()).bit_length() if v.size else 0
    for i in range(top):
        shifted = v >> np.uint64(i)
        active = shifted > 0  # positions above a value's MSB do not count
        step = ((shifted & np.uint64(1)).astype(np.int64) << 1) - 1
        bal = np.where(active, bal + step, bal)
        alive &= ~active | (bal >= 0)
    return alive


def trailing_ones(value: int) -> int:
    """Length of the maximal all-ones suffix of the binary code."""
    if value < 0:
        raise ValueError("value must be nonnegative")
    return (value ^ (value + 1)).bit_length() - 1


def mersenne(n: int) -> int:
    """The n-th Mersenne number ``2**n - 1``, the last term of range n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_RANGE:
        raise WidthOverflowError(f"mersenne({n}) exceeds the supported width")
    return (1 << n) - 1


def central_binomial(k: int) -> int:
    """``binomial(k, k // 2)``, the middle-layer count of a k-cube."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > _MAX_CENTRAL:
        raise WidthOverflowError(f"central_binomial({k}) exceeds 64 bits")
    return math.comb(k, k // 2)


def range_of(value: int) -> int:
    """Range number (bit length) of a term."""
    if not is_dyck(value):
        raise NotAMemberError(f"{value} is not a term")
    return value.bit_length()


def range_size(n: int) -> int:
    """Number of terms whose binary code has length ``n``."""
    if n < 1:
        raise ValueError("range number must be positive")
    return central_binomial(n - 1)


def successor(d: int) -> int:
    """The least term strictly greater than ``d``.

    Scans successive odd candidates; the gap after a term with a long
    repunit suffix grows like ``2**(r/2)``, so calls near the top of a
    large range take time proportional to that gap.
    """
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    if d >= U64_MAX:
        raise WidthOverflowError("successor would exceed 64 bits")
    c = d + 2
    while not is_dyck(c):
        c += 2
    return c


def first_of_range(n: int) -> int:
    """The smallest term of range ``n``, i.e. the successor of ``mersenne(n-1)``.

    A length-n code needs at least ceil((n-1)/2) 1-bits below the leading
    bit to keep the full-length suffix nonnegative, and the smallest odd
    value with that many 1-bits is the solid block 2**ceil((n-1)/2) - 1.
    """
    if n < 1:
        raise ValueError("range number must be positive")
    if n > MAX_RANGE:
        raise WidthOverflowError(f"range {n} exceeds the supported width")
    if n == 1:
        return 1
    return (1 << (n - 1)) + (1 << (n // 2)) - 1


def _complete(i: int, acc: int, fixed_low: int) -> Iterator[int]:
    # fixed_low is the lowest running balance of the already-fixed high
    # bits, measured from the open end; a completion ending at balance s
    # keeps every suffix nonnegative iff s + fixed_low >= 0.
    if i < 0:
        yield acc
        return
    for bit in (0, 1):
        low2 = (1 if bit else -1) + min(0, fixed_low)
        need = -low2 if low2 < 0 else 0
        if (need + i) & 1:
            need += 1
        if need <= i:  # some i-step nonnegative walk still ends high enough
            yield from _complete(i - 1, acc | (bit << i), low2)


def iter_range(n: int) -> Iterator[int]:
    """Yield the terms of range ``n`` in ascending order."""
    if n < 1:
        raise ValueError("range number must be positive")
    if n > MAX_RANGE:
        raise WidthOverflowError(f"range {n} exceeds the supported width")
    if n == 1:
        yield 1
        return
    yield from _complete(n - 2, 1 << (n - 1), 1)


def enumerate_terms(limit: int) -> Iterator[int]:
    """Yield the first ``limit`` terms in ascending order."""
    if limit < 1:
        raise ValueError("limit must be positive")
    left = limit
    for n in count(1):
        if n > MAX_RANGE:
            raise WidthOverflowError("enumeration exhausted the 64-bit domain")
        for v in iter_range(n):
            yield v
            left -= 1
            if not left:
                return

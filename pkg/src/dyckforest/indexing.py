"""Ballot-walk counting table and rank/unrank over the global term order.

Terms are indexed from one: ``rank(1) == 1`` and ``term_at(1) == 1``.
The published OEIS form of the sequence carries the empty-path 0 ahead of
the proper terms, so a published sequence index equals ``rank(v) + 1``;
:mod:`dyckforest.oeisdata` applies that shift when checking b-files.
"""

from __future__ import annotations

from .core import (
    MAX_RANGE,
    NotAMemberError,
    WidthOverflowError,
    is_dyck,
    range_size,
)


class BallotTable:
    """Counts ``N(k, s)`` of nonnegative walks by length and final height.

    ``count(k, s)`` is the number of length-``k`` binary words whose
    right-to-left running balance stays nonnegative and finishes at ``s``.
    Built once, then read-only; row sums reproduce the central binomial
    numbers.
    """

    def __init__(self, max_length: int = 64):
        if max_length < 0:
            raise ValueError("max_length must be nonnegative")
        rows: list[tuple[int, ...]] = [(1,)]
        for k in range(1, max_length + 1):
            prev = rows[-1]
            row = []
            for s in range(k + 1):
                up = prev[s - 1] if s >= 1 else 0
                down = prev[s + 1] if s + 1 < k else 0
                row.append(up + down)
            rows.append(tuple(row))
        self._rows = tuple(rows)
        # suffix sums over s, for "ends at height >= s" queries
        tails: list[tuple[int, ...]] = []
        for row in rows:
            acc = 0
            tail = [0] * (len(row) + 1)
            for s in range(len(row) - 1, -1, -1):
                acc += row[s]
                tail[s] = acc
            tails.append(tuple(tail))
        self._tails = tuple(tails)
        self.max_length = max_length

    def count(self, k: int, s: int) -> int:
        if k < 0:
            raise ValueError("walk length must be nonnegative")
        if k > self.max_length:
            raise ValueError(f"walk length {k} beyond table ({self.max_length})")
        if s < 0 or s > k:
            return 0
        return self._rows[k][s]

    def tail(self, k: int, s_min: int) -> int:
        """Number of length-``k`` nonnegative walks ending at height >= ``s_min``."""
        if k < 0:
            raise ValueError("walk length must be nonnegative")
        if k > self.max_length:
            raise ValueError(f"walk length {k} beyond table ({self.max_length})")
        if s_min < 0:
            s_min = 0
        if s_min > k:
            return 0
        return self._tails[k][s_min]


_TABLE = BallotTable(64)

# cumulative term counts: _CUM[n] terms in ranges 1..n
_CUM = [0] * (MAX_RANGE + 1)
for _n in range(1, MAX_RANGE + 1):
    _CUM[_n] = _CUM[_n - 1] + range_size(_n)


def ballot_count(k: int, s: int) -> int:
    """``N(k, s)`` from the shared table (``k`` up to 64)."""
    return _TABLE.count(k, s)


def rank(value: int) -> int:
    """1-based position of a term among all terms in ascending order."""
    if not is_dyck(value):
        raise NotAMemberError(f"{value} is not a term")
    n = value.bit_length()
    r = _CUM[n - 1]
    fixed_low = 1  # running minimum balance of the fixed high bits
    for i in range(n - 2, -1, -1):
        bit = (value >> i) & 1
        if bit:
            # count same-length terms with a 0 here and the same bits above
            low0 = -1 + min(0, fixed_low)
            r += _TABLE.tail(i, -low0)
        fixed_low = (1 if bit else -1) + min(0, fixed_low)
    return r + 1


def term_at(index: int) -> int:
    """The unique term ``v`` with ``rank(v) == index``."""
    if index < 1:
        raise ValueError("index must be positive")
    if index > _CUM[MAX_RANGE]:
        raise WidthOverflowError(f"term {index} exceeds the supported width")
    n = 1
    while _CUM[n] < index:
        n += 1
    j = index - _CUM[n - 1] - 1  # 0-based position within range n
    v = 1 << (n - 1)
    fixed_low = 1
    for i in range(n - 2, -1, -1):
        low0 = -1 + min(0, fixed_low)
        with_zero = _TABLE.tail(i, -low0)
        if j < with_zero:
            bit = 0
        else:
            j -= with_zero
            bit = 1
            v |= 1 << i
        fixed_low = (1 if bit else -1) + min(0, fixed_low)
    return v


def cumulative_size(n: int) -> int:
    """Total number of terms in ranges 1 through ``n``."""
    if n < 0 or n > MAX_RANGE:
        raise ValueError(f"n must be in 0..{MAX_RANGE}")
    return _CUM[n]

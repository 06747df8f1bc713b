"""OEIS b-file parsing and cross-verification of generated sequences.

B-files are plain text, one ``index value`` pair per line, with optional
``#`` comment lines.  Supported sequences: a036991 (the terms), a001405
(range sizes), a116385 (lone-term counts) and a350577 (Dyck primes).

Published A036991 files carry the empty-path 0 ahead of the proper
terms, at index 0 or index 1 depending on the file's offset; both forms
verify, and mismatches are always reported under the file's own index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable

from .core import central_binomial
from .indexing import term_at
from .primes import iter_dyck_primes
from .triplets import predicted_lone_count

SUPPORTED_SEQUENCES = ("a036991", "a001405", "a116385", "a350577")


class BFileFormatError(ValueError):
    """A b-file line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


@dataclass(frozen=True)
class VerificationReport:
    sequence: str
    checked: int
    ok: bool
    mismatch_index: int | None = None
    expected: int | None = None
    actual: int | None = None


def parse_bfile(text: str | Iterable[str]) -> list[BFileEntry]:
    """Parse b-file text into entries; indices must be consecutive."""
    lines = text.splitlines() if isinstance(text, str) else text
    entries: list[BFileEntry] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(line_no, f"expected 'index value', got {line!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(line_no, f"non-integer field in {line!r}") from None
        if value < 0:
            raise BFileFormatError(line_no, f"negative value in {line!r}")
        if entries and index != entries[-1].index + 1:
            raise BFileFormatError(
                line_no, f"index {index} does not follow {entries[-1].index}"
            )
        entries.append(BFileEntry(index, value))
    return entries


def render_bfile(entries: Iterable[BFileEntry]) -> str:
    """Serialise entries back to b-file text."""
    return "".join(f"{e.index} {e.value}\n" for e in entries)


def _check(
    sequence: str,
    entries: list[BFileEntry],
    expected_at: Callable[[int], int],
) -> VerificationReport:
    for e in entries:
        expected = expected_at(e.index)
        if expected != e.value:
            return VerificationReport(
                sequence, len(entries), False, e.index, expected, e.value
            )
    return VerificationReport(sequence, len(entries), True)


def _verify_a036991(entries: list[BFileEntry]) -> VerificationReport:
    head = entries[0]
    if head.value == 0:
        # leading empty-path entry; its index fixes the file's offset
        if head.index not in (0, 1):
            raise ValueError("the null entry must sit at index 0 or 1")
        shift, body = head.index, entries[1:]
    elif head.index == 1 and head.value == 1:
        shift, body = 0, entries
    else:
        raise ValueError("an a036991 prefix must start at the sequence head")
    return _check("a036991", body, lambda i: term_at(i - shift))


def _verify_a350577(entries: list[BFileEntry]) -> VerificationReport:
    if entries[0].index < 1:
        raise ValueError("a350577 is indexed from 1")
    primes = list(islice(iter_dyck_primes(), entries[-1].index))
    return _check("a350577", entries, lambda i: primes[i - 1])


def verify_prefix(entries: list[BFileEntry], sequence_name: str) -> VerificationReport:
    """Compare parsed entries against the locally generated sequence.

    Returns a success report, or the first mismatching index with both
    values.  An empty entry list verifies vacuously.
    """
    name = sequence_name.strip().lower()
    if name not in SUPPORTED_SEQUENCES:
        raise ValueError(f"unknown sequence {sequence_name!r}; supported: "
                         + ", ".join(SUPPORTED_SEQUENCES))
    if not entries:
        return VerificationReport(name, 0, True)
    if name == "a036991":
        return _verify_a036991(entries)
    if name == "a001405":
        return _check(name, entries, central_binomial)
    if name == "a116385":
        return _check(name, entries, lambda i: predicted_lone_count(i + 4))
    return _verify_a350577(entries)

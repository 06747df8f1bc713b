"""The forest of directed ternary trees over the sequence.

Every term sits in exactly one tree: the base tree rooted at 1 (the only
tree whose first triplet spans two ranges) or a tree rooted at a lone
term.  Spawning triples the node count per level and adds two bits per
step, so a root in range ``r`` fills ranges ``r, r + 2, r + 4, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import U64_MAX, NotAMemberError, WidthOverflowError, is_dyck
from .triplets import Triplet, lone_terms_in_range, spawn_triplet, triplet_of, triplet_parent


class TermRole(str, Enum):
    BASE_ROOT = "base_root"
    LONE_ROOT = "lone_root"
    TRIPLET_MEMBER = "triplet_member"


def classify(d: int) -> TermRole:
    """Role of a term in the forest."""
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    if d == 1:
        return TermRole.BASE_ROOT
    if triplet_of(d) is None:
        return TermRole.LONE_ROOT
    return TermRole.TRIPLET_MEMBER


def children_of(d: int) -> Triplet:
    """The three children of a node: its spawned triplet."""
    return spawn_triplet(d)


def subtree_level(d: int, depth: int) -> list[int]:
    """All ``3**depth`` descendants of a term at spawn distance ``depth``, ascending.

    Works below any term; spawning adds two bits per step, so parents
    stay strictly interleaved and the concatenation is already sorted.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if not is_dyck(d):
        raise NotAMemberError(f"{d} is not a term")
    if d.bit_length() + 2 * depth > U64_MAX.bit_length():
        raise WidthOverflowError("level values would exceed 64 bits")
    level = [d]
    for _ in range(depth):
        level = [c for parent in level for c in spawn_triplet(parent).members()]
    return level


def tree_level(root: int, depth: int) -> list[int]:
    """All ``3**depth`` nodes at ``depth`` below a tree root, ascending."""
    if classify(root) is TermRole.TRIPLET_MEMBER:
        raise ValueError(f"{root} is not a tree root")
    return subtree_level(root, depth)


def roots_in_range(n: int) -> list[int]:
    """Roots of the ternary trees launched in range ``n`` (its lone terms)."""
    return lone_terms_in_range(n)


def ancestry(d: int) -> list[int]:
    """Chain from ``d`` up through triplet parents to its tree root.

    Terminates because every step drops the bit length by two.
    """
    chain = [d]
    while classify(chain[-1]) is TermRole.TRIPLET_MEMBER:
        chain.append(triplet_parent(chain[-1]))
    return chain


@dataclass(frozen=True)
class TreePath:
    """Address of a node: a root plus child picks (0 low, 1 mid, 2 high)."""

    root: int
    steps: tuple[int, ...] = ()

    def __post_init__(self):
        if classify(self.root) is TermRole.TRIPLET_MEMBER:
            raise ValueError(f"{self.root} is not a tree root")
        if any(s not in (0, 1, 2) for s in self.steps):
            raise ValueError("steps must be 0, 1 or 2")

    def node(self) -> int:
        v = self.root
        for s in self.steps:
            v = spawn_triplet(v).members()[s]
        return v

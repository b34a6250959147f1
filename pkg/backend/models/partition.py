"""
Set partition model
Canonical restricted-growth-string representation of A in Π_n
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class SetPartition:
    """
    Set partition of [n] stored as its restricted growth string.

    rgs[i] is the zero-based index of the block holding element i+1. Blocks are
    numbered by increasing minimum element, so block j is the j-th block in the
    implied order of the compact notation.
    """
    rgs: Tuple[int, ...] = ()

    def __post_init__(self):
        rgs = tuple(self.rgs)
        object.__setattr__(self, 'rgs', rgs)
        top = -1
        for r in rgs:
            if not isinstance(r, int) or r < 0 or r > top + 1:
                raise ValueError(f'Not a restricted growth string: {rgs}')
            top = max(top, r)

    @property
    def n(self) -> int:
        """Size of the ground set"""
        return len(self.rgs)

    @property
    def length(self) -> int:
        """Number of blocks ℓ(A)"""
        return max(self.rgs) + 1 if self.rgs else 0

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        """Blocks as sorted tuples of one-based elements, ordered by minimum"""
        out: List[List[int]] = [[] for _ in range(self.length)]
        for i, r in enumerate(self.rgs, 1):
            out[r].append(i)
        return tuple(tuple(b) for b in out)

    @property
    def is_empty(self) -> bool:
        return not self.rgs

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Degree first, then lexicographic rgs (enumeration order)"""
        return (self.n, self.rgs)

    def text(self) -> str:
        """Canonical compact text, e.g. '1,3,5|2|4'; 'e' for the empty partition"""
        if not self.rgs:
            return 'e'
        return '|'.join(','.join(str(i) for i in block) for block in self.blocks)

    def to_json(self) -> List[List[int]]:
        """JSON block form, e.g. [[1,3,5],[2],[4]]"""
        return [list(block) for block in self.blocks]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f'SetPartition({self.text()!r})'


@dataclass(frozen=True)
class IntegerPartitionShape:
    """Integer partition λ(A): block sizes in weakly decreasing order"""
    parts: Tuple[int, ...] = ()

    @property
    def size(self) -> int:
        """|λ|"""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """ℓ(λ)"""
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        """n_i(λ): number of parts equal to i"""
        return self.parts.count(i)

    def multiplicities(self) -> Dict[int, int]:
        return {i: self.parts.count(i) for i in sorted(set(self.parts), reverse=True)}

    def __str__(self):
        return '(' + ','.join(str(p) for p in self.parts) + ')'

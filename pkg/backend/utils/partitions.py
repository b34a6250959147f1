"""
Set partition operations
Enumeration, refinement order, meet/join, concatenation, standardization,
block restriction A_S, monomial types and the compact text grammar
"""
import re
import math
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from models.partition import SetPartition, IntegerPartitionShape
from utils.errors import (
    BlockIndexError,
    GapError,
    OverlapError,
    PartitionSyntaxError,
    RangeError,
    SizeMismatchError,
)

EMPTY = SetPartition(())

_PARTITION_RE = re.compile(r'^\d+(,\d+)*(\|\d+(,\d+)*)*$')


def canonical_labels(labels: Sequence[Hashable]) -> Tuple[int, ...]:
    """Relabel a sequence so equal labels share a block, first occurrence first"""
    seen: Dict[Hashable, int] = {}
    out = []
    for label in labels:
        if label not in seen:
            seen[label] = len(seen)
        out.append(seen[label])
    return tuple(out)


def _check_same_size(a: SetPartition, b: SetPartition):
    if a.n != b.n:
        raise SizeMismatchError(
            f'Partitions of different sizes: {a.n} and {b.n}',
            {'left': a.text(), 'right': b.text()}
        )


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def from_blocks(blocks: Iterable[Iterable[int]]) -> SetPartition:
    """
    Build the canonical partition from blocks covering {1..n}

    Raises:
        OverlapError: an element appears in two blocks
        GapError: the union is not {1..n}
    """
    owner: Dict[int, int] = {}
    for index, block in enumerate(blocks):
        block = list(block)
        if not block:
            raise GapError('Blocks must be non-empty')
        for element in block:
            if element in owner:
                raise OverlapError(f'Element {element} appears in more than one block',
                                   {'element': element})
            owner[element] = index

    n = len(owner)
    if set(owner) != set(range(1, n + 1)):
        raise GapError(f'Blocks do not cover an initial segment {{1..{n}}}',
                       {'elements': sorted(owner)})
    return SetPartition(canonical_labels([owner[i] for i in range(1, n + 1)]))


def bottom(n: int) -> SetPartition:
    """0_n: all singletons"""
    return SetPartition(tuple(range(n)))


def top(n: int) -> SetPartition:
    """1_n: a single block (the empty partition when n = 0)"""
    return SetPartition((0,) * n)


def rank(a: SetPartition) -> int:
    """Rank in Π_n: n − ℓ(A)"""
    return a.n - a.length


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] in lexicographic rgs order"""
    if n < 0:
        raise RangeError(f'Ground set size must be non-negative, got {n}')
    if n == 0:
        yield EMPTY
        return

    rgs = [0] * n
    # maxes[i] = max(rgs[0..i])
    maxes = [0] * n
    while True:
        yield SetPartition(tuple(rgs))
        # rightmost position that can still grow
        i = n - 1
        while i > 0 and rgs[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            maxes[j] = maxes[i]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[SetPartition, ...]:
    """Cached tuple of enumerate_partitions(n)"""
    return tuple(enumerate_partitions(n))


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number B_n = Σ_{i<n} C(n−1, i) B_i"""
    if n < 0:
        raise RangeError(f'Bell numbers need n >= 0, got {n}')
    if n == 0:
        return 1
    return sum(math.comb(n - 1, i) * bell(i) for i in range(n))


# ---------------------------------------------------------------------------
# Lattice operations
# ---------------------------------------------------------------------------

def refines(a: SetPartition, b: SetPartition) -> bool:
    """True iff A ≤ B: every block of A lies in a block of B"""
    _check_same_size(a, b)
    image: Dict[int, int] = {}
    for ra, rb in zip(a.rgs, b.rgs):
        if image.setdefault(ra, rb) != rb:
            return False
    return True


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """A ∧ B: non-empty pairwise intersections of blocks"""
    _check_same_size(a, b)
    return SetPartition(canonical_labels(list(zip(a.rgs, b.rgs))))


class _UnionFind:
    """Disjoint sets over 0..n-1 with path halving and union by size"""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


def join(a: SetPartition, b: SetPartition) -> SetPartition:
    """A ∨ B: transitive closure of 'same block in A or in B'"""
    _check_same_size(a, b)
    uf = _UnionFind(a.n)
    for partition in (a, b):
        first: Dict[int, int] = {}
        for i, r in enumerate(partition.rgs):
            uf.union(first.setdefault(r, i), i)
    return SetPartition(canonical_labels([uf.find(i) for i in range(a.n)]))


# ---------------------------------------------------------------------------
# Concatenation
# ---------------------------------------------------------------------------

def concat(a: SetPartition, b: SetPartition) -> SetPartition:
    """A|B: blocks of A followed by blocks of B shifted by |A|"""
    shift = a.length
    return SetPartition(a.rgs + tuple(r + shift for r in b.rgs))


def split(a: SetPartition, k: int) -> Optional[Tuple[SetPartition, SetPartition]]:
    """
    Inverse of concat at cut k

    Returns (B, C) with A = B|C, or None when a block crosses the cut.
    """
    if not 0 <= k <= a.n:
        raise RangeError(f'Cut {k} outside [0, {a.n}]', {'k': k, 'n': a.n})
    left, right = a.rgs[:k], a.rgs[k:]
    if set(left) & set(right):
        return None
    return SetPartition(left), SetPartition(canonical_labels(right))


def concat_fiber(a: SetPartition, b: SetPartition) -> List[SetPartition]:
    """
    All C in Π_{n+m} with C ∧ (1_n|1_m) = A|B

    Such C merge each block of A with at most one block of B and vice versa,
    so they are the partial matchings between the two block lists.
    """
    a_blocks = a.blocks
    b_blocks = [tuple(i + a.n for i in block) for block in b.blocks]
    fiber = []
    for k in range(min(len(a_blocks), len(b_blocks)) + 1):
        for chosen_a in combinations(range(len(a_blocks)), k):
            for chosen_b in permutations(range(len(b_blocks)), k):
                merged = dict(zip(chosen_a, chosen_b))
                blocks = []
                for i, block in enumerate(a_blocks):
                    if i in merged:
                        blocks.append(block + b_blocks[merged[i]])
                    else:
                        blocks.append(block)
                used = set(chosen_b)
                blocks.extend(block for j, block in enumerate(b_blocks) if j not in used)
                fiber.append(from_blocks(blocks))
    return sorted(fiber, key=SetPartition.sort_key)


# ---------------------------------------------------------------------------
# Standardization and restriction
# ---------------------------------------------------------------------------

def standardize(sets: Iterable[Iterable[int]]) -> SetPartition:
    """st(S): order-preserving relabel of disjoint sets onto {1..m}"""
    sets = [list(s) for s in sets]
    values = [v for s in sets for v in s]
    if len(values) != len(set(values)):
        repeated = sorted({v for v in values if values.count(v) > 1})
        raise OverlapError(f'Sets share elements {repeated}', {'elements': repeated})
    if any(not s for s in sets):
        raise GapError('Sets must be non-empty')
    rank_of = {v: i for i, v in enumerate(sorted(values), 1)}
    return from_blocks([[rank_of[v] for v in s] for s in sets])


def restrict(a: SetPartition, indices: Iterable[int]) -> SetPartition:
    """A_S for one-based block indices S; A_{} is the empty partition"""
    indices = sorted(set(indices))
    blocks = a.blocks
    for s in indices:
        if not 1 <= s <= len(blocks):
            raise BlockIndexError(f'Block index {s} outside 1..{len(blocks)}',
                                  {'index': s, 'length': len(blocks)})
    return standardize(blocks[s - 1] for s in indices)


def type_of(seq: Sequence[Hashable]) -> SetPartition:
    """∇(i_1..i_m): positions share a block iff they carry the same value"""
    return SetPartition(canonical_labels(seq))


def shape(a: SetPartition) -> IntegerPartitionShape:
    """λ(A): block sizes, weakly decreasing"""
    return IntegerPartitionShape(tuple(sorted((len(b) for b in a.blocks), reverse=True)))


# ---------------------------------------------------------------------------
# Text and JSON forms
# ---------------------------------------------------------------------------

def parse(text: str) -> SetPartition:
    """
    Parse the compact grammar: 'e' or blocks of comma-separated ints joined by '|'

    Raises:
        PartitionSyntaxError, OverlapError, GapError
    """
    if not isinstance(text, str):
        raise PartitionSyntaxError(f'Expected partition text, got {type(text).__name__}')
    if text == 'e':
        return EMPTY
    if not _PARTITION_RE.match(text):
        raise PartitionSyntaxError(f'Malformed partition text: {text!r}', {'text': text})
    return from_blocks([int(v) for v in block.split(',')] for block in text.split('|'))


def format_partition(a: SetPartition) -> str:
    """Canonical text form"""
    return a.text()


def from_json_blocks(data) -> SetPartition:
    """Decode the JSON block form [[1,3,5],[2],[4]]"""
    if not isinstance(data, list) or not all(
            isinstance(block, list) and all(isinstance(v, int) and not isinstance(v, bool)
                                            for v in block)
            for block in data):
        raise PartitionSyntaxError('Partition JSON must be an array of integer arrays',
                                   {'value': data})
    return from_blocks(data)

"""
Partition lattice intervals and the Möbius function
"""
import math
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Tuple

from models.partition import SetPartition
from utils.errors import NotComparableError, SizeMismatchError
from utils.mobius_cache import mobius_cache
from utils.partitions import (
    bottom,
    canonical_labels,
    partitions_of,
    refines,
    shape,
    top,
)

logger = logging.getLogger(__name__)

# Interval enumeration filters all of Π_n up to this size
FILTER_LIMIT = 6


@dataclass(frozen=True)
class IntervalProfile:
    """
    Block counts (b_1..b_ℓ(A)) of an interval [B, A], weakly decreasing.

    [B, A] is isomorphic to the product of the partition lattices Π_{b_j}.
    """
    counts: Tuple[int, ...]

    @property
    def key(self) -> Tuple[int, ...]:
        """Cache key: factors Π_1 are trivial and dropped"""
        return tuple(b for b in self.counts if b > 1)


def _check_same_size(b: SetPartition, a: SetPartition):
    if a.n != b.n:
        raise SizeMismatchError(
            f'Partitions of different sizes: {b.n} and {a.n}',
            {'left': b.text(), 'right': a.text()}
        )


def interval_profile(b: SetPartition, a: SetPartition) -> IntervalProfile:
    """Number of blocks of B inside each block of A"""
    _check_same_size(b, a)
    if not refines(b, a):
        raise NotComparableError(f'{b.text()} is not finer than {a.text()}',
                                 {'lower': b.text(), 'upper': a.text()})
    inside: Dict[int, set] = {}
    for rb, ra in zip(b.rgs, a.rgs):
        inside.setdefault(ra, set()).add(rb)
    return IntervalProfile(tuple(sorted((len(s) for s in inside.values()), reverse=True)))


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

def _interval_by_product(b: SetPartition, a: SetPartition) -> List[SetPartition]:
    """[B, A] as the product over blocks of A of the partitions of the B-blocks inside"""
    groups: Dict[int, List[int]] = {}
    for rb, ra in zip(b.rgs, a.rgs):
        group = groups.setdefault(ra, [])
        if rb not in group:
            group.append(rb)
    ordered = [groups[ra] for ra in sorted(groups)]

    result = []
    for choice in product(*(partitions_of(len(g)) for g in ordered)):
        label_of: Dict[int, Tuple[int, int]] = {}
        for j, (group, sub) in enumerate(zip(ordered, choice)):
            for position, rb in enumerate(group):
                label_of[rb] = (j, sub.rgs[position])
        result.append(SetPartition(canonical_labels([label_of[rb] for rb in b.rgs])))
    return sorted(result, key=SetPartition.sort_key)


def interval(b: SetPartition, a: SetPartition) -> List[SetPartition]:
    """All C with B ≤ C ≤ A in lexicographic rgs order; empty when B ≰ A"""
    _check_same_size(b, a)
    if not refines(b, a):
        return []
    if b.n <= FILTER_LIMIT:
        return [c for c in partitions_of(b.n) if refines(b, c) and refines(c, a)]
    return _interval_by_product(b, a)


@lru_cache(maxsize=None)
def lower_set(a: SetPartition) -> Tuple[SetPartition, ...]:
    """[0_n, A]"""
    return tuple(_interval_by_product(bottom(a.n), a))


@lru_cache(maxsize=None)
def upper_set(a: SetPartition) -> Tuple[SetPartition, ...]:
    """[A, 1_n]"""
    return tuple(_interval_by_product(a, top(a.n)))


# ---------------------------------------------------------------------------
# Möbius function
# ---------------------------------------------------------------------------

def _mobius_of_profile(key: Tuple[int, ...]) -> int:
    """μ(0_N, A) for A with consecutive blocks of the given sizes, by recursion"""
    if not key:
        return 1
    cached = mobius_cache.get(key)
    if cached is not None:
        return cached

    representative = SetPartition(tuple(j for j, size in enumerate(key) for _ in range(size)))
    total = 0
    for c in _interval_by_product(bottom(representative.n), representative):
        if c != representative:
            total += _mobius_of_profile(tuple(p for p in shape(c).parts if p > 1))
    value = -total

    mobius_cache.set(key, value)
    return value


def mobius(b: SetPartition, a: SetPartition) -> int:
    """
    μ(B, A) by the recursion μ(B,B)=1, μ(B,A) = −Σ_{B≤C<A} μ(B,C)

    Returns 0 when B ≰ A (incidence algebra convention).
    """
    _check_same_size(b, a)
    if not refines(b, a):
        return 0
    return _mobius_of_profile(interval_profile(b, a).key)


def mobius_product_form(b: SetPartition, a: SetPartition) -> int:
    """μ(B, A) = Π_j (−1)^{b_j−1} (b_j−1)! over the interval profile"""
    value = 1
    for count in interval_profile(b, a).counts:
        value *= (-1) ** (count - 1) * math.factorial(count - 1)
    return value

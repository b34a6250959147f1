"""
Partition lattice algebra models
Algebra elements of (kΠ_n, ∧ / ∨ / @), simple module labels and Grothendieck classes
"""
import enum
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from models.partition import SetPartition
from utils.errors import NegativeMultiplicityError, SizeMismatchError, TagMismatchError


class ProductTag(str, enum.Enum):
    """Product on the span of Π_n"""
    MEET = 'meet'
    JOIN = 'join'
    DIAG = 'diag'

    @property
    def module_letter(self) -> str:
        """V for meet, W for join, U for diag"""
        return {'meet': 'V', 'join': 'W', 'diag': 'U'}[self.value]


def check_tags(left: ProductTag, right: ProductTag):
    if left != right:
        raise TagMismatchError(f'Cannot combine {left.value} and {right.value}',
                               {'left': left.value, 'right': right.value})


class AlgebraElement:
    """Element of (kΠ_n, tag): sparse integer combination of partitions of [n]"""

    __slots__ = ('_tag', '_n', '_terms')

    def __init__(self, tag: ProductTag, n: int,
                 terms: Optional[Mapping[SetPartition, int]] = None):
        self._tag = ProductTag(tag)
        self._n = n
        self._terms: Dict[SetPartition, int] = {}
        for a, c in (terms or {}).items():
            self._accumulate(a, c)

    def _accumulate(self, a: SetPartition, c: int):
        if a.n != self._n:
            raise SizeMismatchError(f'Partition {a.text()} is not in Π_{self._n}',
                                    {'partition': a.text(), 'n': self._n})
        total = self._terms.get(a, 0) + c
        if total:
            self._terms[a] = total
        else:
            self._terms.pop(a, None)

    @classmethod
    def from_terms(cls, tag: ProductTag, n: int, terms: Iterable[Tuple[SetPartition, int]]):
        element = cls(tag, n)
        for a, c in terms:
            element._accumulate(a, c)
        return element

    @classmethod
    def basis(cls, tag: ProductTag, a: SetPartition) -> 'AlgebraElement':
        return cls(tag, a.n, {a: 1})

    @property
    def tag(self) -> ProductTag:
        return self._tag

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[SetPartition, int]:
        return dict(self._terms)

    def coefficient(self, a: SetPartition) -> int:
        return self._terms.get(a, 0)

    def items(self) -> Iterator[Tuple[SetPartition, int]]:
        for a in sorted(self._terms, key=SetPartition.sort_key):
            yield a, self._terms[a]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: 'AlgebraElement'):
        check_tags(self._tag, other._tag)
        if self._n != other._n:
            raise SizeMismatchError(f'Elements of Π_{self._n} and Π_{other._n}',
                                    {'left': self._n, 'right': other._n})

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        return AlgebraElement.from_terms(
            self._tag, self._n, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement.from_terms(self._tag, self._n, ((a, -c) for a, c in self._terms.items()))

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def __mul__(self, scalar: int) -> 'AlgebraElement':
        if not isinstance(scalar, int):
            return NotImplemented
        return AlgebraElement.from_terms(self._tag, self._n, ((a, scalar * c) for a, c in self._terms.items()))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self._tag, self._n, self._terms) == (other._tag, other._n, other._terms)

    def __hash__(self):
        return hash((self._tag, self._n, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for a, c in self.items():
            magnitude = '' if abs(c) == 1 else f'{abs(c)}*'
            parts.append(f"{'-' if c < 0 else '+'} {magnitude}[{a.text()}]")
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __repr__(self):
        return f'AlgebraElement({self._tag.value}, {self})'


@dataclass(frozen=True)
class SimpleModuleLabel:
    """One-dimensional simple module V_A (meet), W_A (join) or U_A (diag)"""
    tag: ProductTag
    partition: SetPartition

    def __post_init__(self):
        object.__setattr__(self, 'tag', ProductTag(self.tag))

    @property
    def n(self) -> int:
        return self.partition.n

    def __str__(self):
        return f'{self.tag.module_letter}[{self.partition.text()}]'


ModuleKey = Union[SetPartition, Tuple[SetPartition, SetPartition]]


def _key_order(key: ModuleKey):
    if isinstance(key, SetPartition):
        return (0, key.n, key.text())
    return (1, key[0].n, key[0].text(), key[1].n, key[1].text())


class ModuleSum:
    """
    Grothendieck class: non-negative combination of simple modules

    Keys are partitions (classes over one algebra) or ordered pairs of
    partitions (classes over kΠ_k ⊗ kΠ_{n−k}, as produced by restriction).
    """

    __slots__ = ('_tag', '_terms')

    def __init__(self, tag: ProductTag, terms: Optional[Mapping[ModuleKey, int]] = None):
        self._tag = ProductTag(tag)
        self._terms: Dict[ModuleKey, int] = {}
        for key, mult in (terms or {}).items():
            self._accumulate(key, mult)

    def _accumulate(self, key: ModuleKey, mult: int):
        if mult < 0:
            raise NegativeMultiplicityError(f'Negative multiplicity {mult} for {key}',
                                            {'multiplicity': mult})
        if mult:
            self._terms[key] = self._terms.get(key, 0) + mult

    @classmethod
    def from_terms(cls, tag: ProductTag, terms: Iterable[Tuple[ModuleKey, int]]) -> 'ModuleSum':
        s = cls(tag)
        for key, mult in terms:
            s._accumulate(key, mult)
        return s

    @classmethod
    def simple(cls, label: SimpleModuleLabel) -> 'ModuleSum':
        return cls(label.tag, {label.partition: 1})

    @property
    def tag(self) -> ProductTag:
        return self._tag

    @property
    def terms(self) -> Dict[ModuleKey, int]:
        return dict(self._terms)

    def multiplicity(self, key: ModuleKey) -> int:
        return self._terms.get(key, 0)

    def items(self) -> Iterator[Tuple[ModuleKey, int]]:
        for key in sorted(self._terms, key=_key_order):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def is_pair_sum(self) -> bool:
        return any(isinstance(key, tuple) for key in self._terms)

    def __add__(self, other: 'ModuleSum') -> 'ModuleSum':
        if not isinstance(other, ModuleSum):
            raise TypeError(f'Cannot combine ModuleSum with {type(other).__name__}')
        check_tags(self._tag, other._tag)
        return ModuleSum.from_terms(self._tag, list(self._terms.items()) + list(other._terms.items()))

    def __mul__(self, scalar: int) -> 'ModuleSum':
        if not isinstance(scalar, int):
            return NotImplemented
        return ModuleSum.from_terms(self._tag, ((k, scalar * m) for k, m in self._terms.items()))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleSum):
            return NotImplemented
        return self._tag == other._tag and self._terms == other._terms

    def __hash__(self):
        return hash((self._tag, frozenset(self._terms.items())))

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        if not self._terms:
            return '0'
        letter = self._tag.module_letter
        parts = []
        for key, mult in self.items():
            prefix = '' if mult == 1 else f'{mult}*'
            if isinstance(key, SetPartition):
                parts.append(f'{prefix}{letter}[{key.text()}]')
            else:
                parts.append(f'{prefix}{letter}[{key[0].text()}] (x) {letter}[{key[1].text()}]')
        return ' + '.join(parts)

    def __repr__(self):
        return f'ModuleSum({self._tag.value}, {self})'

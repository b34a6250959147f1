"""
NCSym element models
Sparse integer combinations of basis-tagged set partitions and of partition pairs
"""
import enum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from models.partition import SetPartition
from utils.errors import BasisMismatchError


class BasisTag(str, enum.Enum):
    """Bases of NCSym: monomial, power sum analogue, and the x basis"""
    M = 'm'
    P = 'p'
    X = 'x'


def _prune(terms: Iterable[Tuple[object, int]]) -> Dict[object, int]:
    out: Dict[object, int] = {}
    for key, coef in terms:
        total = out.get(key, 0) + coef
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _partition_order(a: SetPartition):
    """JSON term order: degree, then canonical text"""
    return (a.n, a.text())


class NCSymElement:
    """
    Element of NCSym in one basis

    Immutable: every operation returns a new element. Zero coefficients are
    never stored. Degrees may be mixed.
    """

    __slots__ = ('_basis', '_terms', '_hash')

    def __init__(self, basis: BasisTag, terms: Optional[Mapping[SetPartition, int]] = None):
        self._basis = BasisTag(basis)
        self._terms = _prune((terms or {}).items())
        self._hash = None

    @classmethod
    def from_terms(cls, basis: BasisTag, terms: Iterable[Tuple[SetPartition, int]]):
        """Build from (partition, coefficient) pairs, summing repeats"""
        element = cls(basis)
        element._terms = _prune(terms)
        return element

    @property
    def basis(self) -> BasisTag:
        return self._basis

    @property
    def terms(self) -> Dict[SetPartition, int]:
        return dict(self._terms)

    def coefficient(self, a: SetPartition) -> int:
        return self._terms.get(a, 0)

    def items(self) -> Iterator[Tuple[SetPartition, int]]:
        """Terms in canonical order"""
        for a in sorted(self._terms, key=_partition_order):
            yield a, self._terms[a]

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({a.n for a in self._terms}))

    def _check_basis(self, other: 'NCSymElement'):
        if not isinstance(other, NCSymElement):
            raise TypeError(f'Cannot combine NCSymElement with {type(other).__name__}')
        if other._basis != self._basis:
            raise BasisMismatchError(
                f'Cannot add elements in bases {self._basis.value} and {other._basis.value}',
                {'left': self._basis.value, 'right': other._basis.value}
            )

    def __add__(self, other: 'NCSymElement') -> 'NCSymElement':
        self._check_basis(other)
        return NCSymElement.from_terms(
            self._basis, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> 'NCSymElement':
        return NCSymElement.from_terms(self._basis, ((a, -c) for a, c in self._terms.items()))

    def __sub__(self, other: 'NCSymElement') -> 'NCSymElement':
        return self + (-other)

    def __mul__(self, scalar: int) -> 'NCSymElement':
        if not isinstance(scalar, int):
            return NotImplemented
        return NCSymElement.from_terms(self._basis, ((a, scalar * c) for a, c in self._terms.items()))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSymElement):
            return NotImplemented
        return self._basis == other._basis and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._basis, frozenset(self._terms.items())))
        return self._hash

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for a, c in self.items():
            sign = '-' if c < 0 else '+'
            magnitude = '' if abs(c) == 1 else f'{abs(c)}*'
            parts.append(f'{sign} {magnitude}{self._basis.value}[{a.text()}]')
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __repr__(self):
        return f'NCSymElement({self})'


class TensorElement:
    """Element of NCSym ⊗ NCSym (or kΠ ⊗ kΠ): sparse combination of partition pairs"""

    __slots__ = ('_basis', '_terms')

    def __init__(self, basis: Tuple[BasisTag, BasisTag],
                 terms: Optional[Mapping[Tuple[SetPartition, SetPartition], int]] = None):
        self._basis = (BasisTag(basis[0]), BasisTag(basis[1]))
        self._terms = _prune((terms or {}).items())

    @classmethod
    def from_terms(cls, basis: Tuple[BasisTag, BasisTag],
                   terms: Iterable[Tuple[Tuple[SetPartition, SetPartition], int]]):
        element = cls(basis)
        element._terms = _prune(terms)
        return element

    @property
    def basis(self) -> Tuple[BasisTag, BasisTag]:
        return self._basis

    @property
    def terms(self) -> Dict[Tuple[SetPartition, SetPartition], int]:
        return dict(self._terms)

    def coefficient(self, left: SetPartition, right: SetPartition) -> int:
        return self._terms.get((left, right), 0)

    def items(self) -> Iterator[Tuple[Tuple[SetPartition, SetPartition], int]]:
        order = sorted(self._terms, key=lambda k: (_partition_order(k[0]), _partition_order(k[1])))
        for key in order:
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: 'TensorElement') -> 'TensorElement':
        if not isinstance(other, TensorElement):
            raise TypeError(f'Cannot combine TensorElement with {type(other).__name__}')
        if other._basis != self._basis:
            raise BasisMismatchError(
                'Cannot add tensors in different bases',
                {'left': [t.value for t in self._basis], 'right': [t.value for t in other._basis]}
            )
        return TensorElement.from_terms(
            self._basis, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> 'TensorElement':
        return TensorElement.from_terms(self._basis, ((k, -c) for k, c in self._terms.items()))

    def __sub__(self, other: 'TensorElement') -> 'TensorElement':
        return self + (-other)

    def __mul__(self, scalar: int) -> 'TensorElement':
        if not isinstance(scalar, int):
            return NotImplemented
        return TensorElement.from_terms(self._basis, ((k, scalar * c) for k, c in self._terms.items()))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._basis == other._basis and self._terms == other._terms

    def __hash__(self):
        return hash((self._basis, frozenset(self._terms.items())))

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        if not self._terms:
            return '0'
        left_tag, right_tag = (t.value for t in self._basis)
        parts = []
        for (a, b), c in self.items():
            magnitude = '' if abs(c) == 1 else f'{abs(c)}*'
            parts.append(f"{'-' if c < 0 else '+'} {magnitude}{left_tag}[{a.text()}] (x) {right_tag}[{b.text()}]")
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[2:]

    def __repr__(self):
        return f'TensorElement({self})'

"""
Noncommutative polynomial models
Words over a finite alphabet x_1..x_n, sparse polynomials, and words over the
pair alphabet {x_i y_j}
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from utils.errors import SizeMismatchError


@dataclass(frozen=True)
class NCWord:
    """x_{i_1} x_{i_2} ... x_{i_m}; letters are one-based variable indices"""
    letters: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))
        if any(i < 1 for i in self.letters):
            raise ValueError(f'Variable indices start at 1: {self.letters}')

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: 'NCWord') -> 'NCWord':
        return NCWord(self.letters + other.letters)

    def fits(self, alphabet: int) -> bool:
        return all(i <= alphabet for i in self.letters)

    def __str__(self):
        return ''.join(f'x{i}' for i in self.letters) or '1'


@dataclass(frozen=True)
class PairWord:
    """(x_{i_1} y_{j_1}) ... (x_{i_m} y_{j_m}), letters ordered lexicographically on (i, j)"""
    letters: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(tuple(p) for p in self.letters))

    def project(self) -> Tuple[NCWord, NCWord]:
        """x-word and y-word once x's commute with y's"""
        return (NCWord(tuple(i for i, _ in self.letters)),
                NCWord(tuple(j for _, j in self.letters)))

    def __str__(self):
        return ''.join(f'(x{i}y{j})' for i, j in self.letters) or '1'


class NCPolynomial:
    """Element of k<x_1..x_n>: sparse integer combination of words"""

    __slots__ = ('_alphabet', '_terms')

    def __init__(self, alphabet: int, terms: Optional[Mapping[NCWord, int]] = None):
        if alphabet < 0:
            raise ValueError(f'Alphabet size must be non-negative, got {alphabet}')
        self._alphabet = alphabet
        self._terms: Dict[NCWord, int] = {}
        for word, c in (terms or {}).items():
            self._accumulate(word, c)

    def _accumulate(self, word: NCWord, c: int):
        if not word.fits(self._alphabet):
            raise SizeMismatchError(f'Word {word} is not over x_1..x_{self._alphabet}',
                                    {'word': list(word.letters), 'alphabet': self._alphabet})
        total = self._terms.get(word, 0) + c
        if total:
            self._terms[word] = total
        else:
            self._terms.pop(word, None)

    @classmethod
    def from_terms(cls, alphabet: int, terms: Iterable[Tuple[NCWord, int]]) -> 'NCPolynomial':
        poly = cls(alphabet)
        for word, c in terms:
            poly._accumulate(word, c)
        return poly

    @classmethod
    def one(cls, alphabet: int) -> 'NCPolynomial':
        return cls(alphabet, {NCWord(()): 1})

    @property
    def alphabet(self) -> int:
        return self._alphabet

    @property
    def terms(self) -> Dict[NCWord, int]:
        return dict(self._terms)

    def coefficient(self, word: NCWord) -> int:
        return self._terms.get(word, 0)

    def items(self) -> Iterator[Tuple[NCWord, int]]:
        for word in sorted(self._terms, key=lambda w: (len(w), w.letters)):
            yield word, self._terms[word]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: 'NCPolynomial') -> 'NCPolynomial':
        if self._alphabet != other._alphabet:
            raise SizeMismatchError('Polynomials over different alphabets',
                                    {'left': self._alphabet, 'right': other._alphabet})
        return NCPolynomial.from_terms(
            self._alphabet, list(self._terms.items()) + list(other._terms.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self._alphabet == other._alphabet and self._terms == other._terms

    def __hash__(self):
        return hash((self._alphabet, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(str(w) if c == 1 else f'{c}*{w}' for w, c in self.items())

    def __repr__(self):
        return f'NCPolynomial({self._alphabet}, {self})'

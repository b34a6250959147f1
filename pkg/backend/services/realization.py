"""
Realization oracle
Brute-force expansion of m_A over a finite noncommuting alphabet, used to check
the NCSym product and internal coproduct independently of the lattice formulas
"""
import logging
import math
from itertools import permutations
from typing import Dict, Sequence, Tuple

from models.element import BasisTag, NCSymElement, TensorElement
from models.partition import SetPartition
from models.word import NCPolynomial, NCWord, PairWord
from utils.errors import AlphabetTooSmallError, NotInvariantError, SizeMismatchError
from utils.partitions import type_of

logger = logging.getLogger(__name__)


def falling_factorial(n: int, k: int) -> int:
    """n (n−1) ... (n−k+1); zero when k > n"""
    return math.perm(n, k) if k <= n else 0


def expand_m(a: SetPartition, n: int) -> NCPolynomial:
    """
    m_A[X_n]: every word x_{i_1}..x_{i_m} of type A

    Blocks are sent injectively to letters, so the result has n^{(ℓ(A))} terms
    and vanishes when ℓ(A) > n.
    """
    if n < 0:
        raise ValueError(f'Alphabet size must be non-negative, got {n}')
    words = (
        NCWord(tuple(letters[r] for r in a.rgs))
        for letters in permutations(range(1, n + 1), a.length)
    )
    return NCPolynomial.from_terms(n, ((w, 1) for w in words))


def permute(sigma: Sequence[int], p: NCPolynomial) -> NCPolynomial:
    """σ(x_{i_1}..x_{i_k}) = x_{σ(i_1)}..x_{σ(i_k)}; sigma[i-1] is the image of i"""
    sigma = tuple(sigma)
    if len(sigma) != p.alphabet:
        raise SizeMismatchError(f'Permutation of {len(sigma)} letters on alphabet of {p.alphabet}',
                                {'permutation': list(sigma), 'alphabet': p.alphabet})
    if sorted(sigma) != list(range(1, p.alphabet + 1)):
        raise ValueError(f'Not a permutation of 1..{p.alphabet}: {sigma}')
    return NCPolynomial.from_terms(
        p.alphabet,
        ((NCWord(tuple(sigma[i - 1] for i in w.letters)), c) for w, c in p.items())
    )


def nc_multiply(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    """Concatenation product of words, extended bilinearly"""
    if p.alphabet != q.alphabet:
        raise SizeMismatchError('Polynomials over different alphabets',
                                {'left': p.alphabet, 'right': q.alphabet})
    return NCPolynomial.from_terms(
        p.alphabet,
        ((u + v, c1 * c2) for u, c1 in p.items() for v, c2 in q.items())
    )


def type_decompose_report(p: NCPolynomial) -> Tuple[NCSymElement, bool]:
    """
    Decompose an S_n-invariant polynomial into the m basis

    Returns (element, partial). partial is True when some type uses all n
    letters, so types with more blocks than letters could have vanished
    unseen.

    Raises:
        NotInvariantError: an orbit is missing words or carries unequal coefficients
    """
    by_type: Dict[SetPartition, Dict[int, int]] = {}
    for word, c in p.items():
        counts = by_type.setdefault(type_of(word.letters), {})
        counts[c] = counts.get(c, 0) + 1

    terms = []
    partial = False
    for a, counts in by_type.items():
        expected = falling_factorial(p.alphabet, a.length)
        if len(counts) != 1 or sum(counts.values()) != expected:
            raise NotInvariantError(
                f'Words of type {a.text()} do not form a full orbit with one coefficient',
                {'type': a.text(), 'coefficients': sorted(counts), 'words': sum(counts.values()),
                 'orbit_size': expected}
            )
        terms.append((a, next(iter(counts))))
        if a.length == p.alphabet:
            partial = True

    if partial:
        logger.debug(f'⚠️ Decomposition over {p.alphabet} letters may miss longer types')
    return NCSymElement.from_terms(BasisTag.M, terms), partial


def type_decompose(p: NCPolynomial) -> NCSymElement:
    return type_decompose_report(p)[0]


def pair_alphabet(n_x: int, n_y: int) -> Tuple[Tuple[int, int], ...]:
    """{x_i y_j} in lexicographic order on (i, j)"""
    return tuple((i, j) for i in range(1, n_x + 1) for j in range(1, n_y + 1))


def expand_m_xy(a: SetPartition, n_x: int, n_y: int) -> TensorElement:
    """
    m_A[XY] written as Σ m_B[X] m_C[Y]

    Each pair word of type A projects to an x-word and a y-word; counting the
    projections by type and dividing by the orbit sizes gives the m ⊗ m
    coefficients.

    Raises:
        AlphabetTooSmallError: n_x or n_y is below ℓ(A)
    """
    if n_x < a.length or n_y < a.length:
        raise AlphabetTooSmallError(
            f'Alphabets of sizes {n_x}, {n_y} truncate types of length {a.length}',
            {'n_x': n_x, 'n_y': n_y, 'length': a.length}
        )
    letters = pair_alphabet(n_x, n_y)
    counts: Dict[Tuple[SetPartition, SetPartition], int] = {}
    for chosen in permutations(letters, a.length):
        word = PairWord(tuple(chosen[r] for r in a.rgs))
        x_word, y_word = word.project()
        key = (type_of(x_word.letters), type_of(y_word.letters))
        counts[key] = counts.get(key, 0) + 1

    terms = []
    for (b, c), count in counts.items():
        orbit = falling_factorial(n_x, b.length) * falling_factorial(n_y, c.length)
        terms.append(((b, c), count // orbit))
    return TensorElement.from_terms((BasisTag.M, BasisTag.M), terms)

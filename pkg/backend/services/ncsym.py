"""
NCSym service
Products, external and internal coproducts, counits, basis changes between
m, p and x, and the pairing with kΠ_n
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Tuple, Union

from models.element import BasisTag, NCSymElement, TensorElement
from models.module import AlgebraElement
from models.partition import SetPartition
from utils.errors import BasisMismatchError
from utils.lattice import lower_set, mobius, upper_set
from utils.partitions import (
    EMPTY,
    concat,
    concat_fiber,
    join,
    meet,
    partitions_of,
    restrict,
    top,
)

logger = logging.getLogger(__name__)

M, P, X = BasisTag.M, BasisTag.P, BasisTag.X


# ---------------------------------------------------------------------------
# Linear structure
# ---------------------------------------------------------------------------

def basis_vector(tag: BasisTag, a: SetPartition) -> NCSymElement:
    """m_A, p_A or x_A"""
    return NCSymElement(tag, {a: 1})


def zero(tag: BasisTag) -> NCSymElement:
    return NCSymElement(tag)


def add(e1: NCSymElement, e2: NCSymElement) -> NCSymElement:
    return e1 + e2


def negate(e: NCSymElement) -> NCSymElement:
    return -e


def scalar_multiply(c: int, e: NCSymElement) -> NCSymElement:
    return c * e


def degree_components(e: NCSymElement) -> Dict[int, NCSymElement]:
    """Homogeneous components keyed by degree"""
    by_degree: Dict[int, List[Tuple[SetPartition, int]]] = {}
    for a, c in e.items():
        by_degree.setdefault(a.n, []).append((a, c))
    return {d: NCSymElement.from_terms(e.basis, terms) for d, terms in sorted(by_degree.items())}


def _check_same_basis(*tags: BasisTag):
    if len(set(tags)) > 1:
        raise BasisMismatchError(
            f"Operands in different bases: {', '.join(t.value for t in tags)}",
            {'bases': [t.value for t in tags]}
        )


# ---------------------------------------------------------------------------
# Change of basis
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _elementary_change(source: BasisTag, target: BasisTag,
                       a: SetPartition) -> Tuple[Tuple[SetPartition, int], ...]:
    """One edge of the m - p - x path, as (partition, coefficient) pairs"""
    if (source, target) == (P, M):
        # p_A = Σ_{B≥A} m_B
        return tuple((b, 1) for b in upper_set(a))
    if (source, target) == (M, P):
        # m_A = Σ_{B≥A} μ(A,B) p_B
        return tuple((b, mobius(a, b)) for b in upper_set(a))
    if (source, target) == (X, P):
        # x_A = Σ_{B≤A} μ(B,A) p_B
        return tuple((b, mobius(b, a)) for b in lower_set(a))
    if (source, target) == (P, X):
        # p_A = Σ_{B≤A} x_B
        return tuple((b, 1) for b in lower_set(a))
    raise ValueError(f'No elementary change {source.value} -> {target.value}')


@lru_cache(maxsize=None)
def _change(source: BasisTag, target: BasisTag,
            a: SetPartition) -> Tuple[Tuple[SetPartition, int], ...]:
    """Expansion of the basis vector source_A in the target basis"""
    if source == target:
        return ((a, 1),)
    if P in (source, target):
        return _elementary_change(source, target, a)
    # m <-> x goes through p
    acc: Dict[SetPartition, int] = {}
    for b, c in _elementary_change(source, P, a):
        for d, c2 in _elementary_change(P, target, b):
            acc[d] = acc.get(d, 0) + c * c2
    return tuple((d, c) for d, c in acc.items() if c)


def convert(e: NCSymElement, target: BasisTag) -> NCSymElement:
    """Exact change of basis"""
    target = BasisTag(target)
    if e.basis == target:
        return e
    return NCSymElement.from_terms(
        target,
        ((b, c * c2) for a, c in e.items() for b, c2 in _change(e.basis, target, a))
    )


def convert_tensor(t: TensorElement, target: Tuple[BasisTag, BasisTag]) -> TensorElement:
    """Legwise change of basis"""
    left_tag, right_tag = BasisTag(target[0]), BasisTag(target[1])
    if t.basis == (left_tag, right_tag):
        return t
    # One leg at a time: the half-converted sum collapses before the right
    # leg expands, so the cost is |terms|·(|L| + |R|) rather than |terms|·|L|·|R|
    half: Dict[Tuple[SetPartition, SetPartition], int] = {}
    for (a, b), c in t.terms.items():
        for la, lc in _change(t.basis[0], left_tag, a):
            half[(la, b)] = half.get((la, b), 0) + c * lc
    return TensorElement.from_terms(
        (left_tag, right_tag),
        (((la, rb), c * rc) for (la, b), c in half.items() if c
         for rb, rc in _change(t.basis[1], right_tag, b))
    )


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------

def _multiply_basis(tag: BasisTag, a: SetPartition, b: SetPartition) -> Iterable[SetPartition]:
    if tag == M:
        # m_A m_B = Σ_{C ∧ (1_n|1_m) = A|B} m_C
        return concat_fiber(a, b)
    # p_A p_B = p_{A|B}, x_A x_B = x_{A|B}
    return (concat(a, b),)


def multiply(e1: NCSymElement, e2: NCSymElement) -> NCSymElement:
    """Bilinear product; both operands must share a basis"""
    _check_same_basis(e1.basis, e2.basis)
    terms = []
    for a, c1 in e1.items():
        for b, c2 in e2.items():
            terms.extend((c, c1 * c2) for c in _multiply_basis(e1.basis, a, b))
    return NCSymElement.from_terms(e1.basis, terms)


def multiply_tensors(t1: TensorElement, t2: TensorElement) -> TensorElement:
    """(a⊗b)(c⊗d) = ac⊗bd"""
    _check_same_basis(t1.basis[0], t2.basis[0])
    _check_same_basis(t1.basis[1], t2.basis[1])
    left_tag, right_tag = t1.basis
    terms = []
    for (a, b), c1 in t1.items():
        for (c, d), c2 in t2.items():
            for left in _multiply_basis(left_tag, a, c):
                for right in _multiply_basis(right_tag, b, d):
                    terms.append(((left, right), c1 * c2))
    return TensorElement.from_terms(t1.basis, terms)


# ---------------------------------------------------------------------------
# Coproducts
# ---------------------------------------------------------------------------

def _subset_splits(a: SetPartition) -> Iterable[Tuple[SetPartition, SetPartition]]:
    """(A_S, A_{S^c}) for every S ⊆ [ℓ(A)]"""
    indices = range(1, a.length + 1)
    for size in range(a.length + 1):
        for chosen in combinations(indices, size):
            rest = [i for i in indices if i not in chosen]
            yield restrict(a, chosen), restrict(a, rest)


def coproduct_external(e: NCSymElement) -> TensorElement:
    """Δ(m_A) = Σ_S m_{A_S} ⊗ m_{A_{S^c}}; the same index rule for p"""
    if e.basis == X:
        raise BasisMismatchError(
            'No closed formula for the external coproduct of the x basis; '
            'use coproduct_external_x',
            {'basis': e.basis.value}
        )
    terms = []
    for a, c in e.items():
        terms.extend((pair, c) for pair in _subset_splits(a))
    return TensorElement.from_terms((e.basis, e.basis), terms)


def coproduct_external_x(e: NCSymElement) -> TensorElement:
    """Δ on the x basis, computed through the m basis and converted back legwise"""
    if e.basis != X:
        raise BasisMismatchError('coproduct_external_x expects an x-basis element',
                                 {'basis': e.basis.value})
    return convert_tensor(coproduct_external(convert(e, M)), (X, X))


@lru_cache(maxsize=None)
def _internal_basis(tag: BasisTag, a: SetPartition) -> Tuple[Tuple[SetPartition, SetPartition], ...]:
    if tag == M:
        # Δ⊙(m_A) = Σ_{B∧C=A} m_B ⊗ m_C
        above = upper_set(a)
        return tuple((b, c) for b in above for c in above if meet(b, c) == a)
    if tag == P:
        return ((a, a),)
    # Δ⊙(x_A) = Σ_{B∨C=A} x_B ⊗ x_C
    below = lower_set(a)
    return tuple((b, c) for b in below for c in below if join(b, c) == a)


def coproduct_internal(e: NCSymElement) -> TensorElement:
    """Internal (Kronecker) coproduct Δ⊙ in the element's own basis"""
    terms = []
    for a, c in e.items():
        terms.extend((pair, c) for pair in _internal_basis(e.basis, a))
    return TensorElement.from_terms((e.basis, e.basis), terms)


# ---------------------------------------------------------------------------
# Counits and pairing
# ---------------------------------------------------------------------------

def counit(e: NCSymElement) -> int:
    """ε: coefficient of m_{} after conversion to the m basis"""
    return convert(e, M).coefficient(EMPTY)


def counit_internal(e: NCSymElement) -> int:
    """ε⊙(m_A) = [A = 1_n], the counit of the internal coproduct"""
    return sum(c for a, c in convert(e, M).items() if a == top(a.n))


def pair(e: NCSymElement, a: Union[AlgebraElement, SetPartition]) -> int:
    """⟨F, a⟩ with ⟨m_A, B⟩ = [A = B]"""
    terms = {a: 1} if isinstance(a, SetPartition) else a.terms
    in_m = convert(e, M)
    return sum(c * in_m.coefficient(b) for b, c in terms.items())


def pair_tensor(t: TensorElement, left: SetPartition, right: SetPartition) -> int:
    """⟨t, B⊗C⟩ as the product of the leg pairings"""
    return convert_tensor(t, (M, M)).coefficient(left, right)


# ---------------------------------------------------------------------------
# Antipode obstruction for Δ⊙
# ---------------------------------------------------------------------------

def antipode_obstruction(max_degree: int = 3) -> bool:
    """
    True when μ∘(id⊗S)∘Δ⊙(m_1) = ε⊙(m_1)·m_{} has no solution S(m_1) of degree ≤ max_degree

    Δ⊙(m_1) = m_1⊗m_1, so the equation reads m_1·S(m_1) = m_{}. The m_{}
    coefficient of the left side is linear in S(m_1); the system is
    infeasible exactly when every basis product m_1·m_B misses m_{}.
    """
    one = SetPartition((0,))
    delta = coproduct_internal(basis_vector(M, one))
    if delta != TensorElement((M, M), {(one, one): 1}):
        return False
    target = counit_internal(basis_vector(M, one))
    for degree in range(max_degree + 1):
        for b in partitions_of(degree):
            product = multiply(basis_vector(M, one), basis_vector(M, b))
            if product.coefficient(EMPTY):
                return False
    infeasible = target != 0
    logger.debug(f'Antipode equation infeasible up to degree {max_degree}: {infeasible}')
    return infeasible

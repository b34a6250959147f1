"""
Partition lattice algebras
The algebras (kΠ_n, ∧), (kΠ_n, ∨) and (kΠ_n, @), their primitive orthogonal
idempotents, one-dimensional simple modules, tensor / induction / restriction
on Grothendieck classes, characters and the Frobenius maps into NCSym
"""
import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

from models.element import BasisTag, NCSymElement, TensorElement
from models.module import (
    AlgebraElement,
    ModuleSum,
    ProductTag,
    SimpleModuleLabel,
    check_tags,
)
from models.partition import SetPartition
from utils.errors import MalformedInputError, RangeError, SizeMismatchError
from utils.lattice import lower_set, mobius, upper_set
from utils.partitions import (
    bottom,
    concat,
    concat_fiber,
    join,
    meet,
    partitions_of,
    refines,
    split,
    top,
)

logger = logging.getLogger(__name__)

MEET, JOIN, DIAG = ProductTag.MEET, ProductTag.JOIN, ProductTag.DIAG

# Grothendieck class -> NCSym basis under the Frobenius map
FROBENIUS_BASIS = {
    MEET: BasisTag.X,
    JOIN: BasisTag.M,
    DIAG: BasisTag.P,
}


def _check_same_n(a: SetPartition, b: SetPartition):
    if a.n != b.n:
        raise SizeMismatchError(f'Partitions of different sizes: {a.n} and {b.n}',
                                {'left': a.text(), 'right': b.text()})


# ---------------------------------------------------------------------------
# Algebra structure
# ---------------------------------------------------------------------------

def _basis_product(tag: ProductTag, a: SetPartition, b: SetPartition) -> Optional[SetPartition]:
    if tag == MEET:
        return meet(a, b)
    if tag == JOIN:
        return join(a, b)
    return a if a == b else None


def alg_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear product of the tagged algebra"""
    check_tags(a.tag, b.tag)
    if a.n != b.n:
        raise SizeMismatchError(f'Elements of Π_{a.n} and Π_{b.n}', {'left': a.n, 'right': b.n})
    terms = []
    for x, c1 in a.items():
        for y, c2 in b.items():
            z = _basis_product(a.tag, x, y)
            if z is not None:
                terms.append((z, c1 * c2))
    return AlgebraElement.from_terms(a.tag, a.n, terms)


def unit_element(tag: ProductTag, n: int) -> AlgebraElement:
    """
    Unit of the algebra on Π_n

    1_n for meet and 0_n for join. The diagonal algebra has no unit among its
    basis elements; its unit is the sum of all of them.
    """
    tag = ProductTag(tag)
    if tag == MEET:
        return AlgebraElement.basis(tag, top(n))
    if tag == JOIN:
        return AlgebraElement.basis(tag, bottom(n))
    return AlgebraElement.from_terms(tag, n, ((a, 1) for a in partitions_of(n)))


def idempotent(tag: ProductTag, a: SetPartition) -> AlgebraElement:
    """
    Primitive orthogonal idempotent indexed by A

    meet: e_A = Σ_{B≤A} μ(B,A) B
    join: f_A = Σ_{B≥A} μ(A,B) B
    diag: A
    """
    tag = ProductTag(tag)
    if tag == MEET:
        return AlgebraElement.from_terms(tag, a.n, ((b, mobius(b, a)) for b in lower_set(a)))
    if tag == JOIN:
        return AlgebraElement.from_terms(tag, a.n, ((b, mobius(a, b)) for b in upper_set(a)))
    return AlgebraElement.basis(tag, a)


def embed(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """ρ_{n,m}(a ⊗ b): linear extension of concatenation"""
    check_tags(a.tag, b.tag)
    return AlgebraElement.from_terms(
        a.tag, a.n + b.n,
        ((concat(x, y), c1 * c2) for x, c1 in a.items() for y, c2 in b.items())
    )


def is_unital_embedding(tag: ProductTag, n: int, m: int) -> bool:
    """Whether ρ_{n,m} sends unit ⊗ unit to the unit (tower versus semi-tower)"""
    tag = ProductTag(tag)
    return embed(unit_element(tag, n), unit_element(tag, m)) == unit_element(tag, n + m)


def idempotent_concat_identity(tag: ProductTag, a: SetPartition,
                               b: SetPartition) -> Tuple[AlgebraElement, AlgebraElement]:
    """
    Both sides of the idempotent concatenation identity

    Returns (ρ(idem_A ⊗ idem_B), expected) where expected is e_{A|B} for meet,
    Σ_{C∧(1_n|1_m)=A|B} f_C for join and the basis element A|B for diag.
    """
    tag = ProductTag(tag)
    lhs = embed(idempotent(tag, a), idempotent(tag, b))
    if tag == JOIN:
        rhs = AlgebraElement(tag, a.n + b.n)
        for c in concat_fiber(a, b):
            rhs = rhs + idempotent(tag, c)
    else:
        rhs = idempotent(tag, concat(a, b))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Simple modules and characters
# ---------------------------------------------------------------------------

def act_on_simple(tag: ProductTag, c: SetPartition, label: SimpleModuleLabel) -> int:
    """Scalar by which the basis element C acts on the one-dimensional simple module"""
    tag = ProductTag(tag)
    check_tags(tag, label.tag)
    a = label.partition
    _check_same_n(c, a)
    if tag == MEET:
        return int(refines(a, c))
    if tag == JOIN:
        return int(refines(c, a))
    return int(c == a)


def act_element_on_simple(x: AlgebraElement, label: SimpleModuleLabel) -> int:
    return sum(coef * act_on_simple(x.tag, c, label) for c, coef in x.items())


def character(tag: ProductTag, b: SetPartition, a: SetPartition) -> int:
    """χ of the simple module labelled B evaluated at the basis element A"""
    tag = ProductTag(tag)
    return act_on_simple(tag, a, SimpleModuleLabel(tag, b))


# ---------------------------------------------------------------------------
# Tensor product of classes
# ---------------------------------------------------------------------------

def tensor_simple(tag: ProductTag, a: SetPartition, b: SetPartition) -> ModuleSum:
    """
    Inner tensor product of two simple classes

    V_A ⊙ V_B = V_{A∨B}, W_A ⊙ W_B = W_{A∧B}, U_A ⊙ U_B = δ_{A,B} U_A.
    Classes of different degree multiply to zero.
    """
    tag = ProductTag(tag)
    if a.n != b.n:
        return ModuleSum(tag)
    if tag == MEET:
        return ModuleSum(tag, {join(a, b): 1})
    if tag == JOIN:
        return ModuleSum(tag, {meet(a, b): 1})
    return ModuleSum(tag, {a: 1} if a == b else {})


def tensor_sums(s: ModuleSum, t: ModuleSum) -> ModuleSum:
    check_tags(s.tag, t.tag)
    result = ModuleSum(s.tag)
    for a, m1 in s.items():
        for b, m2 in t.items():
            result = result + (m1 * m2) * tensor_simple(s.tag, a, b)
    return result


def tensor_pair_sums(s: ModuleSum, t: ModuleSum) -> ModuleSum:
    """⊙ on classes over Π_k × Π_{n−k}, componentwise"""
    check_tags(s.tag, t.tag)
    terms = []
    for (a1, a2), m1 in s.items():
        for (b1, b2), m2 in t.items():
            for c1, n1 in tensor_simple(s.tag, a1, b1).items():
                for c2, n2 in tensor_simple(s.tag, a2, b2).items():
                    terms.append(((c1, c2), m1 * m2 * n1 * n2))
    return ModuleSum.from_terms(s.tag, terms)


# ---------------------------------------------------------------------------
# Induction and restriction
# ---------------------------------------------------------------------------

def induct(tag: ProductTag, label_a: SimpleModuleLabel, label_b: SimpleModuleLabel) -> ModuleSum:
    """
    Ind_{n,m}(label_a ⊗ label_b)

    meet and diag concatenate the labels; join sums W_C over the C with
    C ∧ (1_n|1_m) = A|B.
    """
    tag = ProductTag(tag)
    check_tags(tag, label_a.tag)
    check_tags(tag, label_b.tag)
    a, b = label_a.partition, label_b.partition
    if tag == JOIN:
        return ModuleSum.from_terms(tag, ((c, 1) for c in concat_fiber(a, b)))
    return ModuleSum(tag, {concat(a, b): 1})


def induct_sums(s: ModuleSum, t: ModuleSum) -> ModuleSum:
    check_tags(s.tag, t.tag)
    result = ModuleSum(s.tag)
    for a, m1 in s.items():
        for b, m2 in t.items():
            product_class = induct(s.tag, SimpleModuleLabel(s.tag, a), SimpleModuleLabel(s.tag, b))
            result = result + (m1 * m2) * product_class
    return result


def multiply_pair_sums(s: ModuleSum, t: ModuleSum) -> ModuleSum:
    """Induction product on pair classes: (A⊗B)(C⊗D) = Ind(A⊗C) ⊗ Ind(B⊗D)"""
    check_tags(s.tag, t.tag)
    tag = s.tag
    terms = []
    for (a1, a2), m1 in s.items():
        for (b1, b2), m2 in t.items():
            left = induct(tag, SimpleModuleLabel(tag, a1), SimpleModuleLabel(tag, b1))
            right = induct(tag, SimpleModuleLabel(tag, a2), SimpleModuleLabel(tag, b2))
            for c1, n1 in left.items():
                for c2, n2 in right.items():
                    terms.append(((c1, c2), m1 * m2 * n1 * n2))
    return ModuleSum.from_terms(tag, terms)


def restrict(tag: ProductTag, k: int, label: SimpleModuleLabel) -> ModuleSum:
    """
    Res^{n}_{k,n−k} of a simple class, as a class over pairs

    meet and diag: the single pair (B, C) when A = B|C, zero otherwise.
    join: always the single pair with B|C = A ∧ (1_k|1_{n−k}).
    """
    tag = ProductTag(tag)
    check_tags(tag, label.tag)
    a = label.partition
    if not 0 <= k <= a.n:
        raise RangeError(f'Cut {k} outside [0, {a.n}]', {'k': k, 'n': a.n})
    if tag == JOIN:
        a = meet(a, concat(top(k), top(a.n - k)))
    pieces = split(a, k)
    if pieces is None:
        return ModuleSum(tag)
    return ModuleSum(tag, {pieces: 1})


def coproduct_restriction(tag: ProductTag, label: SimpleModuleLabel) -> ModuleSum:
    """Δ(M) = Σ_{k=0}^{n} Res_{k,n−k} M"""
    result = ModuleSum(tag)
    for k in range(label.n + 1):
        result = result + restrict(tag, k, label)
    return result


def coproduct_restriction_sum(s: ModuleSum) -> ModuleSum:
    result = ModuleSum(s.tag)
    for a, mult in s.items():
        result = result + mult * coproduct_restriction(s.tag, SimpleModuleLabel(s.tag, a))
    return result


def restrict_by_projector(tag: ProductTag, k: int, label: SimpleModuleLabel) -> ModuleSum:
    """
    Generalized restriction Res_ρ M = {m : ρ(1)m = m}

    Computed from the action alone: the image of the unit of Π_k ⊗ Π_{n−k}
    either kills the one-dimensional module or fixes it, and in the second
    case the character of Π_k × Π_{n−k} acting through ρ picks out the pair label.
    """
    tag = ProductTag(tag)
    n = label.n
    if not 0 <= k <= n:
        raise RangeError(f'Cut {k} outside [0, {n}]', {'k': k, 'n': n})
    projector = embed(unit_element(tag, k), unit_element(tag, n - k))
    if act_element_on_simple(projector, label) == 0:
        return ModuleSum(tag)

    lefts, rights = partitions_of(k), partitions_of(n - k)
    observed = {(b, c): act_on_simple(tag, concat(b, c), label) for b, c in product(lefts, rights)}
    matches = []
    for b_label, c_label in product(lefts, rights):
        expected = {
            (b, c): act_on_simple(tag, b, SimpleModuleLabel(tag, b_label))
            * act_on_simple(tag, c, SimpleModuleLabel(tag, c_label))
            for b, c in observed
        }
        if expected == observed:
            matches.append((b_label, c_label))
    return ModuleSum.from_terms(tag, ((pair, 1) for pair in matches))


def internal_coproduct(tag: ProductTag, label: SimpleModuleLabel) -> ModuleSum:
    """
    Coproduct dual to ⊙

    meet: Σ_{A∨B=C} V_A⊗V_B, join: Σ_{B∧C=A} W_B⊗W_C, diag: U_A⊗U_A
    """
    tag = ProductTag(tag)
    a = label.partition
    if tag == MEET:
        below = lower_set(a)
        pairs = [(b, c) for b in below for c in below if join(b, c) == a]
    elif tag == JOIN:
        above = upper_set(a)
        pairs = [(b, c) for b in above for c in above if meet(b, c) == a]
    else:
        pairs = [(a, a)]
    return ModuleSum.from_terms(tag, ((pair, 1) for pair in pairs))


def find_incompatibility_witness(tag: ProductTag, max_n: int) -> Optional[Dict]:
    """
    Smallest (x, y) with Δ(Ind(x⊗y)) ≠ Δ(x)·Δ(y) under the induction product

    Searches total degree 0..max_n in canonical order; None when every pair
    in range is compatible.
    """
    tag = ProductTag(tag)
    for degree in range(max_n + 1):
        for n in range(degree + 1):
            for x, y in product(partitions_of(n), partitions_of(degree - n)):
                lx, ly = SimpleModuleLabel(tag, x), SimpleModuleLabel(tag, y)
                lhs = coproduct_restriction_sum(induct(tag, lx, ly))
                rhs = multiply_pair_sums(coproduct_restriction(tag, lx), coproduct_restriction(tag, ly))
                if lhs != rhs:
                    logger.debug(f'⚠️ Incompatibility witness for {tag.value}: {lx} (x) {ly}')
                    return {
                        'algebra': tag.value,
                        'degree': degree,
                        'left': x,
                        'right': y,
                        'coproduct_of_product': lhs,
                        'product_of_coproducts': rhs,
                    }
    return None


# ---------------------------------------------------------------------------
# Frobenius map
# ---------------------------------------------------------------------------

def frobenius(tag: ProductTag, s: ModuleSum) -> NCSymElement:
    """
    V_A ↦ x_A, W_A ↦ m_A, U_A ↦ p_A, extended linearly

    Raises:
        MalformedInputError: s holds pair classes (use frobenius_tensor)
    """
    tag = ProductTag(tag)
    check_tags(tag, s.tag)
    if s.is_pair_sum():
        raise MalformedInputError(
            'Class of pairs has a Frobenius image in NCSym ⊗ NCSym; use frobenius_tensor',
            {'algebra': tag.value, 'class': str(s)}
        )
    return NCSymElement.from_terms(FROBENIUS_BASIS[tag], s.items())


def frobenius_tensor(tag: ProductTag, s: ModuleSum) -> TensorElement:
    """F ⊗ F on pair classes"""
    tag = ProductTag(tag)
    check_tags(tag, s.tag)
    if any(not isinstance(key, tuple) for key, _ in s.items()):
        raise MalformedInputError(
            'frobenius_tensor expects a class of pairs',
            {'algebra': tag.value, 'class': str(s)}
        )
    basis = FROBENIUS_BASIS[tag]
    return TensorElement.from_terms((basis, basis), s.items())


def simple_labels(tag: ProductTag, n: int) -> List[SimpleModuleLabel]:
    """All simple modules of the algebra on Π_n"""
    return [SimpleModuleLabel(tag, a) for a in partitions_of(n)]

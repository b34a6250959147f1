"""
Verification suites
Exhaustive checks of the lattice, NCSym and lattice-algebra identities at
bounded size, fanned out over a thread pool. Case order is fixed, so reports
do not depend on the worker count.
"""
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from models.element import BasisTag, NCSymElement
from models.module import AlgebraElement, ModuleSum, ProductTag, SimpleModuleLabel
from models.partition import SetPartition
from models.report import PropertyResult, ReportStatus, VerifySuiteReport
from services import latticealg as alg
from services import ncsym
from services import realization
from services.regular_rep import REGULAR_REP_LIMIT, check_regular_representation
from utils.errors import BoundTooLargeError, RangeError, UnknownSuiteError
from utils.lattice import interval, lower_set, mobius, mobius_product_form
from utils.logger import logger
from utils.mobius_cache import mobius_cache
from utils.partitions import (
    EMPTY,
    bell,
    bottom,
    concat,
    concat_fiber,
    from_blocks,
    from_json_blocks,
    join,
    meet,
    parse,
    partitions_of,
    refines,
    restrict,
    split,
    standardize,
    top,
    type_of,
)
from utils.serialization import to_json

M, P, X = BasisTag.M, BasisTag.P, BasisTag.X
MEET, JOIN, DIAG = ProductTag.MEET, ProductTag.JOIN, ProductTag.DIAG
TAGS = (MEET, JOIN, DIAG)

SUITE_CAPS = {
    'lattice': 6,
    'mobius': 8,
    'bases': 6,
    'theoremA': 5,
    'idempotents': 6,
    'modules': 5,
    'frobenius': 5,
    'realization': 5,
    'all': 5,
}
LONG_CAPS = {'theoremA': 6}

# Values and lengths for the exhaustive type_of relabelling check
TYPE_ALPHABET = 4

SUITE_DEFAULTS = {
    'lattice': 5,
    'mobius': 7,
    'bases': 5,
    'theoremA': 5,
    'idempotents': 5,
    'modules': 5,
    'frobenius': 5,
    'realization': 4,
    'all': 4,
}

SUITE_NAMES = tuple(name for name in SUITE_CAPS if name != 'all')

Check = Callable[[Any], Optional[Dict[str, Any]]]


@dataclass(frozen=True)
class Property:
    """A named identity: cases for a bound, and a check returning a counterexample or None"""
    name: str
    cases: Callable[[int], List[Any]]
    check: Check


# ---------------------------------------------------------------------------
# Case generators and helpers
# ---------------------------------------------------------------------------

def _upto(n: int) -> List[SetPartition]:
    return [a for k in range(n + 1) for a in partitions_of(k)]


def _square(n: int) -> List[Tuple[SetPartition, SetPartition]]:
    return [(a, b) for k in range(n + 1) for a in partitions_of(k) for b in partitions_of(k)]


def _pairs_total(n: int) -> List[Tuple[SetPartition, SetPartition]]:
    return [(a, b)
            for d in range(n + 1) for k in range(d + 1)
            for a in partitions_of(k) for b in partitions_of(d - k)]


def _cube(n: int) -> List[Tuple[SetPartition, SetPartition, SetPartition]]:
    return [(a, b, c) for k in range(n + 1)
            for a in partitions_of(k) for b in partitions_of(k) for c in partitions_of(k)]


def _triples_total(n: int) -> List[Tuple[SetPartition, SetPartition, SetPartition]]:
    return [(a, b, c)
            for d in range(n + 1) for i in range(d + 1) for j in range(d - i + 1)
            for a in partitions_of(i) for b in partitions_of(j) for c in partitions_of(d - i - j)]


def _quadruples_total(n: int) -> List[Tuple[SetPartition, ...]]:
    """(A, B, C, D) with A, B ∈ Π_k and C, D ∈ Π_{d-k}, d ≤ n"""
    return [(a, b, c, d)
            for total in range(n + 1) for k in range(total + 1)
            for a, b in _square_of(k) for c, d in _square_of(total - k)]


def _square_of(k: int) -> List[Tuple[SetPartition, SetPartition]]:
    return [(a, b) for a in partitions_of(k) for b in partitions_of(k)]


def _sequences(m: int) -> List[Tuple[int, ...]]:
    return [seq for length in range(m + 1) for seq in product(range(1, TYPE_ALPHABET + 1), repeat=length)]


def _tagged(tags: Iterable, cases: List[Any]) -> List[Tuple]:
    return [(tag,) + (case if isinstance(case, tuple) else (case,)) for tag in tags for case in cases]


def _show(value: Any) -> Any:
    if isinstance(value, SetPartition):
        return value.text()
    if isinstance(value, (ProductTag, BasisTag)):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_show(v) for v in value]
    return to_json(value)


def _fail(**values) -> Dict[str, Any]:
    return {key: _show(value) for key, value in values.items()}


def _expect(condition: bool, **values) -> Optional[Dict[str, Any]]:
    return None if condition else _fail(**values)


def _pruned(terms: Dict) -> Dict:
    return {k: v for k, v in terms.items() if v}


def _coassociativity_gap(delta, e: NCSymElement) -> bool:
    """True when (Δ⊗id)Δ(e) = (id⊗Δ)Δ(e)"""
    first = delta(e)
    left_tag, right_tag = first.basis
    left: Dict = {}
    right: Dict = {}
    for (a, b), c in first.items():
        for (a1, a2), c2 in delta(NCSymElement(left_tag, {a: 1})).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c2
        for (b1, b2), c2 in delta(NCSymElement(right_tag, {b: 1})).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
    return _pruned(left) == _pruned(right)


def _counital(delta, eps, e: NCSymElement) -> bool:
    t = delta(e)
    left_tag, right_tag = t.basis
    via_left = NCSymElement.from_terms(
        right_tag, ((b, c * eps(NCSymElement(left_tag, {a: 1}))) for (a, b), c in t.items()))
    via_right = NCSymElement.from_terms(
        left_tag, ((a, c * eps(NCSymElement(right_tag, {b: 1}))) for (a, b), c in t.items()))
    return via_left == e and via_right == e


def _class_character(tag: ProductTag, s: ModuleSum, c: SetPartition) -> int:
    return sum(mult * alg.character(tag, key, c) for key, mult in s.items())


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------

def _lattice_suite() -> List[Property]:
    def bell_counts(n):
        return _expect(len(partitions_of(n)) == bell(n), n=n, enumerated=len(partitions_of(n)), bell=bell(n))

    def text_forms(a):
        return _expect(parse(a.text()) == a and from_json_blocks(a.to_json()) == a
                       and from_blocks(reversed(a.blocks)) == a, partition=a)

    def lattice_axioms(case):
        a, b = case
        m, j = meet(a, b), join(a, b)
        ok = (
            m == meet(b, a) and j == join(b, a)
            and meet(a, j) == a and join(a, m) == a
            and refines(m, a) and refines(m, b) and refines(a, j) and refines(b, j)
            and refines(a, b) == (m == a) == (j == b)
        )
        return _expect(ok, a=a, b=b, meet=m, join=j)

    def bounds_are_extremal(case):
        a, b = case
        m, j = meet(a, b), join(a, b)
        for c in partitions_of(a.n):
            if (refines(c, a) and refines(c, b)) != refines(c, m):
                return _fail(a=a, b=b, meet=m, witness=c)
            if (refines(a, c) and refines(b, c)) != refines(j, c):
                return _fail(a=a, b=b, join=j, witness=c)
        return None

    def concat_split(case):
        a, b = case
        ab = concat(a, b)
        fiber = concat_fiber(a, b)
        cut = concat(top(a.n), top(b.n))
        expected_size = sum(math.comb(a.length, k) * math.perm(b.length, k)
                            for k in range(min(a.length, b.length) + 1))
        ok = (
            split(ab, a.n) == (a, b)
            and ab.length == a.length + b.length
            and len(fiber) == expected_size
            and all(meet(c, cut) == ab for c in fiber)
        )
        return _expect(ok, a=a, b=b, concat=ab, fiber_size=len(fiber))

    def relabelling(a):
        letters = [10 * (a.length - r) for r in a.rgs]
        scaled = [[3 * i for i in block] for block in a.blocks]
        return _expect(type_of(letters) == a and standardize(scaled) == a, partition=a)

    def restriction(a):
        everything = range(1, a.length + 1)
        if restrict(a, everything) != a or restrict(a, []) != EMPTY:
            return _fail(partition=a)
        for k in range(a.length + 1):
            for chosen in combinations(everything, k):
                piece = restrict(a, chosen)
                if piece.n != sum(len(a.blocks[i - 1]) for i in chosen) or piece.length != k:
                    return _fail(partition=a, subset=list(chosen), restricted=piece)
        return None

    def concat_is_lattice_morphism(case):
        a, b, c, d = case
        left, right = concat(a, c), concat(b, d)
        ok = (
            meet(left, right) == concat(meet(a, b), meet(c, d))
            and join(left, right) == concat(join(a, b), join(c, d))
        )
        return _expect(ok, a=a, b=b, c=c, d=d)

    def associativity(case):
        a, b, c = case
        ok = (
            meet(meet(a, b), c) == meet(a, meet(b, c))
            and join(join(a, b), c) == join(a, join(b, c))
        )
        return _expect(ok, a=a, b=b, c=c)

    def concat_monoid(case):
        a, b, c = case
        ok = (
            concat(concat(a, b), c) == concat(a, concat(b, c))
            and concat(EMPTY, a) == a == concat(a, EMPTY)
        )
        return _expect(ok, a=a, b=b, c=c)

    def type_stability(seq):
        base = type_of(seq)
        same = all((seq[i] == seq[j]) == (base.rgs[i] == base.rgs[j])
                   for i in range(len(seq)) for j in range(len(seq)))
        if base.n != len(seq) or not same:
            return _fail(sequence=list(seq), type=base)
        for sigma in permutations(range(1, TYPE_ALPHABET + 1)):
            if type_of([sigma[v - 1] for v in seq]) != base:
                return _fail(sequence=list(seq), permutation=list(sigma), type=base)
        return None

    def worked_examples(_):
        a, b = parse('1,3,8|2,4|5|6,7'), parse('1|2,3,8|4,5,6,7')
        ok = (
            meet(a, b) == parse('1|2|3,8|4|5|6,7')
            and join(a, b) == parse('1,2,3,4,5,6,7,8')
            and restrict(parse('1,3,6,8|2|4|5,7,9'), [1, 4]) == parse('1,2,4,6|3,5,7')
            and type_of((1, 2, 1)) == parse('1,3|2')
            and type_of((3, 1, 4, 1)) == parse('1|2,4|3')
            and standardize([{1, 3, 6, 8}, {5, 7, 9}]) == parse('1,2,4,6|3,5,7')
            and split(parse('1,3|2'), 1) is None
        )
        return _expect(ok, example='partition worked examples')

    return [
        Property('bell_counts', lambda n: list(range(min(10, n + 5) + 1)), bell_counts),
        Property('text_forms', _upto, text_forms),
        Property('lattice_axioms', _square, lattice_axioms),
        Property('meet_join_extremal', lambda n: _square(min(n, 4)), bounds_are_extremal),
        Property('concat_split', lambda n: _pairs_total(min(6, n + 1)), concat_split),
        Property('type_and_standardize', _upto, relabelling),
        Property('type_relabelling_stable', lambda n: _sequences(min(n, TYPE_ALPHABET)), type_stability),
        Property('concat_lattice_morphism', lambda n: _quadruples_total(min(n, 6)), concat_is_lattice_morphism),
        Property('meet_join_associative', lambda n: _cube(min(n, 4)), associativity),
        Property('concat_associative_unital', lambda n: _triples_total(min(n, 4)), concat_monoid),
        Property('block_restriction', lambda n: _upto(min(n, 5)), restriction),
        Property('worked_examples', lambda n: [None], worked_examples),
    ]


# ---------------------------------------------------------------------------
# mobius
# ---------------------------------------------------------------------------

def _mobius_suite() -> List[Property]:
    def recursion_matches_product(a):
        for b in lower_set(a):
            if mobius(b, a) != mobius_product_form(b, a):
                return _fail(lower=b, upper=a, recursive=mobius(b, a),
                             product_form=mobius_product_form(b, a))
        return None

    def inversion(a):
        for b in lower_set(a):
            segment = interval(b, a)
            delta = int(b == a)
            if sum(mobius(c, a) for c in segment) != delta or sum(mobius(b, c) for c in segment) != delta:
                return _fail(lower=b, upper=a)
        return None

    def cache_invisible(n):
        pairs = [(b, a) for a in partitions_of(n) for b in lower_set(a)]
        cached = [mobius(b, a) for b, a in pairs]
        with mobius_cache.disabled():
            uncached = [mobius(b, a) for b, a in pairs]
        return _expect(cached == uncached, n=n)

    def incomparable_is_zero(case):
        b, a = case
        if refines(b, a):
            return None
        return _expect(mobius(b, a) == 0, lower=b, upper=a)

    def worked_examples(_):
        ok = (
            mobius(bottom(3), top(3)) == 2
            and mobius(bottom(4), top(4)) == -6
            and mobius_product_form(parse('1|2|3,4'), parse('1,2|3,4')) == -1
            and interval(bottom(3), top(3)) == list(partitions_of(3))
            and interval(parse('1|2,3'), parse('1,2,3')) == [parse('1,2,3'), parse('1|2,3')]
        )
        return _expect(ok, example='mobius worked examples')

    return [
        Property('recursion_matches_product_form', _upto, recursion_matches_product),
        Property('mobius_inversion', lambda n: _upto(min(n, 5)), inversion),
        Property('cache_invisible', lambda n: list(range(min(n, 5) + 1)), cache_invisible),
        Property('incomparable_is_zero', lambda n: _square(min(n, 4)), incomparable_is_zero),
        Property('worked_examples', lambda n: [None], worked_examples),
    ]


# ---------------------------------------------------------------------------
# bases
# ---------------------------------------------------------------------------

def _bases_suite() -> List[Property]:
    def roundtrip(case):
        source, a = case
        e = ncsym.basis_vector(source, a)
        for target in (M, P, X):
            if ncsym.convert(ncsym.convert(e, target), source) != e:
                return _fail(basis=source, partition=a, via=target)
        return None

    def triangular(a):
        below_or_above = {(P, M): True, (M, P): True, (X, P): False, (P, X): False}
        for (source, target), upward in below_or_above.items():
            image = ncsym.convert(ncsym.basis_vector(source, a), target)
            if image.coefficient(a) != 1:
                return _fail(partition=a, source=source, target=target, image=image)
            for b, _ in image.items():
                if not (refines(a, b) if upward else refines(b, a)):
                    return _fail(partition=a, source=source, target=target, off_order=b)
        return None

    def product_basis_free(case):
        tag, a, b = case
        in_tag = ncsym.multiply(ncsym.basis_vector(tag, a), ncsym.basis_vector(tag, b))
        in_m = ncsym.multiply(ncsym.convert(ncsym.basis_vector(tag, a), M),
                              ncsym.convert(ncsym.basis_vector(tag, b), M))
        return _expect(ncsym.convert(in_tag, M) == in_m, basis=tag, a=a, b=b,
                       product=in_tag, via_m=in_m)

    def external_coalgebra(case):
        tag, a = case
        e = ncsym.basis_vector(tag, a)
        ok = (_coassociativity_gap(ncsym.coproduct_external, e)
              and _counital(ncsym.coproduct_external, ncsym.counit, e))
        return _expect(ok, basis=tag, partition=a)

    def internal_coalgebra(case):
        tag, a = case
        e = ncsym.basis_vector(tag, a)
        ok = (_coassociativity_gap(ncsym.coproduct_internal, e)
              and _counital(ncsym.coproduct_internal, ncsym.counit_internal, e))
        return _expect(ok, basis=tag, partition=a)

    def x_via_m_coassociative(a):
        return _expect(_coassociativity_gap(ncsym.coproduct_external_x, ncsym.basis_vector(X, a)),
                       partition=a)

    def p_coproduct_formula(a):
        direct = ncsym.coproduct_external(ncsym.basis_vector(P, a))
        via_m = ncsym.convert_tensor(
            ncsym.coproduct_external(ncsym.convert(ncsym.basis_vector(P, a), M)), (P, P))
        return _expect(direct == via_m, partition=a, direct=direct, via_m=via_m)

    def bialgebra(case):
        a, b = case
        ma, mb = ncsym.basis_vector(M, a), ncsym.basis_vector(M, b)
        product = ncsym.multiply(ma, mb)
        for delta in (ncsym.coproduct_external, ncsym.coproduct_internal):
            if delta(product) != ncsym.multiply_tensors(delta(ma), delta(mb)):
                return _fail(a=a, b=b, coproduct=delta.__name__)
        return None

    def duality(a):
        delta = ncsym.coproduct_internal(ncsym.basis_vector(M, a))
        m_a = ncsym.basis_vector(M, a)
        for b in partitions_of(a.n):
            for c in partitions_of(a.n):
                if ncsym.pair_tensor(delta, b, c) != ncsym.pair(m_a, meet(b, c)):
                    return _fail(partition=a, left=b, right=c)
        return None

    def no_internal_antipode(_):
        return _expect(ncsym.antipode_obstruction(3), max_degree=3)

    def worked_examples(_):
        one, e12, e1_2 = parse('1'), parse('1,2'), parse('1|2')
        ok = (
            ncsym.convert(ncsym.basis_vector(P, e1_2), M)
            == NCSymElement(M, {e1_2: 1, e12: 1})
            and ncsym.convert(ncsym.basis_vector(X, e12), M) == NCSymElement(M, {e1_2: -1})
            and ncsym.multiply(ncsym.basis_vector(M, one), ncsym.basis_vector(M, one))
            == NCSymElement(M, {e1_2: 1, e12: 1})
            and ncsym.counit(NCSymElement(P, {one: 1, EMPTY: 3})) == 3
            and ncsym.pair(ncsym.basis_vector(P, e1_2), e12) == 1
            and ncsym.coproduct_external(ncsym.basis_vector(P, e1_2)).coefficient(one, one) == 2
        )
        return _expect(ok, example='NCSym worked examples')

    return [
        Property('convert_roundtrip', lambda n: _tagged((M, P, X), _upto(n)), roundtrip),
        Property('unitriangular_changes', _upto, triangular),
        Property('product_basis_independent', lambda n: _tagged((P, X), _pairs_total(n)),
                 product_basis_free),
        Property('external_coproduct_coalgebra', lambda n: _tagged((M, P), _upto(min(n, 4))),
                 external_coalgebra),
        Property('internal_coproduct_coalgebra', lambda n: _tagged((M, P, X), _upto(min(n, 4))),
                 internal_coalgebra),
        Property('x_external_via_m_coassociative', lambda n: _upto(min(n, 3)), x_via_m_coassociative),
        Property('p_external_coproduct_formula', lambda n: _upto(min(n, 4)), p_coproduct_formula),
        Property('bialgebra_compatibility', lambda n: _pairs_total(min(n, 4)), bialgebra),
        Property('internal_coproduct_duality', lambda n: _upto(min(n, 4)), duality),
        Property('no_internal_antipode', lambda n: [None], no_internal_antipode),
        Property('worked_examples', lambda n: [None], worked_examples),
    ]


# ---------------------------------------------------------------------------
# theoremA: x and p bases are multiplicative and have the lattice coproduct rules
# ---------------------------------------------------------------------------

def _via_m_product(tag: BasisTag, a: SetPartition, b: SetPartition) -> NCSymElement:
    left = ncsym.convert(ncsym.basis_vector(tag, a), M)
    right = ncsym.convert(ncsym.basis_vector(tag, b), M)
    return ncsym.convert(ncsym.multiply(left, right), tag)


def _via_m_internal(tag: BasisTag, a: SetPartition):
    in_m = ncsym.convert(ncsym.basis_vector(tag, a), M)
    return ncsym.convert_tensor(ncsym.coproduct_internal(in_m), (tag, tag))


def _theorem_a_suite() -> List[Property]:
    def concatenation_product(case):
        tag, a, b = case
        got = _via_m_product(tag, a, b)
        return _expect(got == ncsym.basis_vector(tag, concat(a, b)), basis=tag, a=a, b=b, product=got)

    def internal_rule(case):
        tag, a = case
        got = _via_m_internal(tag, a)
        return _expect(got == ncsym.coproduct_internal(ncsym.basis_vector(tag, a)),
                       basis=tag, partition=a, via_m=got)

    return [
        Property('x_product_is_concatenation', lambda n: _tagged((X,), _pairs_total(n)),
                 concatenation_product),
        Property('x_internal_coproduct_join_rule', lambda n: _tagged((X,), _upto(n)), internal_rule),
        Property('p_product_is_concatenation', lambda n: _tagged((P,), _pairs_total(n)),
                 concatenation_product),
        Property('p_internal_coproduct_diagonal', lambda n: _tagged((P,), _upto(n)), internal_rule),
    ]


# ---------------------------------------------------------------------------
# idempotents
# ---------------------------------------------------------------------------

def _idempotents_suite() -> List[Property]:
    def orthogonal(case):
        tag, a = case
        ea = alg.idempotent(tag, a)
        for b in partitions_of(a.n):
            product = alg.alg_multiply(ea, alg.idempotent(tag, b))
            expected = ea if a == b else 0 * ea
            if product != expected:
                return _fail(algebra=tag, a=a, b=b, product=product)
        return None

    def complete(case):
        tag, n = case
        total = alg.unit_element(tag, n) * 0
        for a in partitions_of(n):
            total = total + alg.idempotent(tag, a)
        return _expect(total == alg.unit_element(tag, n), algebra=tag, n=n, sum=total)

    def acts_by_scalar(case):
        tag, a = case
        ea = alg.idempotent(tag, a)
        label = SimpleModuleLabel(tag, a)
        for c in partitions_of(a.n):
            scalar = alg.act_on_simple(tag, c, label)
            product = alg.alg_multiply(AlgebraElement.basis(tag, c), ea)
            if product != scalar * ea:
                return _fail(algebra=tag, element=c, idempotent=a, scalar=scalar)
        return None

    def concat_identity(case):
        tag, a, b = case
        lhs, rhs = alg.idempotent_concat_identity(tag, a, b)
        return _expect(lhs == rhs, algebra=tag, a=a, b=b, embedded=lhs, expected=rhs)

    def unital(case):
        tag, n, m = case
        expected = tag == JOIN or n == 0 or m == 0
        return _expect(alg.is_unital_embedding(tag, n, m) == expected, algebra=tag, n=n, m=m)

    def regular_rep(case):
        tag, n = case
        result = check_regular_representation(tag, n)
        return _expect(all(result.values()), algebra=tag, n=n, **result)

    def sizes(n):
        return [(i, d - i) for d in range(n + 1) for i in range(d + 1)]

    properties = [
        Property('idempotent_orthogonality', lambda n: _tagged(TAGS, _upto(min(n, 5))), orthogonal),
        Property('idempotent_completeness', lambda n: _tagged(TAGS, list(range(n + 1))), complete),
        Property('action_on_idempotents', lambda n: _tagged(TAGS, _upto(min(n, 4))), acts_by_scalar),
        Property('idempotent_concatenation', lambda n: _tagged(TAGS, _pairs_total(min(n, 5))),
                 concat_identity),
        Property('unital_embeddings', lambda n: _tagged(TAGS, sizes(n)), unital),
    ]
    if os.getenv('LATTICESYM_DEBUG_REGULAR_REP', 'false').lower() == 'true':
        properties.append(Property(
            'regular_representation',
            lambda n: _tagged(TAGS, list(range(min(n, REGULAR_REP_LIMIT) + 1))),
            regular_rep
        ))
    return properties


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

def _modules_suite() -> List[Property]:
    def character_expansion(case):
        tag, a = case
        image = {MEET: X, JOIN: M, DIAG: P}[tag]
        p_a = ncsym.convert(ncsym.basis_vector(P, a), image)
        for b in partitions_of(a.n):
            value = alg.character(tag, b, a)
            if value != p_a.coefficient(b) or value != alg.act_on_simple(tag, a, SimpleModuleLabel(tag, b)):
                return _fail(algebra=tag, module=b, element=a, character=value,
                             coefficient=p_a.coefficient(b))
        return None

    def tensor_character(case):
        tag, a, b = case
        product = alg.tensor_simple(tag, a, b)
        for c in partitions_of(a.n):
            if _class_character(tag, product, c) != alg.character(tag, a, c) * alg.character(tag, b, c):
                return _fail(algebra=tag, a=a, b=b, product=product, element=c)
        return _expect(len(product) <= 1, algebra=tag, a=a, b=b, product=product)

    def restriction_by_projector(case):
        tag, a = case
        label = SimpleModuleLabel(tag, a)
        for k in range(a.n + 1):
            by_rule = alg.restrict(tag, k, label)
            by_projector = alg.restrict_by_projector(tag, k, label)
            if by_rule != by_projector:
                return _fail(algebra=tag, partition=a, k=k, rule=by_rule, projector=by_projector)
            if tag == JOIN and (len(by_rule) != 1 or sum(m for _, m in by_rule.items()) != 1):
                return _fail(algebra=tag, partition=a, k=k, restriction=by_rule)
            if any(m != 1 for _, m in by_rule.items()) or len(by_rule) > 1:
                return _fail(algebra=tag, partition=a, k=k, restriction=by_rule)
        return None

    def reciprocity(case):
        tag, b, c = case
        induced = alg.induct(tag, SimpleModuleLabel(tag, b), SimpleModuleLabel(tag, c))
        for a in partitions_of(b.n + c.n):
            restricted = alg.restrict(tag, b.n, SimpleModuleLabel(tag, a))
            if restricted.multiplicity((b, c)) != induced.multiplicity(a):
                return _fail(algebra=tag, left=b, right=c, module=a)
        return None

    def tensor_coproduct(case):
        tag, a, b = case
        lhs = alg.coproduct_restriction_sum(alg.tensor_simple(tag, a, b))
        rhs = alg.tensor_pair_sums(alg.coproduct_restriction(tag, SimpleModuleLabel(tag, a)),
                                   alg.coproduct_restriction(tag, SimpleModuleLabel(tag, b)))
        return _expect(lhs == rhs, algebra=tag, a=a, b=b, coproduct_of_tensor=lhs,
                       tensor_of_coproducts=rhs)

    def incompatibility(_):
        witness = alg.find_incompatibility_witness(MEET, 2)
        return _expect(witness is not None and witness['degree'] == 2, witness=witness)

    def worked_examples(_):
        v = lambda text: SimpleModuleLabel(MEET, parse(text))
        w = lambda text: SimpleModuleLabel(JOIN, parse(text))
        ok = (
            alg.restrict(MEET, 1, v('1,2')).is_zero()
            and alg.restrict(JOIN, 1, w('1,2')) == ModuleSum(JOIN, {(parse('1'), parse('1')): 1})
            and alg.induct(JOIN, w('1'), w('1')) == ModuleSum(JOIN, {parse('1|2'): 1, parse('1,2'): 1})
            and alg.tensor_simple(MEET, parse('1,2|3'), parse('1|2,3')) == ModuleSum(MEET, {parse('1,2,3'): 1})
            and alg.tensor_simple(JOIN, parse('1,2|3'), parse('1|2,3')) == ModuleSum(JOIN, {parse('1|2|3'): 1})
            and len(alg.coproduct_restriction(MEET, v('1|2'))) == 3
            and len(alg.coproduct_restriction(MEET, v('1,2'))) == 2
        )
        return _expect(ok, example='module worked examples')

    return [
        Property('character_expansion', lambda n: _tagged(TAGS, _upto(n)), character_expansion),
        Property('tensor_character', lambda n: _tagged(TAGS, _square(min(n, 4))), tensor_character),
        Property('restriction_rules', lambda n: _tagged(TAGS, _upto(n)), restriction_by_projector),
        Property('induction_restriction_reciprocity', lambda n: _tagged(TAGS, _pairs_total(min(n, 4))),
                 reciprocity),
        Property('tensor_coproduct_compatibility', lambda n: _tagged((MEET, JOIN), _square(min(n, 4))),
                 tensor_coproduct),
        Property('meet_incompatibility_witness', lambda n: [None], incompatibility),
        Property('worked_examples', lambda n: [None], worked_examples),
    ]


# ---------------------------------------------------------------------------
# frobenius
# ---------------------------------------------------------------------------

def _frobenius_suite() -> List[Property]:
    def induction(case):
        tag, a, b = case
        induced = alg.induct(tag, SimpleModuleLabel(tag, a), SimpleModuleLabel(tag, b))
        lhs = ncsym.convert(alg.frobenius(tag, induced), M)
        fa = ncsym.convert(alg.frobenius(tag, ModuleSum(tag, {a: 1})), M)
        fb = ncsym.convert(alg.frobenius(tag, ModuleSum(tag, {b: 1})), M)
        rhs = ncsym.multiply(fa, fb)
        return _expect(lhs == rhs, algebra=tag, a=a, b=b, image=lhs, product=rhs)

    def internal_coproduct(case):
        tag, a = case
        basis = alg.FROBENIUS_BASIS[tag]
        lhs = alg.frobenius_tensor(tag, alg.internal_coproduct(tag, SimpleModuleLabel(tag, a)))
        rhs = _via_m_internal(basis, a)
        return _expect(lhs == rhs, algebra=tag, partition=a, image=lhs, coproduct=rhs)

    return [
        Property('frobenius_intertwines_induction', lambda n: _tagged(TAGS, _pairs_total(min(n, 4))),
                 induction),
        Property('frobenius_intertwines_internal_coproduct', lambda n: _tagged(TAGS, _upto(min(n, 4))),
                 internal_coproduct),
    ]


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def _realization_suite() -> List[Property]:
    def roundtrip(a):
        got = realization.type_decompose(realization.expand_m(a, a.n + 1))
        return _expect(got == ncsym.basis_vector(M, a), partition=a, decomposed=got)

    def invariance(case):
        a, n = case
        poly = realization.expand_m(a, n)
        for sigma in permutations(range(1, n + 1)):
            if realization.permute(sigma, poly) != poly:
                return _fail(partition=a, alphabet=n, permutation=list(sigma))
        return None

    def product_oracle(case):
        a, b = case
        n = a.n + b.n
        words = realization.nc_multiply(realization.expand_m(a, n), realization.expand_m(b, n))
        got = realization.type_decompose(words)
        expected = ncsym.multiply(ncsym.basis_vector(M, a), ncsym.basis_vector(M, b))
        return _expect(got == expected, a=a, b=b, oracle=got, product=expected)

    def coproduct_oracle(a):
        got = realization.expand_m_xy(a, a.n, a.n)
        expected = ncsym.coproduct_internal(ncsym.basis_vector(M, a))
        return _expect(got == expected, partition=a, oracle=got, coproduct=expected)

    def term_counts(case):
        a, n = case
        size = len(realization.expand_m(a, n))
        return _expect(size == realization.falling_factorial(n, a.length),
                       partition=a, alphabet=n, terms=size)

    def worked_examples(_):
        poly = realization.expand_m(parse('1,3|2'), 4)
        ok = (
            len(poly) == 12
            and all(c == 1 and type_of(w.letters) == parse('1,3|2') for w, c in poly.items())
            and realization.expand_m(parse('1|2'), 1).is_zero()
            and len(realization.expand_m(EMPTY, 3)) == 1
        )
        return _expect(ok, example='realization worked examples')

    def with_alphabets(n, low, high):
        return [(a, k) for a in _upto(min(n, 4)) for k in range(low, high + 1)]

    return [
        Property('decompose_roundtrip', _upto, roundtrip),
        Property('symmetric_invariance', lambda n: with_alphabets(n, 0, min(n, 4)), invariance),
        Property('product_oracle', _pairs_total, product_oracle),
        Property('internal_coproduct_oracle', lambda n: _upto(min(n, 4)), coproduct_oracle),
        Property('term_counts', lambda n: with_alphabets(n, 0, min(n + 1, 5)), term_counts),
        Property('worked_examples', lambda n: [None], worked_examples),
    ]


SUITES: Dict[str, Callable[[], List[Property]]] = {
    'lattice': _lattice_suite,
    'mobius': _mobius_suite,
    'bases': _bases_suite,
    'theoremA': _theorem_a_suite,
    'idempotents': _idempotents_suite,
    'modules': _modules_suite,
    'frobenius': _frobenius_suite,
    'realization': _realization_suite,
}


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def suite_cap(suite: str, long: bool = False) -> int:
    if long and suite in LONG_CAPS:
        return LONG_CAPS[suite]
    return SUITE_CAPS[suite]


def check_bounds(suite: str, max_n: Optional[int], long: bool = False) -> int:
    """
    Resolve and validate the bound for a suite

    Raises:
        UnknownSuiteError: suite is not a known name
        BoundTooLargeError: max_n exceeds the suite cap
    """
    if suite not in SUITE_CAPS:
        raise UnknownSuiteError(f'Unknown suite {suite!r}',
                                {'suite': suite, 'allowed': list(SUITE_CAPS)})
    if max_n is None:
        max_n = SUITE_DEFAULTS[suite]
    if max_n < 0:
        raise RangeError(f'Bound must be non-negative, got {max_n}', {'max_n': max_n})
    cap = suite_cap(suite, long)
    if max_n > cap:
        raise BoundTooLargeError(f'Suite {suite} is capped at max_n={cap}',
                                 {'suite': suite, 'max_n': max_n, 'cap': cap})
    return max_n


def run_property(prop: Property, max_n: int, executor: ThreadPoolExecutor,
                 prefix: str = '') -> PropertyResult:
    cases = prop.cases(max_n)
    outcomes = list(executor.map(prop.check, cases))
    failures = [o for o in outcomes if o is not None]
    result = PropertyResult(
        name=prefix + prop.name,
        passed=len(outcomes) - len(failures),
        failed=len(failures),
        counterexample=failures[0] if failures else None
    )
    if failures:
        logger.error(f"❌ {result.name}: {result.failed} failing case(s)",
                     meta={'counterexample': result.counterexample})
    return result


def run_suite(suite: str, max_n: Optional[int] = None, jobs: Optional[int] = None,
              long: bool = False, job_id: Optional[str] = None) -> VerifySuiteReport:
    """
    Run a verification suite

    Args:
        suite: suite name or 'all'
        max_n: size bound (suite default when None)
        jobs: worker threads (LATTICESYM_VERIFY_JOBS, default 1)
        long: lift the theoremA cap
        job_id: background job id for log context

    Returns:
        VerifySuiteReport
    """
    max_n = check_bounds(suite, max_n, long)
    if jobs is None:
        jobs = int(os.getenv('LATTICESYM_VERIFY_JOBS', '1'))
    jobs = max(1, jobs)

    names = SUITE_NAMES if suite == 'all' else (suite,)
    logger.info(f"🔄 Running suite {suite} (max_n={max_n}, jobs={jobs})", suite=suite, job_id=job_id)
    started = time.perf_counter()
    report = VerifySuiteReport(suite=suite, max_n=max_n)

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        for name in names:
            bound = min(max_n, suite_cap(name, long))
            prefix = f'{name}.' if suite == 'all' else ''
            for prop in SUITES[name]():
                report.properties.append(run_property(prop, bound, executor, prefix))

    report.duration_seconds = time.perf_counter() - started
    status = "✅" if report.status == ReportStatus.PASSED else "❌"
    logger.info(
        f"{status} Suite {suite} {report.status.value}: {report.passed} passed, {report.failed} failed",
        suite=suite, job_id=job_id,
        meta={'duration_seconds': round(report.duration_seconds, 3), 'mobius_cache': mobius_cache.stats()}
    )
    return report

"""Partition lattice algebras: idempotents, simple modules, induction and restriction"""
import pytest

from models.element import BasisTag, NCSymElement, TensorElement
from models.module import AlgebraElement, ModuleSum, ProductTag, SimpleModuleLabel
from services.latticealg import (
    act_on_simple,
    alg_multiply,
    character,
    coproduct_restriction,
    find_incompatibility_witness,
    frobenius,
    frobenius_tensor,
    idempotent,
    idempotent_concat_identity,
    induct,
    internal_coproduct,
    is_unital_embedding,
    restrict,
    restrict_by_projector,
    simple_labels,
    tensor_simple,
    unit_element,
)
from services.ncsym import basis_vector, convert, multiply
from services.regular_rep import check_regular_representation
from utils.errors import (
    BoundTooLargeError,
    MalformedInputError,
    RangeError,
    SizeMismatchError,
    TagMismatchError,
)
from utils.partitions import EMPTY, partitions_of

MEET, JOIN, DIAG = ProductTag.MEET, ProductTag.JOIN, ProductTag.DIAG


def basis(tag, a):
    return AlgebraElement.basis(tag, a)


def simple(tag, a):
    return SimpleModuleLabel(tag, a)


def test_products_worked_examples(P):
    for a in partitions_of(3):
        assert alg_multiply(basis(MEET, P('1,2,3')), basis(MEET, a)) == basis(MEET, a)
    assert alg_multiply(basis(JOIN, P('1|2')), basis(JOIN, P('1,2'))) == basis(JOIN, P('1,2'))
    assert alg_multiply(basis(DIAG, P('1|2')), basis(DIAG, P('1,2'))).is_zero()
    assert alg_multiply(basis(DIAG, P('1|2')), basis(DIAG, P('1|2'))) == basis(DIAG, P('1|2'))


def test_multiply_rejects_mixed_operands(P):
    with pytest.raises(TagMismatchError):
        alg_multiply(basis(MEET, P('1')), basis(JOIN, P('1')))
    with pytest.raises(SizeMismatchError):
        alg_multiply(basis(MEET, P('1')), basis(MEET, P('1,2')))


def test_idempotent_examples(P):
    assert idempotent(MEET, P('1,2')) == AlgebraElement.from_terms(MEET, 2, [(P('1,2'), 1), (P('1|2'), -1)])
    assert idempotent(JOIN, P('1|2')) == AlgebraElement.from_terms(JOIN, 2, [(P('1|2'), 1), (P('1,2'), -1)])
    assert idempotent(DIAG, P('1,3|2')) == basis(DIAG, P('1,3|2'))


@pytest.mark.parametrize('tag', list(ProductTag))
@pytest.mark.parametrize('n', [2, 3, 4])
def test_idempotents_orthogonal_and_complete(tag, n):
    total = AlgebraElement(tag, n)
    for a in partitions_of(n):
        e_a = idempotent(tag, a)
        total = total + e_a
        for b in partitions_of(n):
            product = alg_multiply(e_a, idempotent(tag, b))
            assert product == (e_a if a == b else AlgebraElement(tag, n))
    assert total == unit_element(tag, n)


@pytest.mark.parametrize('tag', list(ProductTag))
def test_basis_acts_on_idempotents_by_character(tag):
    for c in partitions_of(3):
        for a in partitions_of(3):
            e_a = idempotent(tag, a)
            assert alg_multiply(basis(tag, c), e_a) == act_on_simple(tag, c, simple(tag, a)) * e_a


def test_action_examples(P):
    assert act_on_simple(MEET, P('1,2'), simple(MEET, P('1|2'))) == 1
    assert act_on_simple(JOIN, P('1,2'), simple(JOIN, P('1|2'))) == 0
    assert act_on_simple(MEET, P('1|2,3'), simple(MEET, P('1,2|3'))) == 0
    with pytest.raises(SizeMismatchError):
        act_on_simple(MEET, P('1'), simple(MEET, P('1,2')))


def test_character_examples(P):
    assert character(MEET, P('1|2'), P('1,2')) == 1
    assert character(JOIN, P('1|2'), P('1,2')) == 0
    a = P('1,3|2')
    assert character(DIAG, a, a) == 1
    assert character(DIAG, a, P('1|2|3')) == 0


def test_character_is_coefficient_of_p_in_frobenius_basis():
    for a in partitions_of(4):
        p_a = basis_vector(BasisTag.P, a)
        in_x, in_m = convert(p_a, BasisTag.X), convert(p_a, BasisTag.M)
        for b in partitions_of(4):
            assert character(MEET, b, a) == in_x.coefficient(b)
            assert character(JOIN, b, a) == in_m.coefficient(b)


def test_tensor_examples(P):
    assert tensor_simple(MEET, P('1,2|3'), P('1|2,3')) == ModuleSum(MEET, {P('1,2,3'): 1})
    assert tensor_simple(JOIN, P('1,2|3'), P('1|2,3')) == ModuleSum(JOIN, {P('1|2|3'): 1})
    assert tensor_simple(DIAG, P('1|2'), P('1|2')) == ModuleSum(DIAG, {P('1|2'): 1})
    assert tensor_simple(DIAG, P('1|2'), P('1,2')).is_zero()
    assert tensor_simple(MEET, P('1'), P('1,2')).is_zero()


def test_restriction_examples(P):
    one = P('1')
    assert restrict(MEET, 1, simple(MEET, P('1,2'))).is_zero()
    assert restrict(MEET, 1, simple(MEET, P('1|2'))) == ModuleSum(MEET, {(one, one): 1})
    assert restrict(JOIN, 1, simple(JOIN, P('1,2'))) == ModuleSum(JOIN, {(one, one): 1})
    with pytest.raises(RangeError):
        restrict(MEET, 3, simple(MEET, P('1,2')))


@pytest.mark.parametrize('tag', list(ProductTag))
def test_restriction_matches_projector_rule(tag):
    for n in range(4):
        for label in simple_labels(tag, n):
            for k in range(n + 1):
                assert restrict(tag, k, label) == restrict_by_projector(tag, k, label)


def test_join_restriction_is_total():
    for label in simple_labels(JOIN, 4):
        for k in range(5):
            assert len(restrict(JOIN, k, label)) == 1


def test_coproduct_by_restriction(P):
    one = P('1')
    assert coproduct_restriction(MEET, simple(MEET, P('1|2'))) == ModuleSum(MEET, {
        (EMPTY, P('1|2')): 1, (one, one): 1, (P('1|2'), EMPTY): 1})
    assert coproduct_restriction(MEET, simple(MEET, P('1,2'))) == ModuleSum(MEET, {
        (EMPTY, P('1,2')): 1, (P('1,2'), EMPTY): 1})
    assert coproduct_restriction(MEET, simple(MEET, EMPTY)) == ModuleSum(MEET, {(EMPTY, EMPTY): 1})


def test_induction_examples(P):
    one = simple(MEET, P('1'))
    assert induct(MEET, one, one) == ModuleSum(MEET, {P('1|2'): 1})
    assert induct(MEET, simple(MEET, P('1,2')), one) == ModuleSum(MEET, {P('1,2|3'): 1})
    w = simple(JOIN, P('1'))
    assert induct(JOIN, w, w) == ModuleSum(JOIN, {P('1|2'): 1, P('1,2'): 1})
    with pytest.raises(TagMismatchError):
        induct(MEET, one, w)


@pytest.mark.parametrize('tag', list(ProductTag))
def test_idempotent_concatenation(tag):
    for n in range(3):
        for m in range(3):
            for a in partitions_of(n):
                for b in partitions_of(m):
                    lhs, rhs = idempotent_concat_identity(tag, a, b)
                    assert lhs == rhs


def test_embedding_is_unital_only_for_join():
    assert is_unital_embedding(JOIN, 2, 1)
    assert not is_unital_embedding(MEET, 2, 1)


def test_frobenius_examples(P):
    assert frobenius(MEET, ModuleSum(MEET, {P('1|2'): 1})) == basis_vector(BasisTag.X, P('1|2'))
    assert frobenius(JOIN, ModuleSum(JOIN, {P('1,2'): 1, P('1|2'): 1})) == NCSymElement(
        BasisTag.M, {P('1,2'): 1, P('1|2'): 1})
    assert frobenius(DIAG, ModuleSum(DIAG, {P('1'): 2})) == NCSymElement(BasisTag.P, {P('1'): 2})
    with pytest.raises(TagMismatchError):
        frobenius(MEET, ModuleSum(JOIN, {P('1'): 1}))


@pytest.mark.parametrize('tag', list(ProductTag))
def test_frobenius_intertwines_induction(tag):
    # in m, so the x and p concatenation rules are checked rather than assumed
    for n in range(4):
        for m in range(4 - n):
            for a in partitions_of(n):
                for b in partitions_of(m):
                    s = induct(tag, simple(tag, a), simple(tag, b))
                    lhs = convert(frobenius(tag, s), BasisTag.M)
                    fa = convert(frobenius(tag, ModuleSum(tag, {a: 1})), BasisTag.M)
                    fb = convert(frobenius(tag, ModuleSum(tag, {b: 1})), BasisTag.M)
                    assert lhs == multiply(fa, fb)


def test_frobenius_of_pair_classes(P):
    pairs = restrict(JOIN, 1, simple(JOIN, P('1,2|3')))
    with pytest.raises(MalformedInputError):
        frobenius(JOIN, pairs)
    assert frobenius_tensor(JOIN, pairs) == TensorElement(
        (BasisTag.M, BasisTag.M), {(P('1'), P('1|2')): 1})
    with pytest.raises(MalformedInputError):
        frobenius_tensor(JOIN, ModuleSum(JOIN, {P('1|2'): 1}))


def test_internal_coproduct_rules(P):
    assert internal_coproduct(DIAG, simple(DIAG, P('1|2'))) == ModuleSum(DIAG, {(P('1|2'), P('1|2')): 1})
    assert internal_coproduct(MEET, simple(MEET, P('1,2'))) == ModuleSum(MEET, {
        (P('1,2'), P('1,2')): 1, (P('1,2'), P('1|2')): 1, (P('1|2'), P('1,2')): 1})


def test_meet_incompatibility_witness_at_degree_two():
    witness = find_incompatibility_witness(MEET, 3)
    assert witness is not None
    assert witness['algebra'] == 'meet'
    assert witness['degree'] == 2
    assert witness['coproduct_of_product'] != witness['product_of_coproducts']


@pytest.mark.parametrize('tag', list(ProductTag))
def test_regular_representation(tag):
    result = check_regular_representation(tag, 3)
    assert all(result.values())


def test_regular_representation_bound():
    with pytest.raises(BoundTooLargeError):
        check_regular_representation(MEET, 5)

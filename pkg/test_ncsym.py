"""NCSym: bases, products, coproducts, counits and pairing"""
import pytest
from hypothesis import given, settings, strategies as st

from models.element import BasisTag, NCSymElement, TensorElement
from models.module import AlgebraElement, ProductTag
from services.ncsym import (
    add,
    antipode_obstruction,
    basis_vector,
    convert,
    convert_tensor,
    coproduct_external,
    coproduct_external_x,
    coproduct_internal,
    counit,
    counit_internal,
    degree_components,
    multiply,
    negate,
    pair,
    pair_tensor,
)
from utils.errors import BasisMismatchError
from utils.partitions import EMPTY, concat, partitions_of

M, P_, X = BasisTag.M, BasisTag.P, BasisTag.X


def partitions(max_n=4):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.sampled_from(partitions_of(n)))


def element(tag, *pairs):
    return NCSymElement.from_terms(tag, pairs)


def test_linear_structure(P):
    one = basis_vector(M, P('1'))
    assert add(one, one) == element(M, (P('1'), 2))
    assert add(one, negate(one)).is_zero()
    with pytest.raises(BasisMismatchError):
        add(one, basis_vector(P_, P('1')))


def test_degree_components(P):
    e = element(M, (P('1'), 1), (P('1,2'), 2), (P('1|2'), -1))
    parts = degree_components(e)
    assert sorted(parts) == [1, 2]
    assert parts[2] == element(M, (P('1,2'), 2), (P('1|2'), -1))


def test_convert_worked_examples(P):
    assert convert(basis_vector(P_, P('1|2')), M) == element(M, (P('1|2'), 1), (P('1,2'), 1))
    assert convert(basis_vector(X, P('1,2')), M) == element(M, (P('1|2'), -1))
    for tag in BasisTag:
        assert convert(basis_vector(X, P('1')), tag) == basis_vector(tag, P('1'))


@given(partitions(4), st.sampled_from(list(BasisTag)), st.sampled_from(list(BasisTag)))
@settings(max_examples=150, deadline=None)
def test_convert_roundtrip(a, source, target):
    e = basis_vector(source, a)
    assert convert(convert(e, target), source) == e


def test_m_product(P):
    one = basis_vector(M, P('1'))
    assert multiply(one, one) == element(M, (P('1|2'), 1), (P('1,2'), 1))
    with pytest.raises(BasisMismatchError):
        multiply(one, basis_vector(X, P('1')))


def test_p_product_is_concatenation(P):
    assert multiply(basis_vector(P_, P('1,2')), basis_vector(P_, P('1'))) == basis_vector(P_, P('1,2|3'))


@given(partitions(3), partitions(3))
@settings(max_examples=100, deadline=None)
def test_x_product_is_concatenation_in_m_basis(a, b):
    via_m = multiply(convert(basis_vector(X, a), M), convert(basis_vector(X, b), M))
    assert convert(via_m, X) == basis_vector(X, concat(a, b))


def test_external_coproduct_examples(P):
    assert coproduct_external(basis_vector(M, P('1,2'))) == TensorElement(
        (M, M), {(EMPTY, P('1,2')): 1, (P('1,2'), EMPTY): 1})
    assert coproduct_external(basis_vector(M, EMPTY)) == TensorElement((M, M), {(EMPTY, EMPTY): 1})
    assert coproduct_external(basis_vector(P_, P('1|2'))) == TensorElement(
        (P_, P_), {(EMPTY, P('1|2')): 1, (P('1'), P('1')): 2, (P('1|2'), EMPTY): 1})


def test_external_coproduct_of_x_goes_through_m(P):
    x = basis_vector(X, P('1,2'))
    with pytest.raises(BasisMismatchError):
        coproduct_external(x)
    delta = coproduct_external_x(x)
    assert delta.basis == (X, X)
    assert convert_tensor(delta, (M, M)) == coproduct_external(convert(x, M))
    with pytest.raises(BasisMismatchError):
        coproduct_external_x(basis_vector(M, P('1')))


def test_internal_coproduct_examples(P):
    m12 = basis_vector(M, P('1|2'))
    assert coproduct_internal(m12) == TensorElement((M, M), {
        (P('1|2'), P('1|2')): 1, (P('1|2'), P('1,2')): 1, (P('1,2'), P('1|2')): 1})
    x12 = basis_vector(X, P('1,2'))
    assert coproduct_internal(x12) == TensorElement((X, X), {
        (P('1,2'), P('1,2')): 1, (P('1,2'), P('1|2')): 1, (P('1|2'), P('1,2')): 1})
    for a in partitions_of(3):
        assert coproduct_internal(basis_vector(P_, a)) == TensorElement((P_, P_), {(a, a): 1})


def test_internal_coproduct_of_x_matches_m_pipeline():
    for a in partitions_of(3):
        x = basis_vector(X, a)
        via_m = convert_tensor(coproduct_internal(convert(x, M)), (X, X))
        assert via_m == coproduct_internal(x)


def test_counits(P):
    assert counit(basis_vector(M, EMPTY)) == 1
    assert counit(basis_vector(M, P('1,2'))) == 0
    assert counit(element(P_, (P('1'), 1), (EMPTY, 3))) == 3
    assert counit_internal(basis_vector(M, P('1,2'))) == 1
    assert counit_internal(basis_vector(M, P('1|2'))) == 0
    assert counit_internal(basis_vector(P_, P('1|2'))) == 1


def test_pairing(P):
    assert pair(basis_vector(M, P('1,2')), P('1,2')) == 1
    assert pair(basis_vector(M, P('1,2')), P('1|2')) == 0
    assert pair(basis_vector(P_, P('1|2')), P('1,2')) == 1
    a = AlgebraElement.from_terms(ProductTag.MEET, 2, [(P('1,2'), 2), (P('1|2'), 5)])
    assert pair(basis_vector(P_, P('1|2')), a) == 7
    t = coproduct_internal(basis_vector(M, P('1|2')))
    assert pair_tensor(t, P('1|2'), P('1,2')) == 1
    assert pair_tensor(t, P('1,2'), P('1,2')) == 0


def test_internal_coproduct_has_no_antipode():
    assert antipode_obstruction(3) is True

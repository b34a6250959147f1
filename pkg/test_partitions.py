"""Set partitions: construction, enumeration, lattice operations, text forms"""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from models.partition import SetPartition
from utils.errors import (
    BlockIndexError,
    GapError,
    OverlapError,
    PartitionSyntaxError,
    RangeError,
    SizeMismatchError,
)
from utils.partitions import (
    EMPTY,
    bell,
    bottom,
    concat,
    concat_fiber,
    enumerate_partitions,
    format_partition,
    from_blocks,
    from_json_blocks,
    join,
    meet,
    parse,
    partitions_of,
    rank,
    refines,
    restrict,
    shape,
    split,
    standardize,
    top,
    type_of,
)


def partitions(max_n=6):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.sampled_from(partitions_of(n)))


def same_size_pairs(max_n=6):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n))))


@pytest.mark.parametrize('n, expected', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)])
def test_bell_numbers_match_enumeration(n, expected):
    assert bell(n) == expected
    assert len(list(enumerate_partitions(n))) == expected


def test_enumeration_order_is_lexicographic_rgs():
    assert [a.text() for a in enumerate_partitions(2)] == ['1,2', '1|2']
    assert [a.text() for a in enumerate_partitions(3)] == ['1,2,3', '1,2|3', '1,3|2', '1|2,3', '1|2|3']
    assert list(enumerate_partitions(0)) == [EMPTY]


def test_enumerate_negative_raises():
    with pytest.raises(RangeError):
        list(enumerate_partitions(-1))


def test_text_form_is_canonical(P):
    a = from_blocks([[5, 3, 1], [4], [2]])
    assert a.text() == '1,3,5|2|4'
    assert a.to_json() == [[1, 3, 5], [2], [4]]
    assert P('2|1') == P('1|2')
    assert P('e') == EMPTY
    assert EMPTY.text() == 'e'


@pytest.mark.parametrize('text, error', [
    ('1,,2', PartitionSyntaxError),
    ('1|', PartitionSyntaxError),
    ('a', PartitionSyntaxError),
    ('1,2|2', OverlapError),
    ('1|3', GapError),
])
def test_parse_rejects_bad_text(text, error):
    with pytest.raises(error):
        parse(text)


def test_json_blocks_decode(P):
    assert from_json_blocks([[1, 3], [2]]) == P('1,3|2')
    with pytest.raises(PartitionSyntaxError):
        from_json_blocks([[1, 'x']])
    with pytest.raises(PartitionSyntaxError):
        from_json_blocks('1|2')


def test_rgs_must_be_restricted_growth():
    with pytest.raises(ValueError):
        SetPartition((1, 0))


def test_meet_and_join_worked_example(P):
    a = P('1,3,8|2,4|5|6,7')
    b = P('1|2,3,8|4,5,6,7')
    assert meet(a, b).text() == '1|2|3,8|4|5|6,7'
    assert join(a, b).text() == '1,2,3,4,5,6,7,8'


def test_meet_join_size_mismatch(P):
    with pytest.raises(SizeMismatchError):
        meet(P('1|2'), P('1,2,3'))
    with pytest.raises(SizeMismatchError):
        join(P('1|2'), P('1,2,3'))


def test_extremal_elements(P):
    assert bottom(3) == P('1|2|3')
    assert top(3) == P('1,2,3')
    assert top(0) == EMPTY
    assert rank(P('1,2|3')) == 1
    assert rank(top(4)) == 3


@given(same_size_pairs())
@settings(max_examples=200, deadline=None)
def test_meet_and_join_are_bounds(pair):
    a, b = pair
    m, j = meet(a, b), join(a, b)
    assert refines(m, a) and refines(m, b)
    assert refines(a, j) and refines(b, j)
    assert meet(a, b) == meet(b, a)
    assert join(a, b) == join(b, a)
    assert meet(a, join(a, b)) == a
    assert join(a, meet(a, b)) == a


def test_meet_is_greatest_lower_bound():
    for a in partitions_of(4):
        for b in partitions_of(4):
            m = meet(a, b)
            lower = [c for c in partitions_of(4) if refines(c, a) and refines(c, b)]
            assert all(refines(c, m) for c in lower)


def test_concat_and_split(P):
    a, b = P('1,3|2'), P('1|2')
    c = concat(a, b)
    assert c.text() == '1,3|2|4|5'
    assert split(c, 3) == (a, b)
    assert split(P('1,3|2'), 2) is None
    assert split(P('1,2'), 0) == (EMPTY, P('1,2'))
    with pytest.raises(RangeError):
        split(P('1,2'), 3)


@given(partitions(4), partitions(4))
@settings(max_examples=150, deadline=None)
def test_split_inverts_concat(a, b):
    assert split(concat(a, b), a.n) == (a, b)


def test_concat_fiber_definition(P):
    a, b = P('1|2'), P('1')
    expected = {c for c in partitions_of(3) if meet(c, concat(top(2), top(1))) == concat(a, b)}
    assert set(concat_fiber(a, b)) == expected
    assert [c.text() for c in concat_fiber(a, b)] == ['1,3|2', '1|2,3', '1|2|3']


def test_block_restriction_worked_example(P):
    a = P('1,3,5|2|4')
    assert restrict(a, [1, 3]).text() == '1,2,4|3'
    assert restrict(P('1,3,6,8|2|4|5,7,9'), [1, 4]).text() == '1,2,4,6|3,5,7'
    assert restrict(a, []) == EMPTY
    with pytest.raises(BlockIndexError):
        restrict(a, [4])


def test_standardize_and_type(P):
    assert standardize([[7, 2], [5]]) == P('1,3|2')
    with pytest.raises(OverlapError):
        standardize([[1, 2], [2]])
    assert type_of(['x', 'y', 'x']) == P('1,3|2')
    assert type_of([]) == EMPTY


def test_shape(P):
    lam = shape(P('1,3,5|2|4,6'))
    assert lam.parts == (3, 2, 1)
    assert lam.size == 6
    assert lam.length == 3
    assert lam.multiplicity(2) == 1
    assert str(lam) == '(3,2,1)'


def test_concat_commutes_with_meet_and_join():
    for total in range(5):
        for k in range(total + 1):
            for a in partitions_of(k):
                for b in partitions_of(k):
                    for c in partitions_of(total - k):
                        for d in partitions_of(total - k):
                            left, right = concat(a, c), concat(b, d)
                            assert meet(left, right) == concat(meet(a, b), meet(c, d))
                            assert join(left, right) == concat(join(a, b), join(c, d))


def test_meet_and_join_are_associative():
    for n in range(4):
        for a, b, c in itertools.product(partitions_of(n), repeat=3):
            assert meet(meet(a, b), c) == meet(a, meet(b, c))
            assert join(join(a, b), c) == join(a, join(b, c))


@given(partitions(3), partitions(3), partitions(3))
@settings(max_examples=150, deadline=None)
def test_concat_is_associative_with_empty_unit(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert concat(EMPTY, a) == a == concat(a, EMPTY)


def test_type_is_stable_under_relabelling():
    for length in range(5):
        for seq in itertools.product(range(1, 5), repeat=length):
            base = type_of(seq)
            assert base.n == length
            for sigma in itertools.permutations(range(1, 5)):
                assert type_of([sigma[v - 1] for v in seq]) == base


def test_format_is_parse_inverse(P):
    for n in range(5):
        for a in partitions_of(n):
            assert format_partition(a) == a.text()
            assert parse(format_partition(a)) == a
    assert format_partition(EMPTY) == 'e'
    assert format_partition(P('3|1,2')) == '1,2|3'

"""Intervals, interval profiles and the Möbius function"""
import math
import threading

import pytest

from utils.errors import NotComparableError, SizeMismatchError
from utils.lattice import (
    interval,
    interval_profile,
    lower_set,
    mobius,
    mobius_product_form,
    upper_set,
)
from utils.mobius_cache import MobiusCache, mobius_cache
from utils.partitions import bottom, partitions_of, refines, top


@pytest.mark.parametrize('n', range(1, 8))
def test_mobius_of_full_lattice(n):
    expected = (-1) ** (n - 1) * math.factorial(n - 1)
    assert mobius(bottom(n), top(n)) == expected
    assert mobius_product_form(bottom(n), top(n)) == expected


def test_mobius_worked_examples(P):
    assert mobius(P('1|2|3'), P('1,2,3')) == 2
    assert mobius(bottom(4), top(4)) == -6
    assert mobius(P('1|2|3,4'), P('1,2|3,4')) == -1
    assert mobius(P('1,3|2'), P('1,3|2')) == 1


def test_mobius_incomparable_is_zero(P):
    assert mobius(P('1,2|3'), P('1,3|2')) == 0
    with pytest.raises(SizeMismatchError):
        mobius(P('1|2'), P('1,2,3'))


def test_recursion_matches_product_form_on_pi_5():
    for a in partitions_of(5):
        for b in lower_set(a):
            assert mobius(b, a) == mobius_product_form(b, a)


def test_mobius_inversion_on_pi_4():
    for a in partitions_of(4):
        for b in lower_set(a):
            total = sum(mobius(b, c) for c in interval(b, a))
            assert total == (1 if a == b else 0)


def test_cache_does_not_change_values():
    cached = {(b, a): mobius(b, a) for a in partitions_of(4) for b in lower_set(a)}
    with mobius_cache.disabled():
        for (b, a), value in cached.items():
            assert mobius(b, a) == value


def test_cache_store_and_stats():
    cache = MobiusCache()
    assert cache.get((2,)) is None
    cache.set((2,), -1)
    assert cache.get((2,)) == -1
    assert cache.stats() == {'size': 1, 'hits': 1, 'misses': 1}
    with cache.disabled():
        assert cache.get((2,)) is None
    cache.clear()
    assert cache.stats() == {'size': 0, 'hits': 0, 'misses': 0}


def test_cache_bypass_interleaved_contexts_restore():
    cache = MobiusCache()
    first, second = cache.disabled(), cache.disabled()
    first.__enter__()
    second.__enter__()
    assert not cache.active
    first.__exit__(None, None, None)
    assert not cache.active
    second.__exit__(None, None, None)
    assert cache.active
    cache.set((3,), 2)
    assert cache.get((3,)) == 2


def test_cache_bypass_is_per_thread():
    cache = MobiusCache()
    cache.set((2,), -1)
    inside = threading.Event()
    release = threading.Event()
    seen = {}

    def bypassing():
        with cache.disabled():
            seen['worker'] = cache.get((2,))
            inside.set()
            release.wait(timeout=5)

    worker = threading.Thread(target=bypassing)
    worker.start()
    assert inside.wait(timeout=5)
    assert cache.get((2,)) == -1
    release.set()
    worker.join(timeout=5)
    assert seen['worker'] is None
    assert cache.active


def test_interval_examples(P):
    a = P('1,3|2')
    assert interval(a, a) == [a]
    assert interval(bottom(3), top(3)) == list(partitions_of(3))
    assert [c.text() for c in interval(P('1|2,3'), P('1,2,3'))] == ['1,2,3', '1|2,3']
    assert interval(P('1,2|3'), P('1,3|2')) == []


def test_interval_agrees_with_filter_above_limit(P):
    b, a = P('1|2|3|4|5,6|7'), P('1,2,3|4,5,6,7')
    expected = [c for c in partitions_of(7) if refines(b, c) and refines(c, a)]
    assert interval(b, a) == expected


def test_lower_and_upper_sets(P):
    a = P('1,2|3')
    assert set(lower_set(a)) == {P('1,2|3'), P('1|2|3')}
    assert set(upper_set(a)) == {P('1,2|3'), P('1,2,3')}


def test_interval_profile(P):
    profile = interval_profile(P('1|2|3,4'), P('1,2|3,4'))
    assert profile.counts == (2, 1)
    assert profile.key == (2,)
    with pytest.raises(NotComparableError):
        interval_profile(P('1,2|3'), P('1,3|2'))

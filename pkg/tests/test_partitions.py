import itertools
import math

import pytest

from charstacks import partitions as pt


def test_enumerate_counts():
    assert len(pt.enumerate_partitions(4)) == 5
    assert pt.enumerate_partitions(0) == ((),)
    assert len(pt.enumerate_partitions(6)) == 11


def _p_count(n, maxpart=None):
    # independent recursive partition counter
    if maxpart is None:
        maxpart = n
    if n == 0:
        return 1
    return sum(_p_count(n - k, k) for k in range(1, min(n, maxpart) + 1))


def test_enumerate_matches_recursive_count():
    for n in range(9):
        parts = pt.enumerate_partitions(n)
        assert len(parts) == _p_count(n)
        assert len(set(parts)) == len(parts)
        assert all(sum(lam) == n for lam in parts)


def test_arm_leg():
    assert pt.arm((1,), (1, 1)) == 0 and pt.leg((1,), (1, 1)) == 0
    assert pt.arm((2,), (1, 1)) == 1 and pt.leg((2,), (1, 1)) == 0
    assert pt.arm((2, 1), (1, 1)) == 1 and pt.leg((2, 1), (1, 1)) == 1


def test_cell_outside_rejected():
    with pytest.raises(ValueError):
        pt.arm((2, 1), (1, 3))


def test_conjugate():
    assert pt.conjugate((2, 1)) == (2, 1)
    assert pt.conjugate((3,)) == (1, 1, 1)
    for n in range(9):
        for lam in pt.enumerate_partitions(n):
            assert pt.conjugate(pt.conjugate(lam)) == lam


def test_dominance_chain():
    assert pt.dominance_leq((1, 1, 1), (2, 1))
    assert pt.dominance_leq((2, 1), (3,))
    assert not pt.dominance_leq((3,), (2, 1))
    with pytest.raises(ValueError):
        pt.dominance_leq((2,), (2, 1))


def test_dominance_partial_order():
    for n in range(1, 9):
        parts = pt.enumerate_partitions(n)
        for a in parts:
            assert pt.dominance_leq(a, a)
        for a, b in itertools.permutations(parts, 2):
            if pt.dominance_leq(a, b) and pt.dominance_leq(b, a):
                assert a == b
        for a, b, c in itertools.product(parts, repeat=3):
            if pt.dominance_leq(a, b) and pt.dominance_leq(b, c):
                assert pt.dominance_leq(a, c)


def test_statistics():
    assert pt.zlambda((2, 1)) == 2
    assert pt.nstat((2, 1)) == 1
    assert pt.zlambda((1, 1)) == 2


def _count_syt(lam):
    # standard Young tableaux by recursion on removable corner cells
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i == len(lam) - 1 or lam[i] > lam[i + 1]:
            smaller = list(lam)
            smaller[i] -= 1
            total += _count_syt(tuple(p for p in smaller if p))
    return total


def test_hook_length_formula():
    for n in range(1, 7):
        for lam in pt.enumerate_partitions(n):
            hooks = pt.hook_lengths(lam)
            assert hooks == [pt.arm(lam, s) + pt.leg(lam, s) + 1
                             for s in pt.cells(lam)]
            assert _count_syt(lam) == math.factorial(n) // math.prod(hooks)


def test_multipartition_checks():
    assert pt.check_multipartition(((2, 1), (1, 1, 1))) == ((2, 1), (1, 1, 1))
    with pytest.raises(ValueError):
        pt.check_multipartition(())
    with pytest.raises(ValueError):
        pt.check_multipartition(((2,), (1,)))


def test_text_roundtrip():
    for lam in ((3, 1), (), (1, 1, 1)):
        assert pt.parse_partition(pt.partition_text(lam)) == lam

import random

import pytest

from modrep.partitions import (
    CoreQuotientPair,
    Partition,
    PartitionError,
    conjugate,
    conjugate_core_quotient_law_check,
    core_quotient,
    diagonal_hooks,
    dominance_leq,
    from_core_quotient,
    hook_lengths,
    is_p_core,
    is_p_regular,
    lex_leq,
    lexprime_leq,
    p_core,
    p_quotient,
    p_regular_partitions_of,
    parse_partition,
    partitions_of,
    regularize,
    self_conjugate_partitions_of,
)

P = Partition


def brute_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - k, k):
            yield (k,) + rest


def test_conjugate_examples():
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((4, 1)) == (2, 1, 1, 1)


def test_conjugate_involution():
    for n in range(31):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam


def test_orders():
    assert dominance_leq((2, 2), (4,))
    assert dominance_leq((3, 1), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert lex_leq((4, 1), (5,))
    assert lex_leq((3, 2, 1), (3, 2, 1))
    assert lexprime_leq((6, 2, 2, 1, 1), (5, 3, 2, 2))


def test_dominance_refined_by_both_total_orders():
    for n in range(16):
        ps = list(partitions_of(n))
        for a in ps:
            for b in ps:
                if dominance_leq(a, b):
                    assert lex_leq(a, b) and lexprime_leq(a, b)


def test_regularity():
    assert is_p_regular((2, 2, 1), 3)
    assert not is_p_regular((1, 1, 1), 3)
    assert not is_p_regular((1,) * 6, 3)


def test_hooks():
    assert diagonal_hooks((3, 2, 1)) == (5, 1)
    assert diagonal_hooks((1,)) == (1,)
    assert diagonal_hooks((2, 2)) == (3, 1)
    assert hook_lengths((3, 2, 1)) == [[5, 3, 1], [3, 1], [1]]


def test_diagonal_hooks_of_self_conjugate():
    for n in range(1, 31):
        for lam in self_conjugate_partitions_of(n):
            d = diagonal_hooks(lam)
            assert sum(d) == n
            assert all(x % 2 == 1 for x in d)
            assert list(d) == sorted(set(d), reverse=True)


def test_core_and_quotient_examples():
    lam = P((3, 2, 1))
    assert p_core(lam, 3) == ()
    assert sum(q.n for q in p_quotient(lam, 3)) == 2
    assert p_quotient((9, 2) + (1,) * 7, 3) == ((1, 1, 1), (), (3,))
    for gamma in [(), (1,), (2,), (3, 1, 1), (4, 2)]:
        if is_p_core(gamma, 3):
            assert p_core(gamma, 3) == gamma


def test_core_quotient_roundtrip():
    for p in (2, 3, 5, 7):
        for n in range(26):
            for lam in partitions_of(n):
                cq = core_quotient(lam, p)
                assert lam.n == cq.core.n + p * sum(q.n for q in cq.quotient)
                assert from_core_quotient(cq) == lam


def test_conjugation_law_on_cores_and_quotients():
    assert conjugate_core_quotient_law_check((), 3)
    assert conjugate_core_quotient_law_check((9, 2) + (1,) * 7, 3)
    for p in (2, 3, 5):
        for n in range(26):
            for lam in partitions_of(n):
                assert conjugate_core_quotient_law_check(lam, p)


def test_self_conjugate_quotient_is_reverse_conjugate_symmetric():
    for n in range(20):
        for lam in self_conjugate_partitions_of(n):
            q = p_quotient(lam, 3)
            assert tuple(q) == tuple(conjugate(x) for x in reversed(q))


def test_regularize():
    assert regularize((12,) + (1,) * 11, 3) == (12, 6, 5)
    assert regularize((1, 1, 1), 3) == (2, 1)
    for n in range(14):
        for lam in partitions_of(n):
            r = regularize(lam, 3)
            assert r.n == lam.n and is_p_regular(r, 3)
            assert regularize(r, 3) == r
            if is_p_regular(lam, 3):
                assert r == lam


def test_enumeration():
    assert len(list(partitions_of(5))) == 7
    assert list(partitions_of(0)) == [()]
    assert set(p_regular_partitions_of(5, 3)) == {(2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)}
    for n in range(16):
        got = list(partitions_of(n))
        assert got == sorted(got, reverse=True)
        assert set(got) == set(brute_partitions(n))


def test_parse():
    assert parse_partition("10,4,4,1") == (10, 4, 4, 1)
    assert parse_partition("[3, 2, 1]") == (3, 2, 1)
    assert parse_partition("") == ()
    assert parse_partition("9,2,1^7") == (9, 2) + (1,) * 7
    with pytest.raises(PartitionError):
        parse_partition("1,2")
    with pytest.raises(PartitionError):
        parse_partition("a,b")


def test_random_core_quotient_construction():
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice((3, 5))
        core = rng.choice([c for c in partitions_of(rng.randrange(7)) if is_p_core(c, p)] or [P()])
        quotient = tuple(rng.choice(list(partitions_of(rng.randrange(3)))) for _ in range(p))
        lam = from_core_quotient(CoreQuotientPair(core, quotient, p))
        assert p_core(lam, p) == core and tuple(p_quotient(lam, p)) == quotient

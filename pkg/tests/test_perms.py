from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from bruhat_taquin.perms import (
    Permutation, ValueTransposition, all_permutations, apply_value_transposition,
    bruhat_down_covers, bruhat_up_covers, conjugate_by_w0, conjugate_transposition,
    descents, grassmannian_to_partition, has_no_descents_before, is_cover,
    is_grassmannian, is_k_semi_shuffle, length, partition_to_grassmannian,
)

perms_strategy = st.integers(1, 6).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda w: Permutation(tuple(w)))


def brute_inversions(p):
    return sum(1 for i, j in combinations(range(p.n), 2) if p.word[i] > p.word[j])


def test_length_examples(P):
    assert length(P("1234")) == 0
    assert length(P("4321")) == 6
    assert length(P("2143")) == 2


def test_descent_examples(P):
    assert descents(P("1234")) == frozenset()
    assert descents(P("2143")) == {1, 3}
    assert descents(P("2413")) == {2}


@given(perms_strategy)
def test_length_is_inversion_count(p):
    assert length(p) == brute_inversions(p)


def test_parse_rejects_garbage():
    for bad in ["", "12a", "1224", "0123"]:
        with pytest.raises(ValueError):
            Permutation.parse(bad)


def test_parse_separated_words():
    assert Permutation.parse("10,1,2,3,4,5,6,7,8,9").n == 10
    assert str(Permutation.parse("2 1 3")) == "213"


def test_transposition_parse_and_str():
    t = ValueTransposition.parse("1_4")
    assert (t.a, t.b) == (1, 4)
    assert str(t) == "1_4"
    assert ValueTransposition.of(4, 1) == t
    with pytest.raises(ValueError):
        ValueTransposition.parse("4_1")
    with pytest.raises(ValueError):
        ValueTransposition.parse("14")


def test_up_covers_2143_k2(P):
    edges = {(str(e.values), str(e.target)) for e in bruhat_up_covers(P("2143"), 2)}
    assert edges == {("1_3", "2341"), ("1_4", "2413"), ("2_3", "3142"), ("2_4", "4123")}


def test_up_covers_identity_k1(P):
    edges = {(str(e.values), str(e.target)) for e in bruhat_up_covers(P("1234"), 1)}
    assert edges == {("1_2", "2134")}


def test_longest_has_no_up_covers():
    w0 = Permutation.longest(4)
    for k in range(1, 4):
        assert bruhat_up_covers(w0, k) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_covers_match_brute_force(n):
    # a cover is a position swap raising the length by exactly one
    for p in all_permutations(n):
        brute = set()
        for a, b in combinations(range(1, n + 1), 2):
            q = p.swap_positions(a, b)
            if length(q) == length(p) + 1:
                brute.add(q)
        assert {e.target for e in bruhat_up_covers(p)} == brute
        for k in range(1, n):
            expected = {q for q in brute
                        if any(q.word[i - 1] != p.word[i - 1] for i in range(1, k + 1))
                        and any(q.word[i - 1] != p.word[i - 1] for i in range(k + 1, n + 1))}
            assert {e.target for e in bruhat_up_covers(p, k)} == expected


@pytest.mark.parametrize("n", [3, 4])
def test_down_covers_invert_up_covers(n):
    for p in all_permutations(n):
        for k in range(1, n):
            for e in bruhat_up_covers(p, k):
                assert p in {d.source for d in bruhat_down_covers(e.target, k)}
                assert is_cover(p, e.target, k)


def test_apply_value_transposition(P):
    assert apply_value_transposition(P("2143"), ValueTransposition(1, 4)) == P("2413")
    assert apply_value_transposition(P("2143"), ValueTransposition(2, 4)) == P("4123")


@given(perms_strategy, st.data())
def test_value_transposition_is_involution(p, data):
    if p.n < 2:
        return
    a = data.draw(st.integers(1, p.n - 1))
    b = data.draw(st.integers(a + 1, p.n))
    t = ValueTransposition(a, b)
    assert apply_value_transposition(apply_value_transposition(p, t), t) == p


def test_grassmannian_partition_examples(P):
    assert grassmannian_to_partition(P("2413"), 2) == (2, 1)
    assert grassmannian_to_partition(P("1234"), 2) == ()
    assert partition_to_grassmannian((1,), 2, 4) == P("1324")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_grassmannian_round_trip(n):
    for p in all_permutations(n):
        for k in range(1, n):
            if is_grassmannian(p, k):
                lam = grassmannian_to_partition(p, k)
                assert partition_to_grassmannian(lam, k, n) == p


def test_semi_shuffle_examples(P):
    assert is_k_semi_shuffle(P("2413"), 2)
    assert is_k_semi_shuffle(P("1234"), 3)
    assert not is_k_semi_shuffle(P("2143"), 2)
    assert has_no_descents_before(P("1243"), 3)
    assert not has_no_descents_before(P("2143"), 2)


def test_w0_conjugation_examples(P):
    assert conjugate_by_w0(P("1234")) == P("1234")
    assert conjugate_by_w0(P("4321")) == P("4321")
    assert conjugate_by_w0(P("2134")) == P("1243")


@pytest.mark.parametrize("n", [3, 4])
def test_w0_conjugation_maps_k_covers(n):
    for p in all_permutations(n):
        for k in range(1, n):
            for e in bruhat_up_covers(p, k):
                q = conjugate_by_w0(e.target)
                t = conjugate_transposition(e.values, n)
                assert is_cover(conjugate_by_w0(p), q, n - k)
                assert apply_value_transposition(conjugate_by_w0(p), t) == q


def test_lehmer_code_round_trip():
    for p in all_permutations(5):
        assert Permutation.from_lehmer_code(p.lehmer_code()) == p
        assert sum(p.lehmer_code()) == length(p)

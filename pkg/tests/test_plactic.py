import pytest

from bruhat_taquin.chains import (
    BruhatInterval, ChainWord, enumerate_maximal_chains, has_nesting, k_up_set,
)
from bruhat_taquin.perms import (
    Permutation, ValueTransposition, all_permutations, partition_to_grassmannian,
)
from bruhat_taquin.plactic import (
    InvalidWindow, NestingPresent, TranspositionTableau, all_kb_rewrites,
    beligan_count, beligan_tableaux, canonical_P, kb_rewrites, match_kb,
    plactic_class, plactic_classes, recording_Q, ruleoutkb_holds, split_into_rows,
)
from bruhat_taquin.schubert import grassmannian_coefficient
from bruhat_taquin.young import lr_count_via_rectification, num_syt, partitions

P = Permutation.parse
T = ValueTransposition.parse


def words(text):
    return tuple(T(s) for s in text.split())


def non_nesting_intervals(n):
    for v in all_permutations(n):
        for k in range(1, n):
            for w in sorted(k_up_set(v, k)):
                interval = BruhatInterval(v, w, k)
                if not has_nesting(interval):
                    yield interval


def test_kb3_pattern_match():
    matches = match_kb(*words("1_2 5_6 3_4"))
    assert ("KB3", True, words("5_6 1_2 3_4")) in matches


def test_each_relation_round_trips():
    for left, right, rule in [("1_3 3_4 2_3", "2_3 1_2 2_4", "KB1"),
                              ("2_3 3_4 1_3", "2_4 1_2 2_3", "KB2"),
                              ("1_2 5_6 3_4", "5_6 1_2 3_4", "KB3"),
                              ("3_4 5_6 1_2", "3_4 1_2 5_6", "KB4")]:
        assert (rule, True, words(right)) in match_kb(*words(left))
        assert (rule, False, words(left)) in match_kb(*words(right))


def test_no_match():
    assert match_kb(*words("1_2 2_3 3_4")) == []


def test_window_bounds():
    g = ChainWord.parse("1234", "1_2", 1)
    with pytest.raises(InvalidWindow):
        kb_rewrites(g, 0)


def test_rewrites_keep_endpoints_on_S4():
    for interval in non_nesting_intervals(4):
        for g in enumerate_maximal_chains(interval):
            for rw in all_kb_rewrites(g):
                assert rw.chain.base == g.base and rw.chain.end == g.end
                assert rw.chain.is_pure(interval.k)


def test_ruleoutkb_on_every_fired_KB1_KB2():
    fired = 0
    for interval in non_nesting_intervals(4):
        for g in enumerate_maximal_chains(interval):
            for rw in all_kb_rewrites(g):
                if rw.rule in ("KB1", "KB2"):
                    fired += 1
                    window = g.labels[rw.pos:rw.pos + 3]
                    assert ruleoutkb_holds(g.perms[rw.pos], window, rw.rule, rw.forward, interval.k)
    assert fired > 0


def test_length_one_class_is_singleton():
    g = ChainWord.parse("1234", "1_2", 1)
    cls = plactic_class(g)
    assert cls.members == (g,)
    assert recording_Q(g).rows == ((1,),)


def test_classes_partition_chains_and_have_one_canonical_form():
    for interval in non_nesting_intervals(4):
        chains = enumerate_maximal_chains(interval)
        classes = plactic_classes(interval)
        members = [m for c in classes for m in c.members]
        assert sorted(members, key=str) == sorted(chains, key=str)
        assert len(set(members)) == len(members)
        for c in classes:
            assert c.canonical is not None and c.canonical.is_strict()
            assert len(c) == num_syt(c.canonical.shape)
        assert sum(num_syt(c.canonical.shape) for c in classes) == len(chains)


def test_identity_to_grassmannian_is_one_class():
    for k in range(1, 4):
        for size in range(1, 5):
            for lam in partitions(size):
                if len(lam) <= k and lam[0] <= 4 - k:
                    interval = BruhatInterval(Permutation.identity(4), partition_to_grassmannian(lam, k, 4), k)
                    classes = plactic_classes(interval)
                    assert len(classes) == 1
                    assert classes[0].canonical.shape == lam


def test_canonical_of_row_word_is_itself():
    interval = BruhatInterval(Permutation.identity(4), partition_to_grassmannian((2, 1), 2, 4), 2)
    for g in enumerate_maximal_chains(interval):
        p = canonical_P(g)
        assert p.shape == (2, 1)
        row = ChainWord.pure(g.base, p.row_word(), 2)
        assert canonical_P(row) == p


def test_P_Q_is_injective_with_standard_Q():
    for interval in non_nesting_intervals(4):
        seen = set()
        for g in enumerate_maximal_chains(interval):
            if not g.steps:
                continue
            p, q = canonical_P(g), recording_Q(g)
            assert q.is_standard() and q.outer == p.shape
            seen.add((p, q))
        assert len(seen) == len([g for g in enumerate_maximal_chains(interval) if g.steps])


def rsk_recording(word):
    """Classical row-insertion recording tableau (as a cell map)."""
    rows, rec = [], {}
    for i, x in enumerate(word, 1):
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                rec[(r + 1, 1)] = i
                break
            row = rows[r]
            j = next((j for j, y in enumerate(row) if y > x), None)
            if j is None:
                row.append(x)
                rec[(r + 1, len(row))] = i
                break
            row[j], x = x, row[j]
            r += 1
    return rec


def test_Q_of_row_word_matches_classical_reading_word():
    from bruhat_taquin.young import Tableau, row_word, special_tableau_P1
    for interval in non_nesting_intervals(4):
        for c in plactic_classes(interval):
            if not c.canonical.rows:
                continue
            row = ChainWord.pure(interval.v, c.canonical.row_word(), interval.k)
            classical = rsk_recording(row_word(special_tableau_P1(c.canonical.shape)))
            assert recording_Q(row) == Tableau.from_cells(classical)


def test_split_into_rows():
    tab = split_into_rows(words("3_4 1_2 2_5"))
    assert tab == TranspositionTableau((words("1_2 2_5"), words("3_4")))
    assert split_into_rows(words("1_2 3_4 1_5")) is None
    assert TranspositionTableau.from_json(tab.to_json()) == tab


def test_beligan_monk_case():
    for interval in non_nesting_intervals(4):
        if interval.rank() == 1:
            assert beligan_count(interval.v, interval.w, interval.k, (1,)) == 1


def test_beligan_grassmannian_matches_classical_lr():
    n, k = 5, 2
    for mu in partitions(2):
        for size in (3, 4):
            for nu in partitions(size):
                if len(nu) > k or nu[0] > n - k or len(mu) > k:
                    continue
                if any(m > (nu[i] if i < len(nu) else 0) for i, m in enumerate(mu)):
                    continue
                v, w = partition_to_grassmannian(mu, k, n), partition_to_grassmannian(nu, k, n)
                for lam in partitions(size - 2):
                    assert beligan_count(v, w, k, lam) == lr_count_via_rectification(lam, mu, nu)


def test_beligan_matches_oracle_on_S4():
    for interval in non_nesting_intervals(4):
        v, w, k = interval.v, interval.w, interval.k
        for lam in partitions(interval.rank()):
            assert beligan_count(v, w, k, lam) == grassmannian_coefficient(lam, k, v, w)


def test_beligan_refuses_nesting():
    with pytest.raises(NestingPresent):
        beligan_tableaux(P("2143"), P("3412"), 2, (1, 1))

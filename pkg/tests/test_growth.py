import json
from collections import Counter

import pytest

from bruhat_taquin.chains import ChainWord, InvalidChain, k_up_set
from bruhat_taquin.growth import (
    PL_EXCLUDED, PR_EXCLUDED, TAGS, W0_PARTNER, GrowthDiagram, abstract_local_rule,
    conjugate_chain, conjugate_diagram, conjugated_grid_matches, fill_growth_diagram,
    jdt_chain, jdt_symmetry_check, local_rule,
)
from bruhat_taquin.perms import Permutation, ValueTransposition, all_permutations, bruhat_up_covers
from bruhat_taquin.render import ascii_diagram, tikz_diagram
from bruhat_taquin.verify import boundary_chain, eligible_sides, jdt_outputs

P = Permutation.parse
T = ValueTransposition.parse


def example():
    delta = ChainWord.parse("2143", "2_4@1")
    gamma = ChainWord.parse(delta.end, "1_2 2_3", 2)
    return delta, gamma, fill_growth_diagram(delta, gamma, 2)


@pytest.mark.parametrize("rule", [local_rule, lambda *a: abstract_local_rule(*a) + ("",)])
def test_local_rule_examples(rule):
    assert rule(P("2143"), T("2_4"), T("1_2"), 2, 1)[:2] == (T("1_4"), T("2_4"))
    assert rule(P("2413"), T("2_4"), T("2_3"), 2, 1)[:2] == (T("2_3"), T("3_4"))
    # disjoint supports: 1234 -> 2134 (column 1) -> 2143 (column 3)
    assert rule(P("1234"), T("1_2"), T("3_4"), 3, 1)[:2] == (T("3_4"), T("1_2"))


def test_local_rule_example_tags():
    assert local_rule(P("2143"), T("2_4"), T("1_2"), 2, 1)[2] == "J8"
    assert local_rule(P("2413"), T("2_4"), T("2_3"), 2, 1)[2] == "J2"
    assert local_rule(P("1234"), T("1_2"), T("3_4"), 3, 1)[2] == "J0"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_table_and_search_agree_on_every_configuration(n):
    # every (w, column-l cover, column-k cover) triple has exactly one case
    for w in all_permutations(n):
        for l in range(1, n):
            for e in bruhat_up_covers(w, l):
                for k in range(1, n):
                    for f in bruhat_up_covers(e.target, k):
                        sigma, tau_out, tag = local_rule(w, e.values, f.values, k, l)
                        assert tag in TAGS
                        assert abstract_local_rule(w, e.values, f.values, k, l) == (sigma, tau_out)


def test_worked_example_grid():
    _, _, d = example()
    bottom = [str(d.grid[i][0]) for i in range(3)]
    top = [str(d.grid[i][1]) for i in range(3)]
    assert bottom == ["2143", "2413", "3412"]
    assert top == ["4123", "4213", "4312"]
    assert d.output.word() == "1_4 2_3"
    assert d.tag_sequence() == ["J8", "J2"]
    assert d.delta_out.word(show_columns=True) == "3_4@1"


def test_empty_delta_returns_gamma():
    gamma = ChainWord.parse("4123", "1_2 2_3", 2)
    assert jdt_chain(ChainWord(gamma.base), gamma, 2) == gamma


def test_mismatched_boundary_is_rejected():
    delta = ChainWord.parse("2143", "2_4@1")
    with pytest.raises(InvalidChain):
        fill_growth_diagram(delta, ChainWord.parse("2143", "1_4", 2), 2)


def test_json_round_trip():
    _, _, d = example()
    data = json.loads(json.dumps(d.to_json()))
    assert data["grid"][0] == ["2143", "2413", "3412"]
    assert GrowthDiagram.from_json(data) == d


def test_symmetry_on_example_and_trivial_case():
    delta, gamma, _ = example()
    assert jdt_symmetry_check(delta, gamma, 2)
    assert jdt_symmetry_check(ChainWord(gamma.base), gamma, 2)


def all_diagrams(n):
    for v in all_permutations(n):
        for k in range(1, n):
            for side in eligible_sides(v, k):
                delta = boundary_chain(v, k, side)
                for w in sorted(k_up_set(v, k)):
                    for gamma, d in jdt_outputs(delta, v, w, k).items():
                        yield side, delta, gamma, d


def test_symmetry_and_exclusions_on_S4():
    fired = {"PL": Counter(), "PR": Counter()}
    for side, delta, gamma, d in all_diagrams(4):
        assert jdt_symmetry_check(delta, gamma, d.k)
        fired[side].update(d.tag_sequence())
    assert not set(fired["PL"]) & PL_EXCLUDED
    assert not set(fired["PR"]) & PR_EXCLUDED
    # the two sides reach mirror-image tag sets
    assert {W0_PARTNER[t] for t in fired["PL"]} == set(fired["PR"])


def test_w0_duality_on_S4():
    for _, delta, gamma, d in all_diagrams(4):
        c = conjugate_diagram(d)
        assert conjugated_grid_matches(d, c)
        assert [W0_PARTNER[t] for t in d.tag_sequence()] == c.tag_sequence()
        assert c.output == conjugate_chain(d.output)


def test_conjugated_example():
    _, _, d = example()
    assert conjugate_diagram(d).tag_sequence() == ["J6", "J4"]


def test_renderings():
    _, _, d = example()
    text = ascii_diagram(d)
    assert text.splitlines()[0].startswith("4123 --1_2-- 4213 --2_3-- 4312")
    assert "[J8]" in text and "[J2]" in text
    tex = tikz_diagram(d)
    assert tex.startswith("\\begin{tikzcd}") and tex.endswith("\\end{tikzcd}")
    assert '"1_4"' in tex and "\\mathrm{J8}" in tex

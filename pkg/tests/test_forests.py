import itertools

import pytest

from fcayley import counting
from fcayley.cayley import boundary_report, make_alphabet
from fcayley.forests import (
    BudgetExceeded,
    MarkedForest,
    act,
    bb_automaton,
    enumerate_bb,
    find_y0,
    is_y0_member,
    parse_forest,
)
from fcayley.trees import LEAF, caret

ALL_LETTERS = [s + sfx for s in ("x0", "x1", "xb1", "x2") for sfx in ("", "^-1")]


def forest(s):
    return parse_forest(s)


def test_forest_key_roundtrip():
    f = forest("(..);.*;(..)")
    assert f.enc == "(..);.*;(..)"
    assert f.mark == 1
    assert f.leaves == 5


def test_forest_key_errors():
    with pytest.raises(ValueError):
        parse_forest("(..);.")  # no mark
    with pytest.raises(ValueError):
        parse_forest(".*;.*")  # two marks


def test_x0_moves_marker():
    f = forest(".;.*")
    assert act("x0", f, 0).enc == ".*;."
    assert act("x0^-1", f, 0) is None
    assert act("x0", forest(".*;."), 0) is None


def test_x1_splits_marked_caret():
    f = forest("(.(..))*")
    out = act("x1", f, 2)
    assert out.enc == ".*;(..)"
    out2 = act("xb1", f, 2)
    assert out2.enc == ".;(..)*"


def test_x1_undefined_on_trivial_marked_tree():
    assert act("x1", forest(".*;."), 1) is None
    assert act("xb1", forest(".*;."), 1) is None


def test_merges_respect_height_cap():
    f = forest(".*;.")
    assert act("x1^-1", f, 1).enc == "(..)*"
    assert act("x1^-1", f, 0) is None  # merged tree would have height 1
    g = forest("(..);.*")
    assert act("xb1^-1", g, 1) is None  # left neighbour already at the cap
    assert act("xb1^-1", g, 2).enc == "((..).)*"


def test_act_inverse_cancels():
    members = enumerate_bb(5, 2)
    for f in members:
        for a in ALL_LETTERS:
            g = act(a, f, 2)
            if g is not None:
                inv = a[:-3] if a.endswith("^-1") else a + "^-1"
                assert act(inv, g, 2) == f, (f.enc, a)


def test_act_preserves_leaves_and_cap():
    for f in enumerate_bb(6, 2):
        for a in ALL_LETTERS:
            g = act(a, f, 2)
            if g is not None:
                assert g.leaves == f.leaves
                assert g.max_height() <= 2


def test_xb1_equals_x1_then_marker_right():
    for f in enumerate_bb(6, 2):
        direct = act("xb1", f, 2)
        composed = act("x1", f, 2)
        if composed is not None:
            composed = act("x0^-1", composed, 2)
        assert direct == composed


def test_x2_is_the_conjugated_composition():
    # accepted exactly when the tree right of the marker exists and is nontrivial
    for f in enumerate_bb(6, 2):
        out = act("x2", f, 2)
        has_nontrivial_right = (
            f.mark + 1 < len(f.trees) and not f.trees[f.mark + 1].is_leaf()
        )
        assert (out is not None) == has_nontrivial_right


def test_enumerate_bb_small_counts():
    assert len(enumerate_bb(2, 1)) == 3
    for n in range(1, 7):
        assert len(enumerate_bb(n, 0)) == n


def test_enumerate_bb_matches_dp():
    for n, k in itertools.product(range(1, 9), range(0, 4)):
        assert len(enumerate_bb(n, k)) == counting.bb_count(n, k), (n, k)


def test_enumerate_budget_guard():
    with pytest.raises(BudgetExceeded):
        enumerate_bb(8, 3, budget=10)


def test_catalan_limit_when_cap_not_binding():
    # forests with n leaves, unbounded height: the nth Catalan number
    for n in range(1, 8):
        members = enumerate_bb(n, max(1, n - 1))
        distinct_forests = {tuple(t.enc for t in f.trees) for f in members}
        assert len(distinct_forests) == counting.catalan(n)
        assert len(members) == sum(len(f) for f in distinct_forests)


def test_bb21_automaton_slots():
    aut = bb_automaton(2, 1, make_alphabet("x1,xb1"))
    caret_marked = "(..)*"
    assert aut.accepts(caret_marked, "x1")
    assert aut.accepts(caret_marked, "xb1")
    for dots in (".*;.", ".;.*"):
        assert not aut.accepts(dots, "x1")
        assert not aut.accepts(dots, "xb1")
    # merges where the height cap permits
    assert aut.accepts(".*;.", "x1^-1")
    assert aut.accepts(".;.*", "xb1^-1")


def test_bb_automaton_nu_x1_counts_trivial_marked():
    for n, k in [(3, 1), (4, 2), (5, 2)]:
        aut = bb_automaton(n, k, make_alphabet("x0,x1"))
        rep = boundary_report(aut)
        trivial_marked = sum(
            1 for f in enumerate_bb(n, k) if f.trees[f.mark].is_leaf()
        )
        assert rep.nu["x1"] == trivial_marked


def test_bb_automaton_symmetric_property():
    for spec in ("x0,x1", "x1,xb1", "x0,x1,xb1", "x0,x1,x2"):
        aut = bb_automaton(5, 2, make_alphabet(spec))
        rep = boundary_report(aut)
        for s in aut.alphabet.symbols:
            assert rep.nu[s] == rep.nu[s + "^-1"], (spec, s)


def test_find_y0_example():
    y0 = find_y0(5, 1)
    assert [f.enc for f in y0] == ["(..);.*;(..)"]
    assert find_y0(3, 0) == []


def test_y0_members_are_isolated():
    for n, k in [(5, 1), (6, 1), (7, 2)]:
        y0 = {f.enc for f in find_y0(n, k)}
        if not y0:
            continue
        aut2 = bb_automaton(n, k, make_alphabet("x1,xb1"))
        aut3 = bb_automaton(n, k, make_alphabet("x0,x1,xb1"))
        for key in y0:
            assert all(t is None for t in aut2.slots[key].values())
            accepted = [a for a, t in aut3.slots[key].items() if t is not None]
            assert sorted(accepted) == ["x0", "x0^-1"]


def test_y0_subset_of_bb():
    members = {f.enc for f in enumerate_bb(6, 2)}
    for f in find_y0(6, 2):
        assert f.enc in members
        assert is_y0_member(f, 2)


def test_marked_forest_validation():
    with pytest.raises(ValueError):
        MarkedForest((), 0)
    with pytest.raises(ValueError):
        MarkedForest((LEAF,), 1)
    f = MarkedForest((caret(LEAF, LEAF), LEAF), 0)
    assert f.enc == "(..)*;."


def test_act_rejects_unknown_letter():
    with pytest.raises(ValueError):
        act("x9", forest(".*"), 1)

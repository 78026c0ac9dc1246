import itertools
from fractions import Fraction

import pytest

from fcayley import counting, forests
from fcayley.cayley import boundary_report, make_alphabet
from fcayley.counting import (
    CountTable,
    bb_count,
    catalan,
    density_report,
    nu_counts,
    p_fraction,
    tree_counts,
    trimmed_density,
    trimming_constants,
    xi_diagnostics,
    xi_estimate,
    y0_count,
)


def test_tree_counts_examples():
    f2 = tree_counts(2, 4)
    assert f2[1] == 1
    assert f2[3] == 2
    assert f2[4] == 1
    for k in range(0, 6):
        assert tree_counts(k, 3)[1] == 1


def test_tree_counts_support_bound():
    f3 = tree_counts(3, 12)
    assert all(f3[l] == 0 for l in range(9, 13))  # 2^3 = 8 leaves max
    assert f3[8] == 1


def test_tree_counts_vs_enumeration():
    from fcayley.trees import enumerate_trees

    for k in range(0, 4):
        f = tree_counts(k, 9)
        for l in range(1, 10):
            assert f[l] == len(enumerate_trees(l, k)), (k, l)


def test_tree_counts_monotone_in_k():
    for l in range(1, 12):
        prev = 0
        for k in range(0, 6):
            cur = tree_counts(k, 12)[l]
            assert cur >= prev
            prev = cur


def test_bb_count_examples():
    assert bb_count(2, 1) == 3
    for n in range(1, 10):
        assert bb_count(n, 0) == n


def test_bb_count_monotone_and_stable_when_cap_free():
    for n in range(1, 9):
        prev = 0
        for k in range(0, n + 2):
            cur = bb_count(n, k)
            assert cur >= prev
            prev = cur
        # cap k >= n-1 cannot bind: any tree with <= n leaves fits
        assert bb_count(n, max(1, n - 1)) == bb_count(n, n + 5)


def test_catalan_cross_checks():
    assert catalan(3) == 5
    # unmarked forest count with a non-binding cap equals the Catalan number
    for n in range(1, 9):
        t = CountTable(max(1, n - 1), n)
        assert t.F[n] == catalan(n)


def test_dp_equals_enumeration_full_grid():
    symbols = ("x0", "x1", "xb1", "x2")
    for n, k in itertools.product(range(1, 9), range(0, 4)):
        members = forests.enumerate_bb(n, k)
        assert bb_count(n, k) == len(members)
        assert y0_count(n, k) == len(forests.find_y0(n, k))
        dp = nu_counts(n, k, symbols)
        for letter, count in dp.items():
            rejected = sum(1 for f in members if forests.act(letter, f, k) is None)
            assert count == rejected, (n, k, letter)


def test_nu_examples():
    nu = nu_counts(2, 1, ("x0", "x1"))
    assert nu["x0"] == 2
    assert nu["x1"] == 2
    assert nu["x1^-1"] == 2


def test_nu_symmetric_property_dp():
    for n, k in itertools.product((4, 6, 8, 12, 30), (0, 1, 2, 3, 5)):
        nu = nu_counts(n, k, ("x0", "x1", "xb1", "x2"))
        for s in ("x0", "x1", "xb1", "x2"):
            assert nu[s] == nu[s + "^-1"], (n, k, s)


def test_nu_multiset_symbols():
    nu = nu_counts(4, 2, ("x1", "xb1", "x0", "x0@2"))
    assert nu["x0"] == nu["x0@2"]
    assert nu["x0^-1"] == nu["x0@2^-1"]


def test_nu_rejects_unknown():
    with pytest.raises(ValueError):
        nu_counts(3, 1, ("x7",))


def test_y0_examples():
    assert y0_count(5, 1) == 1
    assert y0_count(4, 1) == 0  # needs two height-1 neighbours plus the marked dot
    for n in range(1, 9):
        assert y0_count(n, 0) == 0


def test_density_report_identity_and_fields():
    rec = density_report(6, 2, ("x0", "x1", "xb1"))
    assert rec.density + rec.iota == 6
    assert rec.size == bb_count(6, 2)
    assert rec.p == p_fraction(6, 2)
    assert rec.xi == xi_estimate(2, 6)
    obj = rec.as_obj()
    assert obj["delta"] == str(rec.density)
    assert Fraction(obj["iota"]) == rec.iota


def test_xi_k0_is_harmonic():
    for n in range(2, 12):
        assert xi_estimate(0, n) == Fraction(n - 1, n)


def test_xi_diagnostics_shrink():
    d_small = xi_diagnostics(2, 60)
    d_large = xi_diagnostics(2, 240)
    assert d_large["gap"] < d_small["gap"]
    assert d_large["xi"] > Fraction(1, 4)


def test_xi_decreasing_in_k():
    values = [xi_estimate(k, 400) for k in range(2, 7)]
    for a, b in zip(values, values[1:]):
        assert b < a
    assert all(v > Fraction(1, 4) for v in values)


def test_trimmed_density_matches_explicit_removal():
    for n, k in itertools.product(range(1, 9), range(1, 4)):
        aut = forests.bb_automaton(n, k, make_alphabet("x0,x1,xb1"))
        y0 = {f.enc for f in forests.find_y0(n, k)}
        tr = trimmed_density(n, k)
        if y0 == set(aut.keys):
            continue  # nothing left after trimming
        sub = aut.restrict([v for v in aut.keys if v not in y0])
        assert boundary_report(sub).density == tr.trimmed_density, (n, k)


def test_trimmed_density_reduces_to_delta_without_y0():
    tr = trimmed_density(4, 1)  # y0_count(4,1) = 0
    assert tr.p == 0
    assert tr.trimmed_density == tr.density
    assert tr.iota_star_bound == 6 - tr.density


def test_trimming_constants():
    consts = trimming_constants()
    assert consts["p0"] == Fraction(1, 260)
    assert consts["eps"] == Fraction(1, 520)
    assert consts["iota_bound"] == Fraction(517, 518)
    # generic symbolic form
    other = trimming_constants(p0=Fraction(1, 10), eps=Fraction(1, 20))
    assert other["iota_bound"] == 1 - Fraction(1, 20) / Fraction(9, 10)


def test_table_cache_growth():
    t1 = counting.table(1, 10)
    t2 = counting.table(1, 500)
    assert t2.n_max >= 500
    assert t2.M[10] == t1.M[10]

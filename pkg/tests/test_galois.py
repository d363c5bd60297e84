from itertools import combinations

import pytest
import sympy

from deformata import galois
from deformata.errors import InputError, PreconditionError
from deformata.exactalg import Poly, RatFn
from deformata.hopfact import cyclic_group, sweedler, trivial_action
from deformata.pipeline import corpus_action, corpus_algebra

from conftest import XYZ, to_sympy

x, y, z = (Poly.var(v, XYZ) for v in XYZ)
ONE = Poly.const(1, XYZ)


def test_coaction_rows_examples(skew3_action):
    m = galois.coaction_rows(skew3_action, [ONE, z, z ** 3])
    assert m.row_strings() == [["1", "1", "0", "0"],
                               ["z", "-z", "x*y", "x*y"],
                               ["z^3", "-z^3", "x*y*z^2", "x*y*z^2"]]
    assert m.column_labels == ("1", "g", "a", "ga")


def test_a_and_ga_columns_agree_up_to_degree_8(skew3_action):
    from deformata.exactalg import monomials_upto
    monos = [Poly(XYZ, {e: 1}) for e in monomials_upto(3, 8)]
    m = galois.coaction_rows(skew3_action, monos)
    for row in m.entries.entries:
        assert row[2] == row[3]


def test_galois_basis_skew3(skew3_action):
    gb = galois.galois_basis(skew3_action, 4)
    assert gb.r == 2 and [str(f) for f in gb.elements] == ["1", "z"]
    assert gb.ranks[-1] == 2


def test_galois_basis_group_examples():
    triv = trivial_action(cyclic_group(3), corpus_algebra("skew3", 1))
    gb = galois.galois_basis(triv)
    assert gb.r == 1 and [str(f) for f in gb.elements] == ["1"]
    gb = galois.galois_basis(corpus_action("z2sign"))
    assert gb.r == 2 and gb.matrix.row_strings() == [["1", "1"], ["z", "-z"]]


def test_rank_not_stabilized():
    with pytest.raises(InputError):
        galois.galois_basis(corpus_action("skew3"), d=1, window=2)


def sympy_ratios(rows, I):
    M = sympy.Matrix([[to_sympy(e) for e in r] for r in rows])
    r, d = M.shape
    dI = M[:, list(I)].det()
    return {J: sympy.cancel(M[:, list(J)].det() / dI) for J in combinations(range(d), r)}


def test_plucker_skew3(skew3_action):
    gb = galois.galois_basis(skew3_action)
    chart = galois.plucker_ratios(gb.matrix)
    assert chart.r == 2 and chart.I == (0, 2) and chart.subset_label(chart.I) == "{1,3}"
    assert RatFn(-2 * z, x * y) in chart.ratios.values()
    ref = sympy_ratios(gb.matrix.entries.entries, chart.I)
    for J, p in chart.ratios.items():
        assert sympy.cancel(to_sympy(p) - ref[J]) == 0
    ok, bad = galois.defined_over_k(chart)
    assert not ok and RatFn(-2 * z, x * y) in [p for _, p in bad]


def test_plucker_pivot_rules(skew3_action):
    B = galois.galois_basis(skew3_action).matrix
    lex = galois.plucker_ratios(B, pivot="lex")
    assert lex.I == (0, 1) and lex.ratios[(0, 2)] == RatFn(-x * y, 2 * z)
    explicit = galois.plucker_ratios(B, I=(0, 2))
    assert explicit.pivot == "explicit"
    assert galois.defined_over_k(lex)[0] == galois.defined_over_k(explicit)[0] is False
    with pytest.raises(InputError):
        galois.plucker_ratios(B, I=(2, 3))
    with pytest.raises(InputError):
        galois.plucker_ratios(B, pivot="other")


def test_plucker_basis_independence(skew3_action):
    """Any other basis of the same row space gives the same ratios."""
    chart = galois.plucker_ratios(galois.galois_basis(skew3_action).matrix)
    for elems in ([x, x * z], [z ** 3, y], [ONE + z, ONE - 2 * z]):
        m = galois.coaction_rows(skew3_action, elems)
        other = galois.plucker_ratios(m, I=chart.I)
        assert other.ratios == chart.ratios


def test_rank_deficient_rejected(skew3_action):
    m = galois.coaction_rows(skew3_action, [z, z ** 3])
    with pytest.raises(InputError):
        galois.plucker_ratios(m)


def test_group_charts_defined_over_k():
    for name in ("z2sign", "z3cyc", "z2moyal"):
        chart = galois.plucker_ratios(galois.galois_basis(corpus_action(name)).matrix)
        assert galois.defined_over_k(chart)[0]
    triv = trivial_action(sweedler(), corpus_algebra("skew3", 1))
    chart = galois.plucker_ratios(galois.galois_basis(triv).matrix)
    assert galois.defined_over_k(chart)[0]


def test_poiscom(skew3_action, skew3_poisson):
    r = galois.poiscom_check(skew3_action, skew3_poisson, x, [x, y, z])
    assert r.ok and r.checked == 12
    r = galois.poiscom_check(skew3_action, skew3_poisson, ONE, [x * z, y + z])
    assert r.ok
    with pytest.raises(PreconditionError):
        galois.poiscom_check(skew3_action, skew3_poisson, z, [x])


def test_eq3(skew3_action, skew3_poisson):
    chart = galois.plucker_ratios(galois.galois_basis(skew3_action).matrix)
    for a0 in (x, y, ONE):
        r = galois.eq3_check(skew3_action, skew3_poisson, a0, chart)
        assert r.ok and r.checked == len(chart.ratios)
    from deformata.poisson import bracket_rat
    assert not bracket_rat(skew3_poisson, x, RatFn(-2 * z, x * y))


def test_center_check(skew3_action, skew3_poisson):
    chart = galois.plucker_ratios(galois.galois_basis(skew3_action).matrix)
    cc = galois.plucker_center_check(chart, skew3_poisson, skew3_action)
    assert cc.ok and cc.reliable
    assert [(lab, p, c) for lab, p, c, _ in cc.results] == [("{1,2}", RatFn(-2 * z, x * y), True)]
    group = corpus_action("z2sign")
    gchart = galois.plucker_ratios(galois.galois_basis(group).matrix)
    cc = galois.plucker_center_check(gchart, skew3_poisson, group)
    assert cc.ok and cc.results == []


def test_center_check_flags_corrupted_action(skew3_action, skew3_poisson):
    bad = skew3_action.with_gen("a", "z", skew3_action.algebra.lift(x * x))
    chart = galois.plucker_ratios(galois.galois_basis(bad).matrix)
    cc = galois.plucker_center_check(chart, skew3_poisson, bad)
    assert not cc.reliable

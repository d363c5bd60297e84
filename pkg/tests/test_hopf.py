from dataclasses import replace
from fractions import Fraction
from itertools import permutations

import pytest
import sympy

from deformata.errors import InputError
from deformata.hopfact import (HopfAlgebra, SubspaceOfH, cayley_table, cyclic_group,
                               gr_radical_hopf, group_algebra, grouplikes, hopf_ideal_defects,
                               hopf_verify, largest_hopf_ideal, quotient_hopf, radical,
                               radical_powers, sweedler)


def word_normal_form(word):
    """Independent reducer for g² = 1, a² = 0, ag = -ga; returns (sign, g-power, a-power) or None."""
    sign, gs, a_seen = 1, 0, 0
    for letter in word:
        if letter == "g":
            if a_seen:
                sign = -sign  # move g left past one a
            gs ^= 1
        else:
            if a_seen:
                return None
            a_seen = 1
    return sign, gs, a_seen


LETTERS = {"1": "", "g": "g", "a": "a", "ga": "ga"}


def test_sweedler_multiplication_against_reducer():
    H = sweedler()
    for u in H.labels:
        for v in H.labels:
            got = H.mult(H.basis(u), H.basis(v))
            nf = word_normal_form(LETTERS[u] + LETTERS[v])
            want = [0] * 4
            if nf:
                sign, gs, ap = nf
                want[H.index({(0, 0): "1", (1, 0): "g", (0, 1): "a", (1, 1): "ga"}[(gs, ap)])] = sign
            assert list(got) == want, (u, v)


def test_sweedler_examples():
    H = sweedler()
    assert H.mult(H.basis("ga"), H.basis("a")) == (0, 0, 0, 0)
    assert H.eps(H.basis("ga")) == 0
    # m(S ⊗ id)Δ(a) = S(a)·1 + S(g)·a = -ga + ga = 0 = ε(a)1
    total = [Fraction(0)] * 4
    for (p, q), c in H.comul[H.index("a")].items():
        for k, v in enumerate(H.mult(H.antipode[p], H.basis(q))):
            total[k] += c * v
    assert total == [0] * 4
    assert hopf_verify(H).ok


def test_group_algebras_verify():
    assert hopf_verify(cyclic_group(2)).ok
    Z3 = cyclic_group(3)
    assert Z3.dim == 3 and hopf_verify(Z3).ok
    g = Z3.basis("g")
    assert Z3.S(g) == Z3.basis("g2")
    for i in range(3):
        assert Z3.S(Z3.S(Z3.basis(i))) == Z3.basis(i)


def test_corrupted_coproduct_fails():
    H = sweedler()
    comul = list(H.comul)
    comul[H.index("a")] = {(2, 2): Fraction(1)}
    bad = replace(H, comul=tuple(comul), _index=None)
    rep = hopf_verify(bad)
    assert not rep.ok
    failed = set(rep.failures())
    assert failed & {"coassociativity", "comultiplication is multiplicative", "counit"}
    for name in failed:
        assert rep.witnesses[name]


def test_dimension_mismatch():
    H = sweedler()
    with pytest.raises(InputError):
        HopfAlgebra(H.labels, H.mul[:3], H.unit, H.comul, H.counit, H.antipode)


def test_group_table_errors():
    with pytest.raises(InputError):
        group_algebra([[0, 0], [0, 0]])  # no identity
    with pytest.raises(InputError):
        group_algebra([[0, 1], [1, 1]])  # no inverse for the second element
    with pytest.raises(InputError):
        group_algebra([])


def symmetric_group(k):
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    return group_algebra([[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms])


def regular_matrix(H, v):
    return sympy.Matrix([[H.mult(v, H.basis(j))[i] for j in range(H.dim)] for i in range(H.dim)])


def test_radical_sweedler():
    H = sweedler()
    R = radical(H)
    assert R.dim == 2 and R.describe(H.labels) == ["a", "ga"]
    # nilpotency oracle on the regular representation
    for v in R.basis:
        assert regular_matrix(H, v) ** 2 == sympy.zeros(4, 4)
    # the quotient is semisimple: nondegenerate trace form
    Q, _ = quotient_hopf(H, R)
    form = sympy.Matrix([[regular_matrix(Q, Q.mult(Q.basis(i), Q.basis(j))).trace()
                          for j in range(Q.dim)] for i in range(Q.dim)])
    assert form.det() != 0
    powers = radical_powers(H, R)
    assert [p.dim for p in powers] == [4, 2, 0]


def test_radical_semisimple():
    assert radical(cyclic_group(2)).dim == 0
    assert radical(symmetric_group(3)).dim == 0


def grouplike_oracle(H):
    xs = sympy.symbols(f"c0:{H.dim}")
    eqs = [sum(xs[i] * H.counit[i] for i in range(H.dim)) - 1]
    for p in range(H.dim):
        for q in range(H.dim):
            lhs = sum(xs[k] * H.comul[k].get((p, q), 0) for k in range(H.dim))
            eqs.append(lhs - xs[p] * xs[q])
    sols = sympy.solve(eqs, xs, dict=True)
    return sorted(tuple(s[x] for x in xs) for s in sols)


def test_grouplikes_sweedler():
    H = sweedler()
    r = grouplikes(H)
    assert r.status == "complete"
    assert sorted(r.elements) == sorted([H.basis("1"), H.basis("g")])
    assert sorted(r.elements) == grouplike_oracle(H)
    assert not r.semisimple_commutative_dual


@pytest.mark.parametrize("n", [2, 3, 4])
def test_grouplikes_cyclic(n):
    H = cyclic_group(n)
    r = grouplikes(H)
    assert len(r.elements) == n and r.semisimple_commutative_dual
    assert sorted(r.elements) == grouplike_oracle(H)
    table = cayley_table(H, list(r.elements))
    assert group_algebra(table).dim == n


def test_grouplikes_corrupted():
    H = sweedler()
    comul = list(H.comul)
    comul[H.index("a")] = {(2, 2): Fraction(1)}
    with pytest.raises(InputError):
        grouplikes(replace(H, comul=tuple(comul), _index=None))


def test_quotient_by_radical_is_z2():
    H = sweedler()
    Q, pi = quotient_hopf(H, radical(H))
    assert hopf_verify(Q).ok and Q.dim == 2
    assert Q.same_tensors(cyclic_group(2))


def test_hopf_ideal_defects_and_largest():
    H = sweedler()
    sub = SubspaceOfH.span(4, [H.element({"a": 1, "ga": -1})])
    assert hopf_ideal_defects(H, sub)
    assert largest_hopf_ideal(H, sub).dim == 0
    assert largest_hopf_ideal(H, radical(H)).dim == 2
    eps_kernel = SubspaceOfH.span(4, [H.element({"1": 1, "g": -1}), H.basis("a"), H.basis("ga")])
    assert largest_hopf_ideal(H, eps_kernel).dim == 3


def test_gr_sweedler():
    H = sweedler()
    G, degrees = gr_radical_hopf(H)
    assert degrees == (0, 0, 1, 1)
    assert hopf_verify(G).ok and G.same_tensors(H)


def test_gr_semisimple_is_itself():
    Z3 = cyclic_group(3)
    G, degrees = gr_radical_hopf(Z3)
    assert set(degrees) == {0}
    assert G.same_tensors(Z3)


def test_element_and_format():
    H = sweedler()
    v = H.element({"a": 2, "ga": Fraction(-1, 2)})
    assert H.format(v) == "2*a - 1/2*ga"
    with pytest.raises(InputError):
        H.index("b")

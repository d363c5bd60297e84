import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deformata.defquant import HSeries, random_hpoly, random_poly
from deformata.errors import InputError
from deformata.exactalg import Poly, RatFn
from deformata.frontend.build import (build_algebra, build_hopf, build_poisson, corpus_names,
                                      corpus_text, parse_elem, parse_poly, read_source, to_series)
from deformata.frontend.parser import ExpSeries, Ident, ParseError, parse, parse_expr
from deformata.frontend.printer import format_document, format_hpoly, format_ratfn
from deformata.hopfact import hopf_verify, sweedler
from deformata.pipeline import corpus_algebra
from deformata.poisson import induced_bracket

from conftest import XYZ

x, y, z = (Poly.var(v, XYZ) for v in XYZ)


@pytest.mark.parametrize("name", corpus_names())
def test_corpus_round_trip(name):
    doc = parse(corpus_text(name))
    text = format_document(doc)
    again = parse(text)
    assert again == doc
    assert format_document(again) == text


def test_series_literal():
    v = parse_expr("1 + h + 1/2*h^2")
    assert to_series(v, 2) == HSeries((1, 1, Fraction(1, 2)))
    doc = parse("algebra a { kind = quantum\n vars = [x, y]\n order = 2\n q(x, y) = exp(3*h) }")
    assert doc.find("algebra").get("q(x, y)") == ExpSeries(Fraction(3))


def test_division_only_in_elements():
    with pytest.raises(ParseError) as err:
        parse_expr("x*y/z")
    assert (err.value.line, err.value.col) == (1, 4)
    assert parse_elem("x*y/z", XYZ) == RatFn(x * y, z)
    assert parse_expr("3/4") == Fraction(3, 4)


@pytest.mark.parametrize("text, line, col", [
    ("algebra a {\n  vars = [x, y\n}", 3, 1),
    ("algebra a {\n  kind = quantum\n  kind = lie\n}", 3, 3),
    ("widget a { }", 1, 1),
    ("algebra a { x = 1 + * 2 }", 1, 21),
    ('algebra a { s = "open }', 1, 17),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.col) == (line, col)
    assert str(err.value).startswith(f"line {line}, column {col}:")


def test_duplicate_blocks_rejected():
    with pytest.raises(ParseError):
        parse("poisson p { vars = [x] }\npoisson p { vars = [x] }")


def test_values():
    doc = parse('action t {\n  note = "é \\"q\\""\n  list = [1, [x, 2]]\n  f(x) = -x\n}')
    b = doc.find("action", "t")
    assert b.get("note") == 'é "q"'
    assert b.get("list") == (Fraction(1), (Ident("x"), Fraction(2)))
    assert b.calls("f") == [(("x",), -Poly.var("x", ("x",)))]
    assert parse(format_document(doc)) == doc


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_poly_print_parse(seed):
    p = random_poly(XYZ, random.Random(seed), max_deg=4, terms=5, coeff=7) * Fraction(1, 3)
    assert parse_poly(str(p), XYZ) == p


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ratfn_print_parse(seed):
    rng = random.Random(seed)
    num, den = random_poly(XYZ, rng, 3), random_poly(XYZ, rng, 3)
    if den.is_zero():
        return
    r = RatFn(num, den)
    assert parse_elem(format_ratfn(r), XYZ) == r


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_hpoly_print_parse(seed):
    A = corpus_algebra("skew3")
    a = random_hpoly(A, random.Random(seed), max_deg=3, terms=4)
    assert A.element(parse_poly(format_hpoly(a), XYZ, allow_h=True)) == a


def test_skew3_file_builds_quantum_algebra():
    A = build_algebra(parse(corpus_text("skew3.alg")).find("algebra"))
    assert A.kind == "quantum" and A.order == 3
    P = induced_bracket(A)
    assert P == build_poisson(parse(corpus_text("skew3.poi")).find("poisson"))


def test_order_override_and_missing_order():
    block = parse(corpus_text("moyal.alg")).find("algebra")
    assert build_algebra(block, 4).order == 4
    with pytest.raises(InputError):
        build_algebra(parse("algebra a { kind = commutative\n vars = [x] }").find("algebra"))


def test_unknown_variable_rejected():
    with pytest.raises(InputError):
        parse_poly("x*w", XYZ)
    with pytest.raises(InputError):
        build_poisson(parse("poisson p { vars = [x, y]\n bracket(x, y) = w }").find("poisson"))


def test_explicit_hopf_block():
    text = """hopf S4 {
  basis = [e, g, a, ga]
  unit = e
  mul(e, e) = e
  mul(e, g) = g
  mul(e, a) = a
  mul(e, ga) = ga
  mul(g, e) = g
  mul(g, g) = e
  mul(g, a) = ga
  mul(g, ga) = a
  mul(a, e) = a
  mul(a, g) = -ga
  mul(a, ga) = 0
  mul(ga, e) = ga
  mul(ga, g) = -a
  mul(ga, a) = 0
  comul(e) = [[e, e, 1]]
  comul(g) = [[g, g, 1]]
  comul(a) = [[a, e, 1], [g, a, 1]]
  comul(ga) = [[ga, g, 1], [e, ga, 1]]
  counit(e) = 1
  counit(g) = 1
  antipode(e) = e
  antipode(g) = g
  antipode(a) = -ga
  antipode(ga) = a
}"""
    H = build_hopf(parse(text).find("hopf"))
    assert hopf_verify(H).ok and H.same_tensors(sweedler())


def test_group_table_block():
    H = build_hopf(parse("hopf K { group = [[0, 1], [1, 0]]\n basis = [e, s] }").find("hopf"))
    assert H.labels == ("e", "s") and hopf_verify(H).ok


def test_read_source(tmp_path):
    f = tmp_path / "mine.alg"
    f.write_text("algebra m { kind = commutative\n vars = [x]\n order = 1 }", encoding="utf-8")
    assert "commutative" in read_source(str(f))
    assert read_source("skew3.alg") == corpus_text("skew3.alg")
    with pytest.raises(InputError):
        read_source(str(tmp_path / "missing.alg"))

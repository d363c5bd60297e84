import pytest

from deformata import suites
from deformata.cli import run
from deformata.defquant import HPoly, rewriting
from deformata.exactalg import Poly
from deformata.frontend.build import parse_poly
from deformata.pipeline import run_pipeline


def test_reference_pipeline():
    steps = run_pipeline()
    assert len(steps) == 21
    failed = [(s.name, s.detail) for s in steps if not s.ok]
    assert not failed


def test_reference_pipeline_command():
    assert run(["verify-paper"]) == 0


@pytest.mark.parametrize("suite", suites.SUITES, ids=lambda s: s.__name__)
def test_each_suite_passes(suite):
    res = suite(seed=3)
    assert res.ok and res.trials > 0, res.witness


def broken_algebra(order):
    """Rewriting rules violating the Jacobi identity, hence not associative at order 2."""
    V = ("x", "y", "z")
    x, y, z, h = (Poly.var(v, V + ("h",)) for v in V + ("h",))
    return rewriting(V, {("y", "x"): HPoly.from_hpoly_expr(x * y - h * y, V, order),
                         ("z", "y"): HPoly.from_hpoly_expr(y * z - h * x, V, order)}, order)


def test_associativity_failure_has_reverifiable_witness(monkeypatch):
    monkeypatch.setattr(suites, "algebras_by_kind", lambda N: {"broken": broken_algebra(N)})
    res = suites.associativity(seed=1, per_kind=40, max_order=2)
    assert not res.ok
    w = res.witness
    A = broken_algebra(w["order"])
    a, b, c = (A.element(parse_poly(w[k], A.variables, allow_h=True)) for k in ("a", "b", "c"))
    assert A.star(A.star(a, b), c) != A.star(a, A.star(b, c))
    assert str(A.star(A.star(a, b), c)) == w["(ab)c"]


def test_suites_command_reports_failure(monkeypatch, capsys):
    monkeypatch.setattr(suites, "algebras_by_kind", lambda N: {"broken": broken_algebra(N)})
    monkeypatch.setattr(suites, "SUITES", [suites.associativity])
    code = run(["suites", "--json"])
    out = capsys.readouterr().out
    assert code == 1 and '"witness"' in out

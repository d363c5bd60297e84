import sympy
import pytest

from deformata.exactalg import RatFn
from deformata.pipeline import corpus_action, corpus_algebra, corpus_poisson

XYZ = ("x", "y", "z")


def to_sympy(p):
    """Poly or RatFn as a sympy expression (test oracle)."""
    if isinstance(p, RatFn):
        return to_sympy(p.num) / to_sympy(p.den)
    syms = sympy.symbols(p.vars) if p.vars else ()
    if len(p.vars) == 1:
        syms = (syms,) if not isinstance(syms, tuple) else syms
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return out


@pytest.fixture(scope="session")
def skew3_action():
    return corpus_action("skew3")


@pytest.fixture(scope="session")
def skew3_poisson():
    return corpus_poisson("skew3")


@pytest.fixture(scope="session")
def skew3_algebra():
    return corpus_algebra("skew3")


H = sympy.Symbol("h")


def hpoly_to_sympy(a):
    return sum((H ** i * to_sympy(c) for i, c in enumerate(a.coeffs)), sympy.Integer(0))


def truncate_h(expr, order):
    expr = sympy.expand(expr)
    return sum((expr.coeff(H, i) * H ** i for i in range(order + 1)), sympy.Integer(0))


ACCEPTANCE = {}


def record_criterion(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    ACCEPTANCE[n] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])

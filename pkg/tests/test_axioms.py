import pytest

from opwords.monoids import BOOLEAN, NATURALS, cyclic
from opwords.words import check_axioms, splice

AXIOM_NAMES = {
    "series-associativity",
    "parallel-associativity",
    "unit",
    "equivariance",
}


@pytest.mark.parametrize(
    "m", [cyclic(2), cyclic(3), BOOLEAN], ids=lambda m: m.name
)
def test_axioms_pass_on_finite_monoids(m):
    reports = check_axioms(m, (3, 3, 3))
    assert {r.axiom for r in reports} == AXIOM_NAMES
    for r in reports:
        assert r.ok, str(r)
        assert r.checked > 0


def test_axioms_pass_on_naturals_with_capped_letters():
    reports = check_axioms(NATURALS, (3, 3, 3), letter_cap=3)
    for r in reports:
        assert r.ok, str(r)


def test_corrupted_substitution_is_caught():
    # off-by-one splice: multiplies by the letter after the target slot
    op = cyclic(2).op

    def skewed(x, i, y):
        xi = x[i % len(x)]
        return x[: i - 1] + tuple(op(xi, b) for b in y) + x[i:]

    reports = {r.axiom: r for r in check_axioms(cyclic(2), (3, 3, 3), subst=skewed)}
    series = reports["series-associativity"]
    assert not series.ok
    assert series.counterexample is not None


def test_reports_render():
    ok_report = check_axioms(cyclic(2), (2, 2, 2))[0]
    assert "ok" in str(ok_report)

    def broken(x, i, y):
        return splice(x, i, y, lambda a, b: 0)

    bad = [r for r in check_axioms(cyclic(2), (2, 2, 2), subst=broken) if not r.ok]
    assert bad and "FAILED" in str(bad[0])

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from confgal.fock import (
    DiffOperator,
    check_highest_n,
    check_realization,
    d_module,
    d_module_report,
    example1,
    f1_module,
    heisenberg_part,
    induce_f1,
    laurent,
    laurent_witnesses,
    lift_realization,
    to_weight_module,
    whittaker,
)
from confgal.oracle import simple_character_oracle
from confgal.representations import check_module, oscillator_lift

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def operators(draw, nvars=2):
    terms = {}
    for _ in range(draw(st.integers(0, 3))):
        alpha = tuple(draw(st.integers(-1, 2)) for _ in range(nvars))
        beta = tuple(draw(st.integers(0, 2)) for _ in range(nvars))
        terms[(alpha, beta)] = draw(coeffs)
    return DiffOperator(nvars, terms)


@settings(max_examples=60, deadline=None)
@given(operators(), operators(), operators())
def test_operator_composition_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(operators(), operators(), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_composition_agrees_with_application(a, b, mono):
    assert (a * b).apply_monomial(mono) == a.apply(b.apply_monomial(mono))


def test_canonical_commutation():
    x, d = DiffOperator.x(1, 0), DiffOperator.d(1, 0)
    assert d * x - x * d == DiffOperator.const(1, 1)
    xinv = DiffOperator.x(1, 0, -1)
    assert d * xinv - xinv * d == -DiffOperator.x(1, 0, -2)


@pytest.mark.parametrize("l", ["1/2", "3/2", "5/2"])
def test_example1_relations_and_character(l):
    r = example1(l, Fraction(-2, 3))
    assert check_realization(r, 5).passed
    M = to_weight_module(r, 8)
    assert M.dims == simple_character_oracle(l, 0, 8).dims
    assert check_module(M).passed


@pytest.mark.parametrize("l", ["1/2", "3/2"])
def test_example1_is_lift_of_its_heisenberg_part(l):
    r = example1(l, 3)
    lifted = lift_realization(heisenberg_part(r), 3, l)
    assert all(lifted.assignment[g] == r.assignment[g] for g in r.assignment)
    assert oscillator_lift(heisenberg_part(r), 3, l).assignment == lifted.assignment


def test_example1_l_half_operators():
    r = example1("1/2", 2)
    x, d = DiffOperator.x(1, 0), DiffOperator.d(1, 0)
    assert r.op("p1") == x
    assert r.op("p0") == d * -2
    assert r.op("e") == d * d * -1
    assert r.op("f") == x * x * Fraction(1, 4)
    assert r.op("h") == x * d * -1 - Fraction(1, 2)


def test_whittaker_and_laurent_relations():
    mu = [Fraction(2, 7), Fraction(-3, 5)]
    assert check_realization(whittaker("3/2", Fraction(1, 2), mu), 4).passed
    assert check_realization(laurent("3/2", Fraction(1, 2), mu), 3).passed


def test_checker_reports_a_witness():
    r = example1("1/2", 1)
    broken = type(r)(r.name, r.algebra, {**r.assignment, "h": r.assignment["h"] + 1}, r.space, r.params)
    report = check_realization(broken, 4)
    assert not report.get("[e,f]").passed
    assert "monomial" in report.get("[e,f]").witness


def test_laurent_witness_at_integer_mu():
    r = laurent("1/2", 1, [3])
    assert laurent_witnesses(r, 4) == {"p0": [(-3,)]}
    assert laurent_witnesses(laurent("1/2", 1, [Fraction(1, 2)]), 4) == {}


def test_f1_consistency_depends_on_pl():
    assert check_realization(f1_module(2, 2, 0), 6).passed
    assert not check_realization(f1_module(2, 5, 0), 6).passed
    assert check_realization(f1_module(2, 5, 0, rescale=True), 6).passed


def test_induced_module():
    M = induce_f1(1, 1, 0, 8)
    assert M.dims == (1, 0, 2, 0, 3, 0, 4, 0, 5)
    assert check_module(M).passed
    # p_{l-1} f (x) 1 = -(l+1) pl (x) 1
    assert M.labels[2] == ("f^0(x)x^1", "f^1(x)x^0")
    col = M.action("p0", 2).column(1)
    assert col == (Fraction(-2),)


@pytest.mark.parametrize("pl,hw", [(1, 0), (0, 0), (0, 3), (0, Fraction(1, 2))])
def test_highest_n(pl, hw):
    assert check_highest_n(1, pl, hw).passed


def test_d_module():
    r = d_module(Fraction(1, 3), 2)
    assert r.act("p0", (3,)) == {(2,): Fraction(-20, 3)}
    assert r.act("p1", (-1,)) == {(0,): 1}
    report = d_module_report(2, 1, 10, expect_simple=True)
    assert not report.passed
    assert report.data["p0_kernel_exponents"] == [-2]
    assert not d_module_report(2, 1, 10).get("p0-kernel-witness").witness


def test_zero_charge_rejected():
    with pytest.raises(ValueError):
        example1("1/2", 0)
    with pytest.raises(ValueError):
        d_module(1, 0)


@pytest.mark.parametrize("l", ["1/2", "3/2"])
def test_whittaker_at_zero_is_example1(l):
    n = (int(2 * Fraction(l)) + 1) // 2
    w, e = whittaker(l, 2, [0] * n), example1(l, 2)
    assert dict(w.assignment) == dict(e.assignment)


def test_wrong_f_normalization_is_caught():
    r = example1("3/2", 1)
    x1 = DiffOperator.x(2, 0)
    # doubling the x_1^2 term turns 1/(2z) into 1/z
    bad_f = r.assignment["f"] + x1 * x1 * Fraction(1, 2)
    broken = type(r)(r.name, r.algebra, {**r.assignment, "f": bad_f}, r.space, r.params)
    report = check_realization(broken, 8)
    assert not report.get("[e,f]").passed
    assert report.get("[e,f]").witness.startswith("monomial")


def test_d_module_operator_values():
    a, z = Fraction(1, 3), Fraction(5, 2)
    r = d_module(a, z)
    assert r.act("p0", (0,)) == {(-1,): -z * a}
    for i in range(-4, 5):
        p0p1 = r.assignment["p0"] * r.assignment["p1"] - r.assignment["p1"] * r.assignment["p0"]
        assert p0p1.apply_monomial((i,)) == {(i,): -z}
    assert d_module(2, 1).act("p0", (-2,)) == {}


def test_f1_operator_values():
    r = f1_module(2, 2, Fraction(1, 3))
    for n in range(5):
        assert r.act("h", (n,)) == {(n,): Fraction(1, 3) - 2 * n}
    assert r.act("p3", (0,)) == {(1,): 6}
    assert r.act("p1", (3,)) == {}

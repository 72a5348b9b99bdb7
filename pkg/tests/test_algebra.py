import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from confgal.algebra import (
    HalfInteger,
    LieElement,
    ad_nilpotency_index,
    bracket,
    check_jacobi,
    h_degree,
    make_algebra,
    pairing_coefficient,
)

HALF_ODD = ["1/2", "3/2", "5/2"]
ALL_L = ["1/2", "1", "3/2", "2", "5/2", "3"]


def test_half_integer_parsing():
    assert HalfInteger.parse("3/2").twice == 3
    assert HalfInteger.parse(2).twice == 4
    assert HalfInteger.parse(Fraction(5, 2)).is_half_odd
    assert HalfInteger.parse("1").is_integer
    for bad in ("1/3", "x", "0.25"):
        with pytest.raises(ValueError):
            HalfInteger.parse(bad)


@pytest.mark.parametrize("l", ALL_L)
def test_basis_sizes(l):
    n = HalfInteger.parse(l).twice
    assert len(make_algebra(l, "centerless").basis) == n + 4
    if n % 2:
        assert len(make_algebra(l, "extended").basis) == n + 5
        assert len(make_algebra(l, "heisenberg").basis) == n + 2


@pytest.mark.parametrize("l", ["1", "2", "3"])
def test_no_central_extension_at_integer_l(l):
    with pytest.raises(ValueError):
        make_algebra(l, "extended")
    with pytest.raises(ValueError):
        make_algebra(l, "heisenberg")


def test_structure_constants_l_three_halves():
    alg = make_algebra("3/2", "extended")
    assert bracket("h", "e", alg) == LieElement.gen("e", 2)
    assert bracket("e", "f", alg) == LieElement.gen("h")
    assert bracket("h", "p0", alg) == LieElement.gen("p0", 3)
    assert bracket("e", "p2", alg) == LieElement.gen("p1", 2)
    assert bracket("f", "p1", alg) == LieElement.gen("p2", 2)
    assert bracket("f", "p3", alg) == LieElement()
    # (-1)^{k+l+1/2} k! (2l-k)!: k=0 -> +6, k=1 -> -2
    assert bracket("p0", "p3", alg) == LieElement.gen("z", 6)
    assert bracket("p1", "p2", alg) == LieElement.gen("z", -2)
    assert bracket("p0", "p1", alg) == LieElement()


def test_pairing_sign_alternates():
    l = HalfInteger.parse("5/2")
    assert [pairing_coefficient(k, l) for k in range(3)] == [-120, 24, -12]


JACOBI_CASES = [(fam, l) for l in ALL_L for fam in ("centerless", "sl2")] + [
    (fam, l) for l in HALF_ODD for fam in ("extended", "heisenberg")
]


@pytest.mark.parametrize("family,l", JACOBI_CASES)
def test_jacobi_exhaustive(family, l):
    report = check_jacobi(make_algebra(l, family))
    assert report.passed, report


def test_mutated_table_breaks_jacobi():
    alg = make_algebra("1/2", "extended").with_bracket("h", "e", {"e": 3})
    report = check_jacobi(alg)
    assert not report.get("jacobi").passed
    assert report.get("jacobi").witness


def test_mutated_grading_detected():
    alg = make_algebra("3/2", "extended").with_bracket("p0", "p1", {"z": 1})
    assert not check_jacobi(alg).get("grading").passed


def test_bracket_rejects_foreign_generator():
    with pytest.raises(ValueError):
        bracket("e", "p7", make_algebra("1/2", "extended"))


@pytest.mark.parametrize("l", ALL_L)
def test_degrees(l):
    n = HalfInteger.parse(l).twice
    assert [h_degree(f"p{k}", l) for k in range(n + 1)] == [n - 2 * k for k in range(n + 1)]
    assert h_degree("e", l) == 2 and h_degree("f", l) == -2 and h_degree("h", l) == 0


@pytest.mark.parametrize("l", ALL_L)
def test_ad_nilpotency(l):
    alg = make_algebra(l, "centerless")
    n = HalfInteger.parse(l).twice
    # ad f pushes p_0 through all of p_0..p_{2l}, and e -> h -> f
    assert ad_nilpotency_index(alg, "f") == max(3, n + 1)
    with pytest.raises(ValueError):
        ad_nilpotency_index(alg, "h")


def _elements(basis):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(st.sampled_from(basis), coeff, max_size=4).map(LieElement)


EXT = make_algebra("3/2", "extended")


@settings(max_examples=60, deadline=None)
@given(_elements(EXT.basis), _elements(EXT.basis), _elements(EXT.basis))
def test_bracket_bilinear_and_jacobi_on_random_elements(a, b, c):
    assert bracket(a, b, EXT) == -bracket(b, a, EXT)
    assert bracket(a + b, c, EXT) == bracket(a, c, EXT) + bracket(b, c, EXT)
    total = (
        bracket(a, bracket(b, c, EXT), EXT)
        + bracket(b, bracket(c, a, EXT), EXT)
        + bracket(c, bracket(a, b, EXT), EXT)
    )
    assert not total


def test_bracket_grading_pairwise():
    for alg in (make_algebra("5/2", "extended"), make_algebra("2", "centerless")):
        for a, b in itertools.product(alg.basis, repeat=2):
            for g in bracket(a, b, alg):
                assert alg.degree(g) == alg.degree(a) + alg.degree(b)

"""The ten acceptance criteria, exact arithmetic throughout.

Each test prints one PASS/FAIL line; the terminal summary repeats them.
"""

import random
from fractions import Fraction

from confgal.algebra import HalfInteger, check_jacobi, make_algebra
from confgal.fock import (
    check_highest_n,
    check_realization,
    d_module,
    d_module_report,
    example1,
    laurent,
    random_mu,
    to_weight_module,
    whittaker,
)
from confgal.oracle import simple_character_oracle, verma_character_oracle
from confgal.representations import (
    HighestWeightData,
    check_theorem2,
    check_theorem3,
    radical_dims,
    simple_quotient_dims,
    verma,
)
from confgal.uea import check_engine, check_phi, check_theta, heisenberg_localized, phi_image, theta_points

ALL_L = ["1/2", "1", "3/2", "2", "5/2", "3"]


def _shift(l):
    return (Fraction(l) + Fraction(1, 2)) ** 2 / 2


def test_criterion_01_structure(criterion):
    with criterion(1, "antisymmetry, Jacobi and grading for both families") as c:
        for l in ALL_L:
            families = ["centerless"] + (["extended"] if HalfInteger.parse(l).is_half_odd else [])
            for fam in families:
                report = check_jacobi(make_algebra(l, fam))
                c.check(report.passed, f"{fam} l={l}: {report.failures()}")


def test_criterion_02_oscillator_homomorphism(criterion):
    with criterion(2, "oscillator images satisfy all relations; l=1/2 closed forms") as c:
        for l in ["1/2", "3/2", "5/2"]:
            report = check_phi(l)
            c.check(report.passed, f"l={l}: {[r.name for r in report.failures()]}")
        H = heisenberg_localized("1/2")
        p0, p1, zi = H.gen("p0"), H.gen("p1"), H.inv("z")
        c.check(phi_image("e", "1/2") == -(p0**2) * zi / 2, "E closed form")
        c.check(phi_image("f", "1/2") == p1**2 * zi / 2, "F closed form")
        c.check(phi_image("h", "1/2") == p1 * p0 * zi - Fraction(1, 2), "H closed form")


def test_criterion_03_verma_characters(criterion):
    with criterion(3, "Verma = Fock (x) sl2-Verma = partition oracle, depth 12") as c:
        for l in ["1/2", "3/2"]:
            for hw in [Fraction(1, 3), -_shift(l), 1 - _shift(l)]:
                report = check_theorem2(l, 1, hw, depth=12)
                for name in ("verma=oracle", "verma=tensor", "top-weight"):
                    r = report.get(name)
                    c.check(r.passed, f"l={l} hw={hw} {name}: {r.witness}")


def test_criterion_04_radical_and_simple_quotient(criterion):
    with criterion(4, "radical onset at 2(m+1), zero otherwise; simple quotient = oracle") as c:
        for l in ["1/2", "3/2"]:
            alg = make_algebra(l, "extended")
            for m in [0, 1, 2]:
                V = verma(alg, HighestWeightData("extended", m - _shift(l), 1), 12)
                rad = radical_dims(V)
                first = next((n for n, r in enumerate(rad) if r), None)
                c.check(first == 2 * (m + 1), f"l={l} m={m}: radical {rad}")
                simple = tuple(simple_quotient_dims(V))
                c.check(simple == simple_character_oracle(l, m, 12).dims, f"l={l} m={m}: simple {simple}")
            for hw in [Fraction(1, 3), 6 - _shift(l), -1 - _shift(l), Fraction(-7, 5)]:
                V = verma(alg, HighestWeightData("extended", hw, Fraction(-2, 3)), 12)
                rad = radical_dims(V)
                c.check(not any(rad), f"l={l} hw={hw}: radical {rad}")
                c.check(tuple(simple_quotient_dims(V)) == verma_character_oracle("extended", l, 12).dims, f"l={l} hw={hw}")


def test_criterion_05_fock_tensor_simple(criterion):
    with criterion(5, "Fock (x) V(m) simple at truncation, depth 8") as c:
        for l in ["1/2", "3/2"]:
            for m in [0, 1, 2]:
                for z in [Fraction(1), Fraction(-2, 3)]:
                    report = check_theorem3(l, z, m, depth=8)
                    c.check(report.passed, f"l={l} m={m} z={z}: {report.failures()}")


def test_criterion_06_realizations(criterion):
    with criterion(6, "explicit realizations satisfy all brackets; Fock character") as c:
        rng = random.Random(0)
        for l in ["1/2", "3/2"]:
            z = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9))
            mu = random_mu(HalfInteger.parse(l), rng.randint(0, 10**6))
            for r in (example1(l, z), whittaker(l, z, mu), laurent(l, z, mu)):
                report = check_realization(r, 8)
                c.check(report.passed, f"{r.name} l={l}: {[(x.name, x.witness) for x in report.failures()]}")
            M = to_weight_module(example1(l, z), 10)
            c.check(M.dims == simple_character_oracle(l, 0, 10).dims, f"l={l}: character {M.dims}")
            c.check(M.top_weight == -_shift(l), f"l={l}: top weight {M.top_weight}")


def test_criterion_07_highest_weight_centerless(criterion):
    with criterion(7, "induced F_1 module simple with dims n+1; pl=0 inflation") as c:
        report = check_highest_n(1, 1, 0, depth=8)
        for name in ("simple-at-truncation", "dims n+1", "top-weight", "induced=verma-quotient"):
            r = report.get(name)
            c.check(r.passed, f"pl=1 {name}: {r.witness}")
        for hw in [0, 2, Fraction(1, 2)]:
            report = check_highest_n(1, 0, hw, depth=8)
            for name in ("p-actions-zero", "sl2-character"):
                r = report.get(name)
                c.check(r.passed, f"pl=0 hw={hw} {name}: {r.witness}")


def test_criterion_08_laurent_module(criterion):
    with criterion(8, "D(a,z): relations, kernel witnesses at i=-a, injectivity off Z") as c:
        for a in [Fraction(1, 3), Fraction(-5, 2)]:
            report = d_module_report(a, Fraction(2, 3), 10)
            c.check(check_realization(d_module(a, Fraction(2, 3)), 10).passed, f"a={a} relations")
            c.check(report.get("p0-injective").passed and report.get("p1-injective").passed, f"a={a} injectivity")
        for a in [0, 2, -3]:
            report = d_module_report(a, Fraction(2, 3), 10)
            c.check(report.data["p0_kernel_exponents"] == [-a], f"a={a}: {report.data}")


def test_criterion_09_theta(criterion):
    with criterion(9, "theta_x preserves brackets, theta_0 = id, composition law") as c:
        for l in ["1/2", "1", "3/2"]:
            xs = theta_points(l, seed=0)
            c.check(len(set(xs)) == 4 * Fraction(l) + 4, f"l={l}: {len(xs)} points")
            report = check_theta(l, xs, n_pairs=5, seed=0)
            c.check(report.passed, f"l={l}: {[(r.name, r.witness) for r in report.failures()]}")
            c.check(sum(r.name.startswith("compose") for r in report.results) == 5, f"l={l}: pair count")


def test_criterion_10_engine(criterion):
    with criterion(10, "idempotent normal form, associativity on 100 triples, inverses") as c:
        for fam in ["extended", "centerless", "heisenberg"]:
            for l in ALL_L:
                try:
                    alg = make_algebra(l, fam)
                except ValueError:
                    continue
                report = check_engine(alg, n_triples=100, max_degree=4, seed=0)
                c.check(report.passed, f"{alg.name}: {[(r.name, r.witness) for r in report.failures()]}")

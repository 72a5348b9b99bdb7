"""Differential-operator realizations on polynomial and Laurent spaces.

Operators are kept in normal form ``sum c * x^alpha * d^beta`` (multiplication
left of differentiation, exponents possibly negative on Laurent
variables), so composing and bracketing them is exact symbolic algebra.
Realizations checked here:

* ``example1`` - the oscillator representation on ``C[x_1, x_3, ..., x_{2l}]``;
* ``whittaker`` - the same space with derivatives shifted by constants ``mu``;
* ``laurent`` - Laurent polynomials with derivatives shifted by ``mu / x``;
* ``f1_module`` - the module over ``n = span{e, h, p_i}`` on ``C[x]``;
* ``d_module`` - the Laurent module ``D(a, z)`` over the smallest Heisenberg algebra.

Operators are transcribed literally; when one is inconsistent,
:func:`check_realization` reports the failing bracket with a witness
monomial rather than patching the operator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Mapping, Sequence

from .algebra import (
    HalfInteger,
    HalfIntegerLike,
    LieAlgebraSpec,
    Scalar,
    bracket,
    make_algebra,
    p,
)
from .linalg import QMatrix
from .report import Report
from .representations import (
    HighestWeightData,
    WeightModule,
    _check_depth,
    _monomials_of_degree,
    check_module,
    inflate_sl2,
    is_simple_at_truncation,
    simple_quotient_dims,
    sl2_simple,
    sl2_verma,
    verma,
)
from .uea import enveloping, phi_image

Exps = tuple[int, ...]
Poly = dict[Exps, Fraction]


def falling(x: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= x - i
    return out


def _add(acc: dict, key, c: Fraction) -> None:
    v = acc.get(key, Fraction(0)) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class DiffOperator:
    """Normal-ordered differential operator in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[Exps, Exps], Scalar] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[Exps, Exps], Fraction] = {}
        for k, c in (terms or {}).items():
            if c:
                self.terms[k] = Fraction(c)

    @classmethod
    def const(cls, nvars: int, c: Scalar) -> DiffOperator:
        return cls(nvars, {((0,) * nvars, (0,) * nvars): c})

    @classmethod
    def x(cls, nvars: int, i: int, power: int = 1) -> DiffOperator:
        alpha = tuple(power if j == i else 0 for j in range(nvars))
        return cls(nvars, {(alpha, (0,) * nvars): 1})

    @classmethod
    def d(cls, nvars: int, i: int) -> DiffOperator:
        beta = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {((0,) * nvars, beta): 1})

    def __add__(self, other: DiffOperator | Scalar) -> DiffOperator:
        other = self._coerce(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add(acc, k, c)
        return DiffOperator(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> DiffOperator:
        return DiffOperator(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: DiffOperator | Scalar) -> DiffOperator:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> DiffOperator:
        return self._coerce(other) - self

    def _coerce(self, other: DiffOperator | Scalar) -> DiffOperator:
        if isinstance(other, DiffOperator):
            return other
        return DiffOperator.const(self.nvars, other)

    def __mul__(self, other: DiffOperator | Scalar) -> DiffOperator:
        """Composition ``self o other`` (or scaling by a number)."""
        if not isinstance(other, DiffOperator):
            c = Fraction(other)
            return DiffOperator(self.nvars, {k: c * v for k, v in self.terms.items()})
        acc: dict[tuple[Exps, Exps], Fraction] = {}
        for (alpha, beta), c in self.terms.items():
            for (gamma, delta), e in other.terms.items():
                # d^beta x^gamma = sum_j C(beta, j) falling(gamma, j) x^(gamma-j) d^(beta-j)
                for j in itertools.product(*(range(b + 1) for b in beta)):
                    coef = c * e
                    for bi, gi, ji in zip(beta, gamma, j):
                        coef *= _binom(bi, ji) * falling(gi, ji)
                        if not coef:
                            break
                    if not coef:
                        continue
                    x_exp = tuple(a + g - jj for a, g, jj in zip(alpha, gamma, j))
                    d_exp = tuple(b - jj + dd for b, jj, dd in zip(beta, j, delta))
                    _add(acc, (x_exp, d_exp), coef)
        return DiffOperator(self.nvars, acc)

    def __rmul__(self, other: Scalar) -> DiffOperator:
        return self * other

    def __pow__(self, n: int) -> DiffOperator:
        out = DiffOperator.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def apply(self, poly: Mapping[Exps, Scalar]) -> Poly:
        out: Poly = {}
        for gamma, e in poly.items():
            for (alpha, beta), c in self.terms.items():
                coef = c * e
                for gi, bi in zip(gamma, beta):
                    coef *= falling(gi, bi)
                    if not coef:
                        break
                if coef:
                    _add(out, tuple(a + g - b for a, g, b in zip(alpha, gamma, beta)), coef)
        return out

    def apply_monomial(self, gamma: Exps) -> Poly:
        return self.apply({gamma: Fraction(1)})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (alpha, beta), c in sorted(self.terms.items()):
            word = [f"x{i}^{a}" for i, a in enumerate(alpha) if a] + [f"d{i}^{b}" for i, b in enumerate(beta) if b]
            parts.append(f"{c}*" + "*".join(word) if word else str(c))
        return " + ".join(parts)


def op_bracket(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    return a * b - b * a


def _binom(n: int, k: int) -> int:
    return factorial(n) // (factorial(k) * factorial(n - k))


@dataclass(frozen=True)
class PolySpace:
    """Variables ``(name, h-degree)``; Laurent variables admit negative exponents."""

    variables: tuple[tuple[str, int], ...]
    laurent: tuple[bool, ...]

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_laurent(self) -> bool:
        return any(self.laurent)

    def test_monomials(self, bound: int) -> Iterator[Exps]:
        """Polynomial part: total degree <= bound; Laurent variables: exponents in [-bound, bound]."""
        ranges = [range(-bound, bound + 1) if lau else range(bound + 1) for lau in self.laurent]
        for gamma in itertools.product(*ranges):
            if sum(g for g, lau in zip(gamma, self.laurent) if not lau) <= bound:
                yield gamma

    def weighted_degree(self, gamma: Exps) -> int:
        return sum(g * d for g, (_, d) in zip(gamma, self.variables))


@dataclass(frozen=True)
class Realization:
    name: str
    algebra: LieAlgebraSpec
    assignment: Mapping[str, DiffOperator]
    space: PolySpace
    params: Mapping[str, object] = field(default_factory=dict)

    @property
    def gens(self) -> tuple[str, ...]:
        return tuple(g for g in self.algebra.basis if g in self.assignment)

    def op(self, x) -> DiffOperator:
        """Operator of a generator or of a Lie element."""
        if isinstance(x, str):
            return self.assignment[x]
        out = DiffOperator(self.space.nvars)
        for g, c in x.items():
            out = out + self.assignment[g] * c
        return out

    def act(self, g: str, gamma: Exps) -> Poly:
        return self.assignment[g].apply_monomial(gamma)


# -- the relation checker -----------------------------------------------------------


def check_realization(r: Realization, bound: int = 8) -> Report:
    """``[op x, op y] m = op([x,y]) m`` for every generator pair and test monomial ``m``."""
    report = Report("fock-relations", {"realization": r.name, "bound": bound, **r.params})
    monos = list(r.space.test_monomials(bound))
    gens = r.gens
    for ia, x in enumerate(gens):
        for y in gens[ia + 1 :]:
            target = bracket(x, y, r.algebra)
            if any(g not in r.assignment for g in target):
                report.add(f"[{x},{y}]", False, f"bracket {target!r} leaves the realized generators")
                continue
            diff = op_bracket(r.op(x), r.op(y)) - r.op(target)
            bad = None
            if diff:
                for m in monos:
                    if diff.apply_monomial(m):
                        bad = f"monomial {_fmt_mono(r.space, m)}: difference {_fmt_poly(r.space, diff.apply_monomial(m))}"
                        break
            report.add(f"[{x},{y}]", bad is None, bad)
    return report


def _fmt_mono(space: PolySpace, gamma: Exps) -> str:
    word = "*".join(f"{n}^{g}" if g != 1 else n for (n, _), g in zip(space.variables, gamma) if g)
    return word or "1"


def _fmt_poly(space: PolySpace, poly: Poly) -> str:
    return " + ".join(f"{c}*{_fmt_mono(space, g)}" for g, c in sorted(poly.items())) or "0"


def annihilated_monomials(r: Realization, g: str, bound: int) -> list[Exps]:
    """Test monomials killed by ``g`` (invariant-subspace witnesses for lowering operators)."""
    return [m for m in r.space.test_monomials(bound) if not r.act(g, m)]


# -- the oscillator family -------------------------------------------------------------


def _oscillator_space(l: HalfInteger, laurent: bool) -> PolySpace:
    odd = range(1, l.twice + 1, 2)
    return PolySpace(tuple((f"x{s}", s) for s in odd), (laurent,) * len(odd))


def _require_half_odd(l: HalfIntegerLike) -> HalfInteger:
    l = HalfInteger.parse(l)
    if not l.is_half_odd:
        raise ValueError("oscillator realizations need l in N - 1/2")
    return l


def _nonzero(z: Scalar) -> Fraction:
    z = Fraction(z)
    if z == 0:
        raise ValueError("central charge must be nonzero")
    return z


def _oscillator(l: HalfInteger, z: Fraction, shift, h_extra: DiffOperator | None, laurent: bool, name: str, params) -> Realization:
    """Shared skeleton: ``shift(k)`` is added to the derivative paired with ``p_k``."""
    n = l.twice
    half_down = (n - 1) // 2  # l - 1/2
    half_up = half_down + 1  # l + 1/2
    space = _oscillator_space(l, laurent)
    nv = space.nvars

    def pos(subscript: int) -> int:
        return (subscript - 1) // 2

    def X(subscript: int) -> DiffOperator:
        return DiffOperator.x(nv, pos(subscript))

    def D(k: int) -> DiffOperator:
        # shifted derivative in x_{2(l-k)}
        return DiffOperator.d(nv, pos(n - 2 * k)) + shift(k)

    ops: dict[str, DiffOperator] = {}
    for k in range(n + 1):
        if k >= half_up:
            ops[p(k)] = X(2 * k - n)
        else:
            sign = -1 if (k + half_up) % 2 else 1
            ops[p(k)] = D(k) * (sign * z * factorial(k) * factorial(n - k))
    e = (D(half_down) * factorial(half_up)) ** 2 * (-z / 2)
    for k in range(1, half_down + 1):
        e = e + (X(n - 2 * k) * D(k - 1)) * (n - k + 1)
    f = (X(1) * Fraction(1, factorial(half_down))) ** 2 * (1 / (2 * z))
    for k in range(1, half_down + 1):
        f = f + (X(n - 2 * k + 2) * D(k)) * k
    degree_derivation = DiffOperator(nv)
    for k in range(half_down + 1):
        degree_derivation = degree_derivation + (X(n - 2 * k) * DiffOperator.d(nv, pos(n - 2 * k))) * (n - 2 * k)
    h = -degree_derivation - Fraction(half_up**2, 2)
    if h_extra is not None:
        h = h + h_extra
    ops.update(e=e, f=f, h=h, z=DiffOperator.const(nv, z))
    return Realization(name, make_algebra(l, "extended"), ops, space, {"l": l, "z": z, **params})


def example1(l: HalfIntegerLike, z: Scalar) -> Realization:
    """Classical oscillator representation on the Fock space."""
    l = _require_half_odd(l)
    z = _nonzero(z)
    nv = (l.twice + 1) // 2
    return _oscillator(l, z, lambda k: DiffOperator(nv), None, False, "example1", {})


def _mu_vector(l: HalfInteger, mu: Sequence[Scalar]) -> list[Fraction]:
    need = (l.twice + 1) // 2
    if len(mu) != need:
        raise ValueError(f"mu needs {need} entries for l={l}, got {len(mu)}")
    return [Fraction(m) for m in mu]


def whittaker(l: HalfIntegerLike, z: Scalar, mu: Sequence[Scalar]) -> Realization:
    """Whittaker-type module: derivatives shifted by constants ``mu_k``."""
    l = _require_half_odd(l)
    z = _nonzero(z)
    mu = _mu_vector(l, mu)
    nv = len(mu)
    n = l.twice
    # h keeps the x-dependent summand -sum 2(l-k) x_{2(l-k)} mu_k; the brackets hold with it.
    extra = DiffOperator(nv)
    for k, m in enumerate(mu):
        extra = extra - DiffOperator.x(nv, (n - 2 * k - 1) // 2) * ((n - 2 * k) * m)
    return _oscillator(
        l, z, lambda k: DiffOperator.const(nv, mu[k]), extra, False, "whittaker", {"mu": mu}
    )


def laurent(l: HalfIntegerLike, z: Scalar, mu: Sequence[Scalar]) -> Realization:
    """Laurent-polynomial module: derivatives shifted by ``mu_k / x``."""
    l = _require_half_odd(l)
    z = _nonzero(z)
    mu = _mu_vector(l, mu)
    nv = len(mu)
    n = l.twice
    extra = DiffOperator.const(nv, -sum((n - 2 * k) * m for k, m in enumerate(mu)))
    return _oscillator(
        l,
        z,
        lambda k: DiffOperator.x(nv, (n - 2 * k - 1) // 2, -1) * mu[k],
        extra,
        True,
        "laurent",
        {"mu": mu},
    )


def laurent_witnesses(r: Realization, bound: int) -> dict[str, list[Exps]]:
    """Window monomials annihilated by each derivative-type ``p_k``."""
    out = {}
    for g in r.gens:
        if g.startswith("p") and r.algebra.degree(g) > 0:
            hits = annihilated_monomials(r, g, bound)
            if hits:
                out[g] = hits
    return out


# -- the n-module F_1 and its induction ------------------------------------------------


def f1_module(l: HalfIntegerLike, pl: Scalar, hw: Scalar, rescale: bool = False) -> Realization:
    """``n = span{e, h, p_i}`` acting on ``C[x]``.

    With ``p_{l+k} = (l+k)! x^k / k!`` the relation
    ``[e, p_{l+1}] = (l+1) p_l`` forces ``pl = l!``.  ``rescale=True``
    multiplies those operators by ``pl / l!`` so every ``pl`` is consistent.
    """
    l = HalfInteger.parse(l)
    if not l.is_integer:
        raise ValueError("F_1 needs a positive integer l")
    pl, hw = Fraction(pl), Fraction(hw)
    li = l.twice // 2
    space = PolySpace((("x", 2),), (False,))
    X, Dx = DiffOperator.x(1, 0), DiffOperator.d(1, 0)
    scale = pl / factorial(li) if rescale else Fraction(1)
    ops: dict[str, DiffOperator] = {"e": Dx, "h": hw - 2 * (X * Dx)}
    for k in range(li):
        ops[p(k)] = DiffOperator(1)
    ops[p(li)] = DiffOperator.const(1, pl)
    for k in range(1, li + 1):
        ops[p(li + k)] = DiffOperator.x(1, 0, k) * (scale * Fraction(factorial(li + k), factorial(k)))
    return Realization("f1", make_algebra(l, "centerless"), ops, space, {"l": l, "pl": pl, "hw": hw, "rescale": rescale})


def induce_f1(
    l: HalfIntegerLike, pl: Scalar, hw: Scalar, depth: int = 8, rescale: bool = False
) -> WeightModule:
    """``Ind_n^g F_1`` with basis ``f^a (x) x^b`` at depth ``2(a+b)``."""
    l = HalfInteger.parse(l)
    pl = Fraction(pl)
    if pl == 0:
        raise ValueError("pl = 0 is the inflated sl2 case; use inflate_sl2")
    _check_depth(depth)
    F1 = f1_module(l, pl, hw, rescale)
    alg = F1.algebra
    U = enveloping(alg)
    order = U.order
    fi = U.index["f"]

    bases = [[(a, n // 2 - a) for a in range(n // 2 + 1)] if n % 2 == 0 else [] for n in range(depth + 1)]
    index = [{b: i for i, b in enumerate(basis)} for basis in bases]

    def act_n_part(mono: tuple[int, ...], poly: Poly) -> Poly:
        for i in range(len(order) - 1, -1, -1):
            if i == fi:
                continue
            for _ in range(mono[i]):
                poly = F1.assignment[order[i]].apply(poly)
                if not poly:
                    return poly
        return poly

    actions: dict[str, dict[int, QMatrix]] = {}
    for g in alg.basis:
        d = alg.degree(g)
        per: dict[int, QMatrix] = {}
        for n in range(depth + 1):
            t = n - d
            if not 0 <= t <= depth:
                continue
            cols = []
            for a, b in bases[n]:
                col = [Fraction(0)] * len(bases[t])
                straightened = U.gen(g) * U.monomial({"f": a})
                for mono, c in straightened.terms.items():
                    for (b2,), v in act_n_part(mono, {(b,): Fraction(1)}).items():
                        col[index[t][(mono[fi], b2)]] += c * v
                cols.append(col)
            per[n] = QMatrix.from_columns(len(bases[t]), cols)
        actions[g] = per
    labels = tuple(tuple(f"f^{a}(x)x^{b}" for a, b in basis) for basis in bases)
    return WeightModule(alg, Fraction(hw), 2, tuple(len(b) for b in bases), actions, origin="induced", labels=labels)


# -- D(a, z) -------------------------------------------------------------------------


def d_module(a: Scalar, z: Scalar, window: int = 10) -> Realization:
    """``p_1 x^i = x^(i+1)``, ``p_0 x^i = -z (a + i) x^(i-1)``, ``z = z``."""
    a, z = Fraction(a), _nonzero(z)
    space = PolySpace((("x", 1),), (True,))
    X, Dx = DiffOperator.x(1, 0), DiffOperator.d(1, 0)
    ops = {
        "p1": X,
        "p0": (Dx + DiffOperator.x(1, 0, -1) * a) * (-z),
        "z": DiffOperator.const(1, z),
    }
    return Realization("d_module", make_algebra("1/2", "heisenberg"), ops, space, {"a": a, "z": z, "window": window})


def d_module_report(a: Scalar, z: Scalar, window: int = 10, expect_simple: bool = False) -> Report:
    """Relations on the window, kernel witnesses for ``p_0`` and injectivity of ``p_0, p_1``."""
    r = d_module(a, z, window)
    report = check_realization(r, window)
    report.command = "d-module"
    kernel0 = [m[0] for m in annihilated_monomials(r, "p0", window)]
    kernel1 = [m[0] for m in annihilated_monomials(r, "p1", window)]
    report.data = {"p0_kernel_exponents": kernel0, "p1_kernel_exponents": kernel1}
    a = Fraction(a)
    if a.denominator == 1 and -window <= -a <= window:
        report.add("p0-kernel-witness", kernel0 == [int(-a)], f"kernel exponents {kernel0}, expected [{-a}]")
    else:
        report.add("p0-injective", not kernel0, f"kernel exponents {kernel0}")
    report.add("p1-injective", not kernel1, f"kernel exponents {kernel1}")
    if expect_simple:
        report.add("no-invariant-subspace", not kernel0, f"p0 kills x^{kernel0[0]}" if kernel0 else None)
    return report


# -- lifting and windowed modules ----------------------------------------------------------


def lift_realization(r: Realization, z: Scalar, l: HalfIntegerLike) -> Realization:
    """Compose the oscillator images of ``e, f, h`` out of the Heisenberg operators."""
    l = _require_half_odd(l)
    z = _nonzero(z)
    if r.algebra.family != "heisenberg" or r.algebra.l != l:
        raise ValueError("lift_realization expects a realization of the Heisenberg algebra at the same l")
    nv = r.space.nvars
    if r.assignment["z"] != DiffOperator.const(nv, z):
        raise ValueError(f"z does not act by {z}")
    ops = dict(r.assignment)
    for g in ("e", "f", "h"):
        img = phi_image(g, l)
        total = DiffOperator(nv)
        for mono, c in img.terms.items():
            term = DiffOperator.const(nv, c)
            for i, a in enumerate(mono):
                gen = img.algebra.order[i]
                if gen == "z":
                    term = term * (z**a)
                else:
                    term = term * (r.assignment[gen] ** a)
            total = total + term
        ops[g] = total
    return Realization(f"lift({r.name})", make_algebra(l, "extended"), ops, r.space, {**r.params, "z": z})


def heisenberg_part(r: Realization) -> Realization:
    """Restriction of an extended-algebra realization to ``p_k, z``."""
    alg = make_algebra(r.algebra.l, "heisenberg")
    ops = {g: r.assignment[g] for g in alg.basis}
    return Realization(f"{r.name}|H", alg, ops, r.space, r.params)


def to_weight_module(r: Realization, depth: int, top_weight: Fraction | None = None) -> WeightModule:
    """Polynomial realization graded by weighted degree, truncated at ``depth``.

    ``h`` must act on each monomial by ``top - weighted degree``.
    """
    if r.space.is_laurent:
        raise ValueError("Laurent realizations have weights unbounded above")
    _check_depth(depth)
    space = r.space
    degs = [d for _, d in space.variables]
    bases = [_monomials_of_degree(degs, n) for n in range(depth + 1)]
    index = [{b: i for i, b in enumerate(basis)} for basis in bases]
    alg = r.algebra
    actions: dict[str, dict[int, QMatrix]] = {}
    for g in alg.basis:
        d = alg.degree(g)
        per: dict[int, QMatrix] = {}
        for n in range(depth + 1):
            t = n - d
            if not 0 <= t <= depth:
                continue
            cols = []
            for gamma in bases[n]:
                col = [Fraction(0)] * len(bases[t])
                for g2, c in r.act(g, gamma).items():
                    if space.weighted_degree(g2) != t:
                        raise ValueError(f"{g} is not homogeneous on {_fmt_mono(space, gamma)}")
                    col[index[t][g2]] += c
                cols.append(col)
            per[n] = QMatrix.from_columns(len(bases[t]), cols)
        actions[g] = per
    if top_weight is None and "h" in r.assignment:
        top_weight = r.act("h", (0,) * space.nvars).get((0,) * space.nvars, Fraction(0))
    labels = tuple(tuple(_fmt_mono(space, m) for m in basis) for basis in bases)
    step = 1 if any(d % 2 for d in degs) else 2
    return WeightModule(alg, top_weight, step, tuple(len(b) for b in bases), actions, origin="realization", labels=labels)


# -- checkers used by the CLI ------------------------------------------------------------


def realization_for(example: int, l: HalfIntegerLike, z: Scalar, mu: Sequence[Scalar] | None = None, seed: int = 0) -> Realization:
    """Example 1, 2 (Whittaker) or 3 (Laurent); missing ``mu`` is drawn from ``seed``."""
    l = _require_half_odd(l)
    if example == 1:
        return example1(l, z)
    if mu is None:
        mu = random_mu(l, seed)
    if example == 2:
        return whittaker(l, z, mu)
    if example == 3:
        return laurent(l, z, mu)
    raise ValueError(f"unknown example {example}")


def random_mu(l: HalfInteger, seed: int = 0) -> list[Fraction]:
    import random

    rng = random.Random(seed)
    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range((l.twice + 1) // 2)]


def fock_relations_report(r: Realization, bound: int = 8, char_depth: int = 10) -> Report:
    report = check_realization(r, bound)
    if r.name == "example1":
        from .oracle import simple_character_oracle

        M = to_weight_module(r, char_depth)
        expected = simple_character_oracle(r.params["l"].value, 0, char_depth)
        report.add("character=oracle(m=0)", M.dims == expected.dims, f"{M.dims} vs {expected.dims}")
        report.data = {"dims": list(M.dims)}
    elif r.space.is_laurent:
        report.data = {
            g: [_fmt_mono(r.space, m) for m in hits] for g, hits in laurent_witnesses(r, bound).items()
        }
    return report


def check_highest_n(l: HalfIntegerLike, pl: Scalar, hw: Scalar, depth: int = 8, rescale: bool = False) -> Report:
    """Simple highest-weight modules over the centerless algebra at integer ``l``.

    ``pl != 0``: the induced module from ``F_1`` is simple at truncation with
    dims ``n + 1`` at weight ``hw - 2n`` and matches the simple quotient of
    the Verma module.  ``pl = 0``: the inflated sl2 simple module has all
    ``p``-actions zero and matches that simple quotient instead.
    """
    l = HalfInteger.parse(l)
    if not l.is_integer or l.twice == 0:
        raise ValueError("needs a positive integer l")
    pl, hw = Fraction(pl), Fraction(hw)
    alg = make_algebra(l, "centerless")
    report = Report("check-highestN", {"l": l, "pl": pl, "hw": hw, "depth": depth})
    V = verma(alg, HighestWeightData("centerless", hw, pl), depth)
    quotient = tuple(simple_quotient_dims(V))
    if pl != 0:
        F1 = f1_module(l, pl, hw, rescale)
        report.extend(check_realization(F1, depth), prefix="F1")
        M = induce_f1(l, pl, hw, depth, rescale)
        report.add("consistency", check_module(M).passed, "bracket mismatch in the induced module")
        verdict = is_simple_at_truncation(M)
        report.add("simple-at-truncation", verdict.passed, verdict.reason)
        expected = tuple(n // 2 + 1 if n % 2 == 0 else 0 for n in range(depth + 1))
        report.add("dims n+1", M.dims == expected, f"{M.dims} vs {expected}")
        report.add("top-weight", M.top_weight == hw, f"top {M.top_weight}")
        report.add("induced=verma-quotient", M.dims == quotient, f"{M.dims} vs {quotient}")
        p_top = M.action(p(l.twice // 2), 0)
        report.add("p_l-scalar", p_top == QMatrix.identity(1, pl), f"p_l acts by {p_top}")
    else:
        m = _nonneg_hw(hw)
        # away from N the sl2 Verma module is already simple
        N = sl2_simple(m, depth) if m is not None else sl2_verma(hw, depth)
        M = inflate_sl2(N, alg)
        nonzero = [(g, n) for g in alg.p_gens for n, A in M.actions[g].items() if not A.is_zero()]
        report.add("p-actions-zero", not nonzero, f"nonzero p-action {nonzero[:1]}")
        report.add("sl2-character", M.dims == N.dims, f"{M.dims} vs {N.dims}")
        report.add("inflated=verma-quotient", M.dims == quotient, f"{M.dims} vs {quotient}")
        report.add("consistency", check_module(M).passed, "bracket mismatch in the inflated module")
    report.data = {"dims": list(M.dims), "verma_quotient": list(quotient)}
    return report


def _nonneg_hw(hw: Fraction) -> int | None:
    return int(hw) if hw.denominator == 1 and hw >= 0 else None

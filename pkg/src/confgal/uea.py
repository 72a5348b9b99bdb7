"""PBW normal forms in enveloping algebras, optionally localized at ``z`` or ``f``.

Monomials are exponent tuples in the fixed PBW order
``z, f, p_{2l}, ..., p_0, h, e`` (restricted to the algebra's basis).  Only
the designated invertible generators may carry negative exponents.

Straightening works by right-multiplying a normal monomial by one
generator (or inverse) at a time:

* a central generator just bumps its exponent;
* ``M y * g = (M * g) y + M [y, g]`` when ``y`` sits right of ``g``;
* ``M y * f^-1 = sum_k (M * f^-(k+1)) (ad f)^k(y)``, finite because
  ``ad f`` is nilpotent.

Results are memoized per ``(monomial, factor)`` on the algebra object.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import (
    HalfInteger,
    HalfIntegerLike,
    LieAlgebraSpec,
    LieElement,
    Scalar,
    ad_nilpotency_index,
    bracket,
    make_algebra,
    p,
)
from .report import Report

Monomial = tuple[int, ...]
Terms = dict[Monomial, Fraction]

DEFAULT_DEGREE_CAP = 40

# Straightening recurses once per factor moved; degree-40 words need headroom.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


class DegreeCapError(ValueError):
    pass


def pbw_order(alg: LieAlgebraSpec) -> tuple[str, ...]:
    ps = [p(k) for k in range(alg.l.twice, -1, -1)]
    order = ["z", "f", *ps, "h", "e"]
    return tuple(g for g in order if g in alg.basis)


class EnvelopingAlgebra:
    """``U(alg)``, localized at the generators listed in ``invertible``."""

    def __init__(
        self,
        alg: LieAlgebraSpec,
        invertible: Iterable[str] = (),
        degree_cap: int = DEFAULT_DEGREE_CAP,
    ):
        self.alg = alg
        self.invertible = frozenset(invertible)
        bad = self.invertible - ({"z", "f"} & set(alg.basis))
        if bad:
            raise ValueError(f"cannot invert {sorted(bad)} in {alg.name}")
        self.degree_cap = degree_cap
        self.order = pbw_order(alg)
        self.index = {g: i for i, g in enumerate(self.order)}
        self.n = len(self.order)
        self.central = frozenset(
            g for g in self.order if all(not alg.bracket_gens(g, y) for y in self.order)
        )
        self._ad_f_chain: dict[str, list[LieElement]] = {}
        if "f" in self.invertible:
            nil = ad_nilpotency_index(alg, "f")
            for y in self.order:
                chain = [LieElement.gen(y)]
                while True:
                    nxt = bracket("f", chain[-1], alg)
                    if not nxt:
                        break
                    chain.append(nxt)
                assert len(chain) <= nil, "ad f failed to terminate within its nilpotency index"
                self._ad_f_chain[y] = chain
        self._cache: dict[tuple[Monomial, int, int], Terms] = {}

    def __repr__(self) -> str:
        inv = ",".join(sorted(self.invertible))
        return f"U({self.alg.name}){'[' + inv + '^-1]' if inv else ''}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnvelopingAlgebra):
            return NotImplemented
        return self.alg == other.alg and self.invertible == other.invertible

    def __hash__(self) -> int:
        return hash((self.alg, self.invertible))

    # -- constructors -------------------------------------------------------

    def element(self, terms: Mapping[Monomial, Scalar]) -> UEAElement:
        return UEAElement(self, {m: Fraction(c) for m, c in terms.items()})

    def zero(self) -> UEAElement:
        return UEAElement(self, {})

    def scalar(self, c: Scalar) -> UEAElement:
        return UEAElement(self, {self._unit: Fraction(c)})

    def one(self) -> UEAElement:
        return self.scalar(1)

    def monomial(self, exponents: Mapping[str, int], coeff: Scalar = 1) -> UEAElement:
        """Element from an exponent map; the monomial is already in PBW order."""
        mono = [0] * self.n
        for g, a in exponents.items():
            if g not in self.index:
                raise ValueError(f"generator {g!r} does not belong to {self.alg.name}")
            if a < 0 and g not in self.invertible:
                raise ValueError(f"{g} is not invertible in {self}")
            mono[self.index[g]] = a
        return UEAElement(self, {tuple(mono): Fraction(coeff)})

    def gen(self, g: str) -> UEAElement:
        return self.monomial({g: 1})

    def inv(self, g: str) -> UEAElement:
        return self.monomial({g: -1})

    def lie(self, x: LieElement | str) -> UEAElement:
        if isinstance(x, str):
            return self.gen(x)
        return sum((self.gen(g) * c for g, c in x.items()), self.zero())

    def word(self, *factors: str | tuple[str, int]) -> UEAElement:
        """Product of generator powers in the given (arbitrary) order."""
        out = self.one()
        for f in factors:
            g, a = (f, 1) if isinstance(f, str) else f
            out = out * self.monomial({g: a})
        return out

    @property
    def _unit(self) -> Monomial:
        return (0,) * self.n

    # -- straightening kernel -------------------------------------------------

    def _bump(self, mono: Monomial, i: int, s: int) -> Terms:
        m = list(mono)
        m[i] += s
        return {tuple(m): Fraction(1)}

    def times_factor(self, mono: Monomial, i: int, s: int = 1) -> Terms:
        """Normal form of ``mono * x_i^s`` with ``s = +-1``."""
        key = (mono, i, s)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        g = self.order[i]
        if s < 0 and g not in self.invertible:
            raise ValueError(f"{g} is not invertible in {self}")
        top = max((j for j in range(self.n) if mono[j]), default=-1)
        if g in self.central or top <= i:
            out = self._bump(mono, i, s)
        else:
            y = self.order[top]
            rest = list(mono)
            rest[top] -= 1
            rest_t = tuple(rest)
            if s > 0:
                out = self._mul_factor({rest_t: Fraction(1)}, i, 1)
                out = self._mul_factor(out, top, 1)
                comm = self.alg.bracket_gens(y, g)
                if comm:
                    _axpy(out, self._mul_lie({rest_t: Fraction(1)}, comm))
            else:
                # y f^-1 = sum_k f^-(k+1) (ad f)^k(y)
                out = {}
                acc: Terms = {rest_t: Fraction(1)}
                for term in self._ad_f_chain[y]:
                    acc = self._mul_factor(acc, i, -1)
                    _axpy(out, self._mul_lie(acc, term))
        self._cache[key] = out
        return out

    def _mul_factor(self, terms: Terms, i: int, s: int) -> Terms:
        out: Terms = {}
        for m, c in terms.items():
            _axpy(out, self.times_factor(m, i, s), c)
        return out

    def _mul_lie(self, terms: Terms, x: LieElement) -> Terms:
        out: Terms = {}
        for g, c in x.items():
            _axpy(out, self._mul_factor(terms, self.index[g], 1), c)
        return out

    def _times_monomial(self, terms: Terms, mono: Monomial) -> Terms:
        out = terms
        for i, a in enumerate(mono):
            s = 1 if a > 0 else -1
            for _ in range(abs(a)):
                out = self._mul_factor(out, i, s)
        return out

    def multiply(self, u: UEAElement, v: UEAElement) -> UEAElement:
        if u.algebra != v.algebra or u.algebra != self:
            raise ValueError(f"context mismatch: {u.algebra} vs {v.algebra}")
        if u.terms and v.terms and u.degree() + v.degree() > self.degree_cap:
            raise DegreeCapError(
                f"product of degree {u.degree() + v.degree()} exceeds cap {self.degree_cap}"
            )
        out: Terms = {}
        for mv, cv in v.terms.items():
            _axpy(out, self._times_monomial(dict(u.terms), mv), cv)
        return UEAElement(self, out)

    def normalize(self, word: Sequence[tuple[str, int]]) -> UEAElement:
        """Normal form of an arbitrary ordered word of generator powers."""
        return self.word(*word)


def _axpy(acc: Terms, terms: Mapping[Monomial, Fraction], c: Fraction = Fraction(1)) -> None:
    for m, v in terms.items():
        w = acc.get(m, Fraction(0)) + c * v
        if w:
            acc[m] = w
        else:
            acc.pop(m, None)


class UEAElement:
    """Exact combination of normal-ordered PBW monomials.  Treat as immutable."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: EnvelopingAlgebra, terms: Mapping[Monomial, Fraction]):
        self.algebra = algebra
        self.terms: dict[Monomial, Fraction] = {m: c for m, c in terms.items() if c}

    def _coerce(self, other: UEAElement | Scalar) -> UEAElement:
        if isinstance(other, UEAElement):
            if other.algebra != self.algebra:
                raise ValueError(f"context mismatch: {self.algebra} vs {other.algebra}")
            return other
        return self.algebra.scalar(other)

    def __add__(self, other: UEAElement | Scalar) -> UEAElement:
        other = self._coerce(other)
        out = dict(self.terms)
        _axpy(out, other.terms)
        return UEAElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> UEAElement:
        return UEAElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: UEAElement | Scalar) -> UEAElement:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> UEAElement:
        return self._coerce(other) - self

    def __mul__(self, other: UEAElement | Scalar) -> UEAElement:
        if isinstance(other, UEAElement):
            return self.algebra.multiply(self, other)
        c = Fraction(other)
        return UEAElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __rmul__(self, other: Scalar) -> UEAElement:
        return self * other

    def __truediv__(self, other: Scalar) -> UEAElement:
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> UEAElement:
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UEAElement):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.algebra.scalar(other).terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(abs(a) for a in m) for m in self.terms), default=0)

    def h_degrees(self) -> set[int]:
        order = self.algebra.order
        alg = self.algebra.alg
        return {sum(a * alg.degree(order[i]) for i, a in enumerate(m)) for m in self.terms}

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        (mono,) = self.algebra.monomial(exponents).terms
        return self.terms.get(mono, Fraction(0))

    def monomials(self) -> list[tuple[dict[str, int], Fraction]]:
        """Terms as ``({generator: exponent}, coefficient)`` in sorted order."""
        order = self.algebra.order
        return [
            ({order[i]: a for i, a in enumerate(m) if a}, self.terms[m])
            for m in sorted(self.terms, key=lambda m: (sum(map(abs, m)), m))
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.monomials():
            word = "*".join(g if a == 1 else f"{g}^{a}" for g, a in exps.items())
            if not word:
                parts.append(str(c))
            elif c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"{c}*{word}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def commutator(u: UEAElement, v: UEAElement) -> UEAElement:
    return u * v - v * u


def apply_hom(
    u: UEAElement,
    images: Mapping[str, UEAElement],
    target: EnvelopingAlgebra,
    inverse_images: Mapping[str, UEAElement] | None = None,
) -> UEAElement:
    """Extend a map on generators multiplicatively and linearly to ``u``."""
    inverse_images = inverse_images or {}
    order = u.algebra.order
    out = target.zero()
    for mono, c in u.terms.items():
        term = target.scalar(c)
        for i, a in enumerate(mono):
            g = order[i]
            if a > 0:
                term = term * images[g] ** a
            elif a < 0:
                if g not in inverse_images:
                    raise ValueError(f"no image given for {g}^-1")
                term = term * inverse_images[g] ** (-a)
        out = out + term
    return out


# -- oscillator homomorphism ---------------------------------------------------


@lru_cache(maxsize=None)
def enveloping(alg: LieAlgebraSpec, invertible: frozenset[str] = frozenset()) -> EnvelopingAlgebra:
    """Shared (memoized) enveloping algebra, so straightening caches are reused."""
    return EnvelopingAlgebra(alg, invertible)


def heisenberg_localized(l: HalfIntegerLike) -> EnvelopingAlgebra:
    """``U(H~^(l))`` localized at ``z``."""
    return enveloping(make_algebra(l, "heisenberg"), frozenset({"z"}))


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def phi_image(g: str, l: HalfIntegerLike) -> UEAElement:
    """Image of a generator under the oscillator homomorphism into ``U(H~)_(z)``."""
    l = HalfInteger.parse(l)
    if not l.is_half_odd:
        raise ValueError("the oscillator homomorphism needs l in N - 1/2")
    U = heisenberg_localized(l)
    n = l.twice
    half_up = (n + 1) // 2  # l + 1/2
    lq = l.value
    zinv = U.inv("z")
    if g in U.index:
        return U.gen(g)
    if g == "e":
        s = U.zero()
        for k in range(1, n + 1):
            c = Fraction(_sign(k + half_up)) * (lq - k) / (factorial(k - 1) * factorial(n - k))
            s = s + c * U.word(p(k - 1), p(n - k))
        return zinv * s
    if g == "f":
        s = U.zero()
        for k in range(1, n + 1):
            c = Fraction(_sign(k + half_up - 1)) * (lq - k) / (factorial(k - 1) * factorial(n - k))
            s = s + c * U.word(p(k), p(n - k + 1))
        return zinv * s
    if g == "h":
        s = U.zero()
        for k in range(0, half_up):
            c = Fraction(_sign(k + half_up - 1)) * (lq - k) / (factorial(k) * factorial(n - k))
            s = s + c * U.word(p(n - k), p(k))
        return 2 * zinv * s - Fraction(half_up**2, 2)
    raise ValueError(f"generator {g!r} is not in the extended algebra at l={l}")


def check_phi(l: HalfIntegerLike, images: Mapping[str, UEAElement] | None = None) -> Report:
    """Verify the defining relations of the extended algebra on ``E, F, H``."""
    l = HalfInteger.parse(l)
    U = heisenberg_localized(l)
    imgs = {g: phi_image(g, l) for g in ("e", "f", "h")}
    if images:
        imgs.update(images)
    E, F, H = imgs["e"], imgs["f"], imgs["h"]
    n = l.twice
    report = Report("verify-phi", {"l": l})

    def rel(name: str, lhs: UEAElement, rhs: UEAElement) -> None:
        diff = lhs - rhs
        report.add(name, not diff, f"difference {diff}")

    for i in range(n + 1):
        pi = U.gen(p(i))
        rel(f"[H,p{i}]", commutator(H, pi), (n - 2 * i) * pi)
        rel(f"[E,p{i}]", commutator(E, pi), i * U.gen(p(i - 1)) if i > 0 else U.zero())
        rel(f"[F,p{i}]", commutator(F, pi), (n - i) * U.gen(p(i + 1)) if i < n else U.zero())
    rel("[E,F]", commutator(E, F), H)
    rel("[H,E]", commutator(H, E), 2 * E)
    rel("[H,F]", commutator(H, F), -2 * F)
    return report


# -- the automorphisms theta_x -------------------------------------------------


def f_localized(l: HalfIntegerLike) -> EnvelopingAlgebra:
    """``U(g^(l))`` (centerless) localized at ``f``."""
    return enveloping(make_algebra(l, "centerless"), frozenset({"f"}))


def binomial(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x - i
    return out / factorial(k)


def theta_image(g: str, x: Scalar, l: HalfIntegerLike) -> UEAElement:
    """Image of a generator under the automorphism ``theta_x`` of ``U(g)^(f)``."""
    l = HalfInteger.parse(l)
    U = f_localized(l)
    x = Fraction(x)
    n = l.twice
    if g == "f":
        return U.gen("f")
    if g == "h":
        return U.gen("h") - 2 * x
    if g == "e":
        return U.gen("e") + x * (U.gen("h") - 1 - x) * U.inv("f")
    if g in U.index:
        j = int(g[1:])
        out = U.zero()
        for k in range(0, n - j + 1):
            c = _sign(k) * binomial(x, k) * Fraction(factorial(n - j), factorial(n - j - k))
            out = out + c * U.monomial({"f": -k}) * U.gen(p(j + k))
        return out
    raise ValueError(f"generator {g!r} is not in the centerless algebra at l={l}")


ThetaFn = Callable[[str, Fraction, HalfInteger], UEAElement]


def theta_apply(u: UEAElement, x: Scalar, l: HalfIntegerLike, image_fn: ThetaFn = theta_image) -> UEAElement:
    l = HalfInteger.parse(l)
    U = f_localized(l)
    x = Fraction(x)
    images = {g: image_fn(g, x, l) for g in U.order}
    return apply_hom(u, images, U, inverse_images={"f": U.inv("f")})


def check_theta(
    l: HalfIntegerLike,
    xs: Sequence[Scalar],
    image_fn: ThetaFn = theta_image,
    n_pairs: int = 5,
    seed: int = 0,
) -> Report:
    """Bracket preservation, ``theta_0 = id`` and ``theta_x theta_y = theta_{x+y}``.

    Every coefficient of a relation is a polynomial in ``x`` of degree at
    most ``4l + 2``, so agreement at ``4l + 4`` distinct points is a proof.
    """
    l = HalfInteger.parse(l)
    xs = [Fraction(x) for x in xs]
    need = 2 * l.twice + 4
    if len(set(xs)) < need:
        raise ValueError(f"check_theta needs at least {need} distinct sample points, got {len(set(xs))}")
    U = f_localized(l)
    alg = U.alg
    report = Report("verify-theta", {"l": l, "xs": xs, "seed": seed})

    cache: dict[tuple[str, Fraction], UEAElement] = {}

    def th(g: str, x: Fraction) -> UEAElement:
        if (g, x) not in cache:
            cache[(g, x)] = image_fn(g, x, l)
        return cache[(g, x)]

    gens = U.order
    for ia, a in enumerate(gens):
        for b in gens[ia + 1 :]:
            target = bracket(a, b, alg)
            bad = None
            for x in xs:
                lhs = commutator(th(a, x), th(b, x))
                rhs = sum((c * th(g, x) for g, c in target.items()), U.zero())
                if lhs != rhs:
                    bad = f"x={x}: difference {lhs - rhs}"
                    break
            report.add(f"bracket[{a},{b}]", bad is None, bad)

    bad = None
    for g in gens:
        if th(g, Fraction(0)) != U.gen(g):
            bad = f"theta_0({g}) = {th(g, Fraction(0))}"
            break
    report.add("theta_0=id", bad is None, bad)

    rng = random.Random(seed)
    ordered = [(x, y) for x in xs for y in xs if x != y]
    pairs = rng.sample(ordered, min(n_pairs, len(ordered)))
    for x, y in pairs:
        bad = None
        for g in gens:
            lhs = apply_hom(th(g, y), {k: th(k, x) for k in gens}, U, {"f": U.inv("f")})
            rhs = image_fn(g, x + y, l)
            if lhs != rhs:
                bad = f"{g}: difference {lhs - rhs}"
                break
        report.add(f"compose(x={x},y={y})", bad is None, bad)
    return report


def theta_points(l: HalfIntegerLike, seed: int = 0) -> list[Fraction]:
    """``4l + 4`` distinct seeded rationals, starting with 0."""
    l = HalfInteger.parse(l)
    rng = random.Random(seed)
    pts = [Fraction(0)]
    while len(pts) < 2 * l.twice + 4:
        x = Fraction(rng.randint(-12, 12), rng.randint(1, 5))
        if x not in pts:
            pts.append(x)
    return pts


def _random_word(rng: random.Random, gens: Sequence[str], max_degree: int) -> list[tuple[str, int]]:
    return [(rng.choice(gens), 1) for _ in range(rng.randint(0, max_degree))]


def _localized_word(rng: random.Random, gens: Sequence[str], inv: str, max_degree: int) -> list[tuple[str, int]]:
    word = _random_word(rng, gens, max_degree)
    return [(y, -1) if y == inv and rng.random() < 0.5 else (y, e) for y, e in word]


def check_engine(
    alg: LieAlgebraSpec, n_triples: int = 100, max_degree: int = 4, seed: int = 0
) -> Report:
    """Idempotent normal form, associativity on random triples and inverses in the localizations."""
    report = Report("engine", {"algebra": alg.name, "triples": n_triples, "max_degree": max_degree, "seed": seed})
    U = enveloping(alg)
    rng = random.Random(seed)
    gens = list(U.order)

    def rand_elem() -> UEAElement:
        out = U.zero()
        for _ in range(rng.randint(1, 2)):
            out = out + Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 3)) * U.normalize(
                _random_word(rng, gens, max_degree)
            )
        return out

    bad_idem = bad_assoc = None
    for _ in range(n_triples):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        for u in (a, b, c):
            again = U.zero()
            for mono, coef in u.monomials():
                again = again + coef * U.normalize(
                    [(g, e) for g in U.order for e in [mono.get(g, 0)] if e]
                )
            if again != u and bad_idem is None:
                bad_idem = f"{u} renormalizes to {again}"
        lhs, rhs = (a * b) * c, a * (b * c)
        if lhs != rhs and bad_assoc is None:
            bad_assoc = f"({a})({b})({c}): difference {lhs - rhs}"
    report.add("normal-form-idempotent", bad_idem is None, bad_idem)
    report.add("associativity", bad_assoc is None, bad_assoc)

    for g in ("z", "f"):
        if g not in alg.basis or (g == "z" and alg.family not in ("extended", "heisenberg")):
            continue
        if g == "f" and alg.family == "heisenberg":
            continue
        L = enveloping(alg, frozenset({g}))
        one = L.one()
        x, xi = L.gen(g), L.inv(g)
        ok = x * xi == one and xi * x == one
        report.add(f"{g}*{g}^-1=1", ok, f"{x * xi}, {xi * x}")
        bad = None
        for _ in range(max(1, n_triples // 5)):
            a, b, c = (L.normalize(_localized_word(rng, L.order, g, max_degree)) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad = f"({a})({b})({c})"
                break
        report.add(f"associativity[{g}^-1]", bad is None, bad)
    return report

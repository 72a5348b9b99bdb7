"""Conformal Galilei algebras with exact structure constants.

Generators are plain strings: ``"e"``, ``"f"``, ``"h"``, ``"z"`` and
``"p0"``, ``"p1"``, ... ``"p{2l}"``.  Four families are supported:

``extended``
    the centrally extended algebra (half-odd ``l`` only), basis
    ``e, f, h, p_0..p_{2l}, z``.
``centerless``
    the quotient by ``z``, defined for every ``l`` in ``1/2 N``.
``heisenberg``
    the Heisenberg subalgebra ``span{p_k, z}`` of the extended algebra.
``sl2``
    the ``sl_2`` spanned by ``e, f, h``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Union

from .report import Report

FAMILIES = ("extended", "centerless", "heisenberg", "sl2")

Scalar = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class HalfInteger:
    """A positive element of ``1/2 N`` stored as twice its value."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int) or self.twice < 1:
            raise ValueError(f"l must be a positive half-integer, got twice={self.twice!r}")

    @classmethod
    def parse(cls, value: HalfIntegerLike) -> HalfInteger:
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, str):
            value = value.strip()
            try:
                q = Fraction(value)
            except ValueError:
                raise ValueError(f"cannot parse half-integer {value!r}") from None
        else:
            q = Fraction(value)
        if (2 * q).denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(2 * q))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_half_odd(self) -> bool:
        return self.twice % 2 == 1

    def __str__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


HalfIntegerLike = Union[HalfInteger, str, int, Fraction]


def parse_rational(text: str | Scalar) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ValueError(f"cannot parse rational {text!r}") from None


def p(k: int) -> str:
    return f"p{k}"


def p_index(g: str) -> int | None:
    """Index ``k`` of ``p_k``, or None for a non-p generator."""
    if g.startswith("p"):
        return int(g[1:])
    return None


class LieElement(Mapping[str, Fraction]):
    """Sparse exact linear combination of generators; zero terms are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, Scalar] | Iterable[tuple[str, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, Fraction] = {}
        for g, c in items:
            acc[g] = acc.get(g, Fraction(0)) + Fraction(c)
        self._terms = {g: c for g, c in acc.items() if c != 0}

    @classmethod
    def gen(cls, g: str, coeff: Scalar = 1) -> LieElement:
        return cls({g: coeff})

    def __getitem__(self, g: str) -> Fraction:
        return self._terms[g]

    def __iter__(self) -> Iterator[str]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, g: str) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def __add__(self, other: LieElement) -> LieElement:
        return LieElement(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> LieElement:
        return LieElement({g: -c for g, c in self._terms.items()})

    def __sub__(self, other: LieElement) -> LieElement:
        return self + (-other)

    def __mul__(self, c: Scalar) -> LieElement:
        return LieElement({g: c * v for g, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LieElement):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == LieElement(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g in sorted(self._terms, key=_gen_sort_key):
            c = self._terms[g]
            if c == 1:
                parts.append(g)
            elif c == -1:
                parts.append(f"-{g}")
            else:
                parts.append(f"{c}*{g}")
        return " + ".join(parts).replace("+ -", "- ")


def _gen_sort_key(g: str) -> tuple[int, int]:
    order = {"e": 0, "f": 1, "h": 2, "z": 4}
    k = p_index(g)
    return (3, k) if k is not None else (order[g], 0)


def h_degree(g: str, l: HalfIntegerLike) -> int:
    """Eigenvalue of ``ad h`` on the generator ``g``."""
    l = HalfInteger.parse(l)
    if g == "e":
        return 2
    if g == "f":
        return -2
    if g in ("h", "z"):
        return 0
    k = p_index(g)
    if k is None or not 0 <= k <= l.twice:
        raise ValueError(f"unknown generator {g!r} for l={l}")
    return l.twice - 2 * k


def pairing_coefficient(k: int, l: HalfInteger) -> int:
    """Coefficient of ``z`` in ``[p_k, p_{2l-k}]``, i.e. ``(-1)^(k+l+1/2) k! (2l-k)!``."""
    if not l.is_half_odd:
        raise ValueError("the p-pairing needs half-odd l")
    sign = -1 if (k + (l.twice + 1) // 2) % 2 else 1
    return sign * factorial(k) * factorial(l.twice - k)


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """Immutable basis plus sparse bracket table (only nonzero entries stored)."""

    l: HalfInteger
    family: str
    basis: tuple[str, ...]
    table: Mapping[tuple[str, str], LieElement] = field(repr=False)

    def degree(self, g: str) -> int:
        return h_degree(g, self.l)

    def bracket_gens(self, a: str, b: str) -> LieElement:
        if a not in self.basis or b not in self.basis:
            bad = a if a not in self.basis else b
            raise ValueError(f"generator {bad!r} does not belong to {self.name}")
        return self.table.get((a, b), _ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebraSpec):
            return NotImplemented
        return (self.l, self.family, self.basis) == (other.l, other.family, other.basis) and dict(
            self.table
        ) == dict(other.table)

    def __hash__(self) -> int:
        return hash((self.l, self.family, self.basis))

    @property
    def name(self) -> str:
        return f"{self.family}(l={self.l})"

    @property
    def p_gens(self) -> tuple[str, ...]:
        return tuple(g for g in self.basis if g.startswith("p"))

    def with_bracket(self, a: str, b: str, value: LieElement | Mapping[str, Scalar]) -> LieAlgebraSpec:
        """Copy with ``[a,b]`` overridden (and ``[b,a]`` set antisymmetrically)."""
        value = LieElement(value)
        table = dict(self.table)
        table[(a, b)] = value
        table[(b, a)] = -value
        return LieAlgebraSpec(self.l, self.family, self.basis, {k: v for k, v in table.items() if v})


_ZERO = LieElement()


def make_algebra(l: HalfIntegerLike, family: str = "extended") -> LieAlgebraSpec:
    """Build the bracket table of one of the four families at ``l``."""
    l = HalfInteger.parse(l)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family in ("extended", "heisenberg") and not l.is_half_odd:
        raise ValueError(
            f"the {family} algebra needs l in N - 1/2 (got l={l}); for integer l the "
            "centerless algebra has no nontrivial central extension"
        )
    n = l.twice
    ps = [p(k) for k in range(n + 1)]
    if family == "extended":
        basis = ("e", "f", "h", *ps, "z")
    elif family == "centerless":
        basis = ("e", "f", "h", *ps)
    elif family == "heisenberg":
        basis = (*ps, "z")
    else:
        basis = ("e", "f", "h")

    table: dict[tuple[str, str], LieElement] = {}

    def put(a: str, b: str, value: LieElement) -> None:
        if a in basis and b in basis and value:
            table[(a, b)] = value
            table[(b, a)] = -value

    put("h", "e", LieElement.gen("e", 2))
    put("h", "f", LieElement.gen("f", -2))
    put("e", "f", LieElement.gen("h"))
    for k in range(n + 1):
        pk = p(k)
        put("h", pk, LieElement.gen(pk, n - 2 * k))
        # Boundary terms p_{-1}, p_{2l+1} carry a vanishing coefficient.
        if k > 0:
            put("e", pk, LieElement.gen(p(k - 1), k))
        if k < n:
            put("f", pk, LieElement.gen(p(k + 1), n - k))
    if family in ("extended", "heisenberg"):
        for k in range(n + 1):
            if k < n - k:
                put(p(k), p(n - k), LieElement.gen("z", pairing_coefficient(k, l)))
    return LieAlgebraSpec(l, family, basis, table)


def sl2_algebra() -> LieAlgebraSpec:
    return make_algebra(HalfInteger(1), "sl2")


def as_element(x: LieElement | str) -> LieElement:
    return LieElement.gen(x) if isinstance(x, str) else x


def bracket(a: LieElement | str, b: LieElement | str, alg: LieAlgebraSpec) -> LieElement:
    """Bilinear extension of the bracket table."""
    a, b = as_element(a), as_element(b)
    acc: dict[str, Fraction] = {}
    for ga, ca in a.items():
        for gb, cb in b.items():
            for g, c in alg.bracket_gens(ga, gb).items():
                acc[g] = acc.get(g, Fraction(0)) + ca * cb * c
    return LieElement(acc)


def check_jacobi(alg: LieAlgebraSpec) -> Report:
    """Exhaustive antisymmetry, grading and Jacobi check over basis triples."""
    report = Report("verify-algebra", {"l": alg.l, "family": alg.family})
    basis = alg.basis

    bad = None
    for a, b in itertools.product(basis, repeat=2):
        if bracket(a, b, alg) != -bracket(b, a, alg):
            bad = f"[{a},{b}]"
            break
    report.add("antisymmetry", bad is None, bad)

    bad = None
    for (a, b), value in alg.table.items():
        target = alg.degree(a) + alg.degree(b)
        if any(alg.degree(g) != target for g in value):
            bad = f"[{a},{b}] = {value!r}"
            break
    report.add("grading", bad is None, bad)

    bad = None
    for x, y, w in itertools.product(basis, repeat=3):
        total = (
            bracket(x, bracket(y, w, alg), alg)
            + bracket(y, bracket(w, x, alg), alg)
            + bracket(w, bracket(x, y, alg), alg)
        )
        if total:
            bad = f"({x},{y},{w}) -> {total!r}"
            break
    report.add("jacobi", bad is None, bad)
    return report


def ad_matrix_power_zero(alg: LieAlgebraSpec, s: str, n: int) -> bool:
    for g in alg.basis:
        v = LieElement.gen(g)
        for _ in range(n):
            v = bracket(s, v, alg)
            if not v:
                break
        if v:
            return False
    return True


def ad_nilpotency_index(alg: LieAlgebraSpec, s: str) -> int:
    """Smallest ``n >= 1`` with ``(ad s)^n = 0`` on the whole algebra."""
    if s in ("h", "z"):
        raise ValueError(f"ad {s} is semisimple, not nilpotent")
    if s not in alg.basis:
        raise ValueError(f"generator {s!r} does not belong to {alg.name}")
    # Nilpotent on a space of dimension d means index <= d.
    for n in range(1, len(alg.basis) + 1):
        if ad_matrix_power_zero(alg, s, n):
            return n
    raise AssertionError(f"ad {s} is not nilpotent on {alg.name}")

"""Partition-counting character oracles.

Nothing here touches the straightening engine or the module workbench;
generator degrees are recomputed from ``l`` directly so that agreement
with :mod:`confgal.representations` is independent evidence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CharacterTable:
    """Weight-space dimensions below a top weight.

    ``dims[n]`` is the dimension of the weight space ``top_weight - n``
    (integer lattice); ``step`` is the spacing of the lattice the support
    lives on, so entries off that lattice are zero.
    """

    dims: tuple[int, ...]
    step: int = 1
    top_weight: Fraction | None = None

    def __post_init__(self) -> None:
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")

    @property
    def depth(self) -> int:
        return len(self.dims) - 1

    def truncate(self, depth: int) -> CharacterTable:
        return CharacterTable(self.dims[: depth + 1], self.step, self.top_weight)

    def to_json(self) -> str:
        top = None if self.top_weight is None else str(self.top_weight)
        return json.dumps({"top_weight": top, "step": self.step, "dims": list(self.dims)})

    @classmethod
    def from_json(cls, text: str) -> CharacterTable:
        raw = json.loads(text)
        top = None if raw["top_weight"] is None else Fraction(raw["top_weight"])
        return cls(tuple(raw["dims"]), raw["step"], top)


def partition_count(parts: Iterable[int], n: int) -> int:
    """Number of multisets drawn from ``parts`` (with repetition) summing to ``n``.

    Each listed part counts as its own kind, so repeated entries in ``parts``
    (two generators of the same degree) are distinct colours.
    """
    return partition_series(parts, n)[n]


def partition_series(parts: Iterable[int], depth: int) -> list[int]:
    """Coefficients of ``prod 1/(1 - q^p)`` up to ``q^depth``."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    series = [1] + [0] * depth
    for part in parts:
        if part <= 0:
            raise ValueError(f"parts must be positive, got {part}")
        for n in range(part, depth + 1):
            series[n] += series[n - part]
    return series


def negative_parts(family: str, l: Fraction | str) -> list[int]:
    """Absolute ``h``-degrees of the negative-degree generators."""
    twice = int(2 * Fraction(l))
    if family == "sl2":
        return [2]
    p_parts = [2 * k - twice for k in range(twice + 1) if 2 * k > twice]
    if family == "heisenberg":
        return p_parts
    if family in ("extended", "centerless"):
        return [2, *p_parts]
    raise ValueError(f"unknown family {family!r}")


def _step(parts: Sequence[int]) -> int:
    g = 0
    for x in parts:
        g = gcd(g, x)
    return g or 1


def verma_character_oracle(family: str, l: Fraction | str, depth: int) -> CharacterTable:
    parts = negative_parts(family, l)
    return CharacterTable(tuple(partition_series(parts, depth)), _step(parts))


def simple_character_oracle(l: Fraction | str, m: int, depth: int) -> CharacterTable:
    """Fock-space character (odd parts up to ``2l``) convolved with ``{0, 2, ..., 2m}``."""
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    twice = int(2 * Fraction(l))
    if twice % 2 == 0:
        raise ValueError("needs half-odd l")
    fock = CharacterTable(tuple(partition_series(range(1, twice + 1, 2), depth)), 1)
    window = [0] * (depth + 1)
    for j in range(0, min(2 * m, depth) + 1, 2):
        window[j] = 1
    return convolve(fock, CharacterTable(tuple(window), 2))


def convolve(a: CharacterTable, b: CharacterTable) -> CharacterTable:
    """Character of a tensor product: ``dims(n) = sum_k a(k) b(n-k)``."""
    depth = min(a.depth, b.depth)
    dims = tuple(sum(a.dims[k] * b.dims[n - k] for k in range(n + 1)) for n in range(depth + 1))
    top = None
    if a.top_weight is not None and b.top_weight is not None:
        top = a.top_weight + b.top_weight
    return CharacterTable(dims, gcd(a.step, b.step), top)


def delta(depth: int) -> CharacterTable:
    return CharacterTable((1,) + (0,) * depth, 1)

"""Dense exact-rational matrices, just enough for kernels, ranks and spans.

Dimensions at desk scale stay below a few hundred, so plain Gaussian
elimination over :class:`fractions.Fraction` is adequate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class QMatrix:
    """Immutable ``nrows x ncols`` matrix over Q.  Zero-size shapes are allowed."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[Sequence] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = tuple((Fraction(0),) * ncols for _ in range(nrows))
        else:
            self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
            if len(self.rows) != nrows or any(len(r) != ncols for r in self.rows):
                raise ValueError(f"rows do not match shape {nrows}x{ncols}")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> QMatrix:
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int, scale: Fraction | int = 1) -> QMatrix:
        s = Fraction(scale)
        return cls(n, n, [[s if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> QMatrix:
        return cls(nrows, len(columns), [[c[i] for c in columns] for i in range(nrows)])

    @classmethod
    def vstack(cls, ncols: int, blocks: Sequence[QMatrix]) -> QMatrix:
        rows = [r for b in blocks for r in b.rows]
        return cls(len(rows), ncols, rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in cols])
        return QMatrix(self.nrows, other.ncols, out)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((r[k] * a for k, a in nz), Fraction(0)) for r in self.rows)

    def __add__(self, other: QMatrix) -> QMatrix:
        self._same_shape(other)
        return QMatrix(self.nrows, self.ncols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._same_shape(other)
        return QMatrix(self.nrows, self.ncols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c: Fraction | int) -> QMatrix:
        return QMatrix(self.nrows, self.ncols, [[c * a for a in r] for r in self.rows])

    def _same_shape(self, other: QMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"QMatrix({self.nrows}x{self.ncols}: [{body}])"

    def rref(self) -> tuple[QMatrix, list[int]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        rank = 0
        for col in range(self.ncols):
            pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = 1 / rows[rank][col]
            rows[rank] = [x * inv for x in rows[rank]]
            for i in range(len(rows)):
                if i != rank and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [a - c * b for a, b in zip(rows[i], rows[rank])]
            pivots.append(col)
            rank += 1
            if rank == len(rows):
                break
        return QMatrix(self.nrows, self.ncols, rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_basis(self) -> QMatrix:
        """Rows of the RREF spanning the row space (no zero rows)."""
        r, piv = self.rref()
        return QMatrix(len(piv), self.ncols, r.rows[: len(piv)])

    def nullspace(self) -> list[Vector]:
        """Basis of ``{v : self v = 0}``."""
        r, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in set(piv)]
        basis = []
        for fcol in free:
            v = [Fraction(0)] * self.ncols
            v[fcol] = Fraction(1)
            for i, pc in enumerate(piv):
                v[pc] = -r.rows[i][fcol]
            basis.append(tuple(v))
        return basis


class Span:
    """Incrementally grown subspace of Q^n kept in echelon form."""

    def __init__(self, n: int):
        self.n = n
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        w = list(v)
        for row, pc in zip(self._rows, self._pivots):
            c = w[pc]
            if c:
                w = [a - c * b for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert ``v``; returns True if the span grew."""
        w = self.reduce(v)
        pc = next((j for j, a in enumerate(w) if a), None)
        if pc is None:
            return False
        inv = 1 / w[pc]
        w = [a * inv for a in w]
        for i, row in enumerate(self._rows):
            if row[pc]:
                c = row[pc]
                self._rows[i] = [a - c * b for a, b in zip(row, w)]
        self._rows.append(w)
        self._pivots.append(pc)
        return True

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))

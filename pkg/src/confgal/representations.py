"""Depth-truncated weight modules: Verma modules, tensor products, oscillator
lifts, radicals and simplicity certificates.

A :class:`WeightModule` stores, for every generator ``g`` of ``h``-degree
``d`` and every source depth ``n``, the exact matrix from the weight space
``top - n`` to ``top - n + d``.  Depth is measured on the integer lattice
(weight drop); ``step`` records the spacing of the lattice the support
lives on.  Targets above the top give zero matrices; targets below the
window are absent (``action`` returns None).

Radical criterion.  When the top weight space is one-dimensional and
weights are bounded above, a vector ``v`` of depth ``n`` lies in the
maximal proper submodule iff every raising word of degree ``n`` sends
``v`` to zero in the top space.  Writing ``Q_n`` for the matrix whose rows
are the top components of all such words, ``Q_0 = [1]`` and
``Q_n = rows{ Q_{n - d_x} A_x^(n) : x raising }``, so the radical at depth
``n`` is ``ker Q_n`` and the simple quotient has dimension ``rank Q_n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence

from .algebra import (
    HalfInteger,
    HalfIntegerLike,
    LieAlgebraSpec,
    bracket,
    make_algebra,
    p,
    sl2_algebra,
)
from .linalg import QMatrix, Span, Vector, unit
from .oracle import (
    CharacterTable,
    simple_character_oracle,
    verma_character_oracle,
)
from .report import Report
from .uea import UEAElement, enveloping, phi_image

MAX_DEPTH = 24
DEFAULT_DEPTH = 10


@dataclass(frozen=True)
class HighestWeightData:
    """Highest-weight parameters.

    ``central`` is the central charge for the extended and Heisenberg
    families and the scalar of ``p_l`` for the centerless family at integer
    ``l``; ``hw`` is the ``h``-eigenvalue of the top vector.
    """

    family: str
    hw: Fraction | None = None
    central: Fraction | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "hw", None if self.hw is None else Fraction(self.hw))
        object.__setattr__(self, "central", None if self.central is None else Fraction(self.central))


@dataclass(frozen=True, eq=False)
class WeightModule:
    algebra: LieAlgebraSpec
    top_weight: Fraction | None
    step: int
    dims: tuple[int, ...]
    actions: Mapping[str, Mapping[int, QMatrix]] = field(repr=False)
    origin: str = "module"
    labels: tuple[tuple[str, ...], ...] | None = field(default=None, repr=False)

    @property
    def depth(self) -> int:
        return len(self.dims) - 1

    def dim(self, n: int) -> int:
        return self.dims[n] if 0 <= n <= self.depth else 0

    def action(self, g: str, n: int) -> QMatrix | None:
        """Matrix of ``g`` from depth ``n``; None when the target falls below the window.

        Depths above the top (negative) hold the zero space, so maps into or
        out of them are zero matrices.
        """
        t = n - self.algebra.degree(g)
        if n > self.depth or t > self.depth:
            return None
        if n < 0 or t < 0:
            return QMatrix.zeros(self.dim(t), self.dim(n))
        return self.actions[g][n]

    def character(self) -> CharacterTable:
        return CharacterTable(self.dims, self.step, self.top_weight)


def character(M: WeightModule) -> CharacterTable:
    return M.character()


def _check_depth(depth: int) -> None:
    if not 0 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must lie in [0, {MAX_DEPTH}], got {depth}")


def _lattice_step(alg: LieAlgebraSpec) -> int:
    g = 0
    for x in alg.basis:
        g = gcd(g, alg.degree(x))
    return g or 1


def _monomials_of_degree(degrees: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Exponent vectors ``a`` with ``sum a_i * degrees_i = n``, lexicographically descending."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == len(degrees):
            if left == 0:
                out.append(tuple(acc))
            return
        for a in range(left // degrees[i], -1, -1):
            acc.append(a)
            rec(i + 1, left - a * degrees[i], acc)
            acc.pop()

    rec(0, n, [])
    return out


def _label(gens: Sequence[str], exps: Sequence[int]) -> str:
    word = "*".join(g if a == 1 else f"{g}^{a}" for g, a in zip(gens, exps) if a)
    return word or "1"


# -- Verma modules ----------------------------------------------------------------


def verma(alg: LieAlgebraSpec, hw: HighestWeightData, depth: int = DEFAULT_DEPTH) -> WeightModule:
    """Truncated Verma module induced from the one-dimensional module of ``g_0 + g_+``."""
    _check_depth(depth)
    if hw.family != alg.family:
        raise ValueError(f"highest-weight data for {hw.family!r} used with {alg.name}")
    l = alg.l
    chars: dict[str, Fraction] = {}
    if "h" in alg.basis:
        if hw.hw is None:
            raise ValueError("a highest weight for h is required")
        chars["h"] = hw.hw
    if "z" in alg.basis:
        if hw.central is None:
            raise ValueError("a central charge is required")
        chars["z"] = hw.central
    if alg.family == "centerless" and l.is_integer:
        chars[p(l.twice // 2)] = hw.central if hw.central is not None else Fraction(0)

    U = enveloping(alg)
    order = U.order
    neg_pos = [i for i, g in enumerate(order) if alg.degree(g) < 0]
    neg_gens = [order[i] for i in neg_pos]
    neg_deg = [-alg.degree(g) for g in neg_gens]
    # b-part generators with a nonzero character; raising ones act by 0.
    scalar_of = [chars.get(g) if alg.degree(g) == 0 else Fraction(0) for g in order]

    bases = [_monomials_of_degree(neg_deg, n) for n in range(depth + 1)]
    index = [{b: i for i, b in enumerate(basis)} for basis in bases]

    def full(exps: tuple[int, ...]) -> tuple[int, ...]:
        mono = [0] * U.n
        for i, a in zip(neg_pos, exps):
            mono[i] = a
        return tuple(mono)

    neg_set = set(neg_pos)
    actions: dict[str, dict[int, QMatrix]] = {}
    for g in alg.basis:
        d = alg.degree(g)
        per_depth: dict[int, QMatrix] = {}
        for n in range(depth + 1):
            t = n - d
            if not 0 <= t <= depth:
                continue
            cols = []
            for exps in bases[n]:
                col = [Fraction(0)] * len(bases[t])
                prod_ = U.gen(g) * U.element({full(exps): 1})
                for mono, c in prod_.terms.items():
                    val = c
                    for i, a in enumerate(mono):
                        if a and i not in neg_set:
                            s = scalar_of[i]
                            if s is None:
                                raise AssertionError(f"no character value for {order[i]}")
                            val *= s**a
                            if not val:
                                break
                    if val:
                        key = tuple(mono[i] for i in neg_pos)
                        col[index[t][key]] += val
                cols.append(col)
            per_depth[n] = QMatrix.from_columns(len(bases[t]), cols)
        actions[g] = per_depth

    return WeightModule(
        algebra=alg,
        top_weight=hw.hw if "h" in alg.basis else None,
        step=_lattice_step(alg),
        dims=tuple(len(b) for b in bases),
        actions=actions,
        origin="verma",
        labels=tuple(tuple(_label(neg_gens, e) for e in basis) for basis in bases),
    )


def sl2_verma(hw: Fraction | int, depth: int = DEFAULT_DEPTH) -> WeightModule:
    return verma(sl2_algebra(), HighestWeightData("sl2", Fraction(hw)), depth)


def sl2_simple(m: int, depth: int = DEFAULT_DEPTH) -> WeightModule:
    """The ``(m+1)``-dimensional simple ``sl_2``-module, basis ``f^i v`` at depth ``2i``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    _check_depth(depth)
    alg = sl2_algebra()
    dims = tuple(1 if n % 2 == 0 and n // 2 <= m else 0 for n in range(depth + 1))
    actions: dict[str, dict[int, QMatrix]] = {"e": {}, "f": {}, "h": {}}
    for n in range(depth + 1):
        i = n // 2
        for g, d in (("e", 2), ("f", -2), ("h", 0)):
            t = n - d
            if not 0 <= t <= depth:
                continue
            mat = QMatrix.zeros(dims[t], dims[n])
            if dims[n] and dims[t]:
                val = {"e": i * (m - i + 1), "f": 1, "h": m - 2 * i}[g]
                mat = QMatrix(1, 1, [[val]])
            actions[g][n] = mat
    return WeightModule(alg, Fraction(m), 2, dims, actions, origin="simple")


def trivial_module(alg: LieAlgebraSpec, depth: int = 0) -> WeightModule:
    """One-dimensional module with every generator acting by zero."""
    _check_depth(depth)
    dims = (1,) + (0,) * depth
    actions = {
        g: {n: QMatrix.zeros(dims[n - alg.degree(g)], dims[n]) for n in range(depth + 1) if 0 <= n - alg.degree(g) <= depth}
        for g in alg.basis
    }
    return WeightModule(alg, Fraction(0) if "h" in alg.basis else None, _lattice_step(alg), dims, actions, origin="trivial")


# -- radical, primitive vectors, simplicity ------------------------------------------


def _raising(M: WeightModule) -> list[str]:
    return [g for g in M.algebra.basis if M.algebra.degree(g) > 0]


def primitive_vectors(M: WeightModule, n: int) -> list[Vector]:
    """Basis of the vectors at depth ``n`` killed by every raising generator."""
    if not 0 <= n <= M.depth:
        raise ValueError(f"depth {n} outside the window [0, {M.depth}]")
    blocks = [M.action(x, n) for x in _raising(M) if n - M.algebra.degree(x) >= 0]
    stacked = QMatrix.vstack(M.dims[n], [b for b in blocks if b is not None])
    return stacked.nullspace()


def top_pairing_ranks(M: WeightModule) -> list[int]:
    """``rank Q_n`` for every depth (dimension of the simple quotient)."""
    if M.dim(0) != 1:
        raise ValueError("the raising-word criterion needs a one-dimensional top space")
    Q: list[QMatrix] = [QMatrix.identity(1)]
    for n in range(1, M.depth + 1):
        blocks = []
        for x in _raising(M):
            src = n - M.algebra.degree(x)
            if src >= 0:
                blocks.append(Q[src] @ M.action(x, n))
        Q.append(QMatrix.vstack(M.dims[n], blocks).row_basis())
    return [q.nrows for q in Q]


def radical_dims(M: WeightModule) -> list[int]:
    """Dimensions of the maximal proper submodule of a Verma module, per depth."""
    if M.origin != "verma":
        raise ValueError(f"radical_dims needs a Verma module, got a {M.origin!r} module")
    ranks = top_pairing_ranks(M)
    return [d - r for d, r in zip(M.dims, ranks)]


def simple_quotient_dims(M: WeightModule) -> list[int]:
    return top_pairing_ranks(M)


def generated_dims(M: WeightModule) -> list[int]:
    """Per-depth dimension of the closure of the top space under all generators.

    Components pushed below the window are dropped, so this is a lower bound
    for the submodule generated by the top.
    """
    spans = [Span(d) for d in M.dims]
    queue: deque[tuple[int, Vector]] = deque()
    for i in range(M.dim(0)):
        v = unit(M.dims[0], i)
        spans[0].add(v)
        queue.append((0, v))
    while queue:
        n, v = queue.popleft()
        for g in M.algebra.basis:
            mat = M.action(g, n)
            if mat is None:
                continue
            t = n - M.algebra.degree(g)
            w = mat.apply(v)
            if any(w) and spans[t].add(w):
                queue.append((t, w))
    return [s.dim for s in spans]


@dataclass(frozen=True)
class SimplicityVerdict:
    verdict: str  # "pass" or "inconclusive-or-fail"
    depth: int
    kernel_dims: tuple[int, ...]
    generated_dims: tuple[int, ...]
    failed_at: int | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def is_simple_at_truncation(M: WeightModule) -> SimplicityVerdict:
    """Zero raising-word kernels plus a one-sided generation certificate."""
    if M.dim(0) != 1:
        raise ValueError("simplicity criterion needs a one-dimensional top space")
    ranks = top_pairing_ranks(M)
    kernels = tuple(d - r for d, r in zip(M.dims, ranks))
    gen = tuple(generated_dims(M))
    for n, k in enumerate(kernels):
        if k:
            return SimplicityVerdict(
                "inconclusive-or-fail", M.depth, kernels, gen, n, f"raising-word kernel of dimension {k} at depth {n}"
            )
    for n, (g, d) in enumerate(zip(gen, M.dims)):
        if g != d:
            return SimplicityVerdict(
                "inconclusive-or-fail", M.depth, kernels, gen, n, f"top generates {g} of {d} dimensions at depth {n}"
            )
    return SimplicityVerdict("pass", M.depth, kernels, gen)


# -- tensor products, inflation, oscillator lift ---------------------------------------


def tensor(M: WeightModule, N: WeightModule, depth: int | None = None) -> WeightModule:
    """Tensor product with the Leibniz action ``x(u (x) v) = xu (x) v + u (x) xv``."""
    if M.algebra != N.algebra:
        raise ValueError(f"cannot tensor modules over {M.algebra.name} and {N.algebra.name}")
    alg = M.algebra
    D = min(M.depth, N.depth) if depth is None else depth
    if D > min(M.depth, N.depth):
        raise ValueError("tensor depth exceeds a factor's window")
    _check_depth(D)

    # offsets[n][a]: start of block M_a (x) N_{n-a} inside depth n.
    offsets: list[dict[int, int]] = []
    dims = []
    for n in range(D + 1):
        off, pos = {}, 0
        for a in range(n + 1):
            off[a] = pos
            pos += M.dim(a) * N.dim(n - a)
        offsets.append(off)
        dims.append(pos)

    actions: dict[str, dict[int, QMatrix]] = {}
    for g in alg.basis:
        d = alg.degree(g)
        per: dict[int, QMatrix] = {}
        for n in range(D + 1):
            t = n - d
            if not 0 <= t <= D:
                continue
            rows = [[Fraction(0)] * dims[n] for _ in range(dims[t])]
            for a in range(n + 1):
                b = n - a
                ma, nb = M.dim(a), N.dim(b)
                if not ma or not nb:
                    continue
                src0 = offsets[n][a]
                # g acting on the first factor: (a, b) -> (a - d, b)
                if 0 <= a - d <= t:
                    A = M.action(g, a)
                    dst0 = offsets[t][a - d]
                    nb_t = N.dim(b)
                    for i2, row in enumerate(A.rows):
                        for i, c in enumerate(row):
                            if c:
                                for j in range(nb):
                                    rows[dst0 + i2 * nb_t + j][src0 + i * nb + j] += c
                # g acting on the second factor: (a, b) -> (a, b - d)
                if 0 <= b - d <= t:
                    B = N.action(g, b)
                    dst0 = offsets[t][a]
                    nb_t = N.dim(b - d)
                    for j2, row in enumerate(B.rows):
                        for j, c in enumerate(row):
                            if c:
                                for i in range(ma):
                                    rows[dst0 + i * nb_t + j2][src0 + i * nb + j] += c
            per[n] = QMatrix(dims[t], dims[n], rows)
        actions[g] = per

    top = None
    if M.top_weight is not None and N.top_weight is not None:
        top = M.top_weight + N.top_weight
    return WeightModule(alg, top, gcd(M.step, N.step), tuple(dims), actions, origin="tensor")


def inflate_sl2(N: WeightModule, alg: LieAlgebraSpec) -> WeightModule:
    """View an ``sl_2``-module as an ``alg``-module with every ``p_k`` (and ``z``) acting by 0."""
    if set(N.algebra.basis) != {"e", "f", "h"}:
        raise ValueError("inflate_sl2 expects an sl2-module")
    actions: dict[str, dict[int, QMatrix]] = {}
    for g in alg.basis:
        if g in ("e", "f", "h"):
            actions[g] = dict(N.actions[g])
            continue
        d = alg.degree(g)
        actions[g] = {
            n: QMatrix.zeros(N.dims[n - d], N.dims[n]) for n in range(N.depth + 1) if 0 <= n - d <= N.depth
        }
    return WeightModule(alg, N.top_weight, N.step, N.dims, actions, origin="inflate", labels=N.labels)


def act_element(V: WeightModule, u: UEAElement, n: int, z_value: Fraction | None = None) -> QMatrix:
    """Matrix of a homogeneous enveloping-algebra element on depth ``n`` of ``V``.

    Factors act right to left; ``z^-1`` becomes ``1 / z_value``.
    """
    order = u.algebra.order
    alg = V.algebra
    degs = u.h_degrees()
    if len(degs) > 1:
        raise ValueError("element is not h-homogeneous")
    target = n - (degs.pop() if degs else 0)
    out = QMatrix.zeros(V.dim(target), V.dim(n))
    for mono, c in u.terms.items():
        mat = QMatrix.identity(V.dim(n))
        cur = n
        scale = Fraction(c)
        for i in range(len(order) - 1, -1, -1):
            a = mono[i]
            if not a:
                continue
            g = order[i]
            if g == "z" and z_value is not None:
                scale *= z_value**a
                continue
            if a < 0:
                raise ValueError(f"cannot act by {g}^{a} without a scalar value")
            for _ in range(a):
                step = V.action(g, cur)
                if step is None:
                    raise ValueError(f"{g} leaves the window from depth {cur}")
                mat = step @ mat
                cur -= alg.degree(g)
        out = out + mat.scale(scale)
    return out


def oscillator_lift(V, z: Fraction | int, l: HalfIntegerLike):
    """Pull an ``H~^(l)``-module with central charge ``z`` back along the oscillator map.

    For a :class:`WeightModule` the output window is ``V.depth - 2l`` so that
    every intermediate step of ``E, F, H`` stays inside ``V``'s window.  A
    ``fock.Realization`` is lifted operator-by-operator instead.
    """
    z = Fraction(z)
    l = HalfInteger.parse(l)
    if z == 0:
        raise ValueError("the oscillator lift annihilates modules with zero central charge")
    if not isinstance(V, WeightModule):
        from .fock import lift_realization

        return lift_realization(V, z, l)
    if V.algebra.family != "heisenberg" or V.algebra.l != l:
        raise ValueError("oscillator_lift expects a module over the Heisenberg subalgebra at the same l")
    z_top = V.action("z", 0)
    if z_top != QMatrix.identity(V.dim(0), z):
        raise ValueError(f"z does not act by {z} on the given module")
    depth = V.depth - l.twice
    if depth < 0:
        raise ValueError(f"module window {V.depth} too small to lift (needs > {l.twice})")
    alg = make_algebra(l, "extended")
    actions: dict[str, dict[int, QMatrix]] = {}
    for g in V.algebra.basis:
        d = alg.degree(g)
        actions[g] = {n: V.action(g, n) for n in range(depth + 1) if 0 <= n - d <= depth}
    for g in ("e", "f", "h"):
        img = phi_image(g, l)
        d = alg.degree(g)
        actions[g] = {
            n: act_element(V, img, n, z) for n in range(depth + 1) if 0 <= n - d <= depth
        }
    top = None
    H0 = actions["h"][0]
    if H0.nrows == 1:
        top = H0.rows[0][0]
    return WeightModule(alg, top, V.step, V.dims[: depth + 1], actions, origin="lift", labels=V.labels)


def fock_module(l: HalfIntegerLike, z: Fraction | int, depth: int = DEFAULT_DEPTH) -> WeightModule:
    """``M_H(z)`` lifted to the extended algebra, truncated at ``depth``."""
    l = HalfInteger.parse(l)
    H = verma(make_algebra(l, "heisenberg"), HighestWeightData("heisenberg", central=z), depth + l.twice)
    return oscillator_lift(H, z, l)


# -- consistency and theorem-level checks ------------------------------------------------


def check_module(M: WeightModule, name: str = "module") -> Report:
    """``[x,y]`` acts as the matrix commutator wherever both sides stay in the window."""
    alg = M.algebra
    report = Report(f"check-{name}", {"algebra": alg.name, "depth": M.depth})
    basis = alg.basis
    for ia, x in enumerate(basis):
        for y in basis[ia + 1 :]:
            dx, dy = alg.degree(x), alg.degree(y)
            br = bracket(x, y, alg)
            bad = None
            for n in range(M.depth + 1):
                mid_xy, mid_yx, t = n - dy, n - dx, n - dx - dy
                if not all(0 <= k <= M.depth for k in (mid_xy, mid_yx, t)):
                    continue
                lhs = M.action(x, mid_xy) @ M.action(y, n) - M.action(y, mid_yx) @ M.action(x, n)
                rhs = QMatrix.zeros(M.dim(t), M.dim(n))
                for g, c in br.items():
                    rhs = rhs + M.action(g, n).scale(c)
                if lhs != rhs:
                    bad = f"depth {n}"
                    break
            report.add(f"[{x},{y}]", bad is None, bad)
    if M.top_weight is not None and "h" in basis:
        bad = None
        for n in range(M.depth + 1):
            if M.action("h", n) != QMatrix.identity(M.dim(n), M.top_weight - n):
                bad = f"depth {n}"
                break
        report.add("h-diagonal", bad is None, bad)
    return report


def sl2_shift(l: HalfInteger) -> Fraction:
    """``(l + 1/2)^2 / 2``: the gap between ``h`` on the Verma top and on the Fock top."""
    return (l.value + Fraction(1, 2)) ** 2 / 2


def _nonneg_int(q: Fraction) -> int | None:
    return int(q) if q.denominator == 1 and q >= 0 else None


def check_theorem2(l: HalfIntegerLike, z: Fraction | int, hw: Fraction | int, depth: int = 12) -> Report:
    """Verma = Fock (x) sl2-Verma characters, and the radical / simple-quotient picture."""
    l = HalfInteger.parse(l)
    z, hw = Fraction(z), Fraction(hw)
    if z == 0:
        raise ValueError("needs nonzero central charge")
    report = Report("check-theorem2", {"l": l, "z": z, "hw": hw, "depth": depth})
    alg = make_algebra(l, "extended")
    shift = hw + sl2_shift(l)
    m = _nonneg_int(shift)

    V = verma(alg, HighestWeightData("extended", hw, z), depth)
    T = tensor(fock_module(l, z, depth), inflate_sl2(sl2_verma(shift, depth), alg), depth)
    oracle = verma_character_oracle("extended", l.value, depth)
    report.add("verma=oracle", V.dims == oracle.dims, f"{V.dims} vs {oracle.dims}")
    report.add("verma=tensor", V.dims == T.dims, f"{V.dims} vs {T.dims}")
    report.add("top-weight", T.top_weight == hw, f"tensor top {T.top_weight}")
    report.add("tensor-consistency", check_module(T).passed, "bracket mismatch in the tensor module")

    rad = radical_dims(V)
    first = next((n for n, r in enumerate(rad) if r), None)
    if m is not None and 2 * (m + 1) <= depth:
        expected_first = 2 * (m + 1)
    else:
        expected_first = None
    report.add("radical-onset", first == expected_first, f"first nonzero radical at {first}, expected {expected_first}")
    simple = tuple(d - r for d, r in zip(V.dims, rad))
    expected = simple_character_oracle(l.value, m, depth) if m is not None else oracle
    report.add("simple=oracle", simple == expected.dims, f"{simple} vs {expected.dims}")
    report.data = {"verma": list(V.dims), "radical": rad, "simple": list(simple)}
    return report


def check_theorem3(l: HalfIntegerLike, z: Fraction | int, m: int, depth: int = 8) -> Report:
    """Fock (x) V(m) is simple at truncation."""
    l = HalfInteger.parse(l)
    z = Fraction(z)
    if z == 0:
        raise ValueError("needs nonzero central charge")
    alg = make_algebra(l, "extended")
    T = tensor(fock_module(l, z, depth), inflate_sl2(sl2_simple(m, depth), alg), depth)
    report = Report("check-theorem3", {"l": l, "z": z, "m": m, "depth": depth})
    report.add("consistency", check_module(T).passed, "bracket mismatch in the tensor module")
    verdict = is_simple_at_truncation(T)
    report.add("simple-at-truncation", verdict.passed, verdict.reason)
    expected = simple_character_oracle(l.value, m, depth)
    report.add("character=oracle", T.dims == expected.dims, f"{T.dims} vs {expected.dims}")
    report.data = {"dims": list(T.dims), "generated": list(verdict.generated_dims)}
    return report

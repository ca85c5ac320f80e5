"""Constructors for standard and extended standard complexes.

A sign sequence (a_1, ..., a_2n) of nonzero integers encodes a zig-zag
complex on generators x_0, ..., x_2n: odd positions contribute horizontal
arrows U^|a_i| between x_{i-1} and x_i, even positions vertical arrows
V^|a_i|, and the sign points the arrow (positive: from x_i to x_{i-1}).
Absolute gradings are normalized so that gr_U(x_0) = 0 and gr_V(x_2n) = 0;
the remaining gradings are forced along the chain by the degree equation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionError
from .rings import (
    R1,
    Arrow,
    BasedComplex,
    Generator,
    Grading,
    Monomial,
    make_complex,
)


@dataclass(frozen=True)
class SignSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) == 0 or len(self.entries) % 2 != 0:
            raise ConstructionError(
                f"sign sequence needs positive even length, got {len(self.entries)}"
            )
        if 0 in self.entries:
            raise ConstructionError("sign sequence entries must be nonzero")

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @property
    def max_abs(self) -> int:
        return max(abs(a) for a in self.entries)

    def sign_sum(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.entries)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)


@dataclass(frozen=True)
class ExtendedSignSequence:
    """A sign sequence with one extra vertical arrow at the x_0 end (head)
    and one extra horizontal arrow at the x_2n end (tail)."""

    head: int
    body: SignSequence
    tail: int

    def __post_init__(self):
        if self.head == 0 or self.tail == 0:
            raise ConstructionError("extension entries must be nonzero")

    @property
    def entries(self) -> tuple[int, ...]:
        return (self.head, *self.body.entries, self.tail)

    def __str__(self) -> str:
        return f"{self.head} | {self.body} | {self.tail}"


# Chain pieces recur across the census sweeps; interning them makes bulk
# construction cheap. All cached values are immutable.
_ARROWS: dict[tuple[int, int, int, int], Arrow] = {}
_GENERATORS: dict[tuple[int, int, int], Generator] = {}
_NAMES = [f"x{i}" for i in range(16)]


def _arrow(source, u, v, target):
    key = (source, u, v, target)
    cached = _ARROWS.get(key)
    if cached is None:
        cached = _ARROWS[key] = Arrow(source, Monomial.of(u, v), target)
    return cached


def _name(i):
    while i >= len(_NAMES):
        _NAMES.append(f"x{len(_NAMES)}")
    return _NAMES[i]


def _generator(i, gu, gv):
    key = (i, gu, gv)
    cached = _GENERATORS.get(key)
    if cached is None:
        cached = _GENERATORS[key] = Generator(i, _name(i), Grading(gu, gv))
    return cached


def _chain_arrows(entries, first_position, index_of):
    """Arrows of a (possibly extended) zig-zag chain.

    The entry at chain position i connects x_{i-1} and x_i; odd positions
    are horizontal, even positions vertical, direction by sign.
    ``index_of`` maps an x-subscript to a generator id.
    """
    arrows = []
    for k, a in enumerate(entries):
        i = first_position + k
        length = abs(a)
        u, v = (length, 0) if i % 2 == 1 else (0, length)
        lo, hi = index_of(i - 1), index_of(i)
        if a > 0:
            arrows.append(_arrow(hi, u, v, lo))
        else:
            arrows.append(_arrow(lo, u, v, hi))
    return arrows


def _chain_gradings(entries):
    """Gradings of x_0..x_len relative to gr(x_0) = (0, 0), as int pairs.

    Along an arrow s -> U^u V^v t the degree equation forces
    gr(t) = gr(s) + (2u - 1, 2v - 1).
    """
    rel = [(0, 0)]
    for i, a in enumerate(entries, start=1):
        length = abs(a)
        du, dv = (2 * length - 1, -1) if i % 2 == 1 else (-1, 2 * length - 1)
        gu, gv = rel[-1]
        if a > 0:
            # arrow x_i -> x_{i-1}: gr(x_{i-1}) = gr(x_i) + (du, dv)
            rel.append((gu - du, gv - dv))
        else:
            rel.append((gu + du, gv + dv))
    return rel


def build_standard(seq: SignSequence) -> BasedComplex:
    """The standard complex of ``seq`` over the level-1 ring."""
    entries = seq.entries
    rel = _chain_gradings(entries)
    # Normalize: gr_U(x_0) = 0 (already true), gr_V(x_2n) = 0.
    dv = rel[-1][1]
    gens = tuple(
        _generator(i, gu, gv - dv) for i, (gu, gv) in enumerate(rel)
    )
    arrows = _chain_arrows(entries, 1, lambda i: i)
    # The chain is valid by construction; skip make_complex revalidation.
    return BasedComplex(R1, gens, frozenset(arrows))


def build_extended(ext: ExtendedSignSequence) -> BasedComplex:
    """The extended standard complex, with generators x_-1 .. x_2n+1.

    The body keeps the gradings of ``build_standard(ext.body)``; the two end
    generators get the gradings forced by the degree equation.
    """
    body = build_standard(ext.body)
    two_n = len(ext.body.entries)

    # Subscript k in -1..2n+1 lives at generator position k + 1.
    def gid(k: int) -> int:
        return k + 1

    entries = ext.entries
    # End gradings, forced by the head and tail arrows.
    g0 = body.grading(0)
    n1 = abs(ext.head)
    if ext.head > 0:
        # x_0 -> V^{n1} x_-1
        g_head = g0.shifted(-1, 2 * n1 - 1)
    else:
        g_head = g0.shifted(1, -(2 * n1 - 1))
    g_last = body.grading(two_n)
    n2 = abs(ext.tail)
    if ext.tail > 0:
        # x_2n+1 -> U^{n2} x_2n
        g_tail = g_last.shifted(-(2 * n2 - 1), 1)
    else:
        g_tail = g_last.shifted(2 * n2 - 1, -1)

    gradings = [g_head] + [body.grading(i) for i in range(two_n + 1)] + [g_tail]
    names = [f"x{k}" for k in range(-1, two_n + 2)]
    gens = tuple(Generator(i, nm, gr) for i, (nm, gr) in enumerate(zip(names, gradings)))
    arrows = _chain_arrows(entries, 0, gid)
    return make_complex(R1, gens, arrows)


def candidate_monomial(complex: BasedComplex, x: int, y: int) -> Monomial | None:
    """The unique monomial a degree-legal arrow x -> y would have to carry,
    or None when no such arrow exists (non-integral or nonpositive exponents).
    """
    if x == y:
        raise ConstructionError("an arrow needs distinct endpoints")
    gx = complex.grading(x)
    gy = complex.grading(y)
    num_u = gy.gu - gx.gu + 1
    num_v = gy.gv - gx.gv + 1
    if num_u % 2 != 0 or num_v % 2 != 0:
        return None
    a, b = num_u // 2, num_v // 2
    if a <= 0 or b <= 0:
        return None
    return Monomial(a, b)

"""Weyl group elements and their abelianized counterparts.

The ambient group is ``(G ^ G) x G x {+1, -1}`` with product

    (l, g, v)(l', g', v') = (l + l' + g ^ (v g'), g + v g', v v'),

i.e. the central extension of ``A = G x| V`` by the cocycle
``((g, v), (g', v')) -> g ^ (v g')``.  The reflection at a root ``t`` is
``(0, t, -1)``.  Over GF(2) the same reflection becomes ``(t (x) t, -1)``
in ``Sym^2 G_2 x V`` (the Weyl group of the abelianization), and
``(iota(t), -1)`` in ``F(T_ab \\ {0}) x V`` (its initial reflection group).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LengthMismatch, NotARoot
from .f2_linalg import F2Vector
from .lattice import GVector, SymTensor, WedgeVector, mod2, num_pairs, phi, sym_square, wedge
from .symmetric_space import RootDatum, contains


def _sign(v: int) -> int:
    if v not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {v}")
    return v


@dataclass(frozen=True)
class AffineElement:
    g: GVector
    v: int = 1

    def __post_init__(self):
        _sign(self.v)

    @classmethod
    def identity(cls, n: int) -> AffineElement:
        return cls((0,) * n, 1)

    @classmethod
    def reflection(cls, t: Sequence[int]) -> AffineElement:
        return cls(tuple(t), -1)

    def __mul__(self, other: AffineElement) -> AffineElement:
        if len(other.g) != len(self.g):
            raise LengthMismatch("rank mismatch")
        return AffineElement(tuple(a + self.v * b for a, b in zip(self.g, other.g)), self.v * other.v)

    def act(self, t: Sequence[int]) -> GVector:
        return act(self, t)


@dataclass(frozen=True)
class WeylElement:
    l: WedgeVector
    g: GVector
    v: int = 1

    def __post_init__(self):
        _sign(self.v)
        if len(self.l) != num_pairs(len(self.g)):
            raise LengthMismatch(f"wedge part of length {len(self.l)} for rank {len(self.g)}")

    @property
    def rank(self) -> int:
        return len(self.g)

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls((0,) * num_pairs(n), (0,) * n, 1)

    def is_identity(self) -> bool:
        return self.v == 1 and not any(self.g) and not any(self.l)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return w_mul(self, other)

    def inverse(self) -> WeylElement:
        return w_inv(self)

    def affine(self) -> AffineElement:
        """Projection to ``A = G x| V`` (drop the central part)."""
        return AffineElement(self.g, self.v)

    def act(self, t: Sequence[int]) -> GVector:
        return act(self, t)

    def __str__(self) -> str:
        def fmt(xs):
            return "(" + ",".join(str(x) for x in xs) + ")"

        return f"l={fmt(self.l)} g={fmt(self.g)} v={'+1' if self.v == 1 else '-1'}"


def w_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rank != b.rank:
        raise LengthMismatch(f"ranks {a.rank} and {b.rank}")
    vg = b.g if a.v == 1 else tuple(-x for x in b.g)
    cocycle = wedge(a.g, vg)
    l = tuple(x + y + z for x, y, z in zip(a.l, b.l, cocycle))
    g = tuple(x + y for x, y in zip(a.g, vg))
    return WeylElement(l, g, a.v * b.v)


def w_inv(a: WeylElement) -> WeylElement:
    return WeylElement(tuple(-x for x in a.l), tuple(-a.v * x for x in a.g), a.v)


def act(a: WeylElement | AffineElement, t: Sequence[int]) -> GVector:
    """``(g, v) . t = 2g + v t``; a Weyl element acts through its image in ``A``."""
    if len(t) != len(a.g):
        raise LengthMismatch(f"vector of length {len(t)} for rank {len(a.g)}")
    return tuple(2 * x + a.v * y for x, y in zip(a.g, t))


def reflect_W(d: RootDatum, t: Sequence[int]) -> WeylElement:
    t = tuple(int(x) for x in t)
    if not contains(d, t):
        raise NotARoot(f"{t} is not in T")
    return WeylElement((0,) * num_pairs(d.rank), t, -1)


def eval_word_W(d: RootDatum, word: Iterable[Sequence[int]]) -> WeylElement:
    """Left-to-right product of the reflections of ``word``; empty word gives the identity."""
    acc = WeylElement.identity(d.rank)
    for i, t in enumerate(word):
        try:
            r = reflect_W(d, t)
        except (NotARoot, LengthMismatch) as exc:
            raise NotARoot(f"letter {i}: {exc}", index=i) from exc
        acc = w_mul(acc, r)
    return acc


@dataclass(frozen=True)
class WabElement:
    s: SymTensor
    v: int = 1

    def __post_init__(self):
        _sign(self.v)

    @classmethod
    def identity(cls, n: int) -> WabElement:
        return cls(SymTensor.zero(n), 1)

    def is_identity(self) -> bool:
        return self.v == 1 and not self.s

    def __mul__(self, other: WabElement) -> WabElement:
        return WabElement(self.s ^ other.s, self.v * other.v)


@dataclass(frozen=True)
class UabElement:
    """``(sum of iota over free, v)`` with ``free`` a set of nonzero classes."""

    free: frozenset[F2Vector]
    v: int = 1

    def __post_init__(self):
        _sign(self.v)
        if any(not c for c in self.free):
            raise ValueError("the free part only holds nonzero classes")

    @classmethod
    def identity(cls) -> UabElement:
        return cls(frozenset(), 1)

    def is_identity(self) -> bool:
        return self.v == 1 and not self.free

    def __mul__(self, other: UabElement) -> UabElement:
        return UabElement(self.free ^ other.free, self.v * other.v)


def _check_class(d: RootDatum, i: int, c: F2Vector) -> None:
    if c.n != d.rank or c not in d:
        raise NotARoot(f"letter {i}: class {c} is not in tab", index=i)


def eval_word_Wab(d: RootDatum, word: Iterable[F2Vector]) -> WabElement:
    bits = 0
    v = 1
    for i, c in enumerate(word):
        _check_class(d, i, c)
        bits ^= sym_square(c).bits
        v = -v
    return WabElement(SymTensor(d.rank, bits), v)


def eval_word_Uab(d: RootDatum, word: Iterable[F2Vector]) -> UabElement:
    free: set[F2Vector] = set()
    v = 1
    for i, c in enumerate(word):
        _check_class(d, i, c)
        if c:
            free ^= {c}
        v = -v
    return UabElement(frozenset(free), v)


def classes(word: Iterable[Sequence[int]]) -> list[F2Vector]:
    return [mod2(t) for t in word]


def abelianize(a: WeylElement) -> WabElement:
    """Image of ``(l, g, v)`` in ``Sym^2 G_2 x V``: ``(phi(l mod 2, g mod 2), v)``."""
    return WabElement(phi(mod2(a.l), mod2(a.g)), a.v)

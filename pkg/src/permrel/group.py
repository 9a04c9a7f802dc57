"""Exact arithmetic in G = G_n(Alt_n).

G is a central extension of the free abelian group Z^n by C = {1, c} with
c = a_1 a_2 a_1^-1 a_2^-1.  An element is stored as ``(eps, exps)`` meaning
``c**eps * a_1**exps[0] * ... * a_n**exps[n-1]``.  Multiplication uses the
cocycle

    beta(u, v) = sum_{i > j} u_i * v_j  (mod 2)

which counts the swaps needed to move v's generators left past the
higher-indexed generators of u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .word import check_letters


def _beta(u: Sequence[int], v: Sequence[int]) -> int:
    total = 0
    running = 0  # sum of v_j for j < i
    for i in range(len(u)):
        total += u[i] * running
        running += v[i]
    return total & 1


@dataclass(frozen=True, order=True)
class GroupElement:
    eps: int
    exps: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "eps", self.eps % 2)
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return mul(self, other)

    def to_dict(self) -> dict:
        return {"eps": self.eps, "exps": list(self.exps)}


def identity(n: int) -> GroupElement:
    return GroupElement(0, (0,) * n)


def generator(i: int, n: int) -> GroupElement:
    exps = [0] * n
    exps[i - 1] = 1
    return GroupElement(0, tuple(exps))


def commutator_c(n: int) -> GroupElement:
    """The central element c, i.e. [a_1, a_2]."""
    return GroupElement(1, (0,) * n)


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.n != h.n:
        raise ValueError(f"dimension mismatch: {g.n} vs {h.n}")
    exps = tuple(a + b for a, b in zip(g.exps, h.exps))
    return GroupElement(g.eps + h.eps + _beta(g.exps, h.exps), exps)


def inv(g: GroupElement) -> GroupElement:
    neg = tuple(-e for e in g.exps)
    return GroupElement(g.eps + _beta(neg, g.exps), neg)


def power(g: GroupElement, k: int) -> GroupElement:
    base = g if k >= 0 else inv(g)
    out = identity(g.n)
    for _ in range(abs(k)):
        out = mul(out, base)
    return out


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^-1 h^-1."""
    return mul(mul(g, h), mul(inv(g), inv(h)))


def from_word(w: Sequence[int], n: int) -> GroupElement:
    """Image of a positive word: eps is the inversion parity, exps the multidegree."""
    check_letters(w, n)
    counts = [0] * n
    eps = 0
    for x in w:
        # letters already placed with a larger index each need one swap
        eps += sum(counts[x:])
        counts[x - 1] += 1
    return GroupElement(eps, tuple(counts))


def fold_word(w: Sequence[int], n: int) -> GroupElement:
    """Image of a word by multiplying generator images one at a time."""
    out = identity(n)
    for x in w:
        out = mul(out, generator(x, n))
    return out


def project_mod_C(g: GroupElement) -> Tuple[int, ...]:
    """Image in G/C, a free abelian group of rank n."""
    return g.exps


def project_mod_CD(g: GroupElement) -> Tuple[int, ...]:
    """Image in G/(CD), an elementary abelian 2-group of rank n."""
    return tuple(e % 2 for e in g.exps)


def is_central(g: GroupElement) -> bool:
    """Central iff it commutes with every generator."""
    return all(mul(g, generator(i, g.n)) == mul(generator(i, g.n), g) for i in range(1, g.n + 1))

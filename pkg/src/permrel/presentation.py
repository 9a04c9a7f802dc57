"""Presentations of the monoids S_n(H) and the groups G_n(H).

A presentation is the data (n, H) with H a subset of Sym_n.  Its defining
relations all have the shape ``a_1 a_2 ... a_n = a_s(1) ... a_s(n)`` for
s in H, so every relator is a permutation word of length n and the set of
words equal to ``z = a_1 ... a_n`` is exactly the orbit of z under H + {1}.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

KINDS = ("trivial", "alternating", "symmetric", "cyclic", "explicit")


class PresentationError(ValueError):
    """Raised for malformed presentation data."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (1-based images)."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise PresentationError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise PresentationError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_even(self) -> bool:
        return parity(self) == "even"

    def __str__(self):
        return " ".join(map(str, self.images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p o q, i.e. the map i -> p(q(i))."""
    if p.degree != q.degree:
        raise PresentationError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p(q(i)) for i in range(1, p.degree + 1)))


def parity(p: Permutation) -> str:
    """'even' or 'odd', computed from the cycle type."""
    seen = [False] * p.degree
    transpositions = 0
    for start in range(p.degree):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p.images[i] - 1
            length += 1
        transpositions += length - 1
    return "even" if transpositions % 2 == 0 else "odd"


def full_cycle(n: int) -> Permutation:
    """The cycle (1, 2, ..., n)."""
    return Permutation(tuple(i % n + 1 for i in range(1, n + 1)))


@dataclass(frozen=True)
class SubsetSpec:
    kind: str
    explicit_perms: tuple[Permutation, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PresentationError(f"unknown H kind {self.kind!r}; expected one of {KINDS}")
        perms = tuple(self.explicit_perms)
        if self.kind == "explicit":
            if not perms:
                raise PresentationError("explicit H needs at least one permutation")
            if len(set(perms)) != len(perms):
                raise PresentationError("explicit H contains duplicate permutations")
        elif perms:
            raise PresentationError(f"permutations given for non-explicit kind {self.kind!r}")
        object.__setattr__(self, "explicit_perms", perms)

    def elements(self, n: int) -> list[Permutation]:
        """The permutations of H, sorted.  Explicit sets are taken as given."""
        if self.kind == "trivial":
            return [Permutation.identity(n)]
        if self.kind == "cyclic":
            c = full_cycle(n)
            out, g = [], Permutation.identity(n)
            for _ in range(n):
                out.append(g)
                g = compose(c, g)
            return sorted(out)
        if self.kind in ("alternating", "symmetric"):
            out = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
            if self.kind == "alternating":
                out = [p for p in out if p.is_even()]
            return out
        for p in self.explicit_perms:
            if p.degree != n:
                raise PresentationError(f"permutation {p} has degree {p.degree}, expected {n}")
        return sorted(self.explicit_perms)

    def __str__(self):
        return self.kind


@dataclass(frozen=True)
class Presentation:
    n: int
    h: SubsetSpec
    relator_orbit: frozenset = field(repr=False)
    # every relator is an even permutation word; only then is the sign map an invariant
    all_even: bool = field(repr=False, default=False)

    @property
    def z(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def is_alternating(self) -> bool:
        return self.h.kind == "alternating"

    def relators(self) -> list[tuple[int, ...]]:
        """Relator orbit in lexicographic order."""
        return sorted(self.relator_orbit)

    def digest(self) -> str:
        """Stable hash of (n, relator orbit); used to key cached closures."""
        text = f"n={self.n};" + ";".join(" ".join(map(str, r)) for r in self.relators())
        return hashlib.sha256(text.encode()).hexdigest()

    def summary(self) -> dict:
        return {"n": self.n, "H": self.h.kind, "relators": len(self.relator_orbit)}

    def with_kind(self, kind: str) -> "Presentation":
        return build_presentation(self.n, SubsetSpec(kind))


def build_presentation(n: int, h: SubsetSpec | str) -> Presentation:
    if isinstance(h, str):
        h = SubsetSpec(h)
    if n < 3:
        raise PresentationError(f"n must be at least 3, got {n}")
    perms = set(h.elements(n))
    perms.add(Permutation.identity(n))
    orbit = frozenset(p.images for p in perms)
    return Presentation(n, h, orbit, all(p.is_even() for p in perms))


def contains_full_cycle(h: SubsetSpec | str, n: int) -> bool:
    """True iff every power of (1, 2, ..., n) lies in H."""
    if isinstance(h, str):
        h = SubsetSpec(h)
    if h.kind == "symmetric":
        return True
    if h.kind == "cyclic":
        return True
    if h.kind == "trivial":
        return False
    if h.kind == "alternating":
        return parity(full_cycle(n)) == "even"
    members = set(h.elements(n))
    c = full_cycle(n)
    g = c
    for _ in range(n - 1):
        if g not in members:
            return False
        g = compose(c, g)
    return True


def parse_presentation(text: str) -> Presentation:
    """Parse the line-based presentation format.

    line 1 ``n = <int>``, line 2 ``H = <kind>``; for ``explicit`` one
    permutation per following line, either one-line images ``2 1 3 4`` or
    cycle notation ``(1 2)(3 4)``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise PresentationError("presentation needs 'n = ...' and 'H = ...' lines")

    def value(line: str, key: str) -> str:
        k, sep, v = line.partition("=")
        if not sep or k.strip() != key:
            raise PresentationError(f"expected '{key} = ...', got {line!r}")
        return v.strip()

    try:
        n = int(value(lines[0], "n"))
    except ValueError as exc:
        raise PresentationError(f"bad degree line {lines[0]!r}") from exc
    kind = value(lines[1], "H")
    perms = []
    for line in lines[2:]:
        if kind != "explicit":
            raise PresentationError(f"unexpected permutation line for H = {kind}: {line!r}")
        perms.append(_parse_perm(line, n))
    return build_presentation(n, SubsetSpec(kind, tuple(perms)))


def _parse_perm(line: str, n: int) -> Permutation:
    if "(" in line:
        cycles = []
        for chunk in line.replace(")", ")\n").split("\n"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise PresentationError(f"bad cycle notation {line!r}")
            body = chunk[1:-1].replace(",", " ").split()
            if body:
                cycles.append([int(x) for x in body])
        return Permutation.from_cycles(n, cycles)
    images = tuple(int(x) for x in line.replace(",", " ").split())
    if len(images) != n:
        raise PresentationError(f"permutation {line!r} has degree {len(images)}, expected {n}")
    return Permutation(images)


def load_presentation(path: str | Path) -> Presentation:
    return parse_presentation(Path(path).read_text(encoding="utf-8"))

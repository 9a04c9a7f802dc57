"""Canonical forms inside the cancellative region of S_n(Alt_n).

For z^2 M the form is derived constructively.  Letters are moved with the
moves that hold after a central z^2:

  R3  x y w  ->  y w x  or  w x y     (three distinct letters)
  S2  x x y <-> y x x                  (x != y)
  S4  x y x y <-> y x y x              (x != y)

First, every letter outside the two-letter core goes into ascending order
behind the core.  Then the core shrinks to a_i^(2 n1) a_j^(2 n2) w with w
one of eight short tails.  Each move is recorded, so a derivation can be
replayed and checked move by move.  ``form_from_image`` builds the same
form directly from the group image and serves as the oracle.

For the ideal T (even n >= 6), T is cancellative and embeds in G, so its
elements are pinned down by their image.  The T form is a sorted prefix
followed by a fixed leading triple times z, with one orientation bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentation import Presentation
from .word import Word, check_letters, inversions, multidegree

TWO_GENERATOR = "two_generator"
GENERAL = "general"


@dataclass(frozen=True)
class Move:
    pos: int
    old: Word
    new: Word
    kind: str  # R3, S2 or S4


@dataclass(frozen=True)
class CanonicalZ2Form:
    """z^2 a_i^(2 n1) a_j^(2 n2) tail, followed for kind=general by a_(j+1)^m1 ... a_n^m."""

    kind: str
    i: int
    j: int
    n1: int
    n2: int
    tail: Word
    m: tuple = ()

    @property
    def core(self) -> Word:
        return (self.i,) * (2 * self.n1) + (self.j,) * (2 * self.n2) + self.tail

    def word(self) -> Word:
        """The translate s with z^2 s equal to this form."""
        rest: list[int] = []
        for offset, e in enumerate(self.m):
            rest.extend([self.j + 1 + offset] * e)
        return self.core + tuple(rest)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.i,
            "j": self.j,
            "n1": self.n1,
            "n2": self.n2,
            "tail": list(self.tail),
            "m": list(self.m),
        }


def reconstruct(form: CanonicalZ2Form, n: int) -> Word:
    """Full word z z s for a z^2 form."""
    z = tuple(range(1, n + 1))
    return z + z + form.word()


# tail as (letter role, ...) keyed by (count_i mod 2, count_j mod 2, inversion parity)
_TAILS = {
    (0, 0, 0): (),
    (1, 0, 0): ("i",),
    (0, 1, 0): ("j",),
    (1, 1, 0): ("i", "j"),
    (1, 1, 1): ("j", "i"),
    (0, 1, 1): ("i", "j", "i"),
    (1, 0, 1): ("j", "i", "j"),
    (0, 0, 1): ("i", "j", "i", "j"),
}


def _core_pair(support: Sequence[int], n: int) -> tuple[int, int]:
    # a single letter k is read inside F_{k,k+1}, or F_{n-1,n} when k = n
    if len(support) >= 2:
        return support[0], support[1]
    if len(support) == 1:
        k = support[0]
        return (k, k + 1) if k < n else (n - 1, n)
    return 1, 2


def _require_alt(p: Presentation):
    if not p.is_alternating:
        raise ValueError(f"z^2 normal forms need H = alternating, got {p.h.kind}")


def form_from_image(s: Sequence[int], n: int) -> CanonicalZ2Form:
    """The z^2 form read off (multidegree, inversion parity) of s."""
    check_letters(s, n)
    md = multidegree(s, n)
    support = [k for k in range(1, n + 1) if md[k - 1]]
    i, j = _core_pair(support, n)
    p_i, p_j = md[i - 1], md[j - 1]
    # letters past the core are sorted, so the core carries all the parity
    roles = _TAILS[(p_i % 2, p_j % 2, inversions(s) % 2)]
    tail = tuple(i if r == "i" else j for r in roles)
    n1 = (p_i - tail.count(i)) // 2
    n2 = (p_j - tail.count(j)) // 2
    if len(support) <= 2:
        return CanonicalZ2Form(TWO_GENERATOR, i, j, n1, n2, tail)
    return CanonicalZ2Form(GENERAL, i, j, n1, n2, tail, tuple(md[j:]))


def _moves_at(w: Word, pos: int):
    x = w[pos:pos + 3]
    if len(x) == 3:
        a, b, c = x
        if a != b and b != c and a != c:
            yield (b, c, a), "R3"
            yield (c, a, b), "R3"
        elif a == b and c != a:
            yield (c, a, a), "S2"
        elif b == c and a != b:
            yield (b, b, a), "S2"
    y = w[pos:pos + 4]
    if len(y) == 4 and y[0] != y[1] and y[0] == y[2] and y[1] == y[3]:
        yield (y[1], y[0], y[1], y[0]), "S4"


class _Deriver:
    """A word under rewriting, with every move checked against its pattern."""

    def __init__(self, s: Sequence[int]):
        self.w: Word = tuple(s)
        self.trace: list[Move] = []

    def do(self, pos: int, new: Sequence[int], kind: str):
        new = tuple(new)
        if (new, kind) not in list(_moves_at(self.w, pos)):
            raise AssertionError(f"illegal {kind} move at {pos}: {self.w} -> {new}")
        mv = Move(pos, self.w[pos:pos + len(new)], new, kind)
        self.w = _apply(self.w, mv)
        self.trace.append(mv)

    def rot_left(self, pos: int):
        # a b c -> c a b
        a, b, c = self.w[pos:pos + 3]
        self.do(pos, (c, a, b), "R3")

    def rot_right(self, pos: int):
        # a b c -> b c a
        a, b, c = self.w[pos:pos + 3]
        self.do(pos, (b, c, a), "R3")

    def pass_left(self, pos: int):
        """The letter at pos+2 jumps over the pair at pos, pos+1."""
        a, b, c = self.w[pos:pos + 3]
        if a == b:
            self.do(pos, (c, a, a), "S2")
        else:
            self.rot_left(pos)

    def square_right(self, pos: int):
        # d c c -> c c d
        d, c, _ = self.w[pos:pos + 3]
        self.do(pos, (c, c, d), "S2")

    def end_distinct(self, f: int):
        """Rearrange the block w[:f] (two letters, both present) to end in two distinct letters."""
        w = self.w
        while w[f - 1] == w[f - 2]:
            c = w[f - 1]
            q = max(t for t in range(f) if w[t] != c)
            self.square_right(q)
            w = self.w


def _apply(w: Word, mv: Move) -> Word:
    assert w[mv.pos:mv.pos + len(mv.old)] == mv.old, (w, mv)
    return w[:mv.pos] + mv.new + w[mv.pos + len(mv.old):]


def _sink_to_front(d: _Deriver, core: tuple[int, int]):
    """Bring first occurrences of both core letters to positions 0 and 1."""
    w = d.w
    firsts = sorted(w.index(c) for c in core)
    p, p2 = firsts
    # everything before the first core occurrence is outside the core
    while p >= 2:
        d.pass_left(p - 2)
        p -= 2
    while p2 - 2 > p:
        d.pass_left(p2 - 2)
        p2 -= 2
    w = d.w
    if p == 0 and p2 == 2:
        if w[1] == w[0]:
            d.do(0, (w[2], w[0], w[0]), "S2")
        else:
            d.rot_left(0)
    elif p == 1 and p2 == 2:
        d.rot_right(0)
    elif p == 1 and p2 == 3:
        if w[2] == w[1]:
            d.do(1, (w[3], w[1], w[1]), "S2")
        else:
            d.rot_left(1)
        d.rot_right(0)


def _gather_core(d: _Deriver, core: tuple[int, int]) -> int:
    """Move every core letter into the front block; returns the block length."""
    f = 2
    while True:
        w = d.w
        p = next((t for t in range(f, len(w)) if w[t] in core), None)
        if p is None:
            return f
        c = w[p]
        while p - 2 >= f:
            d.pass_left(p - 2)
            p -= 2
        if p == f + 1:
            if d.w[f - 1] == c:
                # make the block end in "other c", then
                # o c u c -> c u o c -> c o c u
                d.end_distinct(f)
                if d.w[f - 1] == c:
                    d.rot_right(f - 2)
                    d.rot_right(f - 1)
                else:
                    d.rot_left(f - 1)
            else:
                d.rot_left(f - 1)
        f += 1


def _sort_rest(d: _Deriver, f: int):
    """Insertion-sort w[f:] (letters outside the core).

    An odd adjustment b c -> c b is paid for by the distinct core pair at
    w[f-2:f]: it travels right, performs x y b c -> y x c b, and travels back.
    """
    d.end_distinct(f)
    for g in range(f + 1, len(d.w)):
        c = d.w[g]
        p = g
        while p - 2 >= f and d.w[p - 2] > c and d.w[p - 1] > c:
            d.pass_left(p - 2)
            p -= 2
        if p - 1 >= f and d.w[p - 1] > c:
            q = f - 2
            while q + 2 < p - 1:
                d.rot_left(q)
                q += 1
            d.rot_right(p - 3)
            d.rot_right(p - 2)
            while q > f - 2:
                d.rot_right(q - 1)
                q -= 1


def _reduce_core(d: _Deriver, length: int, x: int, y: int) -> int:
    """Bring w[:length] (letters x < y only) to x^(2a) y^(2b) tail.

    Returns the length of the squares block.
    """
    sq = 0  # w[:sq] is a run of squares
    while True:
        w = d.w
        rem = w[sq:length]
        dbl = next((t for t in range(len(rem) - 1) if rem[t] == rem[t + 1]), None)
        if dbl is not None:
            a = sq + dbl
            c = w[a]
            while a > sq:
                if d.w[a - 1] != c:
                    d.square_right(a - 1)
                # else w[a-1] w[a] is already a double one step further left
                a -= 1
            sq += 2
            continue
        if len(rem) >= 5:
            d.do(sq, (rem[1], rem[0], rem[1], rem[0]), "S4")
            continue
        if len(rem) == 4 and rem[0] == y:
            d.do(sq, (x, y, x, y), "S4")
        break
    # order the squares: y y x x -> x x y y
    pairs = [d.w[t] for t in range(0, sq, 2)]
    for end in range(len(pairs) - 1, 0, -1):
        for t in range(end):
            if pairs[t] > pairs[t + 1]:
                d.square_right(2 * t + 1)
                d.square_right(2 * t)
                pairs[t], pairs[t + 1] = pairs[t + 1], pairs[t]
    return sq


def derive_z2(s: Sequence[int], n: int) -> tuple[CanonicalZ2Form, list]:
    """Derive the z^2 form of s by explicit moves; returns (form, move trace)."""
    check_letters(s, n)
    support = sorted(set(s))
    i, j = _core_pair(support, n)
    d = _Deriver(s)
    core_len = len(d.w)
    if len(support) > 2:
        _sink_to_front(d, (i, j))
        core_len = _gather_core(d, (i, j))
        _sort_rest(d, core_len)
    sq = _reduce_core(d, core_len, i, j)
    w, trace = d.w, d.trace
    core = w[:core_len]
    n1 = sum(1 for t in range(0, sq, 2) if core[t] == i)
    n2 = sq // 2 - n1
    tail = core[sq:]
    md = multidegree(w, n)
    if len(support) <= 2:
        form = CanonicalZ2Form(TWO_GENERATOR, i, j, n1, n2, tail)
    else:
        form = CanonicalZ2Form(GENERAL, i, j, n1, n2, tail, tuple(md[j:]))
    if form.word() != w:
        raise RuntimeError(f"derivation ended at {w}, not a canonical shape")
    return form, trace


def normal_form_z2(s: Sequence[int], p: Presentation) -> CanonicalZ2Form:
    """Canonical form of the element z^2 s."""
    _require_alt(p)
    return derive_z2(s, p.n)[0]


def replay(s: Sequence[int], trace: Sequence[Move]) -> Word:
    """Apply a move trace to s, checking every step matches its pattern."""
    w = tuple(s)
    for mv in trace:
        w = _apply(w, mv)
    return w


@dataclass(frozen=True)
class CanonicalTForm:
    """prefix * lead * z where lead is a_i a_j a_k (orientation 0) or a_j a_i a_k (1)."""

    triple: tuple
    orientation: int
    prefix: tuple  # exponents of a_1..a_n, written in ascending order

    @property
    def lead(self) -> Word:
        i, j, k = self.triple
        return (i, j, k) if self.orientation == 0 else (j, i, k)

    def word(self, n: int) -> Word:
        out: list[int] = []
        for idx, e in enumerate(self.prefix):
            out.extend([idx + 1] * e)
        return tuple(out) + self.lead + tuple(range(1, n + 1))

    def to_dict(self) -> dict:
        return {"triple": list(self.triple), "orientation": self.orientation, "prefix": list(self.prefix)}


def _require_t(p: Presentation):
    if p.n % 2 or p.n < 6:
        raise ValueError(f"the ideal T needs even n >= 6, got n = {p.n}")
    _require_alt(p)


def t_form_of(x: Sequence[int], p: Presentation) -> CanonicalTForm:
    """T form of an element x already known to lie in T."""
    _require_t(p)
    n = p.n
    md = multidegree(x, n)
    big = [k for k in range(1, n + 1) if md[k - 1] >= 2]
    if len(big) < 3 or min(md) < 1:
        raise ValueError("word cannot lie in T: too few letters of degree >= 2")
    i, j, k = big[:3]
    prefix = list(c - 1 for c in md)
    for c in (i, j, k):
        prefix[c - 1] -= 1
    eps = inversions(x) % 2
    for orient in (0, 1):
        form = CanonicalTForm((i, j, k), orient, tuple(prefix))
        if inversions(form.word(n)) % 2 == eps:
            return form
    raise AssertionError("unreachable: the two orientations differ in parity")


def normal_form_T(s: Sequence[int], k: int, l: int, r: int, p: Presentation) -> CanonicalTForm:
    """Canonical form of a_k a_l a_r z s."""
    _require_t(p)
    if len({k, l, r}) != 3 or not all(1 <= c <= p.n for c in (k, l, r)):
        raise ValueError(f"leading triple must be three distinct letters, got {(k, l, r)}")
    check_letters(s, p.n)
    return t_form_of((k, l, r) + p.z + tuple(s), p)

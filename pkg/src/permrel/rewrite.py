"""Exact word-problem engine for S_n(H).

Every relation replaces one length-n relator word by another, so a class
is the connected component of a word in the one-step rewriting graph and
is always finite.  The searches below run on ``bytes`` (one byte per
letter) because hashing dominates the cost at n = 6.

Two words that share the same (position, prefix + suffix) around a relator
window have exactly the same neighbours through that window.  Each such
"clique" is expanded once, which avoids re-generating the |H+1| siblings
from every one of its members.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .group import from_word
from .presentation import Presentation
from .word import Word, check_letters, multidegree, sign_f

DEFAULT_BUDGET = 1_000_000

COMPLETE = "complete"
TRUNCATED = "truncated"

EQUAL = "equal"
NOT_EQUAL = "not_equal"
UNKNOWN = "unknown"

CLOSURE_MEET = "closure_meet"
INVARIANT_MISMATCH = "invariant_mismatch"
FAST_PATH = "cancellative_fast_path"
BUDGET_EXHAUSTED = "budget_exhausted"

IDEALS = ("Mz", "zM", "MzM", "z2M", "T")


@dataclass(frozen=True)
class RewriteClass:
    seed: Word
    members: tuple  # sorted lexicographically
    status: str
    nodes_expanded: int
    budget: int

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return tuple(w) in self._index

    @functools.cached_property
    def _index(self) -> frozenset:
        return frozenset(self.members)

    def to_dict(self) -> dict:
        return {
            "seed": list(self.seed),
            "status": self.status,
            "size": len(self.members),
            "nodes_expanded": self.nodes_expanded,
            "budget": self.budget,
            "members": [list(m) for m in self.members],
        }


@dataclass(frozen=True)
class EqDecision:
    verdict: str
    reason: str
    cost: int = 0

    def __post_init__(self):
        if (self.verdict == UNKNOWN) != (self.reason == BUDGET_EXHAUSTED):
            raise ValueError(f"inconsistent decision {self.verdict}/{self.reason}")

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "reason": self.reason, "cost": self.cost}


class _Engine:
    """Relator lookup tables for one presentation."""

    def __init__(self, p: Presentation):
        self.n = p.n
        self.rel = frozenset(bytes(r) for r in p.relator_orbit)
        self.rel_list = sorted(self.rel)
        self.alternating = p.is_alternating

    def windows(self, x: bytes) -> list[int]:
        n, rel = self.n, self.rel
        return [q for q in range(len(x) - n + 1) if x[q:q + n] in rel]

    def has_z2(self, wins: list[int]) -> bool:
        """Witness for membership in z^2 M, read off one word's windows.

        For H = Alt_n, z^2 is central, so z z anywhere in the word already
        places it in z^2 M.  Otherwise only a literal prefix counts.
        """
        n = self.n
        if self.alternating:
            found = set(wins)
            return any(q + n in found for q in wins)
        return 0 in wins and n in wins


@functools.lru_cache(maxsize=32)
def _engine(p: Presentation) -> _Engine:
    return _Engine(p)


def _encode(w: Sequence[int], n: int) -> bytes:
    check_letters(w, n)
    return bytes(w)


@dataclass
class _Search:
    """BFS state for one side of a search."""

    seen: set
    order: list
    frontier: list
    cliques: set = field(default_factory=set)
    expanded: int = 0


def _start(seed: bytes) -> _Search:
    return _Search({seed}, [seed], [seed])


def _explore(
    eng: _Engine,
    seed: bytes,
    budget: int,
    hit: Optional[Callable[[bytes, list], bool]] = None,
):
    """Layered BFS over the class of ``seed``.

    Returns (search state, status, witness).  ``hit(x, windows)`` is tested
    on every expanded word; the search stops at the first witness.
    """
    st = _start(seed)
    n, rel_list = eng.n, eng.rel_list
    while st.frontier:
        nxt: list[bytes] = []
        for idx, x in enumerate(st.frontier):
            wins = eng.windows(x)
            st.expanded += 1
            if hit is not None and hit(x, wins):
                return st, COMPLETE, x
            for q in wins:
                pre, suf = x[:q], x[q + n:]
                key = pre + b"\0" + suf
                if key in st.cliques:
                    continue
                st.cliques.add(key)
                for r in rel_list:
                    y = pre + r + suf
                    if y in st.seen:
                        continue
                    if len(st.seen) >= budget:
                        st.frontier = st.frontier[idx:] + nxt
                        return st, TRUNCATED, _scan(eng, st.frontier, hit)
                    st.seen.add(y)
                    st.order.append(y)
                    nxt.append(y)
        st.frontier = nxt
    return st, COMPLETE, None


def _scan(eng: _Engine, words: Iterable[bytes], hit) -> Optional[bytes]:
    # discovered-but-unexpanded words can still supply a witness
    if hit is None:
        return None
    for x in words:
        if hit(x, eng.windows(x)):
            return x
    return None


def one_step_rewrites(w: Sequence[int], p: Presentation) -> set:
    """All words u1 u2' u3 with w = u1 u2 u3 and u2, u2' relators (w included)."""
    eng = _engine(p)
    x = _encode(w, p.n)
    out = {tuple(x)}
    for q in eng.windows(x):
        pre, suf = x[:q], x[q + p.n:]
        for r in eng.rel_list:
            out.add(tuple(pre + r + suf))
    return out


def closure(w: Sequence[int], p: Presentation, budget: int = DEFAULT_BUDGET, cache=None) -> RewriteClass:
    """The class of w, or a truncated part of it once more than budget words are found."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    seed = _encode(w, p.n)
    if cache is not None:
        hit = cache.get(p, seed)
        if hit is not None:
            members = tuple(sorted(tuple(m) for m in hit))
            return RewriteClass(tuple(seed), members, COMPLETE, 0, budget)
    st, status, _ = _explore(_engine(p), seed, budget)
    members = tuple(sorted(tuple(m) for m in st.order))
    if cache is not None and status == COMPLETE:
        cache.put(p, seed, st.order)
    return RewriteClass(tuple(seed), members, status, st.expanded, budget)


def invariants_differ(u: Sequence[int], v: Sequence[int], p: Presentation) -> bool:
    if len(u) != len(v) or multidegree(u, p.n) != multidegree(v, p.n):
        return True
    # the sign map is a class invariant only when every relator is even
    return p.all_even and sign_f(u) != sign_f(v)


def equal(
    u: Sequence[int],
    v: Sequence[int],
    p: Presentation,
    budget: int = DEFAULT_BUDGET,
    *,
    fast_path: bool = True,
) -> EqDecision:
    """Layered decision of u = v in S_n(H).

    1. cheap invariants; 2. for H = Alt_n, once both words are seen to lie
    in the cancellative ideal z^2 M, compare group images; 3. bidirectional
    BFS, always growing the smaller frontier.  A meet proves equality and a
    finished side without a meet proves inequality.
    """
    eng = _engine(p)
    a, b = _encode(u, p.n), _encode(v, p.n)
    if a == b:
        return EqDecision(EQUAL, CLOSURE_MEET, 0)
    if invariants_differ(u, v, p):
        return EqDecision(NOT_EQUAL, INVARIANT_MISMATCH, 0)
    use_fast = fast_path and eng.alternating and len(a) >= 2 * p.n
    if use_fast:
        same_image = from_word(u, p.n) == from_word(v, p.n)
    sides = [_start(a), _start(b)]
    witness = [False, False]
    n, rel_list = eng.n, eng.rel_list

    def cost():
        return len(sides[0].seen) + len(sides[1].seen)

    while sides[0].frontier and sides[1].frontier:
        k = 0 if len(sides[0].frontier) <= len(sides[1].frontier) else 1
        st, other = sides[k], sides[1 - k].seen
        nxt: list[bytes] = []
        for x in st.frontier:
            wins = eng.windows(x)
            st.expanded += 1
            if use_fast and not witness[k] and eng.has_z2(wins):
                witness[k] = True
                if witness[1 - k]:
                    return EqDecision(EQUAL if same_image else NOT_EQUAL, FAST_PATH, cost())
            for q in wins:
                pre, suf = x[:q], x[q + n:]
                key = pre + b"\0" + suf
                if key in st.cliques:
                    continue
                st.cliques.add(key)
                for r in rel_list:
                    y = pre + r + suf
                    if y in st.seen:
                        continue
                    if y in other:
                        return EqDecision(EQUAL, CLOSURE_MEET, cost() + 1)
                    if cost() >= budget:
                        return EqDecision(UNKNOWN, BUDGET_EXHAUSTED, cost())
                    st.seen.add(y)
                    nxt.append(y)
        st.frontier = nxt
    return EqDecision(NOT_EQUAL, CLOSURE_MEET, cost())


def _ideal_predicate(eng: _Engine, which: str):
    n = eng.n
    if which == "zM":
        return lambda x, wins: bool(wins) and wins[0] == 0
    if which == "Mz":
        return lambda x, wins: bool(wins) and wins[-1] == len(x) - n
    if which == "MzM":
        return lambda x, wins: bool(wins)
    if which == "z2M":
        return lambda x, wins: eng.has_z2(wins)
    if which == "T":
        def in_t(x, wins):
            m = len(x)
            return m >= n + 3 and bool(wins) and wins[-1] == m - n and len(set(x[m - n - 3:m - n])) == 3
        return in_t
    raise ValueError(f"unknown ideal {which!r}; expected one of {IDEALS}")


def _degree_allows(md: Sequence[int], which: str) -> bool:
    if which in ("zM", "Mz", "MzM"):
        return min(md) >= 1
    if which == "z2M":
        return min(md) >= 2
    # T: z plus three distinct letters
    return min(md) >= 1 and sum(1 for c in md if c >= 2) >= 3


def find_in_class(
    w: Sequence[int],
    p: Presentation,
    predicate: Callable[[Word], bool],
    budget: int = DEFAULT_BUDGET,
) -> tuple[str, Optional[Word], int]:
    """Search the class of w for a member satisfying predicate.

    Returns (yes|no|unknown, witness, words discovered).
    """
    eng = _engine(p)
    st, status, found = _explore(eng, _encode(w, p.n), budget, lambda x, wins: predicate(tuple(x)))
    if found is not None:
        return "yes", tuple(found), len(st.seen)
    return ("no" if status == COMPLETE else "unknown"), None, len(st.seen)


def ideal_witness(
    w: Sequence[int], p: Presentation, which: str, budget: int = DEFAULT_BUDGET
) -> tuple[str, Optional[Word], int]:
    """Like in_ideal but also returns the witnessing member and the cost."""
    eng = _engine(p)
    if which == "T" and (p.n % 2 or p.n < 6):
        raise ValueError(f"ideal T needs even n >= 6, got n = {p.n}")
    pred = _ideal_predicate(eng, which)
    if not _degree_allows(multidegree(w, p.n), which):
        return "no", None, 0
    st, status, found = _explore(eng, _encode(w, p.n), budget, pred)
    if found is not None:
        return "yes", tuple(found), len(st.seen)
    return ("no" if status == COMPLETE else "unknown"), None, len(st.seen)


def in_ideal(w: Sequence[int], p: Presentation, which: str, budget: int = DEFAULT_BUDGET) -> str:
    """yes / no / unknown membership of the element w in one of the ideals."""
    return ideal_witness(w, p, which, budget)[0]


def ideal_profile(
    w: Sequence[int], p: Presentation, names: Sequence[str], budget: int = DEFAULT_BUDGET
) -> tuple[dict, int]:
    """Membership of w in several ideals from one walk over its class.

    Besides the names in IDEALS, "Mza" means M z a_r for some letter r.
    Returns ({name: yes|no|unknown}, words discovered).
    """
    eng = _engine(p)
    n = p.n
    preds = {}
    for name in names:
        if name == "Mza":
            preds[name] = lambda x, wins: len(x) - n - 1 in wins
        else:
            if name == "T" and (n % 2 or n < 6):
                raise ValueError(f"ideal T needs even n >= 6, got n = {n}")
            preds[name] = _ideal_predicate(eng, name)
    found = {name: False for name in names}

    def hit(x, wins):
        for name, pred in preds.items():
            if not found[name] and pred(x, wins):
                found[name] = True
        return all(found.values())

    st, status, _ = _explore(eng, _encode(w, n), budget, hit)
    miss = "no" if status == COMPLETE else "unknown"
    return {name: ("yes" if found[name] else miss) for name in names}, len(st.seen)

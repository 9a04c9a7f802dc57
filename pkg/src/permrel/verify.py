"""Named desk-scale checks of the structural lemmas for S_n(Alt_n).

Every check reduces to equalities, inequalities and ideal memberships in M
and reports pass, fail or inconclusive.  Inconclusive means some search ran
out of budget; a fail is always a definite counterexample.

Equalities go through a Prover.  It first tries pure rewriting under a
smaller budget and only then falls back to the layered decision, which
includes the cancellative shortcut for z^2 M.  Even permutations of the
letters are automorphisms of M when H = Alt_n.  So each query is reduced to
a canonical representative of its orbit, and one answer serves the whole
orbit.  Every index tuple is still enumerated.
"""

from __future__ import annotations

import functools
import itertools
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import group as grp
from .congruence import YES, cancellativity_probe, eta_related, generating_pairs_Y
from .normalform import derive_z2, form_from_image, replay
from .presentation import Permutation, Presentation, build_presentation, contains_full_cycle
from .rewrite import (
    DEFAULT_BUDGET,
    EQUAL,
    NOT_EQUAL,
    UNKNOWN,
    EqDecision,
    closure,
    equal,
    ideal_profile,
)
from .word import Word, sign_f

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
BOUNDED = "bounded verification"

DEFAULT_L = {4: 6, 5: 5, 6: 4}
REWRITE_FIRST_BUDGET = 20_000

# Prover queries write z as the placeholder letter 0 so that relabeling keeps it fixed
Z = (0,)


def default_max_len(n: int) -> int:
    return DEFAULT_L.get(n, 3 if n > 6 else 6)


@dataclass
class CheckResult:
    check_id: str
    params: dict
    verdict: str
    cost: int
    details: str
    label: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "cost": self.cost,
            "details": self.details,
            "label": self.label,
        }


@dataclass
class Report:
    presentation: dict
    checks: list
    timings: dict = field(default_factory=dict)

    @property
    def totals(self) -> dict:
        c = Counter(r.verdict for r in self.checks)
        return {"checks": len(self.checks), PASS: c[PASS], FAIL: c[FAIL], INCONCLUSIVE: c[INCONCLUSIVE]}

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "presentation": self.presentation,
            "checks": [r.to_dict() for r in self.checks],
            "totals": self.totals,
        }
        if timing:
            out["seconds"] = {k: round(v, 3) for k, v in self.timings.items()}
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, ensure_ascii=False)


@functools.lru_cache(maxsize=8)
def _alt_maps(n: int) -> tuple:
    maps = []
    for images in itertools.permutations(range(1, n + 1)):
        if Permutation(images).is_even():
            maps.append((0,) + images)
    return tuple(maps)


def _relabel(w: Sequence[int], m: tuple) -> Word:
    return tuple(m[c] for c in w)


class Prover:
    """Cached equality queries for one check run."""

    def __init__(
        self, p: Presentation, budget: int, rewrite_budget: int = REWRITE_FIRST_BUDGET, rewrite_only: bool = False
    ):
        self.p = p
        self.budget = budget
        # rewrite_only: never use the group-image shortcut
        self.rewrite_only = rewrite_only
        self.rewrite_budget = budget if rewrite_only else min(budget, rewrite_budget)
        self.maps = _alt_maps(p.n) if p.is_alternating else ((0,) + tuple(range(1, p.n + 1)),)
        self.memo: dict = {}
        self.cost = 0
        self.queries = 0
        self.reasons: Counter = Counter()

    def canonical(self, *words: Sequence[int]) -> tuple:
        return min(tuple(_relabel(w, m) for w in words) for m in self.maps)

    def expand(self, w: Sequence[int]) -> Word:
        out: list = []
        for c in w:
            out.extend(self.p.z if c == 0 else (c,))
        return tuple(out)

    def equal(self, u: Sequence[int], v: Sequence[int]) -> EqDecision:
        self.queries += 1
        a, b = self.canonical(u, v)
        key = (a, b) if a <= b else (b, a)
        if key not in self.memo:
            x, y = self.expand(key[0]), self.expand(key[1])
            d = equal(x, y, self.p, self.rewrite_budget, fast_path=False)
            cost = d.cost
            if d.verdict == UNKNOWN and not self.rewrite_only:
                d = equal(x, y, self.p, self.budget)
                cost += d.cost
            self.cost += cost
            self.reasons[d.reason] += 1
            self.memo[key] = d
        return self.memo[key]

    def summary(self) -> str:
        parts = ", ".join(f"{k} {v}" for k, v in sorted(self.reasons.items()))
        return f"{self.queries} queries, {len(self.memo)} up to symmetry ({parts})"


class Tally:
    """Collects assertion outcomes for one check."""

    def __init__(self):
        self.total = 0
        self.failures: list[str] = []
        self.unknown: list[str] = []

    def expect(self, outcome: Optional[bool], what: str):
        self.total += 1
        if outcome is None:
            self.unknown.append(what)
        elif not outcome:
            self.failures.append(what)

    def expect_eq(self, prover: Prover, u, v, want: bool = True):
        d = prover.equal(u, v)
        what = f"{_fmt(u)} {'=' if want else '!='} {_fmt(v)}"
        if d.verdict == UNKNOWN:
            self.expect(None, what)
        else:
            self.expect((d.verdict == EQUAL) == want, what)

    @property
    def verdict(self) -> str:
        if self.failures:
            return FAIL
        if self.unknown:
            return INCONCLUSIVE
        return PASS

    def details(self, extra: str = "") -> str:
        text = f"{self.total} assertions"
        if self.failures:
            text += f"; {len(self.failures)} failed, first: {self.failures[0]}"
        if self.unknown:
            text += f"; {len(self.unknown)} undecided, first: {self.unknown[0]}"
        return text + (f"; {extra}" if extra else "")


def _fmt(w: Sequence[int]) -> str:
    return "".join("z" if c == 0 else f"a{c}" for c in w) if w else "1"


@dataclass
class Context:
    p: Presentation
    budget: int
    max_len: int
    seed: int
    rewrite_budget: int = REWRITE_FIRST_BUDGET

    @property
    def n(self) -> int:
        return self.p.n

    @property
    def z(self) -> Word:
        return self.p.z

    def prover(self) -> Prover:
        return Prover(self.p, self.budget, self.rewrite_budget)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    fn: Callable
    applies: Callable[[int], bool]
    label: str = ""
    uses_max_len: bool = False


CATALOG: dict[str, CheckSpec] = {}


def _check(check_id: str, applies: Callable[[int], bool], label: str = "", uses_max_len: bool = False):
    def deco(fn):
        CATALOG[check_id] = CheckSpec(check_id, fn, applies, label, uses_max_len)
        return fn

    return deco


def _even6(n):
    return n >= 6 and n % 2 == 0


def _simple(tally: Tally, prover: Prover):
    return tally.verdict, prover.cost, tally.details(prover.summary())


@_check("lemma-ij-i", lambda n: n >= 4)
def _ij_i(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    for i, j in itertools.permutations(range(1, ctx.n + 1), 2):
        t.expect_eq(pr, (i, j) + z, z + (i, j))
    return _simple(t, pr)


@_check("lemma-ij-ii", lambda n: n >= 5)
def _ij_ii(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    for i, j, k in itertools.permutations(range(1, ctx.n + 1), 3):
        t.expect_eq(pr, (i, j, k) + z, (j, k, i) + z)
        t.expect_eq(pr, z + (i, j, k), z + (j, k, i))
    return _simple(t, pr)


@_check("lemma-ij-iii", lambda n: n == 4)
def _ij_iii(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    rel = ctx.p.relator_orbit
    for i, j, k in itertools.permutations(range(1, 5), 3):
        (l,) = set(range(1, 5)) - {i, j, k}
        if (i, j, k, l) in rel:
            chain = [(i, j, k) + z, (j, k, i) + z, (k, i, j) + z, z + (k, j, i)]
        else:
            # then a_l a_i a_j a_k = z
            t.expect((l, i, j, k) in rel, f"a{l}a{i}a{j}a{k} is a relator")
            chain = [z + (i, j, k), z + (j, k, i), z + (k, i, j), (k, j, i) + z]
        for u, v in zip(chain, chain[1:]):
            t.expect_eq(pr, u, v)
    return _simple(t, pr)


@_check("lemma-ij-iv", _even6)
def _ij_iv(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    for i, j, k in itertools.permutations(range(1, ctx.n + 1), 3):
        t.expect_eq(pr, (i, j, k) + z, z + (j, i, k))
    return _simple(t, pr)


@_check("lemma-z2central", lambda n: n >= 3)
def _z2central(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    for i in range(1, ctx.n + 1):
        t.expect_eq(pr, (i,) + z + z, z + z + (i,))
    return _simple(t, pr)


@_check("lemma-central4", lambda n: n == 4)
def _central4(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    base = (1, 2, 4, 3)
    w = base + z
    for m in _alt_maps(4):
        t.expect_eq(pr, w, _relabel(base, m) + z)
    for i in range(1, 5):
        t.expect_eq(pr, w + (i,), (i,) + w)
    perms = list(itertools.permutations(range(1, 5)))
    for s, g in itertools.combinations_with_replacement(perms, 2):
        if Permutation(s).is_even() != Permutation(g).is_even():
            continue
        t.expect_eq(pr, s + z, g + z)
        t.expect_eq(pr, s + z, z + s)
        t.expect_eq(pr, z + s, z + g)
    return _simple(t, pr)


@_check("lemma-squares-i", _even6)
def _squares_i(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    n = ctx.n
    for k, l, r in itertools.permutations(range(1, n + 1), 3):
        lead = (k, l, r) + z
        for i, j in itertools.permutations(range(1, n + 1), 2):
            t.expect_eq(pr, (i, i, j) + lead, (j, i, i) + lead)
            t.expect_eq(pr, (i, j, i, j) + lead, (j, i, j, i) + lead)
    return _simple(t, pr)


@_check("lemma-squares-ii", lambda n: n >= 4)
def _squares_ii(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    z2 = z + z
    for i, j in itertools.permutations(range(1, ctx.n + 1), 2):
        t.expect_eq(pr, (i, i, j) + z2, (j, i, i) + z2)
        t.expect_eq(pr, (i, j, i, j) + z2, (j, i, j, i) + z2)
    return _simple(t, pr)


def _words(n: int, max_len: int):
    for k in range(max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=k)


def move_identities(n: int) -> list:
    """The base identities z^2 old = z^2 new behind every derivation move."""
    out = []
    for x, y, w in itertools.permutations(range(1, n + 1), 3):
        out.append(((x, y, w), (y, w, x)))
    for x, y in itertools.permutations(range(1, n + 1), 2):
        out.append(((x, x, y), (y, x, x)))
        out.append(((x, y, x, y), (y, x, y, x)))
    return out


@_check("lemma-normalf-coverage", lambda n: n >= 4, uses_max_len=True)
def _normalf(ctx: Context):
    pr, t = ctx.prover(), Tally()
    n, z2 = ctx.n, Z + Z
    real_z2 = ctx.z + ctx.z
    for old, new in move_identities(n):
        t.expect_eq(pr, z2 + old, z2 + new)
    forms: dict = {}
    images: dict = {}
    count = 0
    for s in _words(n, ctx.max_len):
        count += 1
        form, trace = derive_z2(s, n)
        t.expect(replay(s, trace) == form.word(), f"trace of {_fmt(s)} replays")
        t.expect(form == form_from_image(s, n), f"derived form of {_fmt(s)} matches the image form")
        g = grp.from_word(real_z2 + s, n)
        if forms.setdefault(form, g) != g:
            t.expect(False, f"form {form} reached from two group images")
        if images.setdefault(g, form) != form:
            t.expect(False, f"image of {_fmt(s)} has two forms")
    # pure rewriting on short translates, no group shortcut
    short = 3 if n <= 5 else 2
    by_image: dict = {}
    for s in _words(n, min(short, ctx.max_len)):
        by_image.setdefault(grp.from_word(real_z2 + s, n), []).append(s)
    strict = Prover(ctx.p, ctx.budget, rewrite_only=True)
    oracle = 0
    for group_words in by_image.values():
        for s in group_words[1:]:
            oracle += 1
            t.expect_eq(strict, z2 + group_words[0], z2 + s)
    extra = (
        f"{count} translates up to length {ctx.max_len}; {oracle} rewriting-only pairs"
        f" ({strict.summary()}); move identities: {pr.summary()}"
    )
    return t.verdict, pr.cost + strict.cost, t.details(extra)


@_check("lemma-normalf2-commute", _even6)
def _normalf2(ctx: Context):
    pr, t, z = ctx.prover(), Tally(), Z
    n = ctx.n
    for k, l, r in itertools.permutations(range(1, n + 1), 3):
        lead = (k, l, r) + z
        flipped = (l, k, r) + z
        for i in range(1, n + 1):
            if i in (k, l, r):
                # rotate the triple so that i leads, as in the lemma
                rot = {k: (k, l, r), l: (l, r, k), r: (r, k, l)}[i]
                a, b, c = rot
                t.expect_eq(pr, (a, b, c) + z + (i,), (i, b, a, c) + z)
            else:
                t.expect_eq(pr, lead + (i,), (i,) + lead)
        t.expect_eq(pr, lead + (k,), (k,) + flipped)
    return _simple(t, pr)


class _Membership:
    """Symmetry-reduced ideal profiles for the bounded checks; z is written as Z."""

    def __init__(self, ctx: Context, names: Sequence[str]):
        self.ctx = ctx
        self.names = tuple(names)
        self.maps = _alt_maps(ctx.n)
        self.memo: dict = {}
        self.cost = 0

    def __call__(self, w: Sequence[int]) -> dict:
        key = min(_relabel(w, m) for m in self.maps)
        if key not in self.memo:
            word = tuple(c for x in key for c in (self.ctx.z if x == 0 else (x,)))
            prof, cost = ideal_profile(word, self.ctx.p, self.names, self.ctx.budget)
            self.memo[key] = prof
            self.cost += cost
        return self.memo[key]


def _iff(a: str, b: str) -> Optional[bool]:
    if UNKNOWN in (a, b):
        return None
    return (a == YES) == (b == YES)


def _leads(n: int):
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        yield (i, j, k)
        yield (j, i, k)


@_check("lemma-even1-bounded", _even6, label=BOUNDED, uses_max_len=True)
def _even1(ctx: Context):
    t = Tally()
    n, z = ctx.n, Z
    mem = _Membership(ctx, ("Mz", "T", "Mza"))
    count = 0
    for w in _words(n, ctx.max_len):
        for r in range(1, n + 1):
            x = w + z + (r,)
            prof = mem(x)
            count += 1
            t.expect(_iff(prof["Mz"], prof["T"]), f"{_fmt(x)}: in Mz iff in T")
    for w in _words(n, max(ctx.max_len - 2, 0)):
        for lead in _leads(n):
            x = w + lead + z
            prof = mem(x)
            count += 1
            t.expect(None if prof["Mza"] == UNKNOWN else prof["Mza"] == YES, f"{_fmt(x)} in Mz a_r")
    extra = f"{count} elements, {len(mem.memo)} up to symmetry"
    return t.verdict, mem.cost, t.details(extra)


@_check("lemma-even2-bounded", _even6, label=BOUNDED, uses_max_len=True)
def _even2(ctx: Context):
    t = Tally()
    n, z = ctx.n, Z
    mem = _Membership(ctx, ("Mz", "zM", "T"))
    count = 0
    for w in _words(n, ctx.max_len):
        # I_1: s in Mz with s a_i in Mz for every i
        s = w + z
        right = [mem(s + (i,))["Mz"] for i in range(1, n + 1)]
        in_i1 = UNKNOWN if UNKNOWN in right else (YES if all(v == YES for v in right) else "no")
        t.expect(_iff(in_i1, mem(s)["T"]), f"{_fmt(s)}: in I_1 iff in T")
        # I_1': s in zM with a_i s in zM for every i
        s = z + w
        left = [mem((i,) + s)["zM"] for i in range(1, n + 1)]
        in_i1p = UNKNOWN if UNKNOWN in left else (YES if all(v == YES for v in left) else "no")
        t.expect(_iff(in_i1p, mem(s)["T"]), f"{_fmt(s)}: in I_1' iff in T")
        count += 2
    extra = f"{count} elements, {len(mem.memo)} classes up to symmetry"
    return t.verdict, mem.cost, t.details(extra)


@_check("lemma-preliminar-spot", _even6, label=BOUNDED, uses_max_len=True)
def _preliminar(ctx: Context):
    t = Tally()
    n, z = ctx.n, ctx.z
    pr = ctx.prover()
    mem = _Membership(ctx, ("MzM", "T"))
    maps = _alt_maps(n)
    reps = sorted({min(_relabel(s, m) for m in maps) for s in _words(n, ctx.max_len)})
    tested = factorizations = 0
    cost = 0
    for s in reps:
        prof_s = mem(s)
        prof_sz = mem(s + Z)
        if prof_s["MzM"] == UNKNOWN or prof_sz["T"] == UNKNOWN:
            t.expect(None, f"hypotheses for {_fmt(s)}")
            continue
        if prof_s["MzM"] == YES or prof_sz["T"] == YES:
            continue
        tested += 1
        cls = closure(s + z, ctx.p, ctx.budget)
        cost += len(cls)
        if not cls.complete:
            t.expect(None, f"class of {_fmt(s + z)}")
            continue
        for m in cls.members:
            for q in range(len(m) - n + 1):
                if m[q:q + n] in ctx.p.relator_orbit:
                    factorizations += 1
                    s1s2 = m[:q] + m[q + n:]
                    if s1s2 != tuple(s):
                        t.expect_eq(pr, s1s2, s)
                    else:
                        t.total += 1
    extra = f"{len(reps)} words up to symmetry, {tested} meet the hypotheses, {factorizations} factorizations"
    return t.verdict, cost + mem.cost + pr.cost, t.details(extra)


@_check("prop-centrality-criterion", lambda n: n in (4, 5))
def _centrality(ctx: Context):
    t = Tally()
    n = ctx.n
    z = tuple(range(1, n + 1))
    cost = 0
    rows = []
    for kind in ("trivial", "cyclic", "alternating", "symmetric"):
        pk = build_presentation(n, kind)
        d = equal((1,) + z, z + (1,), pk, ctx.budget)
        cost += d.cost
        full = contains_full_cycle(kind, n)
        rows.append(f"{kind}: {d.verdict}/{'cycle' if full else 'no cycle'}")
        t.expect(None if d.verdict == UNKNOWN else (d.verdict == EQUAL) == full, f"{kind}")
    return t.verdict, cost, t.details("; ".join(rows))


@_check("lemma-canc-bounded", lambda n: n >= 3)
def _canc(ctx: Context):
    t = Tally()
    cls = closure(ctx.z, ctx.p, ctx.budget)
    if not cls.complete:
        t.expect(None, "class of z")
    else:
        for i in range(1, ctx.n + 1):
            t.expect(any(m[0] == i for m in cls.members), f"class of z has a word starting with a{i}")
            t.expect(any(m[-1] == i for m in cls.members), f"class of z has a word ending with a{i}")
    return t.verdict, len(cls), t.details(f"class of z has {len(cls)} words ({cls.status})")


@_check("thm-i-group", lambda n: n >= 3)
def _group(ctx: Context):
    t = Tally()
    n, z = ctx.n, ctx.z
    gz = grp.from_word(z, n)
    for images in itertools.permutations(range(1, n + 1)):
        g = grp.from_word(images, n)
        if Permutation(images).is_even():
            t.expect(g == gz, f"relator {_fmt(images)} maps to the image of z")
        else:
            t.expect(g.exps == gz.exps and g.eps != gz.eps, f"odd word {_fmt(images)} differs only in eps")
    a1, a2 = grp.generator(1, n), grp.generator(2, n)
    c = grp.commutator(a1, a2)
    one = grp.identity(n)
    t.expect(c == grp.commutator_c(n) and c != one, "c = [a1, a2] is the nontrivial central element")
    t.expect(grp.mul(c, c) == one, "c^2 = 1")
    for i, j in itertools.permutations(range(1, n + 1), 2):
        t.expect(grp.commutator(grp.generator(i, n), grp.generator(j, n)) == c, f"[a{i}, a{j}] = c")
    for i in range(1, n + 1):
        sq = grp.power(grp.generator(i, n), 2)
        t.expect(grp.is_central(sq), f"a{i}^2 is central")
    t.expect(grp.is_central(c), "c is central")
    for m in range(1, 4):
        u, v = (1, 2) + z * m, (2, 1) + z * m
        t.expect(sign_f(u) != sign_f(v), f"a1a2 z^{m} and a2a1 z^{m} have opposite signs")
    rng = random.Random(ctx.seed)
    for _ in range(200):
        u = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 8)))
        v = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 8)))
        t.expect(
            grp.from_word(u + v, n) == grp.mul(grp.from_word(u, n), grp.from_word(v, n)),
            f"image of {_fmt(u)}.{_fmt(v)} is multiplicative",
        )
        t.expect(grp.from_word(u, n) == grp.fold_word(u, n), f"image of {_fmt(u)} matches the fold")
    return t.verdict, 0, t.details()


# at n = 6 the length-2 sample has no same-image pairs and length 3 exceeds the budget
@_check("thm-iii-z2M-cancellative", lambda n: n in (4, 5))
def _z2m_canc(ctx: Context):
    t = Tally()
    sample = {4: 4, 5: 3}[ctx.n]
    rep = cancellativity_probe("z2M", ctx.p, sample, ctx.budget, seed=ctx.seed)
    t.total = rep.pairs_tested
    t.failures = [f"{_fmt(a)} != {_fmt(b)}" for a, b in rep.counterexamples]
    t.unknown = ["pair"] * rep.inconclusive
    extra = f"z^2 s for |s| <= {sample}: {rep.elements} elements, {rep.confirmed} same-image pairs equal by rewriting"
    return t.verdict, rep.cost, t.details(extra)


@_check("thm-iv-witness", lambda n: n >= 5 and n % 2 == 1)
def _witness(ctx: Context):
    t = Tally()
    z = ctx.z
    u, v = (1, 1, 2) + z, (2, 1, 1) + z
    d1 = equal(u, v, ctx.p, ctx.budget)
    t.expect(None if d1.verdict == UNKNOWN else d1.verdict == NOT_EQUAL, "a1a1a2z != a2a1a1z")
    d2 = equal(u + z, v + z, ctx.p, ctx.budget, fast_path=False)
    cost = d1.cost + d2.cost
    if d2.verdict == UNKNOWN:
        d2 = equal(u + z, v + z, ctx.p, ctx.budget)
        cost += d2.cost
    t.expect(None if d2.verdict == UNKNOWN else d2.verdict == EQUAL, "a1a1a2z^2 = a2a1a1z^2")
    return t.verdict, cost, t.details(f"z: {d1.verdict} ({d1.reason}); z^2: {d2.verdict} ({d2.reason})")


@_check("thm-iv-Y", lambda n: n >= 4)
def _y(ctx: Context):
    pr, t = ctx.prover(), Tally()
    z2 = Z + Z
    pairs = generating_pairs_Y(ctx.p)
    for u, v in pairs:
        t.expect_eq(pr, u + z2, v + z2)
    return _simple(t, pr)


@_check("thm-v-eta-witness", _even6)
def _eta(ctx: Context):
    t = Tally()
    z = ctx.z
    u, v = (1, 2, 3) + z, (2, 1, 3) + z
    e = eta_related(u, v, ctx.p, ctx.budget)
    d = equal(u, v, ctx.p, ctx.budget)
    t.expect(None if e.related == UNKNOWN else e.related == YES, "eta relates a1a2a3z and a2a1a3z")
    t.expect(None if d.verdict == UNKNOWN else d.verdict == NOT_EQUAL, "a1a2a3z != a2a1a3z")
    return t.verdict, e.cost + d.cost, t.details(f"eta: {e.witness}; equal: {d.verdict} ({d.reason})")


@_check("thm-v-T-cancellative", _even6)
def _t_canc(ctx: Context):
    t = Tally()
    rep = cancellativity_probe("T", ctx.p, 2, ctx.budget, seed=ctx.seed)
    t.total = rep.pairs_tested
    t.failures = [f"{_fmt(a)} != {_fmt(b)}" for a, b in rep.counterexamples]
    t.unknown = ["pair"] * rep.inconclusive
    extra = f"w lead z for |w| <= 2: {rep.elements} elements, {rep.confirmed} same-image pairs equal by rewriting"
    return t.verdict, rep.cost, t.details(extra)


def applicable(p: Presentation) -> list[str]:
    if not p.is_alternating:
        return []
    return [cid for cid, spec in CATALOG.items() if spec.applies(p.n)]


def run_check(
    check_id: str,
    p: Presentation,
    budget: int = DEFAULT_BUDGET,
    *,
    max_len: Optional[int] = None,
    seed: int = 0,
) -> CheckResult:
    if check_id not in CATALOG:
        raise KeyError(f"unknown check {check_id!r}")
    spec = CATALOG[check_id]
    if not p.is_alternating:
        raise ValueError("the catalog checks need H = alternating")
    if not spec.applies(p.n):
        raise ValueError(f"check {check_id} does not apply for n = {p.n}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    L = default_max_len(p.n) if max_len is None else max_len
    if L < 0:
        raise ValueError("max_len must be nonnegative")
    ctx = Context(p, budget, L, seed)
    verdict, cost, details = spec.fn(ctx)
    params = {"n": p.n, "budget": budget}
    if spec.uses_max_len:
        params["L"] = L
    return CheckResult(check_id, params, verdict, cost, details, spec.label)


@dataclass
class SuiteConfig:
    checks: Optional[Sequence[str]] = None  # None: every applicable check
    budget: int = DEFAULT_BUDGET
    max_len: Optional[int] = None
    seed: int = 0


def run_suite(p: Presentation, config: Optional[SuiteConfig] = None, progress=None) -> Report:
    config = config or SuiteConfig()
    ids = list(config.checks) if config.checks is not None else applicable(p)
    report = Report({**p.summary(), "digest": p.digest()[:16]}, [])
    for cid in ids:
        start = time.perf_counter()
        res = run_check(cid, p, config.budget, max_len=config.max_len, seed=config.seed)
        report.timings[cid] = time.perf_counter() - start
        report.checks.append(res)
        if progress is not None:
            progress(res, report.timings[cid])
    return report

"""The congruences rho and eta on S_n(Alt_n), and cancellativity probes.

rho is the least cancellative congruence: s rho t iff s z^i = t z^i for
some i.  Since z^2 is central and z^2 M is cancellative, one power always
suffices, so rho is decided by a single query s z^2 = t z^2.

eta identifies s and t when they are equal, or when both lie in zM (odd n)
or in T (even n >= 6) and have the same multidegree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .group import from_word
from .presentation import Presentation
from .rewrite import DEFAULT_BUDGET, EQUAL, NOT_EQUAL, equal, in_ideal
from .word import Word, multidegree

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class CongruenceVerdict:
    related: str
    witness: str = ""
    cost: int = 0

    def to_dict(self) -> dict:
        return {"related": self.related, "witness": self.witness, "cost": self.cost}


def _require_alt(p: Presentation):
    if not p.is_alternating:
        raise ValueError(f"this congruence is defined for H = alternating, got {p.h.kind}")


def rho_related(
    s: Sequence[int], t: Sequence[int], p: Presentation, budget: int = DEFAULT_BUDGET, *, fast_path: bool = True
) -> CongruenceVerdict:
    """s rho t, decided as s z^2 = t z^2."""
    _require_alt(p)
    z2 = p.z + p.z
    d = equal(tuple(s) + z2, tuple(t) + z2, p, budget, fast_path=fast_path)
    if d.verdict == EQUAL:
        return CongruenceVerdict(YES, f"s z^2 = t z^2 ({d.reason})", d.cost)
    if d.verdict == NOT_EQUAL:
        return CongruenceVerdict(NO, f"s z^2 != t z^2 ({d.reason})", d.cost)
    return CongruenceVerdict(UNKNOWN, "budget exhausted", d.cost)


def _eta_ideal(p: Presentation) -> str:
    _require_alt(p)
    if p.n % 2:
        return "zM"
    if p.n >= 6:
        return "T"
    raise ValueError("eta for n = 4 is outside the supported range (needs odd n or even n >= 6)")


def eta_related(
    s: Sequence[int], t: Sequence[int], p: Presentation, budget: int = DEFAULT_BUDGET
) -> CongruenceVerdict:
    which = _eta_ideal(p)
    if multidegree(s, p.n) != multidegree(t, p.n):
        return CongruenceVerdict(NO, "multidegrees differ")
    ms, mt = in_ideal(s, p, which, budget), in_ideal(t, p, which, budget)
    if ms == YES and mt == YES:
        return CongruenceVerdict(YES, f"both in {which} with the same multidegree")
    d = equal(s, t, p, budget)
    if d.verdict == EQUAL:
        return CongruenceVerdict(YES, f"equal in M ({d.reason})", d.cost)
    if d.verdict == NOT_EQUAL and NO in (ms, mt):
        return CongruenceVerdict(NO, f"not equal in M and not both in {which}", d.cost)
    return CongruenceVerdict(UNKNOWN, "budget exhausted", d.cost)


def generating_pairs_Y(p: Presentation) -> list:
    """Pairs (a_i a_j a_k, a_j a_k a_i), (a_i^2 a_j, a_j a_i^2), ((a_i a_j)^2, (a_j a_i)^2)."""
    _require_alt(p)
    n = p.n
    out: list[tuple[Word, Word]] = []
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        out.append(((i, j, k), (j, k, i)))
    for i, j in itertools.permutations(range(1, n + 1), 2):
        out.append(((i, i, j), (j, i, i)))
    for i, j in itertools.permutations(range(1, n + 1), 2):
        out.append(((i, j, i, j), (j, i, j, i)))
    seen = set()
    uniq = []
    for pair in out:
        if pair not in seen:
            seen.add(pair)
            uniq.append(pair)
    return uniq


@dataclass
class ProbeReport:
    ideal: str
    n: int
    sample_len: int
    elements: int = 0
    pairs_tested: int = 0
    confirmed: int = 0
    inconclusive: int = 0
    counterexamples: list = field(default_factory=list)
    cost: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "n": self.n,
            "sample_len": self.sample_len,
            "elements": self.elements,
            "pairs_tested": self.pairs_tested,
            "confirmed": self.confirmed,
            "inconclusive": self.inconclusive,
            "counterexamples": [[list(a), list(b)] for a, b in self.counterexamples],
            "cost": self.cost,
        }


def ideal_elements(ideal: str, p: Presentation, sample_len: int) -> list:
    """Words spanning the ideal up to a bounded translate length."""
    n = p.n
    z = p.z
    words = [w for k in range(sample_len + 1) for w in itertools.product(range(1, n + 1), repeat=k)]
    if ideal == "z2M":
        return [z + z + w for w in words]
    if ideal == "T":
        if n % 2 or n < 6:
            raise ValueError(f"the ideal T needs even n >= 6, got n = {n}")
        leads = []
        for i, j, k in itertools.combinations(range(1, n + 1), 3):
            leads += [(i, j, k), (j, i, k)]
        return [w + lead + z for w in words for lead in leads]
    raise ValueError(f"unknown ideal {ideal!r}; expected z2M or T")


def cancellativity_probe(
    ideal: str,
    p: Presentation,
    sample_len: int,
    budget: int = DEFAULT_BUDGET,
    *,
    seed: int = 0,
    max_pairs: Optional[int] = None,
) -> ProbeReport:
    """Check that elements of the ideal with equal group image are equal in M.

    Equality is decided by rewriting alone (no group-image shortcut), so a
    confirmation is independent evidence.  With max_pairs set, a seeded
    random subset of the candidate pairs is tested.
    """
    _require_alt(p)
    rep = ProbeReport(ideal, p.n, sample_len)
    elems = ideal_elements(ideal, p, sample_len)
    rep.elements = len(elems)
    groups: dict = {}
    for w in elems:
        groups.setdefault(from_word(w, p.n), []).append(w)
    pairs = []
    for key in sorted(groups, key=lambda g: (g.exps, g.eps)):
        ws = groups[key]
        # chain each element to the first: equality is transitive
        pairs += [(ws[0], w) for w in ws[1:]]
    if max_pairs is not None and len(pairs) > max_pairs:
        pairs = random.Random(seed).sample(pairs, max_pairs)
    for u, v in pairs:
        d = equal(u, v, p, budget, fast_path=False)
        rep.pairs_tested += 1
        rep.cost += d.cost
        if d.verdict == EQUAL:
            rep.confirmed += 1
        elif d.verdict == NOT_EQUAL:
            rep.counterexamples.append((u, v))
        else:
            rep.inconclusive += 1
    return rep

"""Words over a_1..a_n and the two cheap rewriting invariants.

Words are plain tuples of 1-based generator indices; the empty tuple is the
identity.  Every defining relation is a permutation word of length n, so
one-step rewriting preserves length and multidegree.  When all relators are
even permutation words it also preserves the sign map ``sign_f``.
"""

from __future__ import annotations

from typing import Sequence, Tuple

Word = Tuple[int, ...]


def word(*letters: int) -> Word:
    return tuple(letters)


def concat(*parts: Sequence[int]) -> Word:
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def power(w: Sequence[int], k: int) -> Word:
    return tuple(w) * k


def check_letters(w: Sequence[int], n: int) -> None:
    for pos, x in enumerate(w):
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} at position {pos} is outside 1..{n}")


def multidegree(w: Sequence[int], n: int) -> Word:
    """Occurrence count of each generator a_1..a_n."""
    check_letters(w, n)
    counts = [0] * n
    for x in w:
        counts[x - 1] += 1
    return tuple(counts)


def inversions(w: Sequence[int]) -> int:
    """Number of pairs j < k with w[j] > w[k], by merge counting."""

    def sort_count(seq: list[int]) -> tuple[list[int], int]:
        if len(seq) <= 1:
            return seq, 0
        mid = len(seq) // 2
        left, a = sort_count(seq[:mid])
        right, b = sort_count(seq[mid:])
        merged: list[int] = []
        count = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if right[j] < left[i]:
                merged.append(right[j])
                count += len(left) - i
                j += 1
            else:
                merged.append(left[i])
                i += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return sort_count(list(w))[1]


def sign_f(w: Sequence[int]) -> int:
    """(-1) ** (number of strict inversions); equal letters never count."""
    return -1 if inversions(w) % 2 else 1


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w)) if w else "ε"

"""Stirling permutations and their adjacency-pair statistics.

A Stirling permutation of order n is a word on the multiset
{1, 1, 2, 2, ..., n, n} in which every letter lying strictly between the two
occurrences of m is larger than m.  Scanning left to right this is exactly a
stack discipline: a first occurrence must exceed the current stack top (or
open on an empty stack), and a second occurrence must close the letter
sitting on top.

The pair statistics only look at occurrence positions, so they are defined
for any word in which every letter appears exactly twice, including words
whose alphabet is not [n]:

  ascending adjacent pair (a, b):  a < b and the second occurrence of a sits
                                   immediately before the first of b
  terminally nested pair (a, b):   a < b and the second occurrence of a sits
                                   immediately after the second of b

A chain a < b < c of two pairs of the same kind is excluded by the NAAS and
NTNS predicates.  Pairs of either kind form a partial matching (both
endpoints determine each other through a fixed position), so a chain exists
exactly when some letter is the larger element of one pair and the smaller
element of another.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import LimitExceededError
from .poly import GammaVector

Word = tuple[int, ...]

DEFAULT_CAP = 8


class MalformedWordError(ValueError):
    """Raised when a word is not a sequence of letters each appearing exactly twice."""


def as_word(w: Union[str, Iterable[int]]) -> Word:
    """Normalize input to a tuple of ints; digit strings are split per character."""
    if isinstance(w, str):
        if not w.isdigit():
            raise MalformedWordError(f"cannot parse word {w!r}")
        return tuple(int(ch) for ch in w)
    return tuple(int(x) for x in w)


def _occurrences(w: Word) -> tuple[dict[int, int], dict[int, int]]:
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for i, c in enumerate(w):
        if c in second:
            raise MalformedWordError(f"letter {c} appears more than twice")
        if c in first:
            second[c] = i
        else:
            first[c] = i
    missing = set(first) - set(second)
    if missing:
        raise MalformedWordError(f"letters {sorted(missing)} appear only once")
    return first, second


def is_stirling(word: Union[str, Iterable[int]]) -> bool:
    """True iff letters between the two occurrences of any m all exceed m.

    The word must consist of letters each appearing exactly twice
    (MalformedWordError otherwise); the alphabet need not be [n].
    """
    w = as_word(word)
    _occurrences(w)  # validates multiplicities
    stack: list[int] = []
    opened: set[int] = set()
    for c in w:
        if c in opened:
            if not stack or stack[-1] != c:
                return False
            stack.pop()
        else:
            if stack and c < stack[-1]:
                return False
            opened.add(c)
            stack.append(c)
    return True


def enumerate_stirling(n: int, cap: int = DEFAULT_CAP) -> Iterator[Word]:
    """Yield the (2n-1)!! Stirling permutations of order n.

    Built by inserting the pair "m m" into each of the 2m - 1 gaps of every
    word of order m - 1; gaps are taken right to left, which makes the
    order-2 stream come out as 1122, 1221, 2211.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if n > cap:
        raise LimitExceededError("enumerate_stirling", n, cap)
    word = [1, 1]
    if n == 1:
        yield tuple(word)
        return

    def rec(m: int) -> Iterator[Word]:
        if m > n:
            yield tuple(word)
            return
        for gap in range(2 * (m - 1), -1, -1):
            word[gap:gap] = (m, m)
            yield from rec(m + 1)
            del word[gap : gap + 2]

    yield from rec(2)


def aapair(word: Union[str, Iterable[int]]) -> int:
    """Number of pairs a < b whose occurrences satisfy second(a) + 1 = first(b)."""
    w = as_word(word)
    first, second = _occurrences(w)
    count = 0
    for b, fb in first.items():
        j = fb - 1
        if j >= 0:
            a = w[j]
            if second[a] == j and a < b:
                count += 1
    return count


def tnpair(word: Union[str, Iterable[int]]) -> int:
    """Number of pairs a < b whose occurrences satisfy second(a) = second(b) + 1."""
    w = as_word(word)
    first, second = _occurrences(w)
    count = 0
    for b, sb in second.items():
        j = sb + 1
        if j < len(w):
            a = w[j]
            if second[a] == j and a < b:
                count += 1
    return count


def _pair_profile(w: Word) -> tuple[int, int, bool, bool]:
    # fused (aapair, tnpair, is_naas, is_ntns) in one occurrence scan
    first: dict[int, int] = {}
    second: dict[int, int] = {}
    for i, c in enumerate(w):
        if c in first:
            second[c] = i
        else:
            first[c] = i
    length = len(w)
    aa = tn = 0
    aa_small: set[int] = set()
    aa_large: set[int] = set()
    tn_small: set[int] = set()
    tn_large: set[int] = set()
    for b, fb in first.items():
        j = fb - 1
        if j >= 0:
            a = w[j]
            if second[a] == j and a < b:
                aa += 1
                aa_small.add(a)
                aa_large.add(b)
    for b, sb in second.items():
        j = sb + 1
        if j < length:
            a = w[j]
            if second[a] == j and a < b:
                tn += 1
                tn_small.add(a)
                tn_large.add(b)
    return aa, tn, not (aa_small & aa_large), not (tn_small & tn_large)


def is_naas(word: Union[str, Iterable[int]]) -> bool:
    """True iff no chain a < b < c of two ascending adjacent pairs exists."""
    w = as_word(word)
    _occurrences(w)
    return _pair_profile(w)[2]


def is_ntns(word: Union[str, Iterable[int]]) -> bool:
    """True iff no chain a < b < c of two terminally nested pairs exists."""
    w = as_word(word)
    _occurrences(w)
    return _pair_profile(w)[3]


def distribution_naas_aapair(n: int, cap: int = DEFAULT_CAP) -> GammaVector:
    """Counts of chain-free words by aapair over order n, as a GammaVector of
    degree n (the descent polynomial degree one size up)."""
    counts = [0] * (n // 2 + 1)
    for w in enumerate_stirling(n, cap):
        aa, _tn, naas, _ntns = _pair_profile(w)
        if naas:
            counts[aa] += 1
    return GammaVector(counts, n)


def distribution_ntns_tnpair(n: int, cap: int = DEFAULT_CAP) -> GammaVector:
    """Counts of chain-free words by tnpair over order n, as a GammaVector of
    degree n."""
    counts = [0] * (n // 2 + 1)
    for w in enumerate_stirling(n, cap):
        _aa, tn, _naas, ntns = _pair_profile(w)
        if ntns:
            counts[tn] += 1
    return GammaVector(counts, n)


def word_to_string(w: Sequence[int]) -> str:
    """Digit string when all letters are single digits, else comma separated."""
    if all(0 <= c <= 9 for c in w):
        return "".join(str(c) for c in w)
    return ",".join(str(c) for c in w)


def statistics_rows(n: int, cap: int = DEFAULT_CAP) -> Iterator[tuple[str, int, int, bool, bool]]:
    """(word, aapair, tnpair, is_naas, is_ntns) rows in enumeration order."""
    for w in enumerate_stirling(n, cap):
        aa, tn, naas, ntns = _pair_profile(w)
        yield word_to_string(w), aa, tn, naas, ntns

"""
Classical combinatorics-on-words predicates: palindromes, borders, Lyndon
words, periods, balance and central words.

All positions are 1-based. Binary-only predicates raise ``AlphabetError``
on words using letters other than ``0`` and ``1``.
"""

import logging
import math
import typing as t

from .errors import AlphabetError, UndefinedInputError
from .schemas import CentralCertificate, CentralKindEnum
from .word import ALPHABET, Interval, Word, letter_code, parse_word

logger = logging.getLogger(__name__)


def require_binary(w: Word, operation: str) -> None:
    if not w.is_binary:
        raise AlphabetError(f"{operation} is defined for binary words only, got {w}")


def require_nonempty(w: Word, operation: str) -> None:
    if not len(w):
        raise UndefinedInputError(f"{operation} is undefined on the empty word")


def is_palindrome(w: Word) -> bool:
    codes = w.codes
    return codes == codes[::-1]


def palindromic_intervals(w: Word, include_trivial: bool = True) -> t.Set[Interval]:
    """All ``(i, j)`` with ``w[i, j]`` a palindrome, by expansion around every centre."""
    codes = w.codes
    n = len(codes)
    found = set()
    for centre in range(2 * n - 1):
        left = centre // 2
        right = left + centre % 2
        while left >= 0 and right < n and codes[left] == codes[right]:
            if include_trivial or left < right:
                found.add(Interval(left + 1, right + 1))
            left -= 1
            right += 1
    return found


def border_length(w: Word) -> int:
    """Length of the longest border of ``w`` (0 when unbordered)."""
    require_nonempty(w, "border_length")
    codes = w.codes
    failure = [0] * len(codes)
    k = 0
    for q in range(1, len(codes)):
        while k and codes[q] != codes[k]:
            k = failure[k - 1]
        if codes[q] == codes[k]:
            k += 1
        failure[q] = k
    return failure[-1]


def is_unbordered(w: Word) -> bool:
    return border_length(w) == 0


def _ranks(w: Word, order: t.Optional[str]) -> t.List[int]:
    if order is None:
        return list(w.codes)
    rank = {letter: r for r, letter in enumerate(order)}
    try:
        return [rank[letter] for letter in w]
    except KeyError as error:
        raise AlphabetError(f"letter {error.args[0]!r} is missing from order {order!r}")


def lyndon_factorization(w: Word, order: t.Optional[str] = None) -> t.List[Word]:
    """
    Duval's factorization of ``w`` into a non-increasing sequence of Lyndon words.

    :param order: letters in increasing order; defaults to the alphabet order.
    """
    ranks = _ranks(w, order)
    n = len(ranks)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and ranks[k] <= ranks[j]:
            k = i if ranks[k] < ranks[j] else k + 1
            j += 1
        while i <= k:
            factors.append(w.factor(i + 1, i + j - k))
            i += j - k
    return factors


def is_lyndon(w: Word, order: t.Optional[str] = None) -> bool:
    """Strictly smaller than every nontrivial rotation of itself."""
    require_nonempty(w, "is_lyndon")
    factors = lyndon_factorization(w, order)
    return len(factors) == 1


def periods(w: Word) -> t.List[int]:
    require_nonempty(w, "periods")
    codes = w.codes
    n = len(codes)
    return [p for p in range(1, n + 1) if codes[p:] == codes[: n - p]]


def least_period(w: Word) -> int:
    return periods(w)[0]


def fine_wilf(w: Word, p: int, q: int) -> t.Optional[bool]:
    """
    ``None`` when ``w`` lacks period ``p`` or ``q`` or is shorter than
    ``p + q - gcd(p, q)``; otherwise whether ``gcd(p, q)`` is a period.
    """
    found = set(periods(w))
    g = math.gcd(p, q)
    if p not in found or q not in found or len(w) < p + q - g:
        return None
    return g in found


def _unbalanced_length(codes: t.Tuple[int, ...]) -> t.Optional[int]:
    """Least factor length whose ``1``-counts spread by more than one."""
    n = len(codes)
    prefix = [0]
    for code in codes:
        prefix.append(prefix[-1] + code)
    for length in range(2, n):
        counts = [prefix[k + length] - prefix[k] for k in range(n - length + 1)]
        if max(counts) - min(counts) > 1:
            return length
    return None


def is_balanced(w: Word) -> bool:
    require_binary(w, "is_balanced")
    return _unbalanced_length(w.codes) is None


def unbalance_witness(w: Word) -> t.Optional[t.Tuple[str, Word]]:
    """
    A palindrome ``u`` and letter ``a`` with ``aua`` and ``bub`` both factors
    of ``w``, or ``None`` when ``w`` is balanced.

    The search starts at the least unbalanced factor length, where such a pair
    always sits; the shortest, then lexicographically least, ``u`` is returned.
    """
    require_binary(w, "unbalance_witness")
    start = _unbalanced_length(w.codes)
    if start is None:
        return None
    by_length: t.Dict[int, t.List[Interval]] = {}
    for interval in palindromic_intervals(w, include_trivial=False):
        by_length.setdefault(interval.length, []).append(interval)
    for length in range(start, len(w) + 1):
        inner: t.Dict[int, t.Set[Word]] = {0: set(), 1: set()}
        for interval in by_length.get(length, ()):
            inner[w.codes[interval.i - 1]].add(w.factor(interval.i + 1, interval.j - 1))
        common = inner[0] & inner[1]
        if common:
            return "0", min(common)
    logger.warning("no palindromic unbalance pair found in unbalanced word %s", w)
    return None


def central_decompositions(w: Word) -> t.List[t.Tuple[Word, Word]]:
    """Every split ``(u, v)`` with ``w = u01v = v10u``, ordered by ``|u|``."""
    require_binary(w, "central_decompositions")
    codes = w.codes
    splits = []
    for k in range(len(codes) - 1):
        if codes[k] == 0 and codes[k + 1] == 1:
            u, v = codes[:k], codes[k + 2 :]
            if v + (1, 0) + u == codes:
                splits.append((Word(u), Word(v)))
    return splits


def is_central(w: Word) -> t.Optional[CentralCertificate]:
    """Certificate of centrality, or ``None`` when ``w`` is not central."""
    require_binary(w, "is_central")
    if len(set(w.codes)) <= 1:
        letter = str(w)[0] if len(w) else None
        return CentralCertificate(
            kind=CentralKindEnum.letter_power, letter=letter, power=len(w)
        )
    splits = central_decompositions(w)
    if not splits:
        return None
    u, v = splits[0]
    p, q = len(u) + 2, len(v) + 2
    found = periods(w)
    if math.gcd(p, q) != 1 or p not in found or q not in found or len(w) != p + q - 2:
        logger.warning("split %s|01|%s of %s failed certificate checks", u, v, w)
        return None
    return CentralCertificate(
        kind=CentralKindEnum.composite, u=str(u), v=str(v), p=p, q=q
    )


def longest_palindromic_prefix(w: Word) -> Interval:
    require_nonempty(w, "longest_palindromic_prefix")
    codes = w.codes
    for k in range(len(codes), 0, -1):
        if codes[:k] == codes[k - 1 :: -1]:
            return Interval(1, k)


def longest_palindromic_suffix(w: Word) -> Interval:
    require_nonempty(w, "longest_palindromic_suffix")
    codes = w.codes
    n = len(codes)
    for start in range(n):
        block = codes[start:]
        if block == block[::-1]:
            return Interval(start + 1, n)


def occurrences(w: Word, letter: str) -> t.List[int]:
    code = letter_code(letter)
    return [p for p, c in enumerate(w.codes, start=1) if c == code]


def canonical_form(w: Word) -> Word:
    """Relabel letters ``0, 1, a, …`` in order of first appearance."""
    relabel: t.Dict[int, int] = {}
    return Word._trusted(
        tuple(relabel.setdefault(code, len(relabel)) for code in w.codes)
    )


def is_isomorphic(w: Word, v: Word) -> bool:
    return len(w) == len(v) and canonical_form(w) == canonical_form(v)


def distinct_factors(
    w: Word, max_len: t.Optional[int] = None, min_len: int = 1
) -> t.List[Word]:
    """Factors of ``w`` deduplicated by content, in lexicographic order."""
    codes = w.codes
    n = len(codes)
    top = n if max_len is None else min(max_len, n)
    found = {
        codes[start : start + length]
        for length in range(max(min_len, 0), top + 1)
        for start in range(n - length + 1)
    }
    return [Word._trusted(codes) for codes in sorted(found)]


def apply_doubling(w: Word, letters: t.Iterable[str]) -> Word:
    """Image of ``w`` under the morphism squaring each letter of ``letters``."""
    doubled = {letter_code(letter) for letter in letters}
    codes = []
    for code in w.codes:
        codes.append(code)
        if code in doubled:
            codes.append(code)
    return Word._trusted(tuple(codes))


def letter_power(letter: str, k: int) -> Word:
    return parse_word(letter * k)


__all__ = [
    "ALPHABET",
    "apply_doubling",
    "border_length",
    "canonical_form",
    "central_decompositions",
    "distinct_factors",
    "fine_wilf",
    "is_balanced",
    "is_central",
    "is_isomorphic",
    "is_lyndon",
    "is_palindrome",
    "is_unbordered",
    "least_period",
    "letter_power",
    "longest_palindromic_prefix",
    "longest_palindromic_suffix",
    "lyndon_factorization",
    "occurrences",
    "palindromic_intervals",
    "periods",
    "require_binary",
    "require_nonempty",
    "unbalance_witness",
]

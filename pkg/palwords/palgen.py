"""
Reflections, closures and generating sets.

A set ``S`` of intervals palindromically generates a word ``w`` when every
interval is a palindrome of ``w`` and the equivalence generated by the
reflections ``k -> i + j - k`` has exactly the letter classes of ``w``.
"""

import logging
import typing as t

from .errors import ContractError, DimensionError, PositionRangeError
from .schemas import GeneratorSet, Leaf, Partition
from .utils import DisjointSet
from .word import Interval, Word, letter_code
from .word_core import (
    apply_doubling,
    is_central,
    palindromic_intervals,
    require_binary,
    require_nonempty,
)

logger = logging.getLogger(__name__)


def reflect(interval: t.Tuple[int, int], k: int) -> int:
    interval = Interval(*interval)
    if not interval.contains(k):
        raise PositionRangeError(f"position {k} lies outside {interval}")
    return interval.i + interval.j - k


def reflection_pairs(interval: t.Tuple[int, int]) -> t.List[t.Tuple[int, int]]:
    """The position pairs an interval's reflection swaps, outermost first."""
    i, j = interval
    return [(i + d, j - d) for d in range((j - i + 1) // 2)]


def _closure_set(generators: GeneratorSet) -> DisjointSet:
    ds = DisjointSet(generators.n)
    for interval in generators.intervals:
        ds.union_pairs(reflection_pairs(interval))
    return ds


def closure(generators: GeneratorSet) -> Partition:
    """Finest partition of ``1..n`` closed under every reflection of the set."""
    return Partition(classes=_closure_set(generators).sets())


def _is_palindromic_in(interval: Interval, codes: t.Tuple[int, ...]) -> bool:
    block = codes[interval.i - 1 : interval.j]
    return block == block[::-1]


def generates(generators: GeneratorSet, w: Word) -> bool:
    if generators.n != len(w):
        raise DimensionError(
            f"generator set targets length {generators.n}, word has length {len(w)}"
        )
    codes = w.codes
    if not all(_is_palindromic_in(interval, codes) for interval in generators.intervals):
        return False
    return _closure_set(generators).count == len(set(codes))


def leaves(generators: GeneratorSet, w: Word) -> t.List[Leaf]:
    """Positions moved by the reflection of at most one generator."""
    if not generates(generators, w):
        raise ContractError(f"{{{generators}}} does not generate {w}")
    moved_by = [0] * (len(w) + 1)
    for interval in generators.intervals:
        for x, y in reflection_pairs(interval):
            moved_by[x] += 1
            moved_by[y] += 1
    return [
        Leaf(position=p, label=w.letter(p))
        for p in range(1, len(w) + 1)
        if moved_by[p] <= 1
    ]


def witness_su(w: Word) -> GeneratorSet:
    """All intervals whose factor has the shape ``a b^k a`` with ``k >= 0``."""
    require_binary(w, "witness_su")
    require_nonempty(w, "witness_su")
    codes = w.codes
    n = len(codes)
    found = []
    for start in range(n):
        end = start + 1
        while end < n and codes[end] != codes[start]:
            end += 1
        if end < n:
            found.append(Interval(start + 1, end + 1))
    return GeneratorSet(n=n, intervals=found)


def witness_three(w: Word) -> t.Optional[GeneratorSet]:
    """
    Three generators for ``w = a x b`` with ``{a, b} = {0, 1}`` and ``x``
    central but not a letter power; ``None`` when ``w`` has another shape.

    With ``x = u01v = v10u`` the generators are the palindromic prefix
    ``a?a``, the palindromic suffix ``b?b`` and ``x`` itself.
    """
    if not w.is_binary or len(w) < 2 or w.codes[0] == w.codes[-1]:
        return None
    x = w.factor(2, len(w) - 1)
    certificate = is_central(x)
    if certificate is None or certificate.p is None:
        return None
    n = len(w)
    if w.codes[0] == 0:
        prefix_len, suffix_len = certificate.p, certificate.q
    else:
        prefix_len, suffix_len = certificate.q, certificate.p
    return GeneratorSet(
        n=n,
        intervals=[
            Interval(1, prefix_len),
            Interval(n - suffix_len + 1, n),
            Interval(2, len(x) + 1),
        ],
    )


def has_centred_generator(generators: GeneratorSet, w: Word, letter: str) -> bool:
    """Whether some generator is an odd palindrome whose centre holds ``letter``."""
    code = letter_code(letter)
    return any(
        interval.length % 2 and w.codes[(interval.i + interval.j) // 2 - 1] == code
        for interval in generators.intervals
    )


def dilate(generators: GeneratorSet, w: Word, letter: str) -> t.Tuple[GeneratorSet, Word]:
    """
    Push a generating set of ``w`` through the doubling of ``letter``.

    Each ``(i, j)`` becomes the interval covering the image of ``w[i, j]``.
    When no generator is an odd palindrome centred on ``letter``, the trivial
    generator at the leftmost occurrence of ``letter`` is added first.
    """
    code = letter_code(letter)
    if code not in w.codes:
        return GeneratorSet(n=len(w), intervals=list(generators.intervals)), w
    if not generates(generators, w):
        raise ContractError(f"{{{generators}}} does not generate {w}")
    codes = w.codes
    intervals = list(generators.intervals)
    if not has_centred_generator(generators, w, letter):
        first = codes.index(code) + 1
        intervals.append(Interval(first, first))
    image_end = [0]
    for c in codes:
        image_end.append(image_end[-1] + (2 if c == code else 1))
    dilated = [Interval(image_end[i - 1] + 1, image_end[j]) for i, j in intervals]
    doubled = apply_doubling(w, letter)
    return GeneratorSet(n=len(doubled), intervals=dilated), doubled


def heritage_witness(
    generators: GeneratorSet, w: Word, side: str = "left"
) -> GeneratorSet:
    """
    A set of at most ``len(generators)`` intervals generating ``w`` with its
    first (``side="left"``) or last (``side="right"``) letter removed.
    """
    require_nonempty(w, "heritage_witness")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not generates(generators, w):
        raise ContractError(f"{{{generators}}} does not generate {w}")
    n = len(w)
    intervals = list(generators.intervals)
    if side == "right":
        intervals = [Interval(n + 1 - j, n + 1 - i) for i, j in intervals]
    touching = [interval for interval in intervals if interval.i == 1]
    if touching:
        m = max(interval.j for interval in touching)
        kept = [interval for interval in intervals if interval.i != 1]
        kept.extend(Interval(m - q + 1, m) for _, q in touching if q < m)
        if m - 1 >= 2:
            kept.append(Interval(2, m - 1))
        intervals = kept
    shifted = [Interval(i - 1, j - 1) for i, j in intervals]
    if side == "right":
        shifted = [Interval(n - j, n - i) for i, j in shifted]
    return GeneratorSet(n=n - 1, intervals=shifted)


def letter_power_witnesses(n: int) -> t.Tuple[GeneratorSet, GeneratorSet]:
    """The generating sets ``{(1,n-1),(1,n)}`` and ``{(1,n),(2,n)}`` of ``a^n``."""
    if n < 3:
        raise ValueError(f"two-generator sets of a^n need n >= 3, got {n}")
    return (
        GeneratorSet(n=n, intervals=[Interval(1, n - 1), Interval(1, n)]),
        GeneratorSet(n=n, intervals=[Interval(1, n), Interval(2, n)]),
    )


def is_palindromically_generated(w: Word) -> bool:
    """Whether some set of palindromic intervals generates ``w``, i.e. ``mu(w)`` is finite."""
    ds = DisjointSet(len(w))
    for interval in palindromic_intervals(w, include_trivial=False):
        ds.union_pairs(reflection_pairs(interval))
    return ds.count == len(set(w.codes))

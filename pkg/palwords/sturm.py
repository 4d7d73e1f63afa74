"""
Generation and classification of binary words: Thue-Morse prefixes,
standard (Sturmian) words, doubling morphisms, ``A(w)``, lean words and the
double-Sturmian factor test.
"""

import itertools
import logging
import math
import typing as t
from abc import ABC, abstractmethod

from .errors import (
    ContractError,
    DescriptorError,
    DirectiveExhaustedError,
    ResourceGuardError,
)
from .schemas import DirectiveSequence, DoublingSet, LeanResult
from .utils import DisjointSet
from .word import ALPHABET, Word, parse_word
from .word_core import apply_doubling, is_balanced, require_binary, require_nonempty

logger = logging.getLogger(__name__)

TAU_MAX_ITERATIONS = 20


def thue_morse_prefix(length: int) -> Word:
    """First ``length`` letters of the Thue-Morse word, by binary digit sums."""
    return Word._trusted(tuple(bin(k).count("1") % 2 for k in range(length)))


def tau_iterate(k: int) -> Word:
    """``tau^k(0)`` for the morphism ``0 -> 01, 1 -> 10``."""
    if k > TAU_MAX_ITERATIONS:
        raise ResourceGuardError(
            f"tau^{k}(0) has length 2^{k}; at most {TAU_MAX_ITERATIONS} iterations allowed"
        )
    codes: t.Tuple[int, ...] = (0,)
    for _ in range(k):
        codes = tuple(itertools.chain.from_iterable((c, 1 - c) for c in codes))
    return Word._trusted(codes)


def _standard_words(terms: t.Iterable[int]) -> t.Iterator[Word]:
    """``s0, s1, …`` with ``s_m = s_{m-1}^{d_m} s_{m-2}``, ``s_{-1} = 1``, ``s0 = 0``."""
    before, current = (1,), (0,)
    yield Word._trusted(current)
    for term in terms:
        before, current = current, current * term + before
        yield Word._trusted(current)


def standard_word(directive: DirectiveSequence, min_len: int) -> Word:
    """The first standard word of the recursion with length at least ``min_len``."""
    if min_len < 1:
        raise ValueError(f"min_len must be positive, got {min_len}")
    for word in _standard_words(directive.terms):
        if len(word) >= min_len:
            return word
    raise DirectiveExhaustedError(
        f"directive ({directive}) is exhausted before reaching length {min_len}"
    )


def central_words(length: int) -> t.List[Word]:
    """
    Central words of ``length`` that are not letter powers, in increasing order.

    Each one is the two-letter word with coprime periods ``p`` and ``q``
    where ``p + q - 2 == length``, under both labellings.
    """
    found = set()
    for p in range(2, length + 1):
        q = length + 2 - p
        if q < 2 or math.gcd(p, q) != 1:
            continue
        ds = DisjointSet(length)
        ds.union_pairs((k, k + p) for k in range(1, length - p + 1))
        ds.union_pairs((k, k + q) for k in range(1, length - q + 1))
        zero = ds.find(1)
        codes = tuple(0 if ds.find(k) == zero else 1 for k in range(1, length + 1))
        found.add(codes)
        found.add(tuple(1 - code for code in codes))
    return [Word._trusted(codes) for codes in sorted(found)]


def double(w: Word, letters: DoublingSet) -> Word:
    require_binary(w, "double")
    return apply_doubling(w, letters.letters)


def _blocks(w: Word) -> t.List[t.Tuple[int, int]]:
    return [(code, len(list(run))) for code, run in itertools.groupby(w.codes)]


def doubling_set(w: Word) -> DoublingSet:
    """``A(w)``: letters ``a`` such that no factor ``b a^(2k+1) b`` occurs in ``w``."""
    require_binary(w, "doubling_set")
    require_nonempty(w, "doubling_set")
    blocks = _blocks(w)
    last = len(blocks) - 1
    odd_interior = {
        code
        for idx, (code, length) in enumerate(blocks)
        if 0 < idx < last and length % 2
    }
    return DoublingSet(
        letters=frozenset(ALPHABET[code] for code in (0, 1) if code not in odd_interior)
    )


def lean(w: Word) -> LeanResult:
    """
    Shortest ``u`` such that ``d_A(u)`` contains ``w``, with ``A = A(w)``.

    Interior blocks of a doubled letter halve; a boundary block may have been
    cut by the factor window, so it keeps ``ceil(length / 2)`` letters.
    """
    letters = doubling_set(w)
    blocks = _blocks(w)
    last = len(blocks) - 1
    codes: t.List[int] = []
    for idx, (code, length) in enumerate(blocks):
        if ALPHABET[code] in letters:
            boundary = idx == 0 or idx == last
            length = (length + 1) // 2 if boundary else length // 2
        codes.extend([code] * length)
    result = Word._trusted(tuple(codes))
    if w not in double(result, letters):
        raise ContractError(f"lean word {result} of {w} does not cover it")
    return LeanResult(A=letters, lean=result)


def is_double_sturmian_factor(w: Word) -> bool:
    """Whether ``w`` is a factor of a double Sturmian word: its lean word is balanced."""
    return is_balanced(lean(w).lean)


def is_overlap_free(w: Word) -> bool:
    """No factor ``vzvzv`` with ``v`` nonempty, i.e. no factor of length ``2p+1`` with period ``p``."""
    codes = w.codes
    n = len(codes)
    for p in range(1, (n - 1) // 2 + 1):
        run = 0
        for k in range(n - p):
            run = run + 1 if codes[k] == codes[k + p] else 0
            if run >= p + 1:
                return False
    return True


class WordSource(ABC):
    """A one-sided infinite word, evaluated only through finite prefixes."""

    sturmian: bool = False

    @property
    @abstractmethod
    def descriptor(self) -> str:
        pass

    @abstractmethod
    def prefix(self, length: int) -> Word:
        pass

    def __str__(self) -> str:
        return self.descriptor


class ThueMorseSource(WordSource):
    @property
    def descriptor(self) -> str:
        return "tm"

    def prefix(self, length: int) -> Word:
        return thue_morse_prefix(length)


class StandardSource(WordSource):
    """
    The characteristic Sturmian word of a directive sequence.

    The directive is repeated periodically when a prefix outgrows it, so
    ``std:1`` is the Fibonacci word at every length.
    """

    sturmian = True

    def __init__(self, directive: DirectiveSequence) -> None:
        if not directive.terms:
            raise DescriptorError("a standard word source needs at least one directive term")
        self.directive = directive

    @property
    def descriptor(self) -> str:
        return f"std:{self.directive}"

    def prefix(self, length: int) -> Word:
        for word in _standard_words(itertools.cycle(self.directive.terms)):
            if len(word) >= length:
                return word.factor(1, length)


class PeriodicSource(WordSource):
    def __init__(self, block: Word) -> None:
        if not len(block):
            raise DescriptorError("a periodic source needs a nonempty block")
        self.block = block

    @property
    def descriptor(self) -> str:
        return f"periodic:{self.block}"

    def prefix(self, length: int) -> Word:
        repeats = -(-length // len(self.block))
        return Word._trusted((self.block.codes * repeats)[:length])


class DoubledStandardSource(WordSource):
    def __init__(self, directive: DirectiveSequence, letters: DoublingSet) -> None:
        self.base = StandardSource(directive)
        self.letters = letters

    @property
    def descriptor(self) -> str:
        return f"double:{self.base.descriptor}/A={self.letters}"

    def prefix(self, length: int) -> Word:
        image = double(self.base.prefix(length), self.letters)
        return image.factor(1, length)


def parse_source(text: str) -> WordSource:
    """
    Parse a generator descriptor: ``tm``, ``std:1,1,1``, ``periodic:aababb``
    or ``double:std:1,1,1/A=0``.
    """
    text = text.strip()
    if text == "tm":
        return ThueMorseSource()
    kind, _, rest = text.partition(":")
    if kind == "std" and rest:
        return StandardSource(DirectiveSequence.parse(rest))
    if kind == "periodic" and rest:
        try:
            return PeriodicSource(parse_word(rest))
        except Exception as error:
            raise DescriptorError(f"bad periodic block in {text!r}: {error}")
    if kind == "double" and rest:
        base, sep, letters = rest.partition("/A=")
        base_kind, _, directive = base.partition(":")
        if not sep or base_kind != "std":
            raise DescriptorError(f"expected double:std:<d1,d2,...>/A=<letters>, got {text!r}")
        return DoubledStandardSource(
            DirectiveSequence.parse(directive), DoublingSet.parse(letters)
        )
    raise DescriptorError(f"unknown generator descriptor {text!r}")

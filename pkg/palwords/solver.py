import logging
import typing as t

from .palgen import reflection_pairs
from .schemas import GeneratorSet, MuResult
from .utils import DisjointSet
from .word import Word
from .word_core import palindromic_intervals

logger = logging.getLogger(__name__)


class MuSolver:
    """
    Exact branch-and-bound search for the least number of palindromic
    generators of a word.

    Candidates are the nontrivial palindromic intervals of the word, ordered by
    decreasing merge capacity and then by ``(i, j)``. Subsets of size
    ``k = lower, lower + 1, ...`` are enumerated in that canonical order, so the
    first generating subset found is the minimal witness reported.

    :param word: the word to solve.
    :param cap: optional upper limit on the sizes tried.
    """

    def __init__(self, word: Word, cap: t.Optional[int] = None) -> None:
        self.word = word
        self.cap = cap
        codes = word.codes
        self.n = len(codes)
        letters = sorted(set(codes))
        self.letter_count = len(letters)
        self.needed = self.n - self.letter_count

        letter_index = {code: k for k, code in enumerate(letters)}
        # position (1-based) -> index of its letter
        self.letter_of = [0] + [letter_index[code] for code in codes]
        self.letter_need = [codes.count(code) - 1 for code in letters]

        self.candidates = sorted(
            palindromic_intervals(word, include_trivial=False),
            key=lambda interval: (-interval.capacity, interval.i, interval.j),
        )
        self.pairs = [reflection_pairs(interval) for interval in self.candidates]

        self.capacity_prefix = [0]
        for interval in self.candidates:
            self.capacity_prefix.append(self.capacity_prefix[-1] + interval.capacity)

        self.letter_capacity = []
        for pairs in self.pairs:
            row = [0] * self.letter_count
            for x, _ in pairs:
                row[self.letter_of[x]] += 1
            self.letter_capacity.append(row)

        # suffix_max[idx][a]: largest per-letter capacity among candidates[idx:]
        self.suffix_max = [[0] * self.letter_count]
        for row in reversed(self.letter_capacity):
            self.suffix_max.append([max(pair) for pair in zip(row, self.suffix_max[-1])])
        self.suffix_max.reverse()

    def solve(self) -> MuResult:
        if self.needed == 0:
            return MuResult.exact(0, GeneratorSet(n=self.n))

        everything = DisjointSet(self.n)
        for pairs in self.pairs:
            everything.union_pairs(pairs)
        if everything.count != self.letter_count:
            logger.debug("%s: all palindromic intervals leave %d classes", self.word, everything.count)
            return MuResult.infinite()

        lower = self.lower_bound()
        k = lower
        while True:
            if self.cap is not None and k > self.cap:
                return MuResult.above_cap(self.cap, max(self.cap + 1, lower))
            logger.debug("%s: trying %d generators", self.word, k)
            found = self._search(k)
            if found is not None:
                witness = GeneratorSet(
                    n=self.n, intervals=[self.candidates[idx] for idx in found]
                )
                return MuResult.exact(k, witness)
            k += 1

    def lower_bound(self) -> int:
        """Least ``k`` whose best ``k`` candidates could supply every needed merge."""
        k = 0
        while self.capacity_prefix[k] < self.needed:
            k += 1
        for a, need in enumerate(self.letter_need):
            column = sorted((row[a] for row in self.letter_capacity), reverse=True)
            total, size = 0, 0
            while total < need:
                total += column[size]
                size += 1
            k = max(k, size)
        return k

    def _search(self, k: int) -> t.Optional[t.List[int]]:
        return self._extend(0, k, DisjointSet(self.n), 0, [0] * self.letter_count, [])

    def _extend(
        self,
        start: int,
        remaining: int,
        ds: DisjointSet,
        merged: int,
        by_letter: t.List[int],
        chosen: t.List[int],
    ) -> t.Optional[t.List[int]]:
        if merged == self.needed:
            return list(chosen)
        if remaining == 0:
            return None
        prefix = self.capacity_prefix
        for idx in range(start, len(self.candidates) - remaining + 1):
            if merged + prefix[idx + remaining] - prefix[idx] < self.needed:
                break
            reach = self.suffix_max[idx]
            if any(
                by_letter[a] + remaining * reach[a] < need
                for a, need in enumerate(self.letter_need)
            ):
                break
            child = ds.copy()
            child_letters = by_letter[:]
            gained = 0
            for x, y in self.pairs[idx]:
                if child.union(x, y):
                    gained += 1
                    child_letters[self.letter_of[x]] += 1
            # an interval adding no merge is never part of a minimal set
            if not gained:
                continue
            chosen.append(idx)
            found = self._extend(
                idx + 1, remaining - 1, child, merged + gained, child_letters, chosen
            )
            if found is not None:
                return found
            chosen.pop()
        return None


def mu(w: Word, cap: t.Optional[int] = None) -> MuResult:
    """
    Least number of palindromic generators of ``w``.

    :param cap: stop searching above this many generators and report
        ``above_cap`` with the proven lower bound.
    """
    return MuSolver(w, cap).solve()


def mu_value(w: Word, cap: t.Optional[int] = None) -> float:
    """Numeric view of ``mu``: the exact value, the lower bound, or infinity."""
    return mu(w, cap).rank[0]

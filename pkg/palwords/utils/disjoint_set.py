# https://en.wikipedia.org/wiki/Disjoint-set_data_structure

import collections
from typing import Iterable, List, Tuple


class DisjointSet:
    """
    Union-find over the positions ``1..n`` of a word.

    Uses path halving and union by rank. ``count`` tracks the number of
    classes so that callers can test a closure against a letter partition
    without materialising it.
    """

    __slots__ = ("parent", "rank", "count")

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.rank = [0] * (n + 1)
        self.count = n

    @property
    def n(self) -> int:
        return len(self.parent) - 1

    # find with path halving
    def find(self, e: int) -> int:
        parent = self.parent
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    # union by rank; returns whether two classes were merged
    def union(self, x: int, y: int) -> bool:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        self.count -= 1
        return True

    def union_pairs(self, pairs: Iterable[Tuple[int, int]]) -> int:
        """Merge every pair and return how many merges actually happened."""
        merged = 0
        for x, y in pairs:
            if self.union(x, y):
                merged += 1
        return merged

    def copy(self) -> "DisjointSet":
        clone = DisjointSet.__new__(DisjointSet)
        clone.parent = self.parent[:]
        clone.rank = self.rank[:]
        clone.count = self.count
        return clone

    def sets(self) -> List[List[int]]:
        """Classes as sorted lists, ordered by their least element."""
        blocks = collections.defaultdict(list)
        for e in range(1, len(self.parent)):
            blocks[self.find(e)].append(e)
        return sorted(blocks.values())

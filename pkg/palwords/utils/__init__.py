from .disjoint_set import DisjointSet
from .enumeration import all_binary_words, binary_words, prefix_chunks

__all__ = ["DisjointSet", "binary_words", "all_binary_words", "prefix_chunks"]

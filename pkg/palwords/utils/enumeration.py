from typing import Iterator

from ..word import Word


def binary_words(length: int, prefix: int = 0, prefix_len: int = 0) -> Iterator[Word]:
    """
    Yield every binary word of ``length`` whose first ``prefix_len`` letters
    spell the bits of ``prefix``, in increasing numeric order.
    """
    free = length - prefix_len
    if free < 0:
        return
    base = prefix << free
    for tail in range(1 << free):
        yield Word.from_bits(base | tail, length)


def all_binary_words(max_len: int, min_len: int = 1) -> Iterator[Word]:
    for length in range(min_len, max_len + 1):
        yield from binary_words(length)


def prefix_chunks(length: int, max_bits: int = 4):
    """Split the words of ``length`` into ``(length, prefix, prefix_len)`` work chunks."""
    bits = min(length, max_bits)
    return [(length, prefix, bits) for prefix in range(1 << bits)]

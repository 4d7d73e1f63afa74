import typing as t

from .errors import AlphabetError, ParseError, PositionRangeError

#: display alphabet; a letter's code is its index in this string
ALPHABET = "01abcdefghijklmnopqrstuvwxyz"
MAX_LETTERS = 26

_CODES = {letter: code for code, letter in enumerate(ALPHABET)}


class Interval(t.NamedTuple):
    """A candidate palindromic generator ``(i, j)``, 1-based and inclusive."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"({self.i},{self.j})"

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    @property
    def capacity(self) -> int:
        """Number of position pairs the reflection of this interval identifies."""
        return self.length // 2

    def contains(self, k: int) -> bool:
        return self.i <= k <= self.j


class Word:
    """
    Immutable finite word over the display alphabet ``0``, ``1``, ``a``-``z``.

    Letters are stored as small integer codes. Every public accessor uses
    1-based positions; the 0-based tuple is only reachable through ``codes``.

    :param codes: iterable of letter codes (indices into ``ALPHABET``).
    """

    __slots__ = ("_codes", "_hash")

    def __init__(self, codes: t.Iterable[int] = ()) -> None:
        codes = tuple(codes)
        for code in codes:
            if not 0 <= code < len(ALPHABET):
                raise AlphabetError(f"letter code {code!r} is outside the alphabet")
        if len(set(codes)) > MAX_LETTERS:
            raise AlphabetError(f"a word may use at most {MAX_LETTERS} distinct letters")
        self._codes = codes
        self._hash = None

    @classmethod
    def _trusted(cls, codes: t.Tuple[int, ...]) -> "Word":
        word = cls.__new__(cls)
        word._codes = codes
        word._hash = None
        return word

    @classmethod
    def from_bits(cls, value: int, length: int) -> "Word":
        """Binary word whose position 1 is the most significant of ``length`` bits."""
        return cls._trusted(
            tuple((value >> (length - 1 - k)) & 1 for k in range(length))
        )

    def to_bits(self) -> int:
        if not self.is_binary:
            raise AlphabetError(f"{self} is not a binary word")
        value = 0
        for code in self._codes:
            value = (value << 1) | code
        return value

    @property
    def codes(self) -> t.Tuple[int, ...]:
        return self._codes

    @property
    def alphabet(self) -> t.FrozenSet[str]:
        return frozenset(ALPHABET[code] for code in self._codes)

    @property
    def is_binary(self) -> bool:
        return all(code < 2 for code in self._codes)

    def letter(self, position: int) -> str:
        if not 1 <= position <= len(self._codes):
            raise PositionRangeError(
                f"position {position} is outside 1..{len(self._codes)}"
            )
        return ALPHABET[self._codes[position - 1]]

    def factor(self, i: int, j: int) -> "Word":
        """The factor ``w[i, j]``; ``j == i - 1`` gives the empty word."""
        if not (1 <= i and i - 1 <= j <= len(self._codes)):
            raise PositionRangeError(
                f"({i},{j}) is not a factor range of a word of length {len(self)}"
            )
        return Word._trusted(self._codes[i - 1 : j])

    def reversed(self) -> "Word":
        return Word._trusted(self._codes[::-1])

    def count(self, letter: str) -> int:
        return self._codes.count(_CODES.get(letter, -1))

    def __len__(self) -> int:
        return len(self._codes)

    def __iter__(self) -> t.Iterator[str]:
        return (ALPHABET[code] for code in self._codes)

    def __contains__(self, other: t.Union["Word", str]) -> bool:
        return str(other) in str(self)

    def __add__(self, other: t.Union["Word", str]) -> "Word":
        if isinstance(other, str):
            other = parse_word(other)
        return Word._trusted(self._codes + other._codes)

    def __radd__(self, other: str) -> "Word":
        return parse_word(other) + self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Word):
            return self._codes == other._codes
        if isinstance(other, str):
            return str(self) == other
        return NotImplemented

    def __lt__(self, other: "Word") -> bool:
        return self._codes < other._codes

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._codes)
        return self._hash

    def __str__(self) -> str:
        return "".join(ALPHABET[code] for code in self._codes)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def parse_word(text: str) -> Word:
    """
    Parse a word from its character string.

    :param text: letters from ``0``, ``1`` and ``a``-``z``; may be empty.
    :raises ParseError: naming the 1-based index of the first invalid character.
    """
    codes = []
    for index, letter in enumerate(text, start=1):
        code = _CODES.get(letter)
        if code is None:
            raise ParseError(f"invalid letter {letter!r} at index {index}", index)
        codes.append(code)
    return Word(codes)


def letter_code(letter: str) -> int:
    code = _CODES.get(letter)
    if code is None:
        raise AlphabetError(f"{letter!r} is not a letter of the alphabet")
    return code

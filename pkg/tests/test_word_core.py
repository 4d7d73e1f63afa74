import pytest

from palwords.errors import AlphabetError, ParseError, PositionRangeError, UndefinedInputError
from palwords.schemas import CentralKindEnum
from palwords.utils import all_binary_words, binary_words, prefix_chunks
from palwords.word import Interval, Word, parse_word
from palwords.word_core import (
    apply_doubling,
    border_length,
    canonical_form,
    central_decompositions,
    distinct_factors,
    fine_wilf,
    is_balanced,
    is_central,
    is_isomorphic,
    is_lyndon,
    is_palindrome,
    is_unbordered,
    least_period,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    letter_power,
    lyndon_factorization,
    occurrences,
    palindromic_intervals,
    periods,
    unbalance_witness,
)


def test_parse_word():
    word = parse_word("01ab")

    assert len(word) == 4
    assert str(word) == "01ab"
    assert word.alphabet == frozenset("01ab")
    assert not word.is_binary


def test_parse_word_reports_index():
    with pytest.raises(ParseError) as error:
        parse_word("01A")

    assert error.value.index == 3


def test_bits_round_trip_positions():
    word = Word.from_bits(0b0110, 4)

    assert word == "0110"
    assert word.to_bits() == 6
    assert Word.from_bits(1, 3) == "001"


def test_to_bits_needs_binary():
    with pytest.raises(AlphabetError):
        parse_word("ab").to_bits()


def test_factor_and_letter():
    word = parse_word("00101100")

    assert word.factor(2, 4) == "010"
    assert word.factor(3, 2) == ""
    assert word.letter(3) == "1"
    with pytest.raises(PositionRangeError):
        word.letter(9)
    with pytest.raises(PositionRangeError):
        word.factor(0, 2)


def test_word_concatenation_with_strings():
    assert "0" + parse_word("10") + "1" == "0101"
    assert "11" in parse_word("0110")


def test_palindromes():
    assert is_palindrome(parse_word("0110"))
    assert is_palindrome(parse_word(""))
    assert not is_palindrome(parse_word("0100"))


def test_palindromic_intervals():
    word = parse_word("0110")

    assert palindromic_intervals(word, include_trivial=False) == {
        Interval(2, 3),
        Interval(1, 4),
    }
    assert len(palindromic_intervals(word)) == 6


def test_border_length():
    assert border_length(parse_word("01001")) == 2
    assert border_length(parse_word("0")) == 0
    assert is_unbordered(parse_word("0011"))
    assert not is_unbordered(parse_word("010"))


def test_border_length_of_empty_word():
    with pytest.raises(UndefinedInputError):
        border_length(parse_word(""))


def test_lyndon_factorization():
    factors = lyndon_factorization(parse_word("10010"))

    assert [str(f) for f in factors] == ["1", "001", "0"]
    assert is_lyndon(parse_word("0011"))
    assert not is_lyndon(parse_word("0101"))


def test_lyndon_with_custom_order():
    assert is_lyndon(parse_word("10"), order="10")
    assert not is_lyndon(parse_word("10"))


def test_periods():
    word = parse_word("01001")

    assert periods(word) == [3, 5]
    assert least_period(word) == 3


def test_fine_wilf():
    word = parse_word("0101010")

    assert fine_wilf(word, 2, 4) is True
    assert fine_wilf(word, 2, 3) is None


def test_balance():
    assert not is_balanced(parse_word("0010011"))
    assert is_balanced(parse_word("01011"))
    with pytest.raises(AlphabetError):
        is_balanced(parse_word("abc"))


def test_unbalance_witness():
    letter, core = unbalance_witness(parse_word("0011"))

    assert letter == "0"
    assert core == ""
    assert unbalance_witness(parse_word("01011")) is None


def test_central_decompositions():
    splits = central_decompositions(parse_word("010"))

    assert [(str(u), str(v)) for u, v in splits] == [("", "0")]


def test_is_central():
    certificate = is_central(parse_word("010"))

    assert certificate.kind is CentralKindEnum.composite
    assert (certificate.p, certificate.q) == (2, 3)
    assert certificate.least_period == 2
    assert is_central(parse_word("0110")) is None


def test_letter_power_is_central():
    certificate = is_central(parse_word("000"))

    assert certificate.kind is CentralKindEnum.letter_power
    assert certificate.letter == "0"
    assert certificate.power == 3


def test_longest_palindromic_prefix_and_suffix():
    word = parse_word("00101")

    assert longest_palindromic_prefix(word) == Interval(1, 2)
    assert longest_palindromic_suffix(word) == Interval(3, 5)


def test_canonical_form():
    assert canonical_form(parse_word("ba")) == "01"
    assert canonical_form(parse_word("abca")) == "01a0"
    assert is_isomorphic(parse_word("0110"), parse_word("1001"))
    assert not is_isomorphic(parse_word("0110"), parse_word("0101"))


def test_distinct_factors_are_lexicographic():
    factors = distinct_factors(parse_word("0110"), max_len=2)

    assert [str(f) for f in factors] == ["0", "01", "1", "10", "11"]


def test_occurrences_and_doubling():
    assert occurrences(parse_word("0110"), "1") == [2, 3]
    assert apply_doubling(parse_word("01"), "0") == "001"
    assert apply_doubling(parse_word("010"), "01") == "001100"


def test_all_binary_words():
    words = list(all_binary_words(3))

    assert len(words) == 14
    assert words[0] == "0" and words[-1] == "111"
    assert len(set(words)) == 14


def _balanced_by_factor_pairs(text):
    for size in range(1, len(text) + 1):
        ones = {text[k : k + size].count("1") for k in range(len(text) - size + 1)}
        if max(ones) - min(ones) > 1:
            return False
    return True


def test_balance_agrees_with_factor_pairs():
    for w in all_binary_words(12):
        balanced = is_balanced(w)
        assert balanced == _balanced_by_factor_pairs(str(w)), w

        found = unbalance_witness(w)
        assert (found is None) == balanced, w
        if found is not None:
            _, u = found
            assert is_palindrome(u)
            assert "0" + u + "0" in w and "1" + u + "1" in w


def test_lyndon_words_are_unbordered():
    for w in all_binary_words(12):
        if is_lyndon(w):
            assert is_unbordered(w), w


def test_central_decompositions_share_periods():
    for w in all_binary_words(14):
        if not is_palindrome(w):
            continue
        splits = central_decompositions(w)
        pairs = {(len(u) + 2, len(v) + 2) for u, v in splits}
        assert len(pairs) <= 1, (w, pairs)
        certificate = is_central(w)
        if splits:
            assert (certificate.p, certificate.q) in pairs


def test_letter_power():
    assert letter_power("a", 3) == "aaa"
    assert letter_power("0", 0) == ""
    assert is_central(letter_power("1", 4)).power == 4


def test_prefix_chunks_cover_every_word():
    chunks = prefix_chunks(6)

    assert chunks[0] == (6, 0, 4) and len(chunks) == 16
    words = [w for chunk in chunks for w in binary_words(*chunk)]
    assert sorted(words) == list(all_binary_words(6, 6))
    assert prefix_chunks(2) == [(2, 0, 2), (2, 1, 2), (2, 2, 2), (2, 3, 2)]

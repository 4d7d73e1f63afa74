import pytest

from palwords.errors import (
    AlphabetError,
    DescriptorError,
    DirectiveExhaustedError,
    ResourceGuardError,
)
from palwords.schemas import DirectiveSequence, DoublingSet
from palwords.sturm import (
    DoubledStandardSource,
    PeriodicSource,
    StandardSource,
    ThueMorseSource,
    central_words,
    double,
    doubling_set,
    is_double_sturmian_factor,
    is_overlap_free,
    lean,
    parse_source,
    standard_word,
    tau_iterate,
    thue_morse_prefix,
)
from palwords.word import parse_word
from palwords.word_core import is_balanced, is_central

THUE_MORSE_16 = "0110100110010110"


def test_thue_morse_prefix():
    assert thue_morse_prefix(16) == THUE_MORSE_16
    assert thue_morse_prefix(4) == "0110"
    assert thue_morse_prefix(0) == ""


def test_tau_iterate():
    assert tau_iterate(0) == "0"
    assert tau_iterate(2) == "0110"
    assert tau_iterate(4) == THUE_MORSE_16
    assert tau_iterate(8) == thue_morse_prefix(256)


def test_tau_iterate_guard():
    with pytest.raises(ResourceGuardError):
        tau_iterate(21)


def test_standard_word():
    assert standard_word(DirectiveSequence(terms=(1, 1, 1, 1)), 8) == "01001010"
    assert standard_word(DirectiveSequence(terms=(2,)), 3) == "001"
    assert standard_word(DirectiveSequence(terms=(1,)), 2) == "01"
    assert standard_word(DirectiveSequence(), 1) == "0"


def test_standard_word_exhausted():
    with pytest.raises(DirectiveExhaustedError):
        standard_word(DirectiveSequence(terms=(1, 1)), 4)


def test_directive_sequence_literal():
    assert DirectiveSequence.parse("1, 2,3").terms == (1, 2, 3)
    with pytest.raises(DescriptorError):
        DirectiveSequence.parse("1,0")
    with pytest.raises(DescriptorError):
        DirectiveSequence.parse("1,x")


def test_double():
    assert double(parse_word("01"), DoublingSet.parse("0")) == "001"
    assert double(parse_word("010"), DoublingSet.parse("01")) == "001100"
    assert double(parse_word("0110"), DoublingSet()) == "0110"
    with pytest.raises(AlphabetError):
        double(parse_word("ab"), DoublingSet.parse("0"))


def test_doubling_set_literal():
    assert str(DoublingSet.parse("10")) == "01"
    assert "1" in DoublingSet.parse("1")
    with pytest.raises(AlphabetError):
        DoublingSet.parse("2")


@pytest.mark.parametrize(
    "text, letters",
    [("0010011", "0"), ("011001", "01"), ("0010110", "")],
)
def test_doubling_set(text, letters):
    assert str(doubling_set(parse_word(text))) == letters


@pytest.mark.parametrize(
    "text, shortest",
    [("0010011", "01011"), ("011001", "0101"), ("0010110", "0010110"), ("100", "10")],
)
def test_lean(text, shortest):
    word = parse_word(text)
    found = lean(word)

    assert found.lean == shortest
    assert word in double(found.lean, found.A)


def test_lean_serializes_plainly():
    assert lean(parse_word("0010011")).model_dump() == {"A": "0", "lean": "01011"}


def test_double_sturmian_factor():
    assert is_double_sturmian_factor(parse_word("0010011"))
    assert not is_double_sturmian_factor(parse_word("00101100"))
    assert not is_double_sturmian_factor(parse_word(THUE_MORSE_16))


def test_overlap_free():
    assert is_overlap_free(thue_morse_prefix(64))
    assert not is_overlap_free(parse_word("01010"))
    assert not is_overlap_free(parse_word("000"))
    assert is_overlap_free(parse_word("00"))


def test_central_words():
    assert [str(x) for x in central_words(3)] == ["010", "101"]
    assert [str(x) for x in central_words(6)] == ["010010", "101101"]
    assert central_words(2) == []
    for x in central_words(11):
        assert is_central(x) is not None


def test_parse_source():
    assert isinstance(parse_source("tm"), ThueMorseSource)
    assert isinstance(parse_source("std:1,1,1"), StandardSource)
    assert isinstance(parse_source("periodic:aababb"), PeriodicSource)
    assert isinstance(parse_source("double:std:1,1,1/A=0"), DoubledStandardSource)


def test_source_prefixes():
    assert parse_source("tm").prefix(4) == "0110"
    assert parse_source("std:1").prefix(8) == "01001010"
    assert parse_source("periodic:abc").prefix(7) == "abcabca"
    assert parse_source("double:std:1/A=0").prefix(6) == "001000"


def test_source_descriptors():
    for descriptor in ("tm", "std:1,2", "periodic:aababb", "double:std:1/A=01"):
        assert parse_source(descriptor).descriptor == descriptor


def test_standard_source_extends_directive():
    prefix = parse_source("std:2,1").prefix(200)

    assert len(prefix) == 200
    assert is_balanced(prefix)


@pytest.mark.parametrize(
    "descriptor",
    ["foo", "std:", "std:0", "std:a", "periodic:", "periodic:01X", "double:std:1", "double:tm/A=0"],
)
def test_bad_descriptors(descriptor):
    with pytest.raises(DescriptorError):
        parse_source(descriptor)

import pytest

from palwords.errors import ContractError, DimensionError, GeneratorSetError, PositionRangeError
from palwords.palgen import (
    closure,
    dilate,
    generates,
    has_centred_generator,
    heritage_witness,
    is_palindromically_generated,
    leaves,
    letter_power_witnesses,
    reflect,
    witness_su,
    witness_three,
)
from palwords.schemas import GeneratorSet
from palwords.word import Interval, parse_word

WITNESS_00101100 = "(1,2),(2,4),(3,5),(4,7),(7,8)"


def test_reflect():
    assert reflect((2, 4), 2) == 4
    assert reflect((2, 4), 3) == 3
    assert reflect((1, 8), 3) == 6


def test_reflect_outside_interval():
    with pytest.raises(PositionRangeError):
        reflect((2, 4), 5)


def test_generator_set_literal():
    generators = GeneratorSet.parse("(2,4), (1,2),(2,4)", 5)

    assert generators.as_pairs() == [[1, 2], [2, 4]]
    assert str(generators) == "(1,2),(2,4)"
    assert (2, 4) in generators
    assert GeneratorSet.parse("", 3).intervals == []


def test_generator_set_rejects_bad_input():
    with pytest.raises(GeneratorSetError):
        GeneratorSet.parse("(1,2),(3", 5)
    with pytest.raises(GeneratorSetError):
        GeneratorSet.parse("(1,6)", 5)
    with pytest.raises(GeneratorSetError):
        GeneratorSet.parse("(3,2)", 5)


def test_add_interval():
    generators = GeneratorSet(n=4)

    assert generators.add((2, 3)) is True
    generators.add((1, 4))
    generators.add((2, 3))

    assert generators.as_pairs() == [[1, 4], [2, 3]]
    with pytest.raises(GeneratorSetError):
        generators.add((0, 1))


def test_closure():
    assert closure(GeneratorSet.parse("(1,4)", 4)).classes == [[1, 4], [2, 3]]
    assert closure(GeneratorSet.parse(WITNESS_00101100, 8)).classes == [
        [1, 2, 4, 7, 8],
        [3, 5, 6],
    ]
    assert closure(GeneratorSet(n=3)).classes == [[1], [2], [3]]


def test_generates():
    assert generates(GeneratorSet.parse(WITNESS_00101100, 8), parse_word("00101100"))
    assert generates(GeneratorSet.parse("(1,4)", 4), parse_word("0110"))
    assert not generates(GeneratorSet.parse("(1,4)", 4), parse_word("0100"))
    assert generates(GeneratorSet(n=2), parse_word("ab"))


def test_generates_dimension_mismatch():
    with pytest.raises(DimensionError):
        generates(GeneratorSet.parse("(1,2)", 3), parse_word("00"))


def test_leaves():
    found = leaves(GeneratorSet.parse(WITNESS_00101100, 8), parse_word("00101100"))

    assert [(leaf.position, leaf.label) for leaf in found] == [
        (1, "0"),
        (3, "1"),
        (6, "1"),
        (8, "0"),
    ]
    assert len(leaves(GeneratorSet.parse("(1,4)", 4), parse_word("0110"))) == 4
    assert [leaf.label for leaf in leaves(GeneratorSet(n=2), parse_word("ab"))] == ["a", "b"]


def test_leaves_needs_generating_set():
    with pytest.raises(ContractError):
        leaves(GeneratorSet(n=3), parse_word("001"))


def test_witness_su():
    assert str(witness_su(parse_word("010"))) == "(1,3)"
    assert str(witness_su(parse_word("0110"))) == "(1,4),(2,3)"
    assert str(witness_su(parse_word("00"))) == "(1,2)"


def test_witness_three():
    generators = witness_three(parse_word("00101"))

    assert str(generators) == "(1,2),(2,4),(3,5)"
    assert witness_three(parse_word("01")) is None
    assert witness_three(parse_word("0110")) is None


@pytest.mark.parametrize("text", ["00100101", "10100100", "0001001001"])
def test_witness_three_generates(text):
    word = parse_word(text)
    generators = witness_three(word)

    assert len(generators) == 3
    assert generates(generators, word)


def test_dilate_centred_letter():
    generators, image = dilate(GeneratorSet.parse("(1,3)", 3), parse_word("aba"), "b")

    assert image == "abba"
    assert str(generators) == "(1,4)"


def test_dilate_appends_trivial_generator():
    word = parse_word("aba")
    base = GeneratorSet.parse("(1,3)", 3)

    assert not has_centred_generator(base, word, "a")
    generators, image = dilate(base, word, "a")

    assert image == "aabaa"
    assert str(generators) == "(1,2),(1,5)"
    assert generates(generators, image)


def test_dilate_absent_letter_is_identity():
    generators, image = dilate(GeneratorSet.parse("(1,2)", 2), parse_word("aa"), "b")

    assert image == "aa"
    assert str(generators) == "(1,2)"


def test_dilate_needs_generating_set():
    with pytest.raises(ContractError):
        dilate(GeneratorSet(n=2), parse_word("00"), "0")


@pytest.mark.parametrize("side, rest", [("left", "0101100"), ("right", "0010110")])
def test_heritage_witness(side, rest):
    generators = heritage_witness(
        GeneratorSet.parse(WITNESS_00101100, 8), parse_word("00101100"), side
    )

    assert len(generators) <= 5
    assert generates(generators, parse_word(rest))


def test_heritage_witness_reflects_through_longest_prefix():
    word = parse_word("aaaa")
    first, second = letter_power_witnesses(4)

    for generators in (first, second):
        inherited = heritage_witness(generators, word)
        assert len(inherited) <= 2
        assert generates(inherited, parse_word("aaa"))


def test_letter_power_witnesses():
    for n in range(3, 9):
        word = parse_word("a" * n)
        for generators in letter_power_witnesses(n):
            assert generates(generators, word)

    with pytest.raises(ValueError):
        letter_power_witnesses(2)


def test_is_palindromically_generated():
    assert is_palindromically_generated(parse_word("0110"))
    assert is_palindromically_generated(parse_word("ab"))
    assert not is_palindromically_generated(parse_word("abca"))
    assert Interval(1, 4).capacity == 2

import itertools
import math

import pytest

from palwords.palgen import generates
from palwords.schemas import GeneratorSet, MuOutcomeEnum
from palwords.solver import MuSolver, mu, mu_value
from palwords.utils import all_binary_words
from palwords.word import parse_word
from palwords.word_core import palindromic_intervals


def test_distinct_letters_need_nothing():
    result = mu(parse_word("ab"))

    assert result.outcome is MuOutcomeEnum.exact
    assert result.mu == 0
    assert len(result.witness) == 0


def test_empty_word():
    assert mu(parse_word("")).mu == 0


def test_square_of_a_letter():
    result = mu(parse_word("aa"))

    assert result.mu == 1
    assert str(result.witness) == "(1,2)"


@pytest.mark.parametrize("n", [3, 4, 7, 12, 30])
def test_letter_powers(n):
    assert mu(parse_word("a" * n)).mu == 2


def test_worked_example():
    word = parse_word("00101100")
    result = mu(word)

    assert result.mu == 5
    assert str(result.witness) == "(1,2),(2,4),(3,5),(4,7),(7,8)"
    assert generates(result.witness, word)


def test_three_generators():
    result = mu(parse_word("00101"))

    assert result.mu == 3
    assert str(result.witness) == "(1,2),(2,4),(3,5)"


def test_infinite():
    result = mu(parse_word("abca"))

    assert result.is_infinite
    assert result.as_json_dict() == {"outcome": "infinite"}
    assert str(result) == "inf"
    assert mu_value(parse_word("abca")) == math.inf


def test_cap_reports_lower_bound():
    result = mu(parse_word("00101100"), cap=3)

    assert result.outcome is MuOutcomeEnum.above_cap
    assert result.cap == 3
    assert result.lower_bound >= 4
    assert str(result) == ">3"
    assert not result.at_most(3)


def test_cap_not_reached():
    result = mu(parse_word("0110"), cap=3)

    assert result.is_exact
    assert result.mu == 1
    assert result.at_most(3)


def test_lower_bound_counts_capacity():
    solver = MuSolver(parse_word("00101100"))

    assert solver.needed == 6
    assert solver.lower_bound() == 5


def test_json_shape():
    assert mu(parse_word("0110")).as_json_dict() == {
        "outcome": "exact",
        "mu": 1,
        "witness": [[1, 4]],
    }


def test_rank_orders_outcomes():
    exact = mu(parse_word("00101100"))
    capped = mu(parse_word("00101100"), cap=2)
    infinite = mu(parse_word("abca"))

    assert exact.rank < infinite.rank
    assert capped.rank < infinite.rank


def _least_generating_size(w):
    candidates = sorted(palindromic_intervals(w, include_trivial=True))
    for size in range(len(candidates) + 1):
        for chosen in itertools.combinations(candidates, size):
            if generates(GeneratorSet(n=len(w), intervals=list(chosen)), w):
                return size
    return None


def test_trivial_generators_never_lower_mu():
    for w in all_binary_words(7):
        result = mu(w)

        assert result.mu == _least_generating_size(w), w
        assert not any(i == j for i, j in result.witness.intervals)

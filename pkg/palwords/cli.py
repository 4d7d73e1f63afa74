"""Command-line front end: one JSON document (or JSON lines) on standard output."""

import json
import logging
import sys
import typing as t
from contextlib import contextmanager

import click
from asgiref.sync import async_to_sync

from .errors import PalWordsError, ResourceGuardError
from .palgen import dilate, generates, witness_su, witness_three
from .report import ReportStream
from .schemas import DoublingSet, GeneratorSet, VerificationReport
from .solver import mu
from .sturm import (
    double,
    is_double_sturmian_factor,
    is_overlap_free,
    lean,
    parse_source,
)
from .verify import Verifier, length_checked
from .word import Word, parse_word
from .word_core import (
    is_balanced,
    is_central,
    is_palindrome,
    is_unbordered,
    least_period,
)

logger = logging.getLogger(__name__)


class WordParam(click.ParamType):
    name = "word"

    def convert(self, value, param, ctx) -> Word:
        if isinstance(value, Word):
            return value
        try:
            return parse_word(value)
        except PalWordsError as error:
            self.fail(error.expression, param, ctx)


WORD = WordParam()


def _configure_logging(ctx, param, quiet: bool) -> bool:
    logging.basicConfig(
        level=logging.WARNING if quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    return quiet


def quiet_option(fn):
    return click.option(
        "--quiet",
        is_flag=True,
        default=False,
        expose_value=False,
        is_eager=True,
        callback=_configure_logging,
        help="Only warnings on standard error.",
    )(fn)


def _emit(data: t.Any) -> None:
    click.echo(json.dumps(data, separators=(",", ":")))


@contextmanager
def _domain_errors():
    """Map library errors to exit codes: guards 2, domain and value errors 1."""
    try:
        yield
    except ResourceGuardError as error:
        ReportStream().write_error(error)
        click.get_current_context().exit(2)
    except (PalWordsError, ValueError) as error:
        ReportStream().write_error(error)
        click.get_current_context().exit(1)


def _verifier(threads: int = 1, override_guards: bool = False) -> Verifier:
    verifier = Verifier()
    verifier.init_config({"THREADS": threads, "OVERRIDE_GUARDS": override_guards})
    return verifier


def _stream_report(run: t.Callable[[], t.Awaitable[VerificationReport]]) -> VerificationReport:
    stream = ReportStream()
    length_checked.connect(stream.write_summary, weak=False)
    try:
        report = async_to_sync(run)()
    finally:
        length_checked.disconnect(stream.write_summary)
    stream.write_verdict(report)
    return report


@click.group()
def main():
    """Exact palindromic generation of words: solver and verification campaigns."""


@main.command("mu")
@click.argument("word", type=WORD)
@click.option("--cap", type=click.IntRange(min=0), default=None, help="Largest set size tried.")
@quiet_option
def mu_command(word: Word, cap: t.Optional[int]):
    """Least number of palindromic generators of WORD."""
    with _domain_errors():
        result = mu(word, cap)
        logger.info("mu(%s) = %s", word, result)
        _emit(result.as_json_dict())


@main.command("generates")
@click.argument("word", type=WORD)
@click.option("--set", "literal", required=True, help='Generator set such as "(1,2),(2,4)".')
@quiet_option
def generates_command(word: Word, literal: str):
    """Whether the given intervals palindromically generate WORD."""
    with _domain_errors():
        generators = GeneratorSet.parse(literal, len(word))
        _emit({"generates": generates(generators, word)})


@main.command("witness")
@click.argument("word", type=WORD)
@click.option(
    "--construction",
    type=click.Choice(["su", "three", "dilate"]),
    required=True,
    help="Which explicit generating set to build.",
)
@click.option("--set", "literal", default=None, help="Generating set to dilate.")
@click.option("--letter", default=None, help="Letter doubled by the dilation.")
@quiet_option
def witness_command(word: Word, construction: str, literal: t.Optional[str], letter: t.Optional[str]):
    """Build a generating set of WORD by an explicit construction."""
    with _domain_errors():
        if construction == "su":
            generators = witness_su(word)
            _emit({"construction": "su", "witness": generators.as_pairs()})
        elif construction == "three":
            generators = witness_three(word)
            _emit(
                {
                    "construction": "three",
                    "witness": None if generators is None else generators.as_pairs(),
                }
            )
        else:
            if literal is None or letter is None:
                raise click.UsageError("--construction dilate needs --set and --letter")
            generators, image = dilate(GeneratorSet.parse(literal, len(word)), word, letter)
            _emit(
                {
                    "construction": "dilate",
                    "word": str(image),
                    "witness": generators.as_pairs(),
                }
            )


@main.command("classify")
@click.argument("word", type=WORD)
@quiet_option
def classify_command(word: Word):
    """Balance, A(w), lean word and centrality of a binary WORD."""
    with _domain_errors():
        found = lean(word)
        certificate = is_central(word)
        _emit(
            {
                "balanced": is_balanced(word),
                "A": str(found.A),
                "lean": str(found.lean),
                "double_sturmian_factor": is_double_sturmian_factor(word),
                "central": certificate is not None,
                "palindrome": is_palindrome(word),
                "unbordered": is_unbordered(word),
                "overlap_free": is_overlap_free(word),
                "least_period": least_period(word),
            }
        )


@main.command("lean")
@click.argument("word", type=WORD)
@quiet_option
def lean_command(word: Word):
    """The lean word of WORD and its doubling set."""
    with _domain_errors():
        _emit(lean(word).model_dump(mode="json"))


@main.command("double")
@click.argument("word", type=WORD)
@click.option("--letters", default="", help="Letters to square, e.g. 0, 1 or 01.")
@quiet_option
def double_command(word: Word, letters: str):
    """Image of WORD under a doubling morphism."""
    with _domain_errors():
        _emit({"word": str(double(word, DoublingSet.parse(letters)))})


@main.command("gen")
@click.argument("source")
@click.option("--len", "length", type=click.IntRange(min=0), required=True)
@quiet_option
def gen_command(source: str, length: int):
    """Prefix of an infinite word given by its descriptor."""
    with _domain_errors():
        _emit(str(parse_source(source).prefix(length)))


@main.command("psi")
@click.option("--source", required=True, help="Descriptor: tm, std:1,1, periodic:abc, double:std:1/A=0.")
@click.option("--len", "length", type=click.IntRange(min=1), required=True)
@click.option("--factor-cap", type=click.IntRange(min=1), required=True)
@click.option("--cap", type=click.IntRange(min=0), default=None)
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--override-guards", is_flag=True, default=False)
@quiet_option
def psi_command(source: str, length: int, factor_cap: int, cap: t.Optional[int], threads: int, override_guards: bool):
    """Largest mu over the factors of a prefix."""
    with _domain_errors():
        verifier = _verifier(threads, override_guards)
        result = async_to_sync(verifier.psi_scan)(source, length, factor_cap, cap)
        _emit(result.as_json_dict())


@main.command("verify")
@click.argument("campaign", type=click.Choice(sorted(Verifier.CAMPAIGNS)))
@click.option("--max-len", type=click.IntRange(min=1), default=None)
@click.option("--source", default="std:1", show_default=True, help="Source for the unbordered campaign.")
@click.option("--len", "length", type=click.IntRange(min=1), default=None, help="Prefix length for the unbordered campaign.")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--override-guards", is_flag=True, default=False)
@quiet_option
def verify_command(campaign: str, max_len: t.Optional[int], source: str, length: t.Optional[int], threads: int, override_guards: bool):
    """Run a verification campaign and stream its report as JSON lines."""
    with _domain_errors():
        verifier = _verifier(threads, override_guards)
        method = getattr(verifier, Verifier.CAMPAIGNS[campaign])

        async def run():
            if campaign == "paper":
                return await method()
            if campaign == "unbordered":
                return await method(source, length if length is not None else max_len)
            return await method(max_len)

        report = _stream_report(run)
        click.get_current_context().exit(0 if report.passed else 1)


@main.command("tm-growth")
@click.option("--max-k", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--cap", type=click.IntRange(min=0), default=None)
@click.option("--override-guards", is_flag=True, default=False)
@quiet_option
def tm_growth_command(max_k: int, cap: t.Optional[int], override_guards: bool):
    """mu along the Thue-Morse prefixes of length 4, 16, 64, ..."""
    with _domain_errors():
        verifier = _verifier(override_guards=override_guards)
        async def run():
            return await verifier.tm_growth(max_k, cap)

        report = _stream_report(run)
        click.get_current_context().exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()

"""
Verification campaigns.

Exhaustive campaigns walk every binary word up to a length bound, split into
``(length, numeric prefix)`` chunks that a ``WorkerPool`` evaluates inline or
across processes. Every finished length is announced on the
``length-checked`` signal and every finished campaign on
``campaign-finished``.
"""

import collections
import logging
import math
import time
import typing as t
from contextlib import contextmanager

import blinker

from .config import HarnessConfig
from .errors import ResourceGuardError, UndefinedInputError
from .palgen import (
    dilate,
    generates,
    has_centred_generator,
    heritage_witness,
    leaves,
    witness_su,
    witness_three,
)
from .schemas import (
    CentralKindEnum,
    DirectiveSequence,
    FailureRecord,
    GeneratorSet,
    LengthSummary,
    MuResult,
    PsiScanResult,
    VerificationReport,
)
from .solver import mu
from .sturm import (
    StandardSource,
    WordSource,
    central_words,
    doubling_set,
    is_double_sturmian_factor,
    lean,
    parse_source,
    standard_word,
    tau_iterate,
    thue_morse_prefix,
)
from .utils import binary_words, prefix_chunks
from .word import Interval, Word, parse_word
from .word_core import (
    apply_doubling,
    canonical_form,
    distinct_factors,
    is_balanced,
    is_central,
    is_lyndon,
    is_palindrome,
    is_unbordered,
    least_period,
    letter_power,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    palindromic_intervals,
    periods,
)
from .workers import WorkerPool

logger = logging.getLogger(__name__)

version_info = (0, 1, 0)

signals = blinker.Namespace()

length_checked = signals.signal(
    "length-checked", doc="Sent with a LengthSummary when a length class is done."
)
campaign_finished = signals.signal(
    "campaign-finished", doc="Sent with the VerificationReport of a finished campaign."
)

ChunkResult = t.Tuple[int, t.List[FailureRecord], t.Dict[str, t.Any]]

_MU_MEMO: t.Dict[t.Tuple[t.Tuple[int, ...], t.Optional[int]], MuResult] = {}


def cached_mu(w: Word, cap: t.Optional[int] = None) -> MuResult:
    """``mu`` memoized per process on the letter-renaming class of ``w``."""
    key = (canonical_form(w).codes, cap)
    result = _MU_MEMO.get(key)
    if result is None:
        result = _MU_MEMO[key] = mu(w, cap)
    return result


def clear_memo() -> None:
    _MU_MEMO.clear()


def _failure(word: t.Any, expected: t.Any, actual: t.Any) -> FailureRecord:
    return FailureRecord(word=str(word), expected=str(expected), actual=str(actual))


def pattern_violations(w: Word) -> t.List[str]:
    """
    Factor patterns that a binary word with ``mu(w) <= 3`` cannot contain.

    Covers ``000`` together with ``111``; ``b a^k b`` with ``a^(k+2)`` for odd
    ``k``; ``b a^k b`` with ``a^(k+3)``; the triple ``a^(k+2)``,
    ``b a^(k+1) b``, ``b a^k b``; and any palindrome ``u`` other than an even
    letter power with both ``0u0`` and ``1u1`` occurring.
    """
    text = str(w)
    n = len(text)
    found = []
    if "000" in text and "111" in text:
        found.append("000 and 111")
    for a, b in (("0", "1"), ("1", "0")):
        for k in range(1, n - 1):
            block = b + a * k + b
            if block not in text:
                continue
            if k % 2 and a * (k + 2) in text:
                found.append(f"{block} and {a * (k + 2)}")
            if a * (k + 3) in text:
                found.append(f"{block} and {a * (k + 3)}")
            wider = b + a * (k + 1) + b
            if a * (k + 2) in text and wider in text:
                found.append(f"{block}, {wider} and {a * (k + 2)}")
    cores: t.Dict[int, t.Set[Word]] = {0: set(), 1: set()}
    for interval in palindromic_intervals(w, include_trivial=False):
        cores[w.codes[interval.i - 1]].add(w.factor(interval.i + 1, interval.j - 1))
    for u in sorted(cores[0] & cores[1]):
        if len(u) % 2 or len(set(u.codes)) > 1:
            found.append(f"0{u}0 and 1{u}1")
    return found


def _theorem_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    failures = []
    counts = {"checked": 0, "mu_at_most_3": 0, "double_sturmian": 0}
    for w in binary_words(length, prefix, bits):
        counts["checked"] += 1
        result = cached_mu(w, 3)
        small = result.at_most(3)
        factor = is_double_sturmian_factor(w)
        counts["mu_at_most_3"] += small
        counts["double_sturmian"] += factor
        if small != factor:
            failures.append(
                _failure(w, f"mu<=3 is {str(factor).lower()}", f"mu={result}")
            )
    return counts.pop("checked"), failures, counts


def _heritage_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    for w in binary_words(length, prefix, bits):
        whole = cached_mu(w)
        for v in distinct_factors(w, max_len=length - 1):
            checked += 1
            part = cached_mu(v)
            if part.rank > whole.rank:
                failures.append(_failure(w, f"mu({v})<={whole}", f"mu({v})={part}"))
        if not whole.is_exact:
            continue
        for side, rest in (("left", w.factor(2, length)), ("right", w.factor(1, length - 1))):
            checked += 1
            inherited = heritage_witness(whole.witness, w, side)
            if len(inherited) > whole.mu or not generates(inherited, rest):
                failures.append(
                    _failure(
                        w,
                        f"{side} witness of size<={whole.mu} generating {rest}",
                        f"{{{inherited}}}",
                    )
                )
    return checked, failures, {}


def _doubling_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    counts = {"centred": 0, "appended": 0}
    for w in binary_words(length, prefix, bits):
        base = cached_mu(w)
        for letter in "01":
            checked += 1
            doubled = apply_doubling(w, letter)
            image = cached_mu(doubled)
            if image.rank[0] > base.mu + 1:
                failures.append(
                    _failure(w, f"mu({doubled})<={base.mu + 1}", f"mu({doubled})={image}")
                )
            if letter not in w:
                continue
            centred = has_centred_generator(base.witness, w, letter)
            counts["centred" if centred else "appended"] += 1
            dilated, word = dilate(base.witness, w, letter)
            allowed = len(base.witness) + (0 if centred else 1)
            if word != doubled or len(dilated) > allowed or not generates(dilated, word):
                failures.append(
                    _failure(
                        w,
                        f"dilation by {letter} of size<={allowed} generating {doubled}",
                        f"{{{dilated}}} for {word}",
                    )
                )
    return checked, failures, counts


def _pattern_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    counts = {"mu_at_most_3": 0}
    for w in binary_words(length, prefix, bits):
        checked += 1
        if not cached_mu(w, 3).at_most(3):
            continue
        counts["mu_at_most_3"] += 1
        for violation in pattern_violations(w):
            failures.append(_failure(w, "no forbidden pattern", violation))
    return checked, failures, counts


def _su_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    for w in binary_words(length, prefix, bits):
        checked += 1
        generators = witness_su(w)
        if not generates(generators, w):
            failures.append(_failure(w, "S_u generates", f"{{{generators}}}"))
    return checked, failures, {}


def _leaves_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    for w in binary_words(length, prefix, bits):
        if w.count("0") < 2 or w.count("1") < 2 or not is_unbordered(w):
            continue
        result = cached_mu(w, 3)
        if not result.at_most(3):
            continue
        checked += 1
        labels = collections.Counter(leaf.label for leaf in leaves(result.witness, w))
        if max(labels.values(), default=0) > 2:
            failures.append(
                _failure(w, "at most 2 leaves per label", dict(sorted(labels.items())))
            )
    return checked, failures, {}


def _has_coprime_periods(x: Word) -> bool:
    found = periods(x)
    return any(
        math.gcd(p, q) == 1 and p + q - 2 == len(x)
        for p in found
        for q in found
        if p < q
    )


def _centre(w: Word, interval: Interval) -> t.Optional[str]:
    if not interval.length % 2:
        return None
    return w.letter((interval.i + interval.j) // 2)


def _central_chunk(length: int, prefix: int, bits: int) -> ChunkResult:
    checked, failures = 0, []
    counts = {"central": 0, "composite": 0}
    for x in binary_words(length, prefix, bits):
        checked += 1
        by_definition = is_palindrome(x) and is_balanced(x + "0") and is_balanced(x + "1")
        by_periods = len(set(x.codes)) <= 1 or _has_coprime_periods(x)
        certificate = is_central(x)
        if by_definition != by_periods or by_definition != (certificate is not None):
            failures.append(
                _failure(
                    x,
                    f"central={str(by_definition).lower()}",
                    f"periods={str(by_periods).lower()} certificate={certificate is not None}",
                )
            )
            continue
        if certificate is None:
            continue
        counts["central"] += 1
        if certificate.kind is not CentralKindEnum.composite:
            continue
        counts["composite"] += 1
        if least_period(x) != certificate.least_period:
            failures.append(
                _failure(x, f"least period {certificate.least_period}", least_period(x))
            )
        w = "0" + x + "1"
        n = len(w)
        prefix_pal = Interval(1, certificate.p)
        suffix_pal = Interval(n - certificate.q + 1, n)
        if longest_palindromic_prefix(w) != prefix_pal or longest_palindromic_suffix(w) != suffix_pal:
            failures.append(
                _failure(
                    w,
                    f"longest palindromic prefix {prefix_pal} and suffix {suffix_pal}",
                    f"{longest_palindromic_prefix(w)} and {longest_palindromic_suffix(w)}",
                )
            )
        centres = [
            letter
            for letter in (
                _centre(w, Interval(2, n - 1)),
                _centre(w, prefix_pal),
                _centre(w, suffix_pal),
            )
            if letter is not None
        ]
        if len(centres) != 2 or centres[0] == centres[1]:
            failures.append(
                _failure(w, "two odd palindromes with distinct centres", centres)
            )
    return checked, failures, counts


def _three_chunk(length: int, cross_check_len: int) -> ChunkResult:
    checked, failures = 0, []
    counts = {"central": 0}
    for x in central_words(length):
        counts["central"] += 1
        for a, b in (("0", "1"), ("1", "0")):
            checked += 1
            w = a + x + b
            generators = witness_three(w)
            if generators is None or len(generators) != 3 or not generates(generators, w):
                failures.append(_failure(w, "three generators", f"{{{generators}}}"))
                continue
            ends = (longest_palindromic_prefix(w), longest_palindromic_suffix(w))
            if any(interval not in generators for interval in ends):
                failures.append(
                    _failure(w, f"contains {ends[0]} and {ends[1]}", f"{{{generators}}}")
                )
            if length <= cross_check_len:
                result = cached_mu(w, 3)
                if not result.at_most(3):
                    failures.append(_failure(w, "mu<=3", f"mu={result}"))
    return checked, failures, counts


def _unbordered_chunk(descriptor: str, length: int) -> ChunkResult:
    source = parse_source(descriptor)
    prefix = source.prefix(length)
    codes = prefix.codes
    checked, failures = 0, []
    unbordered = 0
    lyndon_lengths = set()
    for size in range(1, len(codes) + 1):
        blocks = sorted({codes[k : k + size] for k in range(len(codes) - size + 1)})
        for block in blocks:
            v = Word._trusted(block)
            if not is_unbordered(v):
                continue
            unbordered += 1
            if is_lyndon(v):
                lyndon_lengths.add(size)
            if size < 2 or not source.sturmian:
                continue
            checked += 1
            if block[0] == block[-1] or is_central(v.factor(2, size - 1)) is None:
                failures.append(_failure(v, "a x b with x central", "not of that shape"))
    if len(lyndon_lengths) < 3:
        failures.append(
            _failure(prefix, "Lyndon factors of at least 3 lengths", sorted(lyndon_lengths))
        )
    checked += 1
    witness = None
    for v in distinct_factors(prefix):
        if not cached_mu(v, 2).at_most(2):
            witness = v
            break
    checked += 1
    if witness is None:
        failures.append(_failure(prefix, "a factor with mu>=3", "none"))
    details = {
        "unbordered": unbordered,
        "lyndon_lengths": sorted(lyndon_lengths),
        "mu_at_least_3": None if witness is None else str(witness),
    }
    return checked, failures, details


def _mu_chunk(words: t.List[Word], cap: t.Optional[int]) -> t.List[MuResult]:
    return [cached_mu(w, cap) for w in words]


def _split(items: t.List[t.Any], parts: int) -> t.List[t.List[t.Any]]:
    parts = max(1, min(parts, len(items)))
    return [items[k::parts] for k in range(parts)]


def _merge_details(results: t.Sequence[ChunkResult]) -> t.Dict[str, t.Any]:
    merged: t.Dict[str, t.Any] = {}
    for _, _, details in results:
        for key, value in details.items():
            if isinstance(value, int) and not isinstance(value, bool):
                merged[key] = merged.get(key, 0) + value
            else:
                merged.setdefault(key, value)
    return merged


class _VerifierMixin:
    name = "Pal-Words"
    version = ".".join([str(v) for v in version_info])

    @contextmanager
    def record_reports(self):
        """Records every per-length summary. Use in unit tests for example::
            with verifier.record_reports() as outbox:
                await verifier.verify_su(4)
                assert len(outbox) == 4
                assert outbox[0].length == 1
        """

        outbox = []

        def _record(summary):
            outbox.append(summary)

        length_checked.connect(_record)

        try:
            yield outbox
        finally:
            length_checked.disconnect(_record)


class Verifier(_VerifierMixin):
    """
    Runs the verification campaigns under a ``HarnessConfig``.

    :param config: Optional param, the settings; defaults are used when omitted.
    """

    CAMPAIGNS = {
        "theorem": "verify_theorem_main",
        "heritage": "verify_heritage",
        "doubling": "verify_doubling",
        "patterns": "verify_pattern_lemmas",
        "unbordered": "verify_unbordered_structure",
        "paper": "verify_paper_values",
        "su": "verify_su",
        "three": "verify_three_construction",
        "leaves": "verify_leaves",
        "central": "verify_central_words",
    }

    def __init__(self, config: t.Optional[HarnessConfig] = None) -> None:
        self.config = config if config is not None else self.init_config({})

    def init_config(self, options: t.Mapping[str, t.Any]) -> HarnessConfig:
        self.config = HarnessConfig(
            THEOREM_MAX_LEN=options.get("THEOREM_MAX_LEN", 12),
            HERITAGE_MAX_LEN=options.get("HERITAGE_MAX_LEN", 8),
            DOUBLING_MAX_LEN=options.get("DOUBLING_MAX_LEN", 8),
            PATTERN_MAX_LEN=options.get("PATTERN_MAX_LEN", 10),
            SU_MAX_LEN=options.get("SU_MAX_LEN", 16),
            LEAVES_MAX_LEN=options.get("LEAVES_MAX_LEN", 14),
            CENTRAL_MAX_LEN=options.get("CENTRAL_MAX_LEN", 14),
            THREE_MAX_LEN=options.get("THREE_MAX_LEN", 30),
            THREE_CROSS_CHECK_LEN=options.get("THREE_CROSS_CHECK_LEN", 12),
            UNBORDERED_MAX_LEN=options.get("UNBORDERED_MAX_LEN", 300),
            PSI_MAX_PREFIX=options.get("PSI_MAX_PREFIX", 512),
            PSI_MAX_FACTOR=options.get("PSI_MAX_FACTOR", 24),
            TM_EXACT_MAX_K=options.get("TM_EXACT_MAX_K", 3),
            TM_MAX_K=options.get("TM_MAX_K", 10),
            THREADS=options.get("THREADS", 1),
            OVERRIDE_GUARDS=options.get("OVERRIDE_GUARDS", False),
        )
        return self.config

    def _bound(self, guard: str, value: t.Optional[int]) -> int:
        value = getattr(self.config, guard) if value is None else value
        if value < 0:
            raise ValueError(f"{guard} must not be negative, got {value}")
        return self.config.check_guard(guard, value)

    def _add_length(
        self, report: VerificationReport, length: int, results: t.Sequence[ChunkResult]
    ) -> None:
        failures = sorted(
            (failure for _, found, _ in results for failure in found),
            key=lambda f: (len(f.word), f.word, f.expected, f.actual),
        )
        summary = LengthSummary(
            campaign=report.campaign,
            length=length,
            checked=sum(checked for checked, _, _ in results),
            failures=failures,
        )
        details = _merge_details(results)
        if details:
            report.details.setdefault("per_length", {})[length] = details
        report.cases_checked += summary.checked
        report.failures.extend(failures)
        report.per_length.append(summary)
        logger.info(
            "%s: length %d, %d checked, %d failures",
            report.campaign,
            length,
            summary.checked,
            len(failures),
        )
        for failure in failures:
            logger.warning(
                "%s: %s expected %s, got %s",
                report.campaign,
                failure.word,
                failure.expected,
                failure.actual,
            )
        length_checked.send(summary)

    def _finish(self, report: VerificationReport, started: float) -> VerificationReport:
        report.elapsed_ms = (time.perf_counter() - started) * 1000
        clear_memo()
        logger.info(
            "%s: %s after %d cases in %.0f ms",
            report.campaign,
            report.verdict,
            report.cases_checked,
            report.elapsed_ms,
        )
        campaign_finished.send(report)
        return report

    async def _run_words(
        self,
        campaign: str,
        max_len: int,
        chunk_fn: t.Callable[..., ChunkResult],
        min_len: int = 1,
    ) -> VerificationReport:
        started = time.perf_counter()
        report = VerificationReport(campaign=campaign, parameters={"max_len": max_len})
        async with WorkerPool(self.config) as pool:
            for length in range(min_len, max_len + 1):
                results = await pool.map(chunk_fn, prefix_chunks(length))
                self._add_length(report, length, results)
        return self._finish(report, started)

    async def verify_theorem_main(self, max_len: t.Optional[int] = None) -> VerificationReport:
        """``mu(w) <= 3`` exactly when ``w`` is a double Sturmian factor, for binary ``w``."""
        max_len = self._bound("THEOREM_MAX_LEN", max_len)
        return await self._run_words("theorem", max_len, _theorem_chunk)

    async def verify_heritage(self, max_len: t.Optional[int] = None) -> VerificationReport:
        """No factor needs more generators than the word containing it."""
        max_len = self._bound("HERITAGE_MAX_LEN", max_len)
        return await self._run_words("heritage", max_len, _heritage_chunk)

    async def verify_doubling(self, max_len: t.Optional[int] = None) -> VerificationReport:
        """Doubling a letter costs at most one generator, and dilation builds the set."""
        max_len = self._bound("DOUBLING_MAX_LEN", max_len)
        return await self._run_words("doubling", max_len, _doubling_chunk)

    async def verify_pattern_lemmas(self, max_len: t.Optional[int] = None) -> VerificationReport:
        max_len = self._bound("PATTERN_MAX_LEN", max_len)
        return await self._run_words("patterns", max_len, _pattern_chunk)

    async def verify_su(self, max_len: t.Optional[int] = None) -> VerificationReport:
        max_len = self._bound("SU_MAX_LEN", max_len)
        return await self._run_words("su", max_len, _su_chunk)

    async def verify_leaves(self, max_len: t.Optional[int] = None) -> VerificationReport:
        """Unbordered words generated by three intervals have at most two leaves per label."""
        max_len = self._bound("LEAVES_MAX_LEN", max_len)
        return await self._run_words("leaves", max_len, _leaves_chunk)

    async def verify_central_words(self, max_len: t.Optional[int] = None) -> VerificationReport:
        """
        Centrality by definition, by coprime periods and by certificate agree;
        a central ``x`` frames ``0x1`` with its longest palindromic prefix and
        suffix.
        """
        max_len = self._bound("CENTRAL_MAX_LEN", max_len)
        return await self._run_words("central", max_len, _central_chunk)

    async def verify_three_construction(
        self, max_len: t.Optional[int] = None, cross_check_len: t.Optional[int] = None
    ) -> VerificationReport:
        max_len = self._bound("THREE_MAX_LEN", max_len)
        if cross_check_len is None:
            cross_check_len = self.config.THREE_CROSS_CHECK_LEN
        started = time.perf_counter()
        report = VerificationReport(
            campaign="three",
            parameters={"max_len": max_len, "cross_check_len": cross_check_len},
        )
        async with WorkerPool(self.config) as pool:
            results = await pool.map(
                _three_chunk, [(length, cross_check_len) for length in range(1, max_len + 1)]
            )
        for length, result in enumerate(results, start=1):
            self._add_length(report, length + 2, [result])
        return self._finish(report, started)

    async def verify_unbordered_structure(
        self,
        source: t.Union[str, DirectiveSequence, WordSource] = "std:1",
        length: t.Optional[int] = None,
    ) -> VerificationReport:
        """
        Scan a prefix: unbordered factors of a Sturmian prefix are ``a x b``
        with ``x`` central, Lyndon factors come in several lengths and some
        factor needs at least three generators.
        """
        length = self._bound("UNBORDERED_MAX_LEN", length)
        if isinstance(source, DirectiveSequence):
            source = StandardSource(source)
        elif isinstance(source, str):
            source = parse_source(source)
        started = time.perf_counter()
        report = VerificationReport(
            campaign="unbordered",
            parameters={"source": source.descriptor, "len": length},
        )
        async with WorkerPool(self.config) as pool:
            results = await pool.map(_unbordered_chunk, [(source.descriptor, length)])
        self._add_length(report, length, results)
        report.details.update(results[0][2])
        return self._finish(report, started)

    async def verify_paper_values(self) -> VerificationReport:
        """Regression values for small words with known answers."""
        started = time.perf_counter()
        report = VerificationReport(campaign="paper")
        checks: t.List[t.Tuple[str, str, str]] = []

        def expect(word, expected, actual):
            checks.append((str(word), str(expected), str(actual)))

        expect("aa", "1", mu(parse_word("aa")))
        expect("ab", "0", mu(parse_word("ab")))
        expect("abca", "inf", mu(parse_word("abca")))
        for n in range(3, 31):
            power = letter_power("a", n)
            expect(power, "2", mu(power))

        w = parse_word("00101100")
        result = mu(w)
        expect(w, "5", result)
        sound = result.is_exact and generates(result.witness, w)
        expect(w, "witness generates", "witness generates" if sound else result.witness)
        listed = GeneratorSet.parse("(1,2),(2,4),(3,5),(4,7),(7,8)", 8)
        expect(w, "true", str(generates(listed, w)).lower())
        expect(w, "false", str(is_double_sturmian_factor(w)).lower())

        w = parse_word("00101")
        result = mu(w)
        expect(w, "3 (1,2),(2,4),(3,5)", f"{result} {result.witness}")

        for text, letters, shortest in (
            ("0010011", "0", "01011"),
            ("011001", "01", "0101"),
            ("0010110", "", "0010110"),
            ("100", "01", "10"),
        ):
            w = parse_word(text)
            found = lean(w)
            expect(w, f"A={letters} lean={shortest}", f"A={doubling_set(w)} lean={found.lean}")
        expect("0010011", "true", str(is_double_sturmian_factor(parse_word("0010011"))).lower())

        thue_morse = "0110100110010110"
        expect(thue_morse, thue_morse, thue_morse_prefix(16))
        expect(thue_morse, thue_morse, tau_iterate(4))
        expect("01001010", "01001010", standard_word(DirectiveSequence(terms=(1, 1, 1, 1)), 8))

        aba = parse_word("aba")
        generators, image = dilate(GeneratorSet.parse("(1,3)", 3), aba, "b")
        expect(image, "(1,4) abba", f"{generators} {image}")
        generators, image = dilate(GeneratorSet.parse("(1,3)", 3), aba, "a")
        expect(image, "(1,2),(1,5) aabaa", f"{generators} {image}")

        by_length: t.Dict[int, t.List[FailureRecord]] = collections.defaultdict(list)
        totals: t.Dict[int, int] = collections.Counter()
        for word, expected, actual in checks:
            totals[len(word)] += 1
            if expected != actual:
                by_length[len(word)].append(_failure(word, expected, actual))
        for length in sorted(totals):
            self._add_length(report, length, [(totals[length], by_length[length], {})])
        return self._finish(report, started)

    async def psi_scan(
        self,
        source: t.Union[str, WordSource],
        prefix_len: int,
        factor_cap: int,
        mu_cap: t.Optional[int] = None,
    ) -> PsiScanResult:
        """
        Largest ``mu`` over the distinct factors of a prefix, up to ``factor_cap``
        letters, with the lexicographically least factor attaining it.

        Every factor sits inside one of maximal length, so the maximum is read
        off the longest class before the argmax scan.
        """
        self.config.check_guard("PSI_MAX_PREFIX", prefix_len)
        self.config.check_guard("PSI_MAX_FACTOR", factor_cap)
        if prefix_len < 1 or factor_cap < 1:
            raise UndefinedInputError("a psi scan needs a nonempty prefix and factor cap")
        if isinstance(source, str):
            source = parse_source(source)
        prefix = source.prefix(prefix_len)
        factors = distinct_factors(prefix, max_len=factor_cap)
        top = min(factor_cap, len(prefix))
        longest = [v for v in factors if len(v) == top]
        async with WorkerPool(self.config) as pool:
            batches = await pool.map(
                _mu_chunk, [(part, mu_cap) for part in _split(longest, self.config.THREADS)]
            )
        best = max((result for batch in batches for result in batch), key=lambda r: r.rank)
        argmax = longest[0]
        for v in factors:
            if cached_mu(v, mu_cap).rank == best.rank:
                argmax = v
                break
        logger.info(
            "psi scan of %s[1,%d]: max %s at %s over %d factors",
            source.descriptor,
            prefix_len,
            best,
            argmax,
            len(factors),
        )
        result = PsiScanResult(
            source=source.descriptor,
            prefix_len=prefix_len,
            factor_cap=factor_cap,
            mu_cap=mu_cap,
            max_mu=cached_mu(argmax, mu_cap),
            argmax_factor=str(argmax),
            factors_scanned=len(factors),
        )
        clear_memo()
        return result

    async def tm_growth(self, max_k: int = 2, mu_cap: t.Optional[int] = None) -> VerificationReport:
        """
        ``mu`` of the Thue-Morse prefixes ``tau^(2k)(0)``, ``k = 1..max_k``,
        strictly increasing wherever two neighbours are exact.
        """
        self.config.check_guard("TM_MAX_K", max_k)
        if (
            mu_cap is None
            and max_k > self.config.TM_EXACT_MAX_K
            and not self.config.OVERRIDE_GUARDS
        ):
            raise ResourceGuardError(
                f"exact values stop at k={self.config.TM_EXACT_MAX_K}; give a cap for k={max_k}"
            )
        started = time.perf_counter()
        report = VerificationReport(
            campaign="tm-growth", parameters={"max_k": max_k, "mu_cap": mu_cap}
        )
        sequence = []
        previous: t.Optional[MuResult] = None
        for k in range(1, max_k + 1):
            prefix = tau_iterate(2 * k)
            result = cached_mu(prefix, mu_cap)
            sequence.append({"k": 2 * k, "length": len(prefix), "mu": result.as_json_dict()})
            failures = []
            if not is_palindrome(prefix):
                failures.append(_failure(prefix, "palindrome", "not a palindrome"))
            if previous is not None and previous.is_exact and result.is_exact:
                if result.mu <= previous.mu:
                    failures.append(_failure(prefix, f"mu>{previous.mu}", f"mu={result}"))
            previous = result
            self._add_length(report, len(prefix), [(1, failures, {})])
        report.details["sequence"] = sequence
        return self._finish(report, started)

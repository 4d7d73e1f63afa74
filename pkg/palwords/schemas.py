import math
import re
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator

from .errors import AlphabetError, DescriptorError, GeneratorSetError
from .word import Interval, Word

_PAIR = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


class MuOutcomeEnum(Enum):
    exact = "exact"
    above_cap = "above_cap"
    infinite = "infinite"


class CentralKindEnum(Enum):
    letter_power = "letter_power"
    composite = "composite"


class GeneratorSet(BaseModel):
    """
    A set of intervals targeting words of length ``n``.

    Intervals are kept sorted and free of duplicates.
    """

    n: int
    intervals: List[Interval] = []

    @field_validator("n")
    def validate_length(cls, value):
        if value < 0:
            raise GeneratorSetError(f"word length {value} is negative")
        return value

    @field_validator("intervals")
    def validate_intervals(cls, value, info):
        n = info.data.get("n", 0)
        for interval in value:
            if not 1 <= interval.i <= interval.j <= n:
                raise GeneratorSetError(
                    f"{interval} is not an interval of a word of length {n}"
                )
        return sorted(set(value))

    @classmethod
    def parse(cls, text: str, n: int) -> "GeneratorSet":
        """Parse a literal such as ``"(1,2),(2,4)"``; the empty string is the empty set."""
        stripped = _PAIR.sub("", text).replace(",", "").strip()
        if stripped:
            raise GeneratorSetError(f"cannot parse generator set literal {text!r}")
        pairs = [Interval(int(i), int(j)) for i, j in _PAIR.findall(text)]
        return cls(n=n, intervals=pairs)

    def add(self, interval: Tuple[int, int]) -> Literal[True]:
        """
        Adds another generator to the set.

        :param interval: the ``(i, j)`` pair to add.
        """
        interval = Interval(*interval)
        if not 1 <= interval.i <= interval.j <= self.n:
            raise GeneratorSetError(
                f"{interval} is not an interval of a word of length {self.n}"
            )
        if interval not in self.intervals:
            self.intervals.append(interval)
            self.intervals.sort()
        return True

    def as_pairs(self) -> List[List[int]]:
        return [[interval.i, interval.j] for interval in self.intervals]

    def __len__(self) -> int:
        return len(self.intervals)

    def __contains__(self, interval) -> bool:
        return Interval(*interval) in self.intervals

    def __str__(self) -> str:
        return ",".join(str(interval) for interval in self.intervals)


class Partition(BaseModel):
    classes: List[List[int]]

    @field_validator("classes")
    def validate_classes(cls, value):
        classes = sorted(sorted(block) for block in value)
        seen = [p for block in classes for p in block]
        if any(not block for block in classes):
            raise ValueError("partition classes must be nonempty")
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("partition classes must be disjoint and cover 1..n")
        return classes

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


class Leaf(BaseModel):
    position: int
    label: str


class MuResult(BaseModel):
    """Outcome of the exact search for the least number of palindromic generators."""

    outcome: MuOutcomeEnum
    mu: Optional[int] = None
    witness: Optional[GeneratorSet] = None
    cap: Optional[int] = None
    lower_bound: Optional[int] = None

    @classmethod
    def exact(cls, value: int, witness: GeneratorSet) -> "MuResult":
        return cls(outcome=MuOutcomeEnum.exact, mu=value, witness=witness)

    @classmethod
    def above_cap(cls, cap: int, lower_bound: int) -> "MuResult":
        return cls(outcome=MuOutcomeEnum.above_cap, cap=cap, lower_bound=lower_bound)

    @classmethod
    def infinite(cls) -> "MuResult":
        return cls(outcome=MuOutcomeEnum.infinite)

    @property
    def is_exact(self) -> bool:
        return self.outcome is MuOutcomeEnum.exact

    @property
    def is_infinite(self) -> bool:
        return self.outcome is MuOutcomeEnum.infinite

    @property
    def rank(self) -> Tuple[float, int]:
        """Sort key: exact values, then proven lower bounds, then infinity."""
        if self.outcome is MuOutcomeEnum.exact:
            return (self.mu, 0)
        if self.outcome is MuOutcomeEnum.above_cap:
            return (self.lower_bound, 1)
        return (math.inf, 2)

    def at_most(self, k: int) -> bool:
        return self.is_exact and self.mu <= k

    def as_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"outcome": self.outcome.value}
        if self.outcome is MuOutcomeEnum.exact:
            data["mu"] = self.mu
            data["witness"] = self.witness.as_pairs()
        elif self.outcome is MuOutcomeEnum.above_cap:
            data["cap"] = self.cap
            data["lower_bound"] = self.lower_bound
        return data

    def __str__(self) -> str:
        if self.outcome is MuOutcomeEnum.exact:
            return str(self.mu)
        if self.outcome is MuOutcomeEnum.above_cap:
            return f">{self.cap}"
        return "inf"


class CentralCertificate(BaseModel):
    """
    Proof that a binary word is central: either a letter power ``a^k`` or a
    split ``u01v = v10u`` with coprime periods ``p = |u|+2`` and ``q = |v|+2``.
    """

    kind: CentralKindEnum
    letter: Optional[str] = None
    power: int = 0
    u: str = ""
    v: str = ""
    p: Optional[int] = None
    q: Optional[int] = None

    @field_validator("q")
    def validate_periods(cls, value, info):
        if info.data.get("kind") is not CentralKindEnum.composite:
            return value
        p = info.data.get("p")
        if p != len(info.data.get("u", "")) + 2:
            raise ValueError("p must equal |u| + 2")
        if value != len(info.data.get("v", "")) + 2:
            raise ValueError("q must equal |v| + 2")
        if math.gcd(p, value) != 1:
            raise ValueError(f"periods {p} and {value} are not coprime")
        return value

    @property
    def least_period(self) -> Optional[int]:
        if self.kind is CentralKindEnum.letter_power:
            return 1 if self.power else None
        return min(self.p, self.q)


class DirectiveSequence(BaseModel):
    """Exponents ``d1, d2, …`` of the standard-word recursion."""

    model_config = ConfigDict(frozen=True)

    terms: Tuple[int, ...] = ()

    @field_validator("terms")
    def validate_terms(cls, value):
        if any(term < 1 for term in value):
            raise ValueError(f"directive terms must be positive, got {list(value)}")
        return value

    @classmethod
    def parse(cls, text: str) -> "DirectiveSequence":
        parts = [part for part in text.replace(" ", "").split(",") if part]
        try:
            return cls(terms=tuple(int(part) for part in parts))
        except ValueError as error:
            raise DescriptorError(f"bad directive sequence {text!r}: {error}")

    def __str__(self) -> str:
        return ",".join(str(term) for term in self.terms)


class DoublingSet(BaseModel):
    """Subset of the binary alphabet whose letters a doubling morphism squares."""

    model_config = ConfigDict(frozen=True)

    letters: FrozenSet[str] = frozenset()

    @field_validator("letters")
    def validate_letters(cls, value):
        if not value <= {"0", "1"}:
            raise AlphabetError(f"doubling set {sorted(value)} is not a subset of {{0,1}}")
        return frozenset(value)

    @classmethod
    def parse(cls, text: str) -> "DoublingSet":
        return cls(letters=frozenset(text))

    def __contains__(self, letter: str) -> bool:
        return letter in self.letters

    def __str__(self) -> str:
        return "".join(sorted(self.letters))


class LeanResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    A: DoublingSet
    lean: Word

    @field_serializer("A")
    def serialize_doubling_set(self, value):
        return str(value)

    @field_serializer("lean")
    def serialize_lean(self, value):
        return str(value)


class FailureRecord(BaseModel):
    word: str
    expected: str
    actual: str


class LengthSummary(BaseModel):
    campaign: str
    length: int
    checked: int
    failures: List[FailureRecord] = []


class VerificationReport(BaseModel):
    campaign: str
    parameters: Dict[str, Any] = {}
    cases_checked: int = 0
    failures: List[FailureRecord] = []
    per_length: List[LengthSummary] = []
    details: Dict[str, Any] = {}
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


class PsiScanResult(BaseModel):
    source: str
    prefix_len: int
    factor_cap: int
    mu_cap: Optional[int] = None
    max_mu: MuResult
    argmax_factor: str
    factors_scanned: int = 0

    def as_json_dict(self) -> Dict[str, Any]:
        return {
            "source": self.source,
            "prefix_len": self.prefix_len,
            "factor_cap": self.factor_cap,
            "mu_cap": self.mu_cap,
            "max_mu": self.max_mu.as_json_dict(),
            "argmax_factor": self.argmax_factor,
            "factors_scanned": self.factors_scanned,
        }

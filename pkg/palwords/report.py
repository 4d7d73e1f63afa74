import json
import sys
import typing as t

from .schemas import LengthSummary, VerificationReport


class ReportStream:
    """
    Writes machine-readable campaign output: one JSON object per line.

    :param stream: text stream receiving the lines, standard output by default.
    """

    def __init__(self, stream: t.Optional[t.TextIO] = None) -> None:
        self.stream = stream if stream is not None else sys.stdout
        self.lines = 0

    def write_json(self, data: t.Any) -> None:
        self.stream.write(json.dumps(data, separators=(",", ":")))
        self.stream.write("\n")
        self.stream.flush()
        self.lines += 1

    def write_summary(self, summary: LengthSummary) -> None:
        self.write_json(summary.model_dump(mode="json"))

    def write_verdict(self, report: VerificationReport) -> None:
        self.write_json(
            {"verdict": report.verdict, "elapsed_ms": round(report.elapsed_ms, 3)}
        )

    def write_error(self, error: Exception) -> None:
        self.write_json({"error": str(getattr(error, "expression", error))})

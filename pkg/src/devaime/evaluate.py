"""Scheme evaluation: edit distances between subject spellings and a
scheme's proposed encodings, averaged per character and weighted by
character frequency."""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Mapping, Sequence

from .editdist import edit_distance
from .errors import MalformedFile, MissingData

# responses: charId -> subjectId -> roman spelling
Responses = Mapping[str, Mapping[str, str]]

WEIGHT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SchemeEncoding:
    name: str
    proposed: Mapping[str, str]


@dataclass(frozen=True)
class EvalReport:
    scheme_name: str
    per_char: Mapping[str, float]
    weighted_average: float


def avg_edit_dist(char_id: str, responses: Responses, scheme: SchemeEncoding) -> float:
    """Mean edit distance between subjects' spellings and the proposal."""
    proposed = scheme.proposed.get(char_id)
    if proposed is None:
        raise MissingData(
            "scheme %r proposes nothing for %r" % (scheme.name, char_id)
        )
    subject_spellings = responses.get(char_id)
    if not subject_spellings:
        raise MissingData("no responses for %r" % char_id)
    total = sum(
        edit_distance(spelling, proposed)
        for _, spelling in sorted(subject_spellings.items())
    )
    return total / len(subject_spellings)


def validate_frequencies(freqs: Mapping[str, float]) -> None:
    if any(w < 0 for w in freqs.values()):
        raise ValueError("character weights must be non-negative")
    total = sum(freqs.values())
    if abs(total - 1.0) > WEIGHT_TOLERANCE:
        raise ValueError("character weights sum to %r, not 1" % total)


def weighted_average(per_char: Mapping[str, float], freqs: Mapping[str, float]) -> float:
    """Frequency-weighted mean of per-character averages."""
    total = 0.0
    for char_id, dist in per_char.items():
        weight = freqs.get(char_id)
        if weight is None:
            raise MissingData("no frequency weight for %r" % char_id)
        total += weight * dist
    return total


def compare_schemes(
    responses: Responses,
    schemes: Sequence[SchemeEncoding],
    freqs: Mapping[str, float],
) -> list[EvalReport]:
    """One report per scheme over the responded characters, by scheme name."""
    char_ids = sorted(responses)
    reports = []
    for scheme in sorted(schemes, key=lambda s: s.name):
        per_char = {c: avg_edit_dist(c, responses, scheme) for c in char_ids}
        reports.append(
            EvalReport(
                scheme_name=scheme.name,
                per_char=per_char,
                weighted_average=weighted_average(per_char, freqs),
            )
        )
    return reports


def _rows(source: str | IO[str], n_cols: int, what: str):
    own = isinstance(source, str)
    fh = open(source, encoding="utf-8") if own else source
    name = source if own else getattr(source, "name", "<%s>" % what)
    try:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != n_cols:
                raise MalformedFile(
                    "%s:%d: expected %d columns, got %d"
                    % (name, lineno, n_cols, len(cols))
                )
            yield name, lineno, cols
    finally:
        if own:
            fh.close()


def read_responses(source: str | IO[str]) -> dict[str, dict[str, str]]:
    """TSV rows: charId, subjectId, roman spelling."""
    out: dict[str, dict[str, str]] = {}
    for name, lineno, (char_id, subject_id, spelling) in _rows(source, 3, "responses"):
        by_subject = out.setdefault(char_id, {})
        if subject_id in by_subject:
            raise MalformedFile(
                "%s:%d: duplicate response %r/%r" % (name, lineno, char_id, subject_id)
            )
        by_subject[subject_id] = spelling
    return out


def read_scheme(source: str | IO[str], name: str) -> SchemeEncoding:
    """TSV rows: charId, proposed roman encoding."""
    proposed: dict[str, str] = {}
    for fname, lineno, (char_id, code) in _rows(source, 2, "scheme"):
        if char_id in proposed:
            raise MalformedFile("%s:%d: duplicate charId %r" % (fname, lineno, char_id))
        proposed[char_id] = code
    return SchemeEncoding(name=name, proposed=proposed)


def read_frequencies(source: str | IO[str]) -> dict[str, float]:
    """TSV rows: charId, weight; weights must sum to 1 (±1e-9)."""
    freqs: dict[str, float] = {}
    for fname, lineno, (char_id, weight_field) in _rows(source, 2, "frequencies"):
        try:
            weight = float(weight_field)
        except ValueError:
            raise MalformedFile(
                "%s:%d: bad weight %r" % (fname, lineno, weight_field)
            ) from None
        if char_id in freqs:
            raise MalformedFile("%s:%d: duplicate charId %r" % (fname, lineno, char_id))
        freqs[char_id] = weight
    label = source if isinstance(source, str) else getattr(source, "name", "<frequencies>")
    try:
        validate_frequencies(freqs)
    except ValueError as exc:
        raise MalformedFile("%s: %s" % (label, exc)) from None
    return freqs


def report_tsv(reports: Sequence[EvalReport]) -> str:
    """Machine-readable summary: scheme, weighted average."""
    return "".join(
        "%s\t%.9f\n" % (r.scheme_name, r.weighted_average) for r in reports
    )


def report_table(reports: Sequence[EvalReport]) -> str:
    """Human-readable comparison table."""
    if not reports:
        return "(no schemes)\n"
    char_ids = sorted(reports[0].per_char)
    width = max([len("scheme")] + [len(r.scheme_name) for r in reports])
    lines = []
    header = ["scheme".ljust(width)] + char_ids + ["weighted"]
    lines.append("  ".join(header))
    for r in reports:
        cells = [r.scheme_name.ljust(width)]
        cells += ["%.4f" % r.per_char[c] for c in char_ids]
        cells.append("%.4f" % r.weighted_average)
        lines.append("  ".join(cells))
    return "\n".join(lines) + "\n"

"""Plain-text rendering of derived documents and corpus statistics."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .corpus import CorpusStats
from .derive import DerivedText

STATS_HEADER = ("file", "characters", "tokens", "sentences", "paragraphs")

_HEADER = re.compile(r"^== (.+) ==$")


@dataclass(frozen=True)
class StatsReport:
    rows: tuple[tuple[str, CorpusStats], ...] = field(default_factory=tuple)


def render_document(texts: list[DerivedText]) -> str:
    """Render sections as ``== label ==``, a blank line, the lines, a blank line.

    The document ends with exactly one newline; no sections gives ``""``.
    """
    parts = []
    for text in texts:
        parts.append(f"== {text.label} ==\n\n")
        parts.extend(line + "\n" for line in text.lines)
        parts.append("\n")
    doc = "".join(parts)
    return doc.rstrip("\n") + "\n" if doc else ""


def parse_document(doc: str) -> list[DerivedText]:
    """Inverse of :func:`render_document`."""
    sections: list[tuple[str, list[str]]] = []
    for line in doc.split("\n"):
        m = _HEADER.match(line)
        if m:
            sections.append((m.group(1), []))
        elif line and sections:
            sections[-1][1].append(line)
    return [DerivedText(label, tuple(lines)) for label, lines in sections]


def render_stats(report: StatsReport) -> str:
    lines = ["\t".join(STATS_HEADER)]
    for name, stats in report.rows:
        lines.append("\t".join([name, *map(str, stats.as_row())]))
    return "\n".join(lines) + "\n"

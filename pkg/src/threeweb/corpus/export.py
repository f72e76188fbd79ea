"""Serialize corpus webs in the user-facing web file format."""

from __future__ import annotations

from pathlib import Path

from ..webfile import dump_web
from .entries import EXAMPLE_IDS, CorpusEntry, load_example


def web_text(entry: CorpusEntry | int | str) -> str:
    if not isinstance(entry, CorpusEntry):
        entry = load_example(entry)
    header = [f"# corpus entry {entry.id}"]
    if entry.expected_classes:
        header.append("# expected: " + " ".join(sorted(entry.expected_classes)))
    return "\n".join(header) + "\n" + dump_web(entry.web, entry.errata_notes)


def export_corpus(directory: str | Path, ids=EXAMPLE_IDS) -> list[Path]:
    """Write one .web file per entry; returns the written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for i in ids:
        entry = load_example(i)
        path = directory / f"{entry.web.name}.web"
        path.write_text(web_text(entry), encoding="utf-8")
        out.append(path)
    return out

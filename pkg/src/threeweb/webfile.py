"""Web definition files: flat UTF-8 ``key = "value"`` lines with # comments.

    # Example
    name   = "example2"
    f1     = "x1 + y1"
    f2     = "x1*y1 + x2*y2"
    domain = "x2 != 0"
    domain = "y2 != 0"
    notes  = "free text"

``domain`` may repeat; every other key appears at most once. Inside a value
a backslash escapes a double quote or another backslash.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .engine import WebDefinition, parse_constraint
from .expr import ExprSyntaxError, parse_expression

KEYS = ("name", "f1", "f2", "domain", "notes")
REQUIRED = ("f1", "f2")


class WebFileError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<web>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.source = source


@dataclass
class WebFile:
    name: str = ""
    f1: str = ""
    f2: str = ""
    domain: list[str] = field(default_factory=list)
    notes: str = ""
    # (line, column) where each value's text starts, for diagnostics
    positions: dict[str, list[tuple[int, int]]] = field(default_factory=dict)

    def to_web(self, source: str = "<web>") -> WebDefinition:
        for key in ("f1", "f2"):
            self._check(key, getattr(self, key), parse_expression, source, 0)
        for i, text in enumerate(self.domain):
            self._check("domain", text, parse_constraint, source, i)
        return WebDefinition.from_text(self.name or Path(source).stem, self.f1, self.f2,
                                       self.domain, self.notes)

    def _check(self, key, text, parse, source, i):
        try:
            parse(text)
        except ExprSyntaxError as e:
            line, col = self.positions[key][i]
            raise WebFileError(f"{key}: {e.message}", line, col + e.position, source) from None


def _value(rest: str, line_no: int, col: int, source: str) -> tuple[str, int]:
    """Parse a quoted string at the start of rest; return (value, chars consumed)."""
    if not rest.startswith('"'):
        raise WebFileError('expected a double-quoted value', line_no, col, source)
    out = []
    i = 1
    while i < len(rest):
        ch = rest[i]
        if ch == "\\" and i + 1 < len(rest) and rest[i + 1] in '"\\':
            out.append(rest[i + 1])
            i += 2
            continue
        if ch == '"':
            return "".join(out), i + 1
        out.append(ch)
        i += 1
    raise WebFileError("unterminated string", line_no, col + len(rest), source)


def parse_webfile(text: str, source: str = "<web>") -> WebFile:
    wf = WebFile()
    seen: set[str] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(raw) - len(raw.lstrip())
        key, sep, rest = raw.strip().partition("=")
        key = key.strip()
        if not sep:
            raise WebFileError("expected key = \"value\"", line_no, indent + 1, source)
        if key not in KEYS:
            raise WebFileError(f"unknown key {key!r}", line_no, indent + 1, source)
        if key in seen and key != "domain":
            raise WebFileError(f"duplicate key {key!r}", line_no, indent + 1, source)
        seen.add(key)
        eq = raw.index("=")
        col = eq + 1 + (len(rest) - len(rest.lstrip())) + 1  # 1-based column of the quote
        value, used = _value(rest.lstrip(), line_no, col, source)
        tail = rest.lstrip()[used:].strip()
        if tail and not tail.startswith("#"):
            raise WebFileError("unexpected text after value", line_no, col + used, source)
        # column of the first character inside the quotes
        wf.positions.setdefault(key, []).append((line_no, col + 1))
        if key == "domain":
            wf.domain.append(value)
        else:
            setattr(wf, key, value)
    for key in REQUIRED:
        if key not in seen:
            raise WebFileError(f"missing key {key!r}", max(1, len(text.splitlines())), 1, source)
    return wf


def load_web(path: str | Path) -> WebDefinition:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_webfile(text, str(path)).to_web(str(path))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dump_web(web: WebDefinition, notes: str | None = None) -> str:
    lines = [f"name   = {_quote(web.name)}", f"f1     = {_quote(web.f1_text)}",
             f"f2     = {_quote(web.f2_text)}"]
    for c in web.domain_constraints:
        lines.append(f"domain = {_quote(str(c))}")
    notes = web.notes if notes is None else notes
    if notes:
        lines.append(f"notes  = {_quote(' '.join(notes.split()))}")
    return "\n".join(lines) + "\n"

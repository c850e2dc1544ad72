"""Shared text-file plumbing: tokenised parsing, atomic writes, run manifests."""

from __future__ import annotations

import datetime as _dt
import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__
from .errors import ParseError


class IntLineReader:
    """Iterates over non-blank lines of a text document as integer rows.

    Line numbers in errors are 1-based positions in the original text.
    """

    def __init__(self, text: str, path=None):
        self.path = path
        self._lines = [
            (i + 1, line.split())
            for i, line in enumerate(text.splitlines())
            if line.strip() and not line.lstrip().startswith("#")
        ]
        self._pos = 0

    def next_row(self, width=None, what="row"):
        if self._pos >= len(self._lines):
            last = self._lines[-1][0] + 1 if self._lines else 1
            raise ParseError(f"unexpected end of file, expected {what}", line=last, path=self.path)
        lineno, tokens = self._lines[self._pos]
        self._pos += 1
        if width is not None and len(tokens) != width:
            raise ParseError(
                f"expected {width} fields in {what}, found {len(tokens)}",
                line=lineno,
                path=self.path,
            )
        row = []
        for j, tok in enumerate(tokens):
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", line=lineno, field=j + 1, path=self.path) from None
        return lineno, row

    def expect_end(self):
        if self._pos < len(self._lines):
            raise ParseError("trailing data after last expected row", line=self._lines[self._pos][0], path=self.path)


def check_range(value, lo, hi, lineno, field, path=None, what="entry"):
    if not lo <= value < hi:
        raise ParseError(f"{what} {value} outside [{lo}, {hi})", line=lineno, field=field, path=path)


def format_rows(rows) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in rows)


def atomic_write_text(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def run_manifest(command: str, params: dict, inputs=()) -> dict:
    """Reproducibility record embedded in JSON outputs or written beside CSVs."""
    return {
        "command": command,
        "params": {k: v for k, v in params.items() if k not in ("func", "handler")},
        "inputs": {str(p): file_digest(p) for p in inputs},
        "tool": "drcskit",
        "version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }


def write_manifest_sidecar(output_path, manifest: dict) -> Path:
    side = Path(str(output_path) + ".manifest.json")
    atomic_write_text(side, json.dumps(manifest, indent=2, sort_keys=True, default=str) + "\n")
    return side

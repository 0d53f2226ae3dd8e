"""CSV and JSON emission for the command-line harness.

CSV layout: '#'-prefixed metadata lines, one header row, data rows with
reals at 17 significant digits (lossless float64 round trip), UTF-8, LF
line endings.  Writes are atomic (temp file + rename).  JSON reports are
flat objects plus arrays; NaN/Inf abort instead of serializing.
"""

from __future__ import annotations

import json
import os
import tempfile


def fmt_value(x) -> str:
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_csv(path: str, metadata: list[str], header: list[str], rows) -> None:
    lines = [f"# {m}" for m in metadata]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(fmt_value(x) for x in row))
    _atomic_write(path, "\n".join(lines) + "\n")


def read_csv(path: str):
    """Returns (metadata, header, rows) with cell values kept as raw strings."""
    metadata, header, rows = [], None, []
    with open(path, encoding="utf-8", newline="\n") as fh:
        for line in fh.read().splitlines():
            if line.startswith("# "):
                metadata.append(line[2:])
            elif header is None:
                header = line.split(",")
            else:
                rows.append(line.split(","))
    return metadata, header, rows


def reemit_csv(path_in: str, path_out: str) -> None:
    """Round-trip a CSV file; output is byte-identical to the input."""
    metadata, header, rows = read_csv(path_in)
    write_csv(path_out, metadata, header, rows)


def write_json(path: str, obj: dict) -> None:
    _atomic_write(path, json.dumps(obj, indent=2, allow_nan=False) + "\n")

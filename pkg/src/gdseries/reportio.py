"""Report serialization: canonical JSON and CSV with atomic writes.

Canonical form: floats quantized to 15 significant digits, complex
values as {"re": ..., "im": ...}, non-finite floats as null, keys
sorted, two-space indent, trailing newline. Quantizing to 15 digits
makes serialization idempotent (a 15-digit decimal survives the
float round trip), so re-reading an emitted report and re-serializing
is byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile


def quantize(obj):
    """Recursively normalize a report object for canonical output."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(f"{obj:.15g}")
    if isinstance(obj, complex):
        return {"re": quantize(obj.real), "im": quantize(obj.imag)}
    if isinstance(obj, dict):
        return {str(k): quantize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [quantize(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


def canonical_json(obj) -> str:
    return json.dumps(quantize(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def format_csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [
                f"{v:.15g}" if isinstance(v, float) else v
                for v in (quantize(list(row)))
            ]
        )
    return buf.getvalue()


def write_text_atomic(path: str, text: str) -> None:
    """Write via a temp file in the target directory plus rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-report-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_json(path: str, obj) -> None:
    write_text_atomic(path, canonical_json(obj))


def write_csv(path: str, rows, header) -> None:
    write_text_atomic(path, format_csv(rows, header))

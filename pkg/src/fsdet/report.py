"""Report emitters: JSON (17 significant digits), CSV and markdown tables."""

import csv
import io
import json
import math

import numpy as np


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return obj


def _fmt_float(x, digits):
    if not math.isfinite(x):
        return None
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.{digits}g}"


def _encode(obj, digits):
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        s = _fmt_float(obj, digits)
        return "null" if s is None else s
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, list):
        return "[" + ", ".join(_encode(v, digits) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v, digits)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(doc, digits=17):
    return _encode(_plain(doc), digits) + "\n"


def flatten(row, prefix=""):
    """Nested dict -> single-level dict with dotted keys; lists become ``a;b;c``."""
    out = {}
    for k, v in row.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(flatten(v, key + "."))
        else:
            out[key] = v
    return out


def _cell(v, digits):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        s = _fmt_float(v, digits)
        return "nan" if s is None and math.isnan(v) else (s if s is not None else str(v))
    if isinstance(v, list):
        return ";".join(_cell(x, digits) for x in v)
    return str(v)


def _columns(rows):
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def to_csv(results, digits=17):
    rows = [flatten(_plain(r)) for r in results]
    cols = _columns(rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c), digits) for c in cols])
    return buf.getvalue()


def to_markdown(results, digits=6):
    rows = [flatten(_plain(r)) for r in results]
    cols = _columns(rows)
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in rows:
        lines.append("| " + " | ".join(_cell(r.get(c), digits).replace("|", "\\|") for c in cols) + " |")
    return "\n".join(lines) + "\n"

"""Input documents, report documents and their serialization."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Union

import numpy as np

from . import __version__
from .errors import InputError
from .measure import MeasureSpace, SimpleFunction


@dataclass
class InputDocument:
    weights: list
    functions: dict
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.weights:
            raise InputError("the weight list is empty")
        if not self.functions:
            raise InputError("no functions given")
        for i, w in enumerate(self.weights):
            if not (isinstance(w, (int, float)) and math.isfinite(w) and w > 0):
                raise InputError(f"weights[{i}] = {w!r} is not a finite positive number")
        for name, vals in self.functions.items():
            if len(vals) != len(self.weights):
                raise InputError(
                    f"function {name!r} has {len(vals)} values, expected {len(self.weights)}"
                )
            for i, v in enumerate(vals):
                if not (isinstance(v, (int, float, complex)) and np.isfinite(v)):
                    raise InputError(f"{name}[{i}] = {v!r} is not a finite number")

    @property
    def has_complex(self) -> bool:
        return any(isinstance(v, complex) for vals in self.functions.values() for v in vals)

    def build(self) -> tuple[MeasureSpace, dict[str, SimpleFunction]]:
        space = MeasureSpace(self.weights)
        return space, {k: SimpleFunction(space, v) for k, v in self.functions.items()}

    def canonical(self) -> dict:
        def enc(v):
            return [v.real, v.imag] if isinstance(v, complex) else v

        return {
            "weights": list(self.weights),
            "functions": {k: [enc(v) for v in vals] for k, vals in self.functions.items()},
        }

    def digest(self) -> str:
        text = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _number(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{where}: expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{where}: non-finite value {x!r}")
    return x


def _parse_json(text: str, allow_complex: bool) -> InputDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise InputError("top-level JSON value must be an object")
    weights = raw.get("weights", raw.get("space"))
    if isinstance(weights, dict):
        weights = weights.get("weights")
    if not isinstance(weights, list):
        raise InputError("missing 'weights' list")
    weights = [_number(w, f"weights[{i}]") for i, w in enumerate(weights)]
    funcs_raw = raw.get("functions")
    if not isinstance(funcs_raw, dict) or not funcs_raw:
        raise InputError("missing or empty 'functions' object")
    functions = {}
    for name, spec in funcs_raw.items():
        if isinstance(spec, dict):
            if not allow_complex:
                raise InputError(f"function {name!r}: complex values are not supported here")
            re, im = spec.get("re"), spec.get("im")
            if not isinstance(re, list) or not isinstance(im, list) or len(re) != len(im):
                raise InputError(f"function {name!r}: need 're' and 'im' lists of equal length")
            functions[name] = [
                complex(_number(a, f"{name}.re[{i}]"), _number(b, f"{name}.im[{i}]"))
                for i, (a, b) in enumerate(zip(re, im))
            ]
        elif isinstance(spec, list):
            functions[name] = [_number(v, f"{name}[{i}]") for i, v in enumerate(spec)]
        else:
            raise InputError(f"function {name!r}: expected a list or an {{re, im}} object")
    meta = raw.get("metadata", {})
    if not isinstance(meta, dict):
        raise InputError("'metadata' must be an object")
    return InputDocument(weights, functions, {str(k): str(v) for k, v in meta.items()})


def _parse_csv(text: str) -> InputDocument:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [(i + 1, r) for i, r in enumerate(rows) if any(c.strip() for c in r)]
    if not rows:
        raise InputError("empty CSV document")
    _, header = rows[0]
    header = [h.strip() for h in header]
    if not header or header[0] != "weight":
        raise InputError("line 1: header must start with 'weight'")
    names = header[1:]
    if not names:
        raise InputError("line 1: no function columns")
    if len(set(names)) != len(names):
        raise InputError("line 1: duplicate function names")
    weights = []
    functions = {n: [] for n in names}
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise InputError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        try:
            vals = [float(c) for c in row]
        except ValueError:
            raise InputError(f"line {lineno}: unparsable number in {row!r}") from None
        if not all(math.isfinite(v) for v in vals):
            raise InputError(f"line {lineno}: non-finite value")
        if vals[0] <= 0:
            raise InputError(f"line {lineno}: weight {vals[0]!r} is not positive")
        weights.append(vals[0])
        for n, v in zip(names, vals[1:]):
            functions[n].append(v)
    if not weights:
        raise InputError("CSV document has a header but no atoms")
    return InputDocument(weights, functions)


def parse_input(
    source: Union[str, Path, IO[str]], format: str | None = None, allow_complex: bool = True
) -> InputDocument:
    """Read an input document from a path or an open text stream.

    The format is taken from ``format`` or else the file suffix; streams
    default to JSON.
    """
    if hasattr(source, "read"):
        text = source.read()
        fmt = format or "json"
    else:
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        fmt = format or ("csv" if path.suffix.lower() == ".csv" else "json")
    if fmt == "json":
        return _parse_json(text, allow_complex)
    if fmt == "csv":
        return _parse_csv(text)
    raise InputError(f"unknown input format {fmt!r}")


@dataclass
class ReportDocument:
    operation: str
    parameters: dict
    payload: dict
    violations: list = field(default_factory=list)
    tool_version: str = __version__
    input_digest: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return _plain(
            {
                "operation": self.operation,
                "parameters": self.parameters,
                "payload": self.payload,
                "violations": self.violations,
                "tool_version": self.tool_version,
                "input_digest": self.input_digest,
            }
        )


_SPECIAL = {"Infinity": math.inf, "-Infinity": -math.inf, "NaN": math.nan}


def _plain(obj):
    """Convert to JSON-safe builtins; non-finite floats become strings."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isnan(x):
            return "NaN"
        if math.isinf(x):
            return "Infinity" if x > 0 else "-Infinity"
        return x
    if isinstance(obj, complex):
        return {"re": _plain(obj.real), "im": _plain(obj.imag)}
    return obj


def _restore(obj):
    if isinstance(obj, dict):
        return {k: _restore(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_restore(v) for v in obj]
    if isinstance(obj, str) and obj in _SPECIAL:
        return _SPECIAL[obj]
    return obj


def emit_report(report: ReportDocument, format: str = "json") -> str:
    """Serialize a report. JSON output is byte-stable: sorted keys, shortest
    round-trip float repr, no timestamps."""
    data = report.to_dict()
    if format == "json":
        return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n"
    if format == "table":
        lines = []
        for key, val in _flatten(data):
            lines.append(f"{key:<48} {val}")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown report format {format!r}")


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        if not obj:
            yield prefix, "{}"
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else k)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    elif isinstance(obj, list):
        yield prefix, "[" + ", ".join(str(v) for v in obj) + "]" if obj else "[]"
    else:
        yield prefix, obj


def parse_report(text: str) -> ReportDocument:
    data = _restore(json.loads(text))
    return ReportDocument(**data)

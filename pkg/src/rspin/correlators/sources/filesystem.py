"""Filesystem-based correlator table source.

A table is one JSON document, written with one entry per line:

    {
      "r": 2,
      "mode": "numeric",
      "entries": [
        {"a": [0, 0, 0], "g": 0, "m": [0, 0, 0], "value": "1"},
        ...
      ]
    }
"""
import json
import re
from fractions import Fraction
from json.decoder import WHITESPACE
from pathlib import Path
from typing import Any, Dict, List, Tuple

import sympy

from rspin.correlators.table import MODES, NUMERIC, CorrelatorKey, CorrelatorTable
from rspin.diffalg.scalar import format_rational
from rspin.errors import TableFormatError

REQUIRED_FIELDS = ("g", "a", "m", "value")

RATIONAL = re.compile(r"(?P<num>-?\d+)(?:/(?P<den>\d+))?")
ATOM = r"c_g\d+_\d+_\d+(?:__\d+_\d+)*"
FORMAL_TERM = re.compile(rf"(?:(?P<coef>\d+(?:/\d+)?)\*)?(?P<atom>{ATOM})|(?P<const>\d+(?:/\d+)?)")
ATOM_NAME = re.compile(ATOM)
SIGN = re.compile(r"\s*([+-])\s*")


def _skip(text: str, pos: int) -> int:
    return WHITESPACE.match(text, pos).end()


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _locate(text: str) -> Tuple[Dict[str, int], List[int]]:
    """Lines of the top-level keys and of every entry, for a valid document."""
    decoder = json.JSONDecoder()
    key_lines: Dict[str, int] = {}
    entry_lines: List[int] = []
    pos = _skip(text, 0) + 1
    while True:
        pos = _skip(text, pos)
        if text[pos] == "}":
            break
        key_start = pos
        key, pos = decoder.raw_decode(text, pos)
        key_lines[key] = _line_of(text, key_start)
        pos = _skip(text, _skip(text, pos) + 1)
        if key == "entries" and text[pos] == "[":
            entry_lines = []
            pos += 1
            while True:
                pos = _skip(text, pos)
                if text[pos] == "]":
                    pos += 1
                    break
                entry_lines.append(_line_of(text, pos))
                _, pos = decoder.raw_decode(text, pos)
                pos = _skip(text, pos)
                if text[pos] == ",":
                    pos += 1
        else:
            _, pos = decoder.raw_decode(text, pos)
        pos = _skip(text, pos)
        if text[pos] == ",":
            pos += 1
    return key_lines, entry_lines


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_rational(text: str, line: int) -> Fraction:
    match = RATIONAL.fullmatch(text)
    if match is None:
        raise TableFormatError(f"invalid rational value {text!r}", line)
    numerator, denominator = match.group("num"), match.group("den")
    if denominator is not None and int(denominator) == 0:
        raise TableFormatError(f"invalid rational value {text!r}: zero denominator", line)
    return Fraction(int(numerator), int(denominator or 1))


def _parse_formal(text: str, line: int) -> sympy.Expr:
    """Sum of 'p/q*atom', 'atom' and 'p/q' terms; nothing else is evaluated."""
    parts = SIGN.split(text.strip())
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts.insert(0, "+")
    if not parts or len(parts) % 2:
        raise TableFormatError(f"invalid formal value {text!r}", line)
    total = sympy.Integer(0)
    for sign, term in zip(parts[::2], parts[1::2]):
        match = FORMAL_TERM.fullmatch(term)
        if match is None:
            raise TableFormatError(f"invalid formal value {text!r}: bad term {term!r}", line)
        coefficient = _parse_rational(match.group("coef") or match.group("const") or "1", line)
        if sign == "-":
            coefficient = -coefficient
        rational = sympy.Rational(coefficient.numerator, coefficient.denominator)
        atom = match.group("atom")
        total += rational * sympy.Symbol(atom) if atom else rational
    return total


def _parse_value(raw: Any, mode: str, line: int):
    if _is_int(raw):
        raw = str(raw)
    if not isinstance(raw, str):
        raise TableFormatError(f"value must be a string or an integer, got {raw!r}", line)
    if mode == NUMERIC:
        return _parse_rational(raw.strip(), line)
    return _parse_formal(raw, line)


def format_formal_value(value: sympy.Expr) -> str:
    """Canonical text of a linear combination of atoms, the inverse of the loader."""
    terms = []
    for term, coefficient in sympy.expand(value).as_coefficients_dict().items():
        if coefficient == 0:
            continue
        if term == 1:
            name = None
        elif isinstance(term, sympy.Symbol) and ATOM_NAME.fullmatch(term.name):
            name = term.name
        else:
            raise ValueError(f"Formal values must be rational combinations of atoms, got {value}")
        terms.append((name or "", Fraction(int(coefficient.p), int(coefficient.q))))
    if not terms:
        return "0"
    pieces = []
    for name, coefficient in sorted(terms):
        magnitude = abs(coefficient)
        if not name:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = name
        else:
            body = f"{format_rational(magnitude)}*{name}"
        sign = "-" if coefficient < 0 else "+"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _load_entry(table: CorrelatorTable, entry: Any, line: int) -> None:
    if not isinstance(entry, dict):
        raise TableFormatError("entry must be an object", line)
    for name in REQUIRED_FIELDS:
        if name not in entry:
            raise TableFormatError(f"entry is missing field '{name}'", line)
    g, a_values, m_values = entry["g"], entry["a"], entry["m"]
    if not _is_int(g):
        raise TableFormatError(f"field 'g' must be an integer, got {g!r}", line)
    for name, values in (("a", a_values), ("m", m_values)):
        if not isinstance(values, list) or not all(_is_int(v) for v in values):
            raise TableFormatError(f"field '{name}' must be a list of integers", line)
    if len(a_values) != len(m_values):
        raise TableFormatError(
            f"fields 'a' and 'm' differ in length ({len(a_values)} != {len(m_values)})", line
        )
    value = _parse_value(entry["value"], table.mode, line)
    try:
        key = CorrelatorKey.of(g, zip(a_values, m_values), table.r)
        table.insert(key, value)
    except TableFormatError:
        raise
    except ValueError as e:
        raise TableFormatError(str(e), line)


def parse_table(text: str) -> CorrelatorTable:
    """Build a table from a persisted document, re-validating every entry.

    Raises:
        TableFormatError: With the offending line for syntax and entry errors.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableFormatError(f"invalid JSON: {e.msg}", e.lineno)
    if not isinstance(document, dict):
        raise TableFormatError("document must be a JSON object", 1)
    key_lines, entry_lines = _locate(text)
    for name in ("r", "mode", "entries"):
        if name not in document:
            raise TableFormatError(f"document is missing field '{name}'", 1)
    r, mode, entries = document["r"], document["mode"], document["entries"]
    if not _is_int(r) or r < 2:
        raise TableFormatError(f"field 'r' must be an integer >= 2, got {r!r}", key_lines.get("r"))
    if mode not in MODES:
        raise TableFormatError(f"field 'mode' must be one of {', '.join(MODES)}, got {mode!r}", key_lines.get("mode"))
    if not isinstance(entries, list):
        raise TableFormatError("field 'entries' must be a list", key_lines.get("entries"))
    table = CorrelatorTable(r, mode)
    for entry, line in zip(entries, entry_lines):
        _load_entry(table, entry, line)
    return table


def render_table(table: CorrelatorTable) -> str:
    """Deterministic document text, one entry per line."""
    rendered = []
    for key, value in table.items():
        entry = {
            "g": key.g,
            "a": list(key.a_values),
            "m": list(key.m_values),
            "value": format_rational(value) if isinstance(value, Fraction) else format_formal_value(value),
        }
        rendered.append("    " + json.dumps(entry, sort_keys=True))
    lines = ["{", f'  "r": {table.r},', f'  "mode": "{table.mode}",']
    if rendered:
        lines.append('  "entries": [')
        lines.append(",\n".join(rendered))
        lines.append("  ]")
    else:
        lines.append('  "entries": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


class FilesystemTableSource:
    """Load and store a correlator table as a JSON file.

    Args:
        path: Location of the table document

    Example:
        >>> source = FilesystemTableSource(Path("wk.tbl"))
        >>> table = source.load()
    """

    def __init__(self, path: Path):
        self.path = path

    def load(self) -> CorrelatorTable:
        """Read and validate the table.

        Raises:
            FileNotFoundError: If the file doesn't exist
            TableFormatError: If the file is unreadable, or the document or an
                entry is invalid
        """
        if not self.path.exists():
            raise FileNotFoundError(f"Correlator table not found: {self.path}")
        try:
            text = self.path.read_text()
        except (OSError, UnicodeDecodeError) as e:
            raise TableFormatError(f"cannot read {self.path}: {e}")
        return parse_table(text)

    def dump(self, table: CorrelatorTable) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(render_table(table))

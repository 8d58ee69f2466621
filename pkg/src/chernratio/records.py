"""Serialization of results into flat, line-oriented records."""
from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

DECIMAL_DIGITS = 12
_CONTEXT = Context(prec=DECIMAL_DIGITS, rounding=ROUND_HALF_EVEN)


def rational_str(x: Fraction) -> str:
    """Lowest-terms "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def decimal_str(x: Fraction) -> str:
    """Correctly rounded 12-significant-digit decimal (round half to even)."""
    x = Fraction(x)
    return str(_CONTEXT.divide(Decimal(x.numerator), Decimal(x.denominator)))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", an integer, or a decimal literal such as "1.5" or "1e-6" exactly."""
    return Fraction(text.strip())


def put_rational(record: dict, key: str, value: Fraction) -> None:
    record[key] = rational_str(value)
    record[f"{key}_decimal"] = decimal_str(value)


def int_list(values) -> str:
    return ",".join(str(v) for v in values)


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def to_json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def to_csv(records: list[dict]) -> str:
    """Header from the first record, then one row per record."""
    if not records:
        return ""
    buf = io.StringIO()
    fields = list(records[0])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for r in records:
        writer.writerow([_cell(r.get(k, "")) for k in fields])
    return buf.getvalue()

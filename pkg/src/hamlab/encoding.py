"""Rational value tokens and report emission shared by the file formats."""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .errors import InvalidInputError


def rational_to_token(value: Fraction) -> int | str:
    """Plain integer when integral, otherwise a "p/q" string."""
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def rational_from_token(token) -> Fraction:
    if isinstance(token, bool):
        raise InvalidInputError(f"expected a rational token, got {token!r}")
    if isinstance(token, int):
        return Fraction(token)
    if isinstance(token, str):
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad rational token {token!r}: {exc}") from exc
    raise InvalidInputError(f"expected integer or 'p/q' string, got {token!r}")


def value_token(value):
    """Serialize ints, Fractions, and floats for records and CSV cells."""
    if isinstance(value, Fraction):
        return rational_to_token(value)
    if isinstance(value, float):
        return value
    if value is None or isinstance(value, (int, str)):
        return value
    raise InvalidInputError(f"cannot serialize value {value!r}")


def write_records(rows: Iterable[dict], stream: TextIO) -> None:
    """Line-delimited JSON records with sorted keys."""
    for row in rows:
        stream.write(json.dumps(row, sort_keys=True))
        stream.write("\n")


def write_csv(rows: Iterable[dict], fieldnames: Sequence[str], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)

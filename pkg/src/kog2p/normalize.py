"""Replace non-Korean symbols with Korean grapheme strings.

Numbers run through a small state machine over the digit string; dates,
times, scores, expressions and phone numbers are recognized by format and
read with the tables in data/readings.tsv.  Abbreviations and acronyms
pronounced as words are not expanded here: they come back as lexicon
requests for the morpheme phonetic dictionary.
"""

import enum
import re
from pathlib import Path
from typing import NamedTuple, Optional

from .errors import MalformedNumber, ResourceError, Unclassifiable


class TokenKind(enum.Enum):
    NUMBER = "number"
    DATE = "date"
    TIME = "time"
    SCORE = "score"
    MATH_EXPR = "math"
    PHONE = "phone"
    ABBREVIATION = "abbreviation"
    SPELLED_ACRONYM = "spelled_acronym"
    WORD_ACRONYM = "word_acronym"


SINO = "sino"
NATIVE = "native"


class Expansion(NamedTuple):
    kind: TokenKind
    hangul: Optional[str]  # None when the token defers to the lexicon
    lexicon_key: Optional[str]


class ReadingTable:
    """Digit/place/letter/unit words keyed by kind."""

    def __init__(self, rows):
        self.digits: dict[str, str] = {}
        self.places: dict[int, str] = {}
        self.groups: list[tuple[int, str]] = []
        self.words: dict[str, str] = {}
        self.native: dict[int, str] = {}
        self.native_combining: dict[int, str] = {}
        self.counters: set[str] = set()
        self.letters: dict[str, str] = {}
        self.units: dict[str, str] = {}
        self.months: dict[str, int] = {}
        self.word_acronyms: set[str] = set()
        for kind, key, value in rows:
            if kind == "digit":
                self.digits[key] = value
            elif kind == "place":
                self.places[int(key)] = value
            elif kind == "group":
                self.groups.append((int(key), value))
            elif kind == "word":
                self.words[key] = value
            elif kind == "native":
                self.native[int(key)] = value
            elif kind == "native_combining":
                self.native_combining[int(key)] = value
            elif kind == "counter":
                self.counters.add(key)
            elif kind == "letter":
                self.letters[key] = value
            elif kind == "unit":
                self.units[key] = value
            elif kind == "month":
                self.months[key] = int(value)
            elif kind == "wordacronym":
                self.word_acronyms.add(key)
            else:
                raise ValueError(f"unknown reading kind {kind!r}")
        self.groups.sort(reverse=True)


def load_readings(path: Path) -> ReadingTable:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ResourceError(path, line_no, "expected 3 tab-separated fields")
            rows.append(tuple(parts))
    try:
        return ReadingTable(rows)
    except ValueError as exc:
        raise ResourceError(path, 0, str(exc)) from exc


_NUMBER_RE = re.compile(r"[+-]?(\d{1,3}(,\d{3})+|\d+)(\.\d+)?$")
_DATE_SLASH_RE = re.compile(r"(\d{1,2})/(\d{1,2})/(\d{2,4})$")
_DATE_MON_RE = re.compile(r"(\d{1,2})-([A-Za-z]{3})-(\d{2,4})$")
_COLON_RE = re.compile(r"(\d{1,2}):(\d{2})$")
_SCORE_RE = re.compile(r"(\d+):(\d+)$")
_PHONE_RE = re.compile(r"\d[\d-]*\d$")
_MATH_RE = re.compile(r"(\d+(?:\.\d+)?)([+\-*/=])(\d+(?:\.\d+)?)$")


def classify(token: str, readings: ReadingTable) -> TokenKind:
    """Assign exactly one kind to a non-Korean token; raises Unclassifiable."""
    if _NUMBER_RE.fullmatch(token):
        return TokenKind.NUMBER
    if _DATE_SLASH_RE.fullmatch(token):
        return TokenKind.DATE
    m = _DATE_MON_RE.fullmatch(token)
    if m and m.group(2).capitalize() in readings.months:
        return TokenKind.DATE
    m = _COLON_RE.fullmatch(token)
    if m and int(m.group(1)) <= 23 and int(m.group(2)) <= 59:
        return TokenKind.TIME
    if _SCORE_RE.fullmatch(token):
        return TokenKind.SCORE
    if _PHONE_RE.fullmatch(token) and sum(c.isdigit() for c in token) >= 7:
        return TokenKind.PHONE
    if _MATH_RE.fullmatch(token):
        return TokenKind.MATH_EXPR
    if token.isalpha() and token.isupper() and len(token) >= 2:
        if token in readings.word_acronyms:
            return TokenKind.WORD_ACRONYM
        return TokenKind.SPELLED_ACRONYM
    if token.isalpha():
        return TokenKind.ABBREVIATION
    raise Unclassifiable(token)


def _read_group(value: int, readings: ReadingTable) -> str:
    """Read 1..9999 positionally; the unit digit word 일 is dropped before
    place words (5400 -> 오천사백, not 오일천...)."""
    parts = []
    for place in (1000, 100, 10):
        d, value = divmod(value, place)
        if d:
            if d > 1:
                parts.append(readings.digits[str(d)])
            parts.append(readings.places[place])
    if value:
        parts.append(readings.digits[str(value)])
    return "".join(parts)


def _read_integer_sino(value: int, readings: ReadingTable) -> str:
    if value == 0:
        return readings.digits["0"]
    parts = []
    rest = value
    for group_value, group_word in readings.groups:
        g, rest = divmod(rest, group_value)
        if not g:
            continue
        # bare 만 for 10000; larger group words keep the leading 일
        if g == 1 and group_value == 10000:
            parts.append(group_word)
        else:
            parts.append(_read_group(g, readings) if g < 10000 else _read_integer_sino(g, readings))
            parts.append(group_word)
    if rest:
        parts.append(_read_group(rest, readings))
    return "".join(parts)


def _read_integer_native(value: int, readings: ReadingTable, combining: bool) -> str:
    if not 1 <= value <= 99:
        raise MalformedNumber(f"native reading covers 1..99 only, got {value}")
    tens, ones = divmod(value, 10)
    parts = []
    if tens:
        if combining and tens == 2 and ones == 0:
            return readings.native_combining[20]
        parts.append(readings.native[tens * 10])
    if ones:
        table = readings.native_combining if combining else {}
        parts.append(table.get(ones) or readings.native[ones])
    return "".join(parts)


def expand_number(
    digits: str,
    readings: ReadingTable,
    style: str = SINO,
    combining: bool = False,
) -> str:
    """Expand a number token.  Sino readings handle signs, grouping commas and
    decimals; native readings cover bare integers 1..99."""
    m = _NUMBER_RE.fullmatch(digits)
    if not m:
        raise MalformedNumber(f"not a number: {digits!r}")
    sign = ""
    body = digits
    if body[0] in "+-":
        sign, body = body[0], body[1:]
    body = body.replace(",", "")
    int_part, _, frac_part = body.partition(".")
    if style == NATIVE:
        if sign or frac_part:
            raise MalformedNumber(f"native reading cannot express {digits!r}")
        return _read_integer_native(int(int_part), readings, combining)
    parts = []
    if sign == "-":
        parts.append(readings.words["minus"])
    elif sign == "+":
        parts.append(readings.words["plus"])
    parts.append(_read_integer_sino(int(int_part), readings))
    if frac_part:
        parts.append(readings.words["point"])
        parts.extend(readings.digits[d] for d in frac_part)
    return "".join(parts)


def _expand_date(token: str, readings: ReadingTable) -> str:
    m = _DATE_SLASH_RE.fullmatch(token)
    if m:
        day, month, year = (int(g) for g in m.groups())
    else:
        m = _DATE_MON_RE.fullmatch(token)
        day, year = int(m.group(1)), int(m.group(3))
        month = readings.months[m.group(2).capitalize()]
    return (
        _read_integer_sino(year, readings) + readings.units["year"]
        + _read_integer_sino(month, readings) + readings.units["month"]
        + _read_integer_sino(day, readings) + readings.units["day"]
    )


def _expand_time(token: str, readings: ReadingTable) -> str:
    m = _COLON_RE.fullmatch(token)
    hour, minute = int(m.group(1)), int(m.group(2))
    # hours read natively (two o'clock is 두시), minutes in Sino-Korean
    hour_word = _read_integer_native(hour, readings, combining=True) if hour else readings.digits["0"]
    out = hour_word + readings.units["hour"]
    if minute:
        out += _read_integer_sino(minute, readings) + readings.units["minute"]
    return out


def _expand_score(token: str, readings: ReadingTable) -> str:
    a, b = _SCORE_RE.fullmatch(token).groups()
    return (
        _read_integer_sino(int(a), readings)
        + readings.words["versus"]
        + _read_integer_sino(int(b), readings)
    )


def _expand_math(token: str, readings: ReadingTable) -> str:
    left, op, right = _MATH_RE.fullmatch(token).groups()
    left_r = expand_number(left, readings)
    right_r = expand_number(right, readings)
    if op == "/":
        # fractions read denominator-first: 1/3 -> 삼분의일
        return right_r + readings.words["fraction"] + left_r
    op_word = {
        "+": readings.words["add"],
        "-": readings.words["subtract"],
        "*": readings.words["multiply"],
        "=": readings.words["equals"],
    }[op]
    return left_r + op_word + right_r


def _expand_phone(token: str, readings: ReadingTable) -> str:
    zero = readings.words["zero_phone"]
    return "".join(zero if d == "0" else readings.digits[d] for d in token if d.isdigit())


def spell_out(token: str, readings: ReadingTable) -> str:
    """Per-character fallback: letters by name, digits by word.  Characters
    with no reading are dropped."""
    parts = []
    for ch in token:
        if ch.isdigit():
            parts.append(readings.digits[ch])
        elif ch.upper() in readings.letters:
            parts.append(readings.letters[ch.upper()])
    return "".join(parts)


def expand_token(
    token: str,
    readings: ReadingTable,
    number_style: str = SINO,
) -> Expansion:
    """Classify and expand one non-Korean token.

    Abbreviations and word acronyms come back as lexicon requests; everything
    else expands to Hangul graphemes here.  Raises Unclassifiable when no
    format matches (callers fall back to spell_out).
    """
    kind = classify(token, readings)
    if kind == TokenKind.NUMBER:
        combining = number_style == NATIVE
        try:
            hangul = expand_number(token, readings, style=number_style, combining=combining)
        except MalformedNumber:
            # native reading requested but out of range: fall back to Sino
            hangul = expand_number(token, readings, style=SINO)
        return Expansion(kind, hangul, None)
    if kind == TokenKind.DATE:
        return Expansion(kind, _expand_date(token, readings), None)
    if kind == TokenKind.TIME:
        return Expansion(kind, _expand_time(token, readings), None)
    if kind == TokenKind.SCORE:
        return Expansion(kind, _expand_score(token, readings), None)
    if kind == TokenKind.MATH_EXPR:
        return Expansion(kind, _expand_math(token, readings), None)
    if kind == TokenKind.PHONE:
        return Expansion(kind, _expand_phone(token, readings), None)
    if kind == TokenKind.SPELLED_ACRONYM:
        return Expansion(kind, "".join(readings.letters[c] for c in token), None)
    # abbreviations and word acronyms are enrolled in the phonetic dictionary
    return Expansion(kind, None, token)

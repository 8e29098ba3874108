"""Hangul codec: precomposed syllables <-> jamo triples <-> ASCII romanization.

The engine works on decomposed jamo internally; the romanization exists only
at file-format and test boundaries.  The alphabet lives in data/romanization.tsv
and is loaded once per process (rule files may override it via the resource
loader).
"""

from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InvalidTriple, NonHangulCharacter, ResourceError, UnknownToken

# jamo classes
INITIAL = "I"
VOWEL = "V"
FINAL = "F"

# standard inventories, in code-point order
INITIALS = list("ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ")
VOWELS = list("ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ")
FINALS = list("ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ")

_INITIAL_INDEX = {s: i for i, s in enumerate(INITIALS)}
_VOWEL_INDEX = {s: i for i, s in enumerate(VOWELS)}
_FINAL_INDEX = {s: i + 1 for i, s in enumerate(FINALS)}  # 0 = no final

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3

NULL_INITIAL = "ㅇ"  # the silence onset

SYLLABLE_SEP = "-"


class Jamo(NamedTuple):
    cls: str  # INITIAL / VOWEL / FINAL
    sym: str  # compatibility jamo character


class Syllable(NamedTuple):
    initial: str
    vowel: str
    final: Optional[str]


def is_hangul_syllable(char: str) -> bool:
    return SYLLABLE_BASE <= ord(char) <= SYLLABLE_LAST


def is_hangul_text(text: str) -> bool:
    return bool(text) and all(is_hangul_syllable(c) for c in text)


def decompose(text: str) -> list[Syllable]:
    """Split precomposed Hangul into syllable triples.

    Raises NonHangulCharacter for anything outside U+AC00..U+D7A3; callers
    normalize such symbols first.
    """
    out = []
    for pos, char in enumerate(text):
        if not is_hangul_syllable(char):
            raise NonHangulCharacter(char, pos)
        idx = ord(char) - SYLLABLE_BASE
        f = idx % 28
        i, v = divmod(idx // 28, 21)
        out.append(Syllable(INITIALS[i], VOWELS[v], FINALS[f - 1] if f else None))
    return out


def compose(syllables: Sequence[Syllable]) -> str:
    """Inverse of decompose; raises InvalidTriple on non-composable symbols."""
    chars = []
    for syl in syllables:
        try:
            i = _INITIAL_INDEX[syl.initial]
            v = _VOWEL_INDEX[syl.vowel]
            f = _FINAL_INDEX[syl.final] if syl.final is not None else 0
        except KeyError as exc:
            raise InvalidTriple(f"not a composable triple: {syl}") from exc
        chars.append(chr(SYLLABLE_BASE + (i * 21 + v) * 28 + f))
    return "".join(chars)


def syllables_to_jamo(syllables: Sequence[Syllable]) -> list[Jamo]:
    """Flatten triples into a class-tagged jamo sequence (null onsets kept)."""
    seq = []
    for syl in syllables:
        seq.append(Jamo(INITIAL, syl.initial))
        seq.append(Jamo(VOWEL, syl.vowel))
        if syl.final is not None:
            seq.append(Jamo(FINAL, syl.final))
    return seq


def jamo_to_syllables(seq: Sequence[Jamo]) -> list[Syllable]:
    """Regroup a flat jamo sequence into triples.

    Only sequences with strict (initial, vowel, final?) structure regroup;
    anything else (e.g. a dangling resyllabification consonant) raises
    InvalidTriple.
    """
    out = []
    i = 0
    while i < len(seq):
        if i + 1 >= len(seq) or seq[i].cls != INITIAL or seq[i + 1].cls != VOWEL:
            raise InvalidTriple(f"not syllable-structured at jamo {i}: {seq[i:i+2]}")
        final = None
        step = 2
        if i + 2 < len(seq) and seq[i + 2].cls == FINAL:
            final = seq[i + 2].sym
            step = 3
        out.append(Syllable(seq[i].sym, seq[i + 1].sym, final))
        i += step
    return out


class RomanizationTable:
    """One ASCII token per (class, jamo); the TSV file is the normative copy."""

    def __init__(self, rows: Iterable[tuple[str, str, str]]):
        self.encode: dict[tuple[str, str], str] = {}
        self.initial_tokens: dict[str, str] = {}
        self.vowel_tokens: dict[str, str] = {}
        self.final_tokens: dict[str, str] = {}
        for cls, token, sym in rows:
            self.encode[(cls, sym)] = token
            if cls == INITIAL:
                if token:
                    self.initial_tokens[token] = sym
            elif cls == VOWEL:
                self.vowel_tokens[token] = sym
            else:
                self.final_tokens[token] = sym
        self._initial_by_len = sorted(self.initial_tokens, key=len, reverse=True)
        self._vowel_by_len = sorted(self.vowel_tokens, key=len, reverse=True)
        self._final_by_len = sorted(self.final_tokens, key=len, reverse=True)

    def token(self, jamo: Jamo) -> str:
        return self.encode[(jamo.cls, jamo.sym)]

    # -- segment parsing -------------------------------------------------

    def parse_segment(self, seg: str, base: int = 0) -> list[Jamo]:
        """Parse one syllable segment: initial? vowel final? trailing*.

        The initial slot may be empty (the silence onset); a final cluster may
        be followed by dangling consonants awaiting resyllabification, parsed
        longest-final-first, then longest-initial for the tail.
        """
        if not seg:
            raise UnknownToken(seg, base)
        parses = self._segment_parses(seg)
        if not parses:
            raise UnknownToken(seg, base)
        return parses[0]

    def _segment_parses(self, seg: str) -> list[list[Jamo]]:
        results = []
        initial_choices = [t for t in self._initial_by_len if seg.startswith(t)]
        initial_choices.append("")  # silence onset
        for init_tok in initial_choices:
            init_sym = self.initial_tokens.get(init_tok, NULL_INITIAL)
            rest = seg[len(init_tok):]
            for vow_tok in self._vowel_by_len:
                if not rest.startswith(vow_tok):
                    continue
                tail = rest[len(vow_tok):]
                head = [Jamo(INITIAL, init_sym), Jamo(VOWEL, self.vowel_tokens[vow_tok])]
                if not tail:
                    results.append(head)
                    continue
                coda = self._parse_coda(tail)
                if coda is not None:
                    results.append(head + coda)
            if results:
                # longest-match initial wins; no need to try shorter ones
                break
        return results

    def _parse_coda(self, tail: str) -> Optional[list[Jamo]]:
        for fin_tok in self._final_by_len:
            if not tail.startswith(fin_tok):
                continue
            rest = tail[len(fin_tok):]
            trailing = self._parse_trailing(rest)
            if trailing is not None:
                return [Jamo(FINAL, self.final_tokens[fin_tok])] + trailing
        return None

    def _parse_trailing(self, rest: str) -> Optional[list[Jamo]]:
        out: list[Jamo] = []
        while rest:
            for tok in self._initial_by_len:
                if rest.startswith(tok):
                    out.append(Jamo(INITIAL, self.initial_tokens[tok]))
                    rest = rest[len(tok):]
                    break
            else:
                return None
        return out


_DEFAULT_TABLE: Optional[RomanizationTable] = None


def load_romanization(path: Path) -> RomanizationTable:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ResourceError(path, line_no, "expected 3 tab-separated fields")
            cls_name, token, sym = parts
            cls = {"initial": INITIAL, "vowel": VOWEL, "final": FINAL}.get(cls_name)
            if cls is None:
                raise ResourceError(path, line_no, f"bad class {cls_name!r}")
            inventory = {INITIAL: INITIALS, VOWEL: VOWELS, FINAL: FINALS}[cls]
            if sym not in inventory:
                raise ResourceError(path, line_no, f"{sym!r} not in the {cls_name} inventory")
            rows.append((cls, token, sym))
    table = RomanizationTable(rows)
    missing = [
        (cls, sym)
        for cls, inv in ((INITIAL, INITIALS), (VOWEL, VOWELS), (FINAL, FINALS))
        for sym in inv
        if (cls, sym) not in table.encode
    ]
    if missing:
        raise ResourceError(path, 0, f"alphabet incomplete, missing {missing}")
    return table


def default_table() -> RomanizationTable:
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = load_romanization(Path(__file__).parent / "data" / "romanization.tsv")
    return _DEFAULT_TABLE


def romanize(jamo: Sequence[Jamo], table: Optional[RomanizationTable] = None) -> str:
    """Canonical ASCII form: tokens concatenated, '-' between syllables.

    A syllable starts at an initial-class jamo directly followed by a vowel;
    dangling consonants attach to the preceding syllable without a separator.
    """
    table = table or default_table()
    parts = []
    for i, j in enumerate(jamo):
        starts_syllable = (
            i > 0
            and j.cls == INITIAL
            and i + 1 < len(jamo)
            and jamo[i + 1].cls == VOWEL
        )
        if starts_syllable:
            parts.append(SYLLABLE_SEP)
        parts.append(table.token(j))
    return "".join(parts)


def deromanize(text: str, table: Optional[RomanizationTable] = None) -> list[Jamo]:
    """Parse canonical ASCII back to jamo; raises UnknownToken."""
    table = table or default_table()
    if not text:
        return []
    out = []
    pos = 0
    for seg in text.split(SYLLABLE_SEP):
        out.extend(table.parse_segment(seg, pos))
        pos += len(seg) + 1
    return out


def display_form(jamo: Sequence[Jamo], table: Optional[RomanizationTable] = None) -> str:
    """Tokens concatenated with no separators (the human-facing word form)."""
    table = table or default_table()
    return "".join(table.token(j) for j in jamo)


def romanize_syllables(syllables: Sequence[Syllable], table: Optional[RomanizationTable] = None) -> str:
    return romanize(syllables_to_jamo(syllables), table)


def deromanize_syllables(text: str, table: Optional[RomanizationTable] = None) -> list[Syllable]:
    return jamo_to_syllables(deromanize(text, table))

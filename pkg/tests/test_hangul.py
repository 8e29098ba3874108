"""Codec tests: syllable arithmetic, romanization round trips, tokenization."""

import random

import pytest

from kog2p.errors import InvalidTriple, NonHangulCharacter, UnknownToken
from kog2p.hangul import (
    FINAL,
    FINALS,
    INITIAL,
    INITIALS,
    VOWEL,
    VOWELS,
    Jamo,
    Syllable,
    compose,
    decompose,
    default_table,
    deromanize,
    deromanize_syllables,
    display_form,
    jamo_to_syllables,
    romanize,
    romanize_syllables,
    syllables_to_jamo,
)


def oracle_decompose(char):
    """Independent code-point arithmetic: code-0xAC00 = (i*21+v)*28+f."""
    idx = ord(char) - 0xAC00
    f = idx % 28
    v = (idx // 28) % 21
    i = idx // (28 * 21)
    return Syllable(INITIALS[i], VOWELS[v], FINALS[f - 1] if f else None)


def test_decompose_first_code_point():
    assert decompose("가") == [Syllable("ㄱ", "ㅏ", None)]


@pytest.mark.parametrize("char", ["밥", "값", "방", "뜬", "섯"])
def test_decompose_matches_arithmetic_oracle(char):
    assert decompose(char) == [oracle_decompose(char)]


def test_compose_simple():
    assert compose([Syllable("ㄱ", "ㅏ", None)]) == "가"
    assert compose([Syllable("ㅍ", "ㅏ", "ㅇ")]) == compose([oracle_decompose("팡")])


def test_round_trip_all_syllables():
    text = "".join(chr(c) for c in range(0xAC00, 0xD7A4))
    assert len(text) == 11172
    assert compose(decompose(text)) == text


def test_decompose_rejects_non_hangul():
    with pytest.raises(NonHangulCharacter) as exc:
        decompose("가4나")
    assert exc.value.position == 1


def test_compose_rejects_bad_symbols():
    with pytest.raises(InvalidTriple):
        compose([Syllable("ㅏ", "ㄱ", None)])
    with pytest.raises(InvalidTriple):
        # tense ㄸ is not a composable final
        compose([Syllable("ㄱ", "ㅏ", "ㄸ")])


def test_romanize_table_one_entry_per_jamo():
    table = default_table()
    assert len(table.encode) == 19 + 21 + 27


def test_romanize_pang_gabs():
    syllables = [Syllable("ㅍ", "ㅏ", "ㅇ"), Syllable("ㄱ", "ㅏ", "ㅄ")]
    assert romanize_syllables(syllables) == "pang-gabs"


def test_deromanize_kag_ryo():
    assert deromanize_syllables("kag-ryo") == [
        Syllable("ㅋ", "ㅏ", "ㄱ"),
        Syllable("ㄹ", "ㅛ", None),
    ]


def test_deromanize_empty():
    assert deromanize("") == []


def test_deromanize_silence_onset():
    assert deromanize_syllables("eun") == [Syllable("ㅇ", "ㅡ", "ㄴ")]
    assert romanize_syllables([Syllable("ㅇ", "ㅗ", None)]) == "o"


def test_deromanize_trailing_consonant():
    # a dangling consonant after the coda stays attached to its syllable
    jamo = deromanize("pang-ggabss")
    assert romanize(jamo) == "pang-ggabss"
    assert [j.sym for j in jamo if j.cls == VOWEL] == ["ㅏ", "ㅏ"]


def test_deromanize_unknown_token():
    with pytest.raises(UnknownToken):
        deromanize("gxa")
    with pytest.raises(UnknownToken):
        deromanize("pang--gabs")


def test_display_form_concatenates():
    assert display_form(deromanize("kang-nyo")) == "kangnyo"
    assert display_form(deromanize("ta-seot")) == "taseot"


def test_exhaustive_romanization_round_trip():
    table = default_table()
    for code in range(0xAC00, 0xD7A4):
        syl = decompose(chr(code))
        jamo = syllables_to_jamo(syl)
        assert deromanize(romanize(jamo, table), table) == jamo


def test_two_symbol_concatenations_decode_uniquely():
    """Initial+vowel and vowel+final concatenations parse back to the pair."""
    table = default_table()
    for init_tok, init_sym in list(table.initial_tokens.items()) + [("", "ㅇ")]:
        for vow_tok, vow_sym in table.vowel_tokens.items():
            parsed = table.parse_segment(init_tok + vow_tok)
            assert parsed == [Jamo(INITIAL, init_sym), Jamo(VOWEL, vow_sym)]
    for vow_tok, vow_sym in table.vowel_tokens.items():
        for fin_tok, fin_sym in table.final_tokens.items():
            parsed = table.parse_segment("g" + vow_tok + fin_tok)
            assert parsed == [
                Jamo(INITIAL, "ㄱ"),
                Jamo(VOWEL, vow_sym),
                Jamo(FINAL, fin_sym),
            ]


def test_random_sequences_round_trip():
    rng = random.Random(20260809)
    for _ in range(500):
        syllables = [
            Syllable(
                rng.choice(INITIALS),
                rng.choice(VOWELS),
                rng.choice([None] + FINALS),
            )
            for _ in range(rng.randint(1, 6))
        ]
        jamo = syllables_to_jamo(syllables)
        assert deromanize(romanize(jamo)) == jamo
        assert jamo_to_syllables(jamo) == syllables

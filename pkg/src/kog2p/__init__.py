"""Rule-driven Korean grapheme-to-phoneme engine."""

from .hangul import Jamo, Syllable, compose, decompose, deromanize, romanize

__all__ = [
    "Jamo",
    "Syllable",
    "compose",
    "decompose",
    "deromanize",
    "romanize",
]

__version__ = "0.1.0"

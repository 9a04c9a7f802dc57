"""Permutation-relation monoids S_n(H): rewriting, group images and checks."""

from .presentation import Presentation, build_presentation, parse_presentation
from .word import format_word, word

__all__ = ["Presentation", "build_presentation", "parse_presentation", "format_word", "word"]
__version__ = "0.1.0"

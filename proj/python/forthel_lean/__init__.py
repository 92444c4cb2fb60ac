"""Translate Simplified ForTheL texts into Lean 4 `example` statements."""

from ._core import CorpusFormatError, check_corpus, normalize_output, run, translate

__all__ = ["CorpusFormatError", "check_corpus", "normalize_output", "run", "translate"]

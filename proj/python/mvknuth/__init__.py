"""Knuth equivalence of words and galleries, their cells and lattice images."""

import json

from ._core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Error,
    Gallery,
    InternalError,
    InvalidValue,
    ParseError,
    PrecisionError,
    RankMismatch,
    Word,
    knuth_class,
    knuth_equivalent,
    polyline_svg,
    ssyt_reading_word,
    ssyt_rows,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "Error",
    "Gallery",
    "InternalError",
    "InvalidValue",
    "ParseError",
    "PrecisionError",
    "RankMismatch",
    "Word",
    "cell_report",
    "compare",
    "image_points",
    "knuth_class",
    "knuth_equivalent",
    "normal_form",
    "polyline_svg",
    "ssyt_reading_word",
    "ssyt_rows",
    "theorem_suite",
]


def _word(w):
    return Word.parse(w) if isinstance(w, str) else w


def cell_report(gallery):
    """Crossings, Psi-sets, dimension and factor word of a gallery, as a dict."""
    return json.loads(_core._cell_report(Gallery.parse(gallery) if isinstance(gallery, str) else gallery))


def compare(first, second, p=2, precision=0, budget=DEFAULT_BUDGET, threads=1):
    """Verdict and evidence for the cell images of two words."""
    return json.loads(_core._compare(_word(first), _word(second), p, precision, budget, threads))


def image_points(source, p=2, precision=0, budget=DEFAULT_BUDGET, threads=1):
    """Lattice points of the cell of a Word or Gallery: a dict with a sorted "points" list."""
    if isinstance(source, Gallery):
        return json.loads(_core._image_gallery(source, p, precision, budget, threads))
    return json.loads(_core._image_word(_word(source), p, precision, budget, threads))


def normal_form(word):
    """The rewrite trace of the factor word of `word`, ending in its normal form."""
    return json.loads(_core._normal_form(_word(word)))


def theorem_suite(n, max_len, p=2, budget=DEFAULT_BUDGET, threads=1):
    return json.loads(_core._theorem_suite(n, max_len, p, budget, threads))

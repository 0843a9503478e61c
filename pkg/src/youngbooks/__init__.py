"""Selberg books, Young books and their exact counts."""

from .shapes import BookShape, PageShape, Partition, nrs_book, ars_book, parse_book, staircase_book
from .combinat import Filling, count_book, count_fillings, enumerate_fillings
from .formulas import sb_count, sp_count, yb_count, yb_count_nrs
from .genfun import MultiPoly, sb_genfun, yb_genfun

__all__ = [
    "BookShape",
    "Filling",
    "MultiPoly",
    "PageShape",
    "Partition",
    "ars_book",
    "count_book",
    "count_fillings",
    "enumerate_fillings",
    "nrs_book",
    "parse_book",
    "sb_count",
    "sb_genfun",
    "sp_count",
    "staircase_book",
    "yb_count",
    "yb_count_nrs",
    "yb_genfun",
]

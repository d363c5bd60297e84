"""Presentation language, builders and reports."""
from .build import (build_action, build_algebra, build_hopf, build_poisson, load_doc, parse_elem,
                    parse_poly, resolve_hopf)
from .parser import ExpSeries, Ident, ParseError, PresentationDoc, parse, parse_expr
from .printer import format_document, format_poly, format_ratfn
from .report import Report

__all__ = [
    "parse", "parse_expr", "ParseError", "PresentationDoc", "Ident", "ExpSeries",
    "format_document", "format_poly", "format_ratfn", "build_algebra", "build_poisson",
    "build_hopf", "build_action", "resolve_hopf", "load_doc", "parse_elem", "parse_poly", "Report",
]

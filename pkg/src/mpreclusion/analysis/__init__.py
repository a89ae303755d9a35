"""Desk-scale verification harness: enumeration, extremal functions, scans, registry."""

from .enumeration import EnumerationCapExceeded, enumerate_graphs, iso_representatives, labeled_table
from .extremal import brute_f, brute_g, brute_s
from .registry import REGISTRY, default_suite, theorem_ids, verify
from .reports import Counterexample, ExtremalValue, Mode, Status, TheoremReport, summary_csv
from .scans import nordhaus_gaddum_scan

__all__ = [
    "Counterexample",
    "EnumerationCapExceeded",
    "ExtremalValue",
    "Mode",
    "REGISTRY",
    "Status",
    "TheoremReport",
    "brute_f",
    "brute_g",
    "brute_s",
    "default_suite",
    "enumerate_graphs",
    "iso_representatives",
    "labeled_table",
    "nordhaus_gaddum_scan",
    "summary_csv",
    "theorem_ids",
    "verify",
]

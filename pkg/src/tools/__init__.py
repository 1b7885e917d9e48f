"""ReesType input parsing and report tools."""

from src.tools.parsing import (
    RingFile,
    load_ring_file,
    parse_ideal_argument,
    parse_polynomial,
    parse_ring_file,
)
from src.tools.report import build_report, dump_report, inputs_digest

__all__ = [
    "RingFile",
    "load_ring_file",
    "parse_ideal_argument",
    "parse_polynomial",
    "parse_ring_file",
    "build_report",
    "dump_report",
    "inputs_digest",
]

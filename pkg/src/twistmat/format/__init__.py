"""Report formatting module."""

from .formatter import (
    build_report,
    serialize_automorphism,
    serialize_element,
    to_csv,
    to_json,
    write_report,
    write_timing,
)

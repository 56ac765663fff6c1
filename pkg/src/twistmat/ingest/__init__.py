"""Input decoding module."""

from .parser import (
    parse_automorphism,
    parse_element,
    parse_group_element,
    parse_index_set,
    parse_quotient,
    parse_ring_automorphism,
    parse_ring_spec,
    parse_word,
)

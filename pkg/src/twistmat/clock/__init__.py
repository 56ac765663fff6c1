"""Run timing module."""

from .clock import Stopwatch, format_elapsed

"""Wall-clock timing of experiment runs."""

import threading
import time
from typing import Literal

StopwatchState = Literal["running", "stopped"]


def format_elapsed(seconds: float) -> str:
    """Render a duration as H:MM:SS, or M:SS below one hour."""
    total = max(0, int(round(seconds)))
    minutes, sec = divmod(total, 60)
    hours, minutes = divmod(minutes, 60)
    if hours:
        return f"{hours}:{minutes:02d}:{sec:02d}"
    return f"{minutes}:{sec:02d}"


class Stopwatch:
    """Accumulates time.perf_counter intervals between start() and stop()."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._state: StopwatchState = "stopped"
        self._started_at = 0.0
        self._total = 0.0

    def __enter__(self) -> "Stopwatch":
        self.start()
        return self

    def __exit__(self, *exc) -> None:
        self.stop()

    def get_state(self) -> StopwatchState:
        with self._lock:
            return self._state

    def start(self) -> None:
        with self._lock:
            if self._state == "stopped":
                self._started_at = time.perf_counter()
                self._state = "running"

    def stop(self) -> None:
        with self._lock:
            if self._state == "running":
                self._total += time.perf_counter() - self._started_at
                self._state = "stopped"

    def reset(self) -> None:
        with self._lock:
            self._state = "stopped"
            self._total = 0.0

    @property
    def elapsed(self) -> float:
        """Seconds accumulated so far, including a running interval."""
        with self._lock:
            if self._state == "running":
                return self._total + time.perf_counter() - self._started_at
            return self._total

    def get_elapsed_display(self) -> str:
        return format_elapsed(self.elapsed)

import pytest

from twistmat.clock import Stopwatch, format_elapsed
from twistmat.clock import clock as clock_module


@pytest.mark.parametrize("seconds, text", [(0, "0:00"), (65, "1:05"), (3725, "1:02:05"), (-3, "0:00"), (59.6, "1:00")])
def test_format_elapsed(seconds, text):
    assert format_elapsed(seconds) == text


@pytest.fixture
def ticks(monkeypatch):
    now = [100.0]
    monkeypatch.setattr(clock_module.time, "perf_counter", lambda: now[0])
    return now


def test_stopwatch_accumulates(ticks):
    watch = Stopwatch()
    assert watch.get_state() == "stopped"
    watch.start()
    ticks[0] += 5
    watch.stop()
    ticks[0] += 100
    watch.start()
    ticks[0] += 2
    assert watch.get_state() == "running"
    assert watch.elapsed == 7
    watch.stop()
    assert watch.get_elapsed_display() == "0:07"
    watch.reset()
    assert watch.elapsed == 0


def test_stopwatch_context_and_idempotence(ticks):
    with Stopwatch() as watch:
        watch.start()
        ticks[0] += 3
    watch.stop()
    assert watch.get_state() == "stopped"
    assert watch.elapsed == 3

"""Abstract cost accounting.

One cost unit is charged per basic operation (adjacency query, set insertion,
symbol read). Algorithms call :func:`tick`; callers wrap a run in
:func:`metering` to read the total. Meters nest: when an inner meter closes,
its count is added to the enclosing one, so composite solvers see the cost of
their parts.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator


class Meter:
    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def __repr__(self) -> str:
        return f"Meter({self.count})"


_current: ContextVar[Meter | None] = ContextVar("parakit_meter", default=None)


def tick(units: int = 1) -> None:
    meter = _current.get()
    if meter is not None:
        meter.count += units


@contextmanager
def metering() -> Iterator[Meter]:
    meter = Meter()
    parent = _current.get()
    token = _current.set(meter)
    try:
        yield meter
    finally:
        _current.reset(token)
        if parent is not None:
            parent.count += meter.count

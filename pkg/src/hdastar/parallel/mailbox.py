"""Per-worker inbound queue of node batches.

Many producers, one consumer. Enqueue never blocks beyond the internal
lock; the owner drains in batch arrival order. Counters make message
conservation checkable: everything enqueued is eventually drained,
nothing is lost or duplicated.

An optional delay function simulates transfer latency for termination
stress tests: a delayed batch is already counted as enqueued (it is in
flight) but stays invisible to drains until its arrival time.
"""

from __future__ import annotations

import threading
import time
from collections import deque


class Mailbox:
    def __init__(self, delay_fn=None):
        self._lock = threading.Lock()
        self._batches: deque = deque()
        self._delay_fn = delay_fn
        self.enqueued = 0
        self.drained = 0

    def enqueue(self, batch) -> None:
        if not batch:
            return
        visible_at = 0.0
        if self._delay_fn is not None:
            visible_at = time.monotonic() + self._delay_fn()
        with self._lock:
            self._batches.append((visible_at, batch))
            self.enqueued += len(batch)

    def drain(self) -> list:
        """Pop every batch that has arrived; nodes in send order."""
        with self._lock:
            if not self._batches:
                return []
            now = time.monotonic() if self._delay_fn is not None else 0.0
            nodes: list = []
            while self._batches and self._batches[0][0] <= now:
                nodes.extend(self._batches.popleft()[1])
            self.drained += len(nodes)
            return nodes

    def quiet(self) -> bool:
        """True when nothing is queued, including in-flight batches."""
        with self._lock:
            return not self._batches

import json
import sys
import threading
from collections import Counter


class Diagnostics:
    """
    Writes structured diagnostics as JSON lines, one event per line, so that
    pipelines can keep stdout clean and still collect per-record problems.
    """

    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stderr
        self.counts = Counter()
        self.unmapped = Counter()
        self._lock = threading.Lock()

    def emit(self, event, **fields):
        line = json.dumps({"event": event, **fields}, ensure_ascii=False, sort_keys=True)
        with self._lock:
            self.counts[event] += 1
            self.stream.write(line + "\n")

    def record_unmapped(self, chars):
        if not chars:
            return
        with self._lock:
            self.unmapped.update(chars)

    def error(self, exc, **fields):
        self.emit("record_error", error=type(exc).__name__, message=str(exc), **fields)

    def fatal(self, exc):
        self.emit("fatal", error=type(exc).__name__, message=str(exc))

    def summary(self):
        for char, count in sorted(self.unmapped.items()):
            self.emit("unmapped_character", char=char, codepoint=f"U+{ord(char):04X}", count=count)
        counts = dict(sorted(self.counts.items()))
        self.emit("summary", counts=counts)
        self.stream.flush()

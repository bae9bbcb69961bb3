"""Expansion traces: who expanded what, in which order.

A trace row is (ordinal, state_key, g, h, f) with ordinals starting at
1 and covering every expansion including reexpansions. Divergence-style
comparisons use the first expansion of each state only.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from hdastar.errors import ConfigError

COLUMNS = ("ordinal", "state_key", "g", "h", "f")


@dataclass
class ExpansionTrace:
    rows: list  # (ordinal, state_key, g, h, f)
    meta: dict = field(default_factory=dict)
    truncated: bool = False
    _first: dict | None = None

    def first_ordinals(self) -> dict:
        """state_key -> ordinal of its first expansion."""
        if self._first is None:
            first: dict = {}
            for ordinal, key, _g, _h, _f in self.rows:
                if key not in first or ordinal < first[key]:
                    first[key] = ordinal
            self._first = first
        return self._first

    def f_values(self) -> dict:
        """state_key -> f at first expansion."""
        out: dict = {}
        seen = self.first_ordinals()
        for ordinal, key, _g, _h, f in self.rows:
            if seen[key] == ordinal:
                out[key] = f
        return out

    def __len__(self):
        return len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        for k in sorted(self.meta):
            buf.write(f"# {k}={self.meta[k]}\n")
        if self.truncated:
            buf.write("# truncated=1\n")
        writer = csv.writer(buf)
        writer.writerow(COLUMNS)
        writer.writerows(self.rows)
        return buf.getvalue()

    def save(self, path):
        with open(path, "w", newline="") as fh:
            fh.write(self.to_csv())

    @classmethod
    def from_csv(cls, text: str) -> "ExpansionTrace":
        meta: dict = {}
        lines = text.splitlines()
        body_start = 0
        for i, line in enumerate(lines):
            if line.startswith("#"):
                part = line[1:].strip()
                if "=" in part:
                    k, v = part.split("=", 1)
                    meta[k.strip()] = v.strip()
                body_start = i + 1
            else:
                body_start = i
                break
        reader = csv.reader(lines[body_start:])
        header = next(reader, None)
        if header is None or tuple(header) != COLUMNS:
            raise ConfigError(f"trace file: expected header {','.join(COLUMNS)}")
        rows = []
        for row in reader:
            if not row:
                continue
            ordinal, key, g, h, f = row
            rows.append((int(ordinal), key, int(g), int(h), int(f)))
        truncated = meta.pop("truncated", "0") == "1"
        return cls(rows, meta, truncated)

    @classmethod
    def load(cls, path) -> "ExpansionTrace":
        with open(path) as fh:
            return cls.from_csv(fh.read())

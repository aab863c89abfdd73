"""On-disk cache for computed integer sequences.

One plain-text table per (variant, bound) pair, with a format-version
header.  A version bump invalidates every existing table; unreadable or
stale files are treated as misses, never as errors.
"""

from __future__ import annotations

import os
from pathlib import Path

FORMAT_VERSION = 1
ENV_CACHE_DIR = "RIBBON_SCHUR_CACHE_DIR"


def default_cache_dir() -> str | None:
    return os.environ.get(ENV_CACHE_DIR)


class SequenceCache:
    """Directory of cached sequences keyed by (variant, bound)."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def path_for(self, variant: str, bound: int) -> Path:
        return self.root / f"{variant}-{bound}.txt"

    def load(self, variant: str, bound: int) -> list[int] | None:
        path = self.path_for(variant, bound)
        try:
            lines = path.read_text(encoding="ascii").splitlines()
        except (OSError, UnicodeDecodeError):
            return None
        header = [
            f"# ribbon-schur sequence cache format {FORMAT_VERSION}",
            f"# variant {variant} bound {bound}",
        ]
        if lines[: len(header)] != header:
            return None
        values = []
        for n, line in enumerate(lines[len(header) :], start=1):
            fields = line.split()
            if len(fields) != 2 or fields[0] != str(n):
                return None
            try:
                values.append(int(fields[1]))
            except ValueError:
                return None
        return values if len(values) == bound else None

    def store(self, variant: str, bound: int, values: list[int]) -> None:
        if len(values) != bound:
            raise ValueError("value count must equal the bound")
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path_for(variant, bound)
        body = [
            f"# ribbon-schur sequence cache format {FORMAT_VERSION}",
            f"# variant {variant} bound {bound}",
        ]
        body += [f"{n} {v}" for n, v in enumerate(values, start=1)]
        tmp = path.with_suffix(".tmp")
        tmp.write_text("\n".join(body) + "\n", encoding="ascii")
        tmp.replace(path)

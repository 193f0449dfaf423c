"""Graph corpora: isomorph-free enumeration and graph6 files."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_rows
from .errors import Graph6ParseError, InvalidArgument
from .graph import Graph
from .graph6 import encode_rows, graph6_decode

log = logging.getLogger(__name__)

MAX_GENERATED = 8


_LEVELS: dict[int, tuple[bytes, ...]] = {}


def _level(n: int, progress: bool = False) -> tuple[bytes, ...]:
    """Sorted canonical graph6 strings of all graphs on n vertices."""
    if n in _LEVELS:
        return _LEVELS[n]
    if n == 1:
        return _LEVELS.setdefault(1, (encode_rows(1, [0]),))
    parents = _level(n - 1, progress)
    seen: set[bytes] = set()
    new = 1 << (n - 1)
    bar = None
    if progress:
        from tqdm import tqdm

        bar = tqdm(total=len(parents), desc=f"n={n}", unit="parent")
    for code in parents:
        base = list(graph6_decode(code).adj) + [0]
        for nbhd in range(new):
            rows = base[:]
            rows[n - 1] = nbhd
            if nbhd:
                for u in range(n - 1):
                    if nbhd >> u & 1:
                        rows[u] |= new
            seen.add(encode_rows(n, canonical_rows(rows, n)))
        if bar is not None:
            bar.update()
    if bar is not None:
        bar.close()
    return _LEVELS.setdefault(n, tuple(sorted(seen)))


@dataclass
class CorpusStream:
    """Ordered, single-consumer source of graphs."""

    source: tuple
    _items: Iterator = field(repr=False)
    cursor: int = 0
    count_emitted: int = 0
    skipped: int = 0

    def __iter__(self):
        return self

    def __next__(self) -> Graph:
        while True:
            item = next(self._items)
            self.cursor += 1
            if item is None:
                self.skipped += 1
                continue
            self.count_emitted += 1
            return item


def enumerate_graph6(n: int, connected_only: bool = False, progress: bool = False) -> list[bytes]:
    if not 1 <= n <= MAX_GENERATED:
        raise InvalidArgument(f"generation supports 1 <= n <= {MAX_GENERATED}, got {n}")
    codes = _level(n, progress)
    if connected_only:
        return [c for c in codes if graph6_decode(c).is_connected()]
    return list(codes)


def enumerate_graphs(n: int, connected_only: bool = False, progress: bool = False) -> CorpusStream:
    """One representative (decoded canonical form) per isomorphism class."""
    codes = enumerate_graph6(n, connected_only, progress)
    return CorpusStream(("generated", n, connected_only), (graph6_decode(c) for c in codes))


def corpus(n_range, connected_only: bool = False) -> Iterator[Graph]:
    for n in n_range:
        yield from enumerate_graphs(n, connected_only)


def _read_lines(path: Path, strict: bool):
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip(b"\r\n")
            if line.startswith(b">>graph6<<"):
                line = line[len(b">>graph6<<"):]
            if not line:
                continue
            try:
                yield graph6_decode(line, strict=True)
            except Graph6ParseError as exc:
                err = Graph6ParseError(str(exc), offset=exc.offset, line=lineno)
                if strict:
                    raise err from None
                log.warning("skipping %s", err)
                yield None


def read_graph6_file(path, strict: bool = True) -> CorpusStream:
    """Stream graphs from a file of graph6 lines.

    Strict mode raises on the first bad line (with its line number); lenient
    mode skips bad lines and counts them in ``stream.skipped``.
    """
    path = Path(path)
    return CorpusStream(("file", str(path)), _read_lines(path, strict))

"""Multi-string scanning over byte texts.

Builds the classic trie-with-failure-links automaton once, then walks a
text left to right reporting, for every position, which pattern layers
have their string ending there.  Transition lookup is comparison based
(sorted label arrays plus binary search), so nothing is assumed about the
alphabet beyond an ordering of byte values.

Each state carries at most one string id (the longest string equal to the
state's path) plus a link to the state of the next-longest string that is
a proper suffix of the path.  Following that chain enumerates every string
ending at the current position, longest first, in time linear in their
number.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from typing import Callable, Iterable, Iterator, NamedTuple

from .pattern import ensure_bytes


class OccEvent(NamedTuple):
    """All subpattern hits ending at one text position (1-based)."""

    position: int
    layers: tuple[int, ...]  # ascending 1-based layer indices


class StreamCounters(NamedTuple):
    positions: int
    failure_steps: int


class _State:
    __slots__ = ("labels", "children", "fail", "word", "out")

    def __init__(self) -> None:
        self.labels: list[int] = []
        self.children: list[_State] = []
        self.fail: _State | None = None
        # id of the distinct string spelled by the path to this state
        self.word: int | None = None
        # nearest state along the failure chain carrying a word
        self.out: _State | None = None

    def child(self, label: int) -> _State | None:
        labels = self.labels
        i = bisect_left(labels, label)
        if i < len(labels) and labels[i] == label:
            return self.children[i]
        return None

    def _add_child(self, label: int) -> _State:
        labels = self.labels
        i = bisect_left(labels, label)
        if i < len(labels) and labels[i] == label:
            return self.children[i]
        node = _State()
        labels.insert(i, label)
        self.children.insert(i, node)
        return node


class Automaton:
    """Shareable matching automaton for a fixed set of strings.

    ``strings`` is one byte string per pattern layer; duplicates are
    allowed and deduplicated internally while remembering every layer a
    string belongs to.
    """

    def __init__(self, strings: Iterable[bytes | str]) -> None:
        pieces = [ensure_bytes(s) for s in strings]
        if not pieces:
            raise ValueError("automaton needs at least one string")
        if any(not s for s in pieces):
            raise ValueError("empty string in automaton input")
        self._root = _State()
        self._words: list[bytes] = []
        self._layer_map: list[list[int]] = []  # word id -> 1-based layers
        self._size = 1
        ids: dict[bytes, int] = {}
        for layer, piece in enumerate(pieces, start=1):
            word_id = ids.get(piece)
            if word_id is None:
                word_id = len(self._words)
                ids[piece] = word_id
                self._words.append(piece)
                self._layer_map.append([])
                node = self._root
                for label in piece:
                    before = node.child(label)
                    node = node._add_child(label)
                    if before is None:
                        self._size += 1
                node.word = word_id
            self._layer_map[word_id].append(layer)
        self._link()

    def _link(self) -> None:
        root = self._root
        root.fail = root
        queue: deque[_State] = deque()
        for child in root.children:
            child.fail = root
            queue.append(child)
        while queue:
            state = queue.popleft()
            assert state.fail is not None
            state.out = state.fail if state.fail.word is not None else state.fail.out
            for label, child in zip(state.labels, state.children):
                target = state.fail
                nxt = target.child(label)
                while nxt is None and target is not root:
                    target = target.fail
                    nxt = target.child(label)
                child.fail = nxt if nxt is not None and nxt is not child else root
                queue.append(child)

    @property
    def num_states(self) -> int:
        return self._size

    @property
    def strings(self) -> tuple[bytes, ...]:
        """Distinct input strings, in first-seen order (index = word id)."""
        return tuple(self._words)

    def layers_of(self, word_id: int) -> tuple[int, ...]:
        return tuple(self._layer_map[word_id])

    def walk(self) -> Iterator[tuple[bytes, _State]]:
        """(path, state) pairs in breadth-first order; handy for inspection."""
        queue: deque[tuple[bytes, _State]] = deque([(b"", self._root)])
        while queue:
            path, state = queue.popleft()
            yield path, state
            for label, child in zip(state.labels, state.children):
                queue.append((path + bytes([label]), child))

    def stream(self, text: bytes | str,
               sink: Callable[[OccEvent], None]) -> StreamCounters:
        """Scan ``text`` and hand every occurrence event to ``sink``.

        Events arrive in strictly increasing position order; positions with
        no occurrence produce no event.  Returns counters: each failure
        step is paid for by a preceding character, so failure_steps never
        exceeds positions.
        """
        data = ensure_bytes(text)
        root = self._root
        layer_map = self._layer_map
        state = root
        failure_steps = 0
        pos = 0
        for c in data:
            pos += 1
            while True:
                labels = state.labels
                i = bisect_left(labels, c)
                if i < len(labels) and labels[i] == c:
                    state = state.children[i]
                    break
                if state is root:
                    break
                state = state.fail
                failure_steps += 1
            hit = state if state.word is not None else state.out
            if hit is not None:
                layers: list[int] = []
                while hit is not None:
                    layers.extend(layer_map[hit.word])
                    hit = hit.out
                layers.sort()
                sink(OccEvent(pos, tuple(layers)))
        return StreamCounters(pos, failure_steps)


def build_automaton(strings: Iterable[bytes | str]) -> Automaton:
    return Automaton(strings)

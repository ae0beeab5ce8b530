"""Streaming decision matcher: which positions end a full pattern match.

One sorted interval list per pattern layer (from the second onward) stores
the start positions at which a future occurrence of that layer's literal
would extend a partially matched prefix.  Occurrence events are consumed
in position order; each event purges entries that can no longer be hit,
tests the occurrence against the first stored range, and on success either
extends the next layer's list or reports a match end.

Gap upper bounds may be unbounded here; open-ended ranges never die and
absorb every later merge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .automaton import OccEvent, build_automaton
from .pattern import GapBounds, VlgPattern, ensure_bytes

# ranges are (start, end) tuples; end None = open-ended
Range = tuple[int, "int | None"]

# observer(phase, event, lists_snapshot); phase is "before" or "after"
Observer = Callable[[str, OccEvent, dict[int, list[Range]]], None]


def start_pos(endpos: int, sublen: int) -> int:
    """1-based start of an occurrence of length ``sublen`` ending at ``endpos``."""
    return endpos - sublen + 1


def max_live_ranges(gap: GapBounds, next_sublen: int) -> int:
    """Worst-case number of ranges a bounded-gap layer list can hold."""
    width = gap.num_lengths
    return (2 * width + next_sublen + gap.lower) // (width + 1)


class RangeList:
    """Sorted, disjoint start-position ranges admitted for one layer.

    Consecutive stored ranges always satisfy next.start > prev.end + 1;
    appends that overlap or adjoin the last range are merged into it.
    """

    __slots__ = ("ranges", "layer", "sublen")

    def __init__(self, layer: int, sublen: int) -> None:
        self.ranges: list[Range] = []
        self.layer = layer
        self.sublen = sublen

    def purge_dead(self, pos: int) -> int:
        """Drop leading ranges no occurrence ending at or after ``pos`` can start in."""
        cutoff = pos - self.sublen + 1
        ranges = self.ranges
        j = 0
        while j < len(ranges):
            end = ranges[j][1]
            if end is None or end >= cutoff:
                break
            j += 1
        if j:
            del ranges[:j]
        return j

    def append_merge(self, start: int, end: int | None) -> None:
        """Add [start, end] at the tail; starts arrive nondecreasing."""
        ranges = self.ranges
        if ranges:
            last_start, last_end = ranges[-1]
            if last_end is None:
                return  # open-ended tail already covers everything later
            if start <= last_end + 1:
                if end is None:
                    ranges[-1] = (last_start, None)
                elif end > last_end:
                    ranges[-1] = (last_start, end)
                return
        ranges.append((start, end))

    def first_contains(self, pos: int) -> bool:
        if not self.ranges:
            return False
        start, end = self.ranges[0]
        return start <= pos and (end is None or pos <= end)

    def covers(self, pos: int) -> bool:
        """Membership anywhere in the list (used when purging is disabled)."""
        for start, end in self.ranges:
            if start > pos:
                return False
            if end is None or pos <= end:
                return True
        return False


@dataclass
class MatchCounters:
    events: int = 0
    occurrences: int = 0
    appended: int = 0
    purged: int = 0
    reported: int = 0
    # index i-1 = occurrences of layer i
    layer_occurrences: list[int] = field(default_factory=list)
    # index i-2 = peak size of layer i's list
    peak_ranges: list[int] = field(default_factory=list)


class MatcherState:
    """One streaming pass over a text for a fixed pattern.

    ``purge=False`` keeps dead ranges and widens the relevance test to
    full-list membership; output must not change, which the test suite
    exercises as an invariant.
    """

    def __init__(self, pattern: VlgPattern, *,
                 observer: Observer | None = None, purge: bool = True) -> None:
        self.pattern = pattern
        self._k = pattern.num_subpatterns
        self._sublen = [len(piece) for piece in pattern.subpatterns]
        self.lists: dict[int, RangeList] = {
            layer: RangeList(layer, self._sublen[layer - 1])
            for layer in range(2, self._k + 1)
        }
        self.counters = MatchCounters(
            layer_occurrences=[0] * self._k,
            peak_ranges=[0] * (self._k - 1))
        self._observer = observer
        self._purge = purge
        self._last_emit = 0

    def _snapshot(self) -> dict[int, list[Range]]:
        return {layer: list(rl.ranges) for layer, rl in self.lists.items()}

    def process_event(self, event: OccEvent, emit: Callable[[int], None]) -> None:
        """Consume one occurrence event; events must arrive in position order."""
        counters = self.counters
        counters.events += 1
        if self._observer is not None:
            self._observer("before", event, self._snapshot())
        pos = event.position
        lists = self.lists
        last_layer = self._k
        for layer in event.layers:
            counters.occurrences += 1
            counters.layer_occurrences[layer - 1] += 1
            here = lists.get(layer)
            ahead = lists.get(layer + 1)
            if self._purge:
                if here is not None:
                    counters.purged += here.purge_dead(pos)
                if ahead is not None:
                    counters.purged += ahead.purge_dead(pos)
            if layer == 1:
                relevant = True
            else:
                where = pos - self._sublen[layer - 1] + 1
                relevant = (here.first_contains(where) if self._purge
                            else here.covers(where))
            if not relevant:
                continue
            if layer < last_layer:
                gap = self.pattern.gaps[layer - 1]
                upper = None if gap.upper is None else pos + gap.upper + 1
                ahead.append_merge(pos + gap.lower + 1, upper)
                counters.appended += 1
                size = len(ahead.ranges)
                if size > counters.peak_ranges[layer - 1]:
                    counters.peak_ranges[layer - 1] = size
            elif pos != self._last_emit:
                emit(pos)
                counters.reported += 1
                self._last_emit = pos
        if self._observer is not None:
            self._observer("after", event, self._snapshot())

    def scan(self, text: bytes | str) -> list[int]:
        """Stream ``text`` and return all match end positions, ascending."""
        out: list[int] = []
        data = ensure_bytes(text)
        if self.pattern.literal_length > len(data):
            return out  # no automaton needed, nothing can match
        auto = build_automaton(self.pattern.subpatterns)
        auto.stream(data, lambda ev: self.process_event(ev, out.append))
        return out


def find_endpoints(pattern: VlgPattern, text: bytes | str, *,
                   observer: Observer | None = None) -> list[int]:
    """End positions (1-based, ascending) of substrings matching ``pattern``."""
    return MatcherState(pattern, observer=observer).scan(text)

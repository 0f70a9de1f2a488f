"""
Block diagonals and the sorted, doubly linked list that holds them.
"""

import math
from typing import Iterator, List, NamedTuple, Optional, Union

# Cell coordinates and offsets are ints; the sentinels use -inf and +inf
Coordinate = Union[int, float]

INF = math.inf


class IntersectionEntry(NamedTuple):
    """Cost of the cheapest diagonal-conform warping path ending at (row, col)."""

    row: Coordinate
    col: Coordinate
    cost: float


class Diagonal:
    """
    A block diagonal: all matrix cells with col - row == offset.

    Entries are appended in strictly increasing row order, so ``entries[-1]``
    is always the latest intersection computed on this diagonal.
    """

    __slots__ = ('offset', 'entries', 'prev', 'next')

    def __init__(self, offset: Coordinate):
        self.offset = offset
        self.entries: List[IntersectionEntry] = []
        self.prev: Optional['Diagonal'] = None
        self.next: Optional['Diagonal'] = None

    def __repr__(self) -> str:
        return f"Diagonal(offset={self.offset}, entries={len(self.entries)})"


class DiagonalList:
    """
    Diagonals sorted by offset between a -inf and a +inf sentinel.

    Each sentinel carries one unreachable entry so that neighbour lookups
    never need a None check.
    """

    def __init__(self):
        self.head = Diagonal(-INF)
        self.head.entries.append(IntersectionEntry(-INF, -INF, INF))
        self.tail = Diagonal(INF)
        self.tail.entries.append(IntersectionEntry(INF, INF, INF))
        self.head.next = self.tail
        self.tail.prev = self.head
        self._size = 0
        self._entries_created = 0

    def insert_before(self, successor: Diagonal, offset: int) -> Diagonal:
        """
        Insert a new diagonal directly in front of ``successor``.

        Args:
            successor: Diagonal that must follow the new one
            offset: Offset of the new diagonal, strictly between the
                offsets of ``successor.prev`` and ``successor``

        Returns:
            The inserted, still empty Diagonal
        """
        predecessor = successor.prev
        if predecessor is None or not predecessor.offset < offset < successor.offset:
            raise ValueError(f"offset {offset} does not fit before {successor!r}")
        diagonal = Diagonal(offset)
        diagonal.prev = predecessor
        diagonal.next = successor
        predecessor.next = diagonal
        successor.prev = diagonal
        self._size += 1
        return diagonal

    def find(self, offset: int) -> Optional[Diagonal]:
        for diagonal in self:
            if diagonal.offset == offset:
                return diagonal
        return None

    def append(self, diagonal: Diagonal, entry: IntersectionEntry) -> IntersectionEntry:
        """Append ``entry`` to ``diagonal`` and count it."""
        diagonal.entries.append(entry)
        self._entries_created += 1
        return entry

    @property
    def entries_created(self) -> int:
        """Entries appended through ``append``; sentinel entries are not counted."""
        return self._entries_created

    def __iter__(self) -> Iterator[Diagonal]:
        node = self.head.next
        while node is not self.tail:
            yield node
            node = node.next

    def __len__(self) -> int:
        return self._size

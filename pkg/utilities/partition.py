"""
Equivalence relations stored as partitions.

Indistinguishability relations over worlds and over actions are equivalence relations,
so they are kept as their set of classes. Closures of edge lists go through union-find.
"""
from __future__ import annotations
from typing import Hashable, Iterable, Sequence


class DisjointSet:
    """Union-find with path compression and union by rank over arbitrary hashable elements."""

    def __init__(self, elements: Iterable[Hashable]):
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in self.parent}

    def find(self, element: Hashable) -> Hashable:
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def union(self, first: Hashable, second: Hashable) -> bool:
        """
        Merge the classes of two elements.

        Returns:
            bool: False if they already were in the same class
        """
        rep_first, rep_second = self.find(first), self.find(second)
        if rep_first == rep_second:
            return False

        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        return True


class Partition:
    """
    An immutable partition. Blocks keep the order they were given in, which
    keeps output deterministic; equality ignores that order.
    """
    __slots__ = ("_blocks", "_index")

    def __init__(self, blocks: Iterable[Iterable[Hashable]]):
        self._blocks = tuple(tuple(b) for b in blocks)
        self._blocks = tuple(b for b in self._blocks if b)
        self._index = {x: i for i, block in enumerate(self._blocks) for x in block}

    @classmethod
    def fromEdges(cls, elements: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]) -> Partition:
        """
        Reflexive, symmetric and transitive closure of an edge list.

        Params:
            elements: Every element, in output order
            edges: Pairs of related elements. Both ends must be in `elements`.

        Returns:
            Partition: the classes, each ordered and listed by first element
        """
        uf = DisjointSet(elements)
        for first, second in edges:
            uf.union(first, second)

        groups: dict[Hashable, list] = {}
        for x in elements:
            groups.setdefault(uf.find(x), []).append(x)
        return cls(groups.values())

    @classmethod
    def discrete(cls, elements: Iterable[Hashable]) -> Partition:
        return cls([x] for x in elements)

    @classmethod
    def total(cls, elements: Iterable[Hashable]) -> Partition:
        return cls([list(elements)])

    @property
    def blocks(self) -> tuple[tuple[Hashable, ...], ...]:
        return self._blocks

    def elements(self) -> list[Hashable]:
        return [x for block in self._blocks for x in block]

    def classOf(self, element: Hashable) -> tuple[Hashable, ...]:
        return self._blocks[self._index[element]]

    def related(self, first: Hashable, second: Hashable) -> bool:
        index = self._index.get(first)
        return index is not None and index == self._index.get(second)

    def restrict(self, keep: Iterable[Hashable]) -> Partition:
        keep = set(keep)
        return Partition([x for x in block if x in keep] for block in self._blocks)

    def isPartitionOf(self, elements: Iterable[Hashable]) -> bool:
        """
        True iff the blocks are pairwise disjoint and cover exactly the given elements.
        """
        listed = self.elements()
        return len(listed) == len(set(listed)) and set(listed) == set(elements)

    def pairs(self) -> list[tuple[Hashable, Hashable]]:
        return [(x, y) for block in self._blocks for x in block for y in block]

    def _key(self) -> frozenset:
        return frozenset(frozenset(block) for block in self._blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __repr__(self) -> str:
        return "Partition(" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self._blocks) + ")"
